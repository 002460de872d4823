#pragma once

#include <cstddef>
#include <random>

#include "fpc/code.hpp"

namespace fpc {

struct RandomCodeShape {
  std::size_t max_q = 5;
  std::size_t max_length = 5;
  std::size_t max_size = 12;
  std::size_t max_c = 3;
};

struct RandomCase {
  Code code;
  std::size_t c;
  bool planted;  // a framed word was deliberately added
};

/// Uniform q in 2..max_q, l in 2..max_length, M in 1..min(max_size, q^l),
/// c in 2..max_c. With probability 1/3 a descendant of a random coalition of
/// size <= c is added, which makes the code fail c-frameproofness.
RandomCase random_case(std::mt19937_64& rng, const RandomCodeShape& shape = {});

}  // namespace fpc
