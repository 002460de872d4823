#include "fpc/random_code.hpp"

#include <algorithm>
#include <set>

namespace fpc {

RandomCase random_case(std::mt19937_64& rng, const RandomCodeShape& shape) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t q = uniform(2, shape.max_q);
  const std::size_t l = uniform(2, shape.max_length);
  std::size_t space = 1;
  for (std::size_t i = 0; i < l && space <= shape.max_size; ++i) space *= q;
  const std::size_t c = uniform(2, shape.max_c);
  const bool plant = uniform(0, 2) == 0;
  const std::size_t cap = std::min(shape.max_size, space);
  std::size_t target = uniform(1, cap);
  if (plant && target == cap && target > 2) --target;  // room for the framed word

  std::set<Word> words;
  while (words.size() < target) {
    Word w(l);
    for (auto& s : w) s = static_cast<Symbol>(uniform(0, q - 1));
    words.insert(std::move(w));
  }

  bool planted = false;
  if (plant && words.size() >= 2 && words.size() < cap) {
    std::vector<Word> pool(words.begin(), words.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = uniform(2, std::min(c, pool.size()));
    for (int attempt = 0; attempt < 8 && !planted; ++attempt) {
      Word x(l);
      for (std::size_t i = 0; i < l; ++i) x[i] = pool[uniform(0, k - 1)][i];
      planted = words.insert(x).second;
    }
  }
  return {Code(l, q, std::vector<Word>(words.begin(), words.end())), c, planted};
}

}  // namespace fpc
