#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpc/code.hpp"
#include "fpc/verifier.hpp"

namespace fpc {

/// k x N array over s symbols, claimed to have strength t. The claim is not
/// checked on construction; use verify_oa.
class OrthogonalArray {
 public:
  OrthogonalArray(std::size_t constraints, std::size_t levels, std::size_t strength,
                  std::size_t runs, std::vector<Symbol> cells);

  std::size_t constraints() const noexcept { return k_; }
  std::size_t levels() const noexcept { return s_; }
  std::size_t strength() const noexcept { return t_; }
  std::size_t runs() const noexcept { return n_; }
  /// N / s^t, rounded down (an inconsistent N fails verify_oa).
  std::size_t index() const noexcept;

  Symbol at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  std::span<const Symbol> row(std::size_t r) const { return {cells_.data() + r * n_, n_}; }
  Word column(std::size_t col) const;
  std::span<const Symbol> cells() const noexcept { return cells_; }

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;

 private:
  std::size_t k_, s_, t_, n_;
  std::vector<Symbol> cells_;
};

/// OA(2, s+1, s) for a prime power s: column (a, b) holds a*alpha + b in the
/// row of each field element alpha, then a in the last row.
OrthogonalArray build_oa_strength2(std::size_t s);

/// Exhaustive tuple count over every t-subset of rows.
VerifyReport verify_oa(const OrthogonalArray& array);

/// Per-row transpositions making column `col` all zeros.
OrthogonalArray normalize_column_to_infinity(const OrthogonalArray& array, std::size_t col);

/// Columns as an s-ary length-k code; c-frameproof when k > c(t-1).
Code oa_to_frameproof(const OrthogonalArray& array, std::size_t c);

/// Normalizes column 0 to all-inf (id 0) and drops it: s^t - 1 words with
/// Property P(t). Needs index 1.
Code oa_to_pt_code(const OrthogonalArray& array, std::size_t t);

// Text format: `oa1 N=<N> k=<k> s=<s> t=<t>` then k lines of N symbols.
std::string format_oa(const OrthogonalArray& array);
OrthogonalArray parse_oa(std::string_view text);
OrthogonalArray load_oa(const std::string& path);
void save_oa(const std::string& path, const OrthogonalArray& array);

}  // namespace fpc
