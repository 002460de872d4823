#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "fpc/code.hpp"
#include "fpc/kernels.hpp"

namespace fpc {

struct VerifyOptions {
  /// Naive verifier only: maximum (coalition, candidate) pairs.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned jobs = 1;
  /// Force a kernel ISA; default is the best available.
  std::optional<kernels::Isa> isa;
};

struct VerifyReport {
  bool verdict = true;
  std::optional<Witness> witness;  // present iff verdict is false
  std::uint64_t subsets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Checks desc(P) n C = P for every P with |P| <= c by enumerating coalitions
/// in lexicographic index order, smallest sizes first. The witness is the
/// first violation in that order. Throws BudgetExceeded when the next
/// coalition size would push the pair count over options.budget.
VerifyReport is_frameproof_naive(const Code& code, std::size_t c, const VerifyOptions& options = {});

/// Same verdict as is_frameproof_naive. For each x, searches for at most c
/// agreement sets {i : y_i = x_i} (y != x) whose union is every position.
/// Requires length <= 64.
VerifyReport is_frameproof_cover(const Code& code, std::size_t c, const VerifyOptions& options = {});

/// Property P(t): every word has <= t-1 inf entries and distinct words share
/// <= t-1 positions with equal non-inf symbols.
VerifyReport satisfies_property_pt(const Code& code, std::size_t t, const VerifyOptions& options = {});

}  // namespace fpc
