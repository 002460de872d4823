#include "fpc/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>

#include "fpc/error.hpp"
#include "parallel.hpp"

namespace fpc {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t saturating_binomial_pairs(std::size_t n, std::size_t k) {
  // C(n, k) * (n - k), saturated at 2^64 - 1.
  constexpr unsigned __int128 kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > kMax) return std::numeric_limits<std::uint64_t>::max();
  }
  acc *= (n - k);
  return acc > kMax ? std::numeric_limits<std::uint64_t>::max()
                    : static_cast<std::uint64_t>(acc);
}

Witness framed_witness(const Code& code, std::span<const std::size_t> members, std::size_t x) {
  Witness w;
  w.kind = WitnessKind::framed;
  for (auto j : members) w.coalition.push_back(code.word_copy(j));
  std::sort(w.coalition.begin(), w.coalition.end());
  w.framed_word = code.word_copy(x);
  return w;
}

// All subsets of size k whose smallest index is `first`, in lexicographic
// order. Returns the first violation.
std::optional<Witness> scan_coalitions(const Code& code, const PackedCode& packed,
                                       const kernels::Table& k, std::size_t size,
                                       std::size_t first, std::atomic<std::uint64_t>& examined) {
  const std::size_t n = code.size();
  const std::size_t length = code.length();
  std::vector<std::size_t> idx(size);
  idx[0] = first;
  for (std::size_t i = 1; i < size; ++i) idx[i] = first + i;
  std::vector<Symbol> members(size * length);
  std::vector<std::uint8_t> flags(packed.stride());
  std::uint64_t local = 0;

  for (;;) {
    for (std::size_t y = 0; y < size; ++y) {
      auto w = code.word(idx[y]);
      std::copy(w.begin(), w.end(), members.begin() + y * length);
    }
    // The padded tail never matches, so the kernel can run over full lanes.
    k.descendant_flags(packed.columns(), packed.stride(), length, members.data(), size, 0,
                       packed.stride(), flags.data());
    ++local;
    for (std::size_t x = 0; x < n; ++x) {
      if (!flags[x]) continue;
      if (std::find(idx.begin(), idx.end(), x) != idx.end()) continue;
      examined.fetch_add(local, std::memory_order_relaxed);
      return framed_witness(code, idx, x);
    }

    // Advance positions 1..size-1; position 0 stays at `first`.
    if (size == 1) break;
    std::size_t pos = size - 1;
    while (pos >= 1 && idx[pos] == n - size + pos) --pos;
    if (pos == 0) break;
    ++idx[pos];
    for (std::size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  examined.fetch_add(local, std::memory_order_relaxed);
  return std::nullopt;
}

void require_c(std::size_t c) {
  if (c < 2) throw Error(ErrorCode::invalid_argument, "frameproof verification needs c >= 2");
}

}  // namespace

VerifyReport is_frameproof_naive(const Code& code, std::size_t c, const VerifyOptions& options) {
  require_c(c);
  const auto start = Clock::now();
  const auto& k = kernels::select(options.isa);
  const PackedCode packed(code);
  const std::size_t n = code.size();

  VerifyReport report;
  std::atomic<std::uint64_t> examined{0};
  std::uint64_t pairs = 0;
  for (std::size_t size = 1; size <= std::min(c, n > 0 ? n - 1 : 0); ++size) {
    const std::uint64_t cost = saturating_binomial_pairs(n, size);
    if (cost > options.budget || pairs > options.budget - cost) {
      throw BudgetExceeded(pairs, options.budget, size - 1,
                           "naive verification needs more than " +
                               std::to_string(options.budget) +
                               " (coalition, candidate) pairs; coalitions up to size " +
                               std::to_string(size - 1) + " verified");
    }
    pairs += cost;
    auto hit = detail::first_hit<Witness>(n - size + 1, options.jobs, [&](std::size_t first) {
      return scan_coalitions(code, packed, k, size, first, examined);
    });
    if (hit) {
      report.verdict = false;
      report.witness = std::move(hit);
      break;
    }
  }
  report.subsets_examined = examined.load();
  report.elapsed = Clock::now() - start;
  return report;
}

namespace {

struct CoverSearch {
  std::vector<std::uint64_t> masks;      // distinct non-empty agreement sets
  std::vector<std::size_t> owners;       // some word with that agreement set
  std::uint64_t full = 0;
  std::size_t max_bits = 0;
  std::size_t budget_depth = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;

  bool search(std::uint64_t covered, std::size_t depth) {
    ++nodes;
    const std::uint64_t missing = full & ~covered;
    if (missing == 0) return true;
    const std::size_t left = budget_depth - depth;
    if (left == 0 || left * max_bits < static_cast<std::size_t>(std::popcount(missing))) {
      return false;
    }
    const std::uint64_t lowest = missing & (~missing + 1);
    for (std::size_t m = 0; m < masks.size(); ++m) {
      if (!(masks[m] & lowest)) continue;
      chosen.push_back(m);
      if (search(covered | masks[m], depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

VerifyReport is_frameproof_cover(const Code& code, std::size_t c, const VerifyOptions& options) {
  require_c(c);
  if (code.length() > 64) {
    throw Error(ErrorCode::unsupported, "cover verifier supports code length <= 64");
  }
  const auto start = Clock::now();
  const auto& k = kernels::select(options.isa);
  const PackedCode packed(code);
  const std::size_t n = code.size();
  const std::size_t length = code.length();
  const std::uint64_t full = length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;

  std::atomic<std::uint64_t> nodes{0};
  auto hit = detail::first_hit<Witness>(n, options.jobs, [&](std::size_t x) -> std::optional<Witness> {
    std::vector<std::uint64_t> raw(packed.stride());
    auto xw = code.word(x);
    k.agreement_masks(packed.columns(), packed.stride(), length, xw.data(), 0, packed.stride(),
                      raw.data());

    std::vector<std::pair<std::uint64_t, std::size_t>> sets;
    sets.reserve(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && raw[y] != 0) sets.emplace_back(raw[y], y);
    }
    std::sort(sets.begin(), sets.end());
    CoverSearch cs;
    cs.full = full;
    cs.budget_depth = c;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i > 0 && sets[i].first == sets[i - 1].first) continue;
      cs.masks.push_back(sets[i].first);
      cs.owners.push_back(sets[i].second);
      cs.max_bits = std::max<std::size_t>(cs.max_bits, std::popcount(sets[i].first));
    }
    const bool found = cs.search(0, 0);
    nodes.fetch_add(cs.nodes, std::memory_order_relaxed);
    if (!found) return std::nullopt;
    std::vector<std::size_t> members;
    for (auto m : cs.chosen) members.push_back(cs.owners[m]);
    return framed_witness(code, members, x);
  });

  VerifyReport report;
  report.verdict = !hit.has_value();
  report.witness = std::move(hit);
  report.subsets_examined = nodes.load();
  report.elapsed = Clock::now() - start;
  return report;
}

VerifyReport satisfies_property_pt(const Code& code, std::size_t t, const VerifyOptions& options) {
  const Symbol inf = code.require_inf("Property P(t) check");
  if (t < 1) throw Error(ErrorCode::invalid_argument, "Property P(t) needs t >= 1");
  const auto start = Clock::now();
  VerifyReport report;
  const std::size_t n = code.size();
  const std::size_t length = code.length();

  for (std::size_t j = 0; j < n; ++j) {
    auto w = code.word(j);
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < length; ++i) {
      if (w[i] == inf) at.push_back(i);
    }
    ++report.subsets_examined;
    if (at.size() > t - 1) {
      Witness wit;
      wit.kind = WitnessKind::pt_violation;
      wit.pair.push_back(code.word_copy(j));
      wit.positions = std::move(at);
      report.verdict = false;
      report.witness = std::move(wit);
      report.elapsed = Clock::now() - start;
      return report;
    }
  }

  const auto& k = kernels::select(options.isa);
  const PackedCode packed(code);
  std::atomic<std::uint64_t> pairs{0};
  auto hit = detail::first_hit<Witness>(n, options.jobs, [&](std::size_t a) -> std::optional<Witness> {
    if (a + 1 >= n) return std::nullopt;
    std::vector<std::uint16_t> counts(n - a - 1);
    auto xa = code.word(a);
    k.agreement_counts(packed.columns(), packed.stride(), length, xa.data(), inf, a + 1, n,
                       counts.data());
    pairs.fetch_add(counts.size(), std::memory_order_relaxed);
    for (std::size_t d = 0; d < counts.size(); ++d) {
      if (counts[d] <= t - 1) continue;
      const std::size_t b = a + 1 + d;
      Witness wit;
      wit.kind = WitnessKind::pt_violation;
      wit.pair = {code.word_copy(a), code.word_copy(b)};
      auto xb = code.word(b);
      for (std::size_t i = 0; i < length; ++i) {
        if (xa[i] == xb[i] && xa[i] != inf) wit.positions.push_back(i);
      }
      return wit;
    }
    return std::nullopt;
  });
  report.subsets_examined += pairs.load();
  report.verdict = !hit.has_value();
  report.witness = std::move(hit);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace fpc
