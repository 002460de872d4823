#pragma once

// Brute-force reference checks used only by the tests. Nothing here calls the
// library's verifiers, kernels or descendant routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fpc/code.hpp"

namespace oracle {

using fpc::Symbol;
using fpc::Word;

// desc(P) by explicit product enumeration.
inline std::set<Word> descendants(const std::vector<Word>& p) {
  std::set<Word> out{Word{}};
  const std::size_t l = p.front().size();
  for (std::size_t i = 0; i < l; ++i) {
    std::set<Symbol> options;
    for (const auto& y : p) options.insert(y[i]);
    std::set<Word> next;
    for (const auto& prefix : out) {
      for (Symbol s : options) {
        Word w = prefix;
        w.push_back(s);
        next.insert(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

// desc(P) n C == P for every P of size <= c, straight from the definition.
// Exponential in |C|; meant for |C| <= 16.
inline bool is_frameproof(const std::vector<Word>& code, std::size_t c) {
  const std::size_t n = code.size();
  const std::set<Word> members(code.begin(), code.end());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > c) continue;
    std::vector<Word> p;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) p.push_back(code[i]);
    }
    const std::set<Word> pset(p.begin(), p.end());
    for (const auto& d : descendants(p)) {
      if (members.count(d) && !pset.count(d)) return false;
    }
  }
  return true;
}

// Property P(t) straight from the formalized definition.
inline bool has_property_pt(const std::vector<Word>& code, Symbol inf, std::size_t t) {
  for (const auto& w : code) {
    if (static_cast<std::size_t>(std::count(w.begin(), w.end(), inf)) > t - 1) return false;
  }
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      std::size_t agree = 0;
      for (std::size_t i = 0; i < code[a].size(); ++i) {
        agree += code[a][i] == code[b][i] && code[a][i] != inf;
      }
      if (agree > t - 1) return false;
    }
  }
  return true;
}

// Polynomials over GF(p), low-degree first.
inline std::vector<std::uint32_t> multiply_mod_p(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b,
                                                 std::uint32_t p) {
  std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

inline std::vector<std::vector<std::uint32_t>> monic_polys(std::size_t degree, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= p;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    std::size_t rest = n;
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[degree] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

// Irreducible iff no product of two monic polynomials of positive degree
// equals it.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; d < e; ++d) {
    for (const auto& a : monic_polys(d, p)) {
      for (const auto& b : monic_polys(e - d, p)) {
        if (multiply_mod_p(a, b, p) == f) return false;
      }
    }
  }
  return true;
}

// Every pair of rows of a strength-2 array sees every symbol pair lambda times.
inline bool is_strength2_oa(const std::vector<std::vector<Symbol>>& rows, std::size_t s) {
  const std::size_t n = rows.front().size();
  if (n % (s * s) != 0) return false;
  const std::size_t lambda = n / (s * s);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      std::map<std::pair<Symbol, Symbol>, std::size_t> seen;
      for (std::size_t j = 0; j < n; ++j) ++seen[{rows[a][j], rows[b][j]}];
      if (seen.size() != s * s) return false;
      for (const auto& [pair, count] : seen) {
        if (count != lambda) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
