#include "fpc/field.hpp"

#include <algorithm>
#include <string>

#include "fpc/error.hpp"

namespace fpc {

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "is_prime_power needs n >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, e};
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a modulo monic b over GF(p). Both low-degree first.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

Coeffs digits(std::uint64_t n, std::uint32_t base, std::size_t count) {
  Coeffs out(count);
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(n % base);
    n /= base;
  }
  return out;
}

std::uint64_t from_digits(const Coeffs& c, std::uint32_t base) {
  std::uint64_t n = 0;
  for (std::size_t i = c.size(); i-- > 0;) n = n * base + c[i];
  return n;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw Error(ErrorCode::invalid_argument, "irreducibility test needs a monic polynomial");
  }
  const std::size_t e = poly.size() - 1;
  if (e == 1) return true;
  Coeffs target(poly.begin(), poly.end());
  for (std::size_t d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Coeffs divisor = digits(n, p, d);
      divisor.push_back(1);
      auto rem = poly_mod(target, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

Field make_field(std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::not_prime_power, "field order must be >= 2");
  auto pp = is_prime_power(m);
  if (!pp) {
    throw Error(ErrorCode::not_prime_power, std::to_string(m) + " is not a prime power");
  }
  if (m > kMaxFieldOrder) {
    throw Error(ErrorCode::limit_exceeded, "field order " + std::to_string(m) +
                                               " exceeds supported maximum " +
                                               std::to_string(kMaxFieldOrder));
  }
  Field f;
  f.p_ = static_cast<std::uint32_t>(pp->p);
  f.e_ = pp->e;
  f.m_ = static_cast<std::uint32_t>(m);
  const std::uint32_t p = f.p_;
  const unsigned e = f.e_;

  if (e == 1) {
    f.modulus_ = {0, 1};
  } else {
    for (std::uint64_t n = 0; n < m; ++n) {
      Coeffs candidate = digits(n, p, e);
      candidate.push_back(1);
      if (is_irreducible_mod_p(candidate, p)) {
        f.modulus_ = std::move(candidate);
        break;
      }
    }
    if (f.modulus_.empty()) {
      throw Error(ErrorCode::precondition, "no irreducible modulus found");
    }
  }

  const std::size_t mm = static_cast<std::size_t>(m) * m;
  f.add_.resize(mm);
  f.mul_.resize(mm);
  f.neg_.resize(m);
  f.inv_.assign(m, 0);
  std::vector<Coeffs> elems(m);
  for (std::uint32_t a = 0; a < m; ++a) elems[a] = digits(a, p, e);

  for (std::uint32_t a = 0; a < m; ++a) {
    Coeffs neg(e);
    for (unsigned i = 0; i < e; ++i) neg[i] = (p - elems[a][i]) % p;
    f.neg_[a] = static_cast<std::uint16_t>(from_digits(neg, p));
    for (std::uint32_t b = 0; b < m; ++b) {
      Coeffs sum(e);
      for (unsigned i = 0; i < e; ++i) sum[i] = (elems[a][i] + elems[b][i]) % p;
      f.add_[a * m + b] = static_cast<std::uint16_t>(from_digits(sum, p));

      Coeffs prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j) {
          prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
        }
      }
      auto reduced = e == 1 ? prod : poly_mod(prod, f.modulus_, p);
      reduced.resize(e, 0);
      f.mul_[a * m + b] = static_cast<std::uint16_t>(from_digits(reduced, p));
    }
  }
  for (std::uint32_t a = 1; a < m; ++a) {
    for (std::uint32_t b = 1; b < m; ++b) {
      if (f.mul_[a * m + b] == 1) {
        f.inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  return f;
}

std::size_t Field::check(Element a) const {
  if (a >= m_) {
    throw Error(ErrorCode::symbol_out_of_range, "element " + std::to_string(a) +
                                                    " outside GF(" + std::to_string(m_) + ")");
  }
  return a;
}

Element Field::inv(Element a) const {
  if (check(a) == 0) throw Error(ErrorCode::invalid_argument, "inverse of zero");
  return inv_[a];
}

Element Field::pow(Element a, std::uint64_t n) const {
  Element result = 1, base = static_cast<Element>(check(a));
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::vector<Element> Field::canonical_elements() const {
  std::vector<Element> out(m_);
  for (Element a = 0; a < m_; ++a) out[a] = a;
  return out;
}

Poly nth_poly(const Field& field, std::uint64_t n, std::size_t t) {
  Poly f;
  f.coeffs.resize(t);
  for (auto& c : f.coeffs) {
    c = static_cast<Element>(n % field.order());
    n /= field.order();
  }
  if (n != 0) throw Error(ErrorCode::invalid_argument, "polynomial index out of range");
  return f;
}

Element eval_poly(const Field& field, const Poly& f, Element point) {
  for (Element c : f.coeffs) {
    if (c >= field.order()) {
      throw Error(ErrorCode::symbol_out_of_range,
                  "coefficient " + std::to_string(c) + " outside GF(" +
                      std::to_string(field.order()) + ")");
    }
  }
  Element acc = 0;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    acc = field.add(field.mul(acc, point), f.coeffs[i]);
  }
  return acc;
}

Element leading_coeff(const Poly& f, std::size_t t) {
  if (t == 0) throw Error(ErrorCode::invalid_argument, "t must be >= 1");
  for (std::size_t i = t; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != 0) {
      throw Error(ErrorCode::precondition, "polynomial degree exceeds t-1");
    }
  }
  return t - 1 < f.coeffs.size() ? f.coeffs[t - 1] : 0;
}

}  // namespace fpc
