#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fpc {

struct PrimePower {
  std::uint64_t p;
  unsigned e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, e) with n = p^e, or nullopt. Throws for n < 2.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// Element of GF(p^e), encoded as its coefficient vector read as a base-p
/// integer (c0 least significant). Ids run over 0..m-1.
using Element = std::uint32_t;

inline constexpr std::size_t kMaxFieldOrder = 1024;

/// GF(p^e) with precomputed addition, multiplication and inverse tables.
class Field {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return m_; }

  /// Monic modulus, low-degree coefficient first (size e+1). For prime fields
  /// this is X.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const { return add(a, neg_[check(b)]); }
  Element neg(Element a) const { return neg_[check(a)]; }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t n) const;

  /// 0, 1, ..., m-1: the canonical element order used for evaluation points
  /// and OA rows.
  std::vector<Element> canonical_elements() const;

  friend Field make_field(std::uint64_t m);

 private:
  Field() = default;
  std::size_t check(Element a) const;
  std::size_t index(Element a, Element b) const { return check(a) * m_ + check(b); }

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

/// Field of order m with the smallest monic irreducible modulus, candidates
/// ordered by their non-leading coefficients read as a base-p integer.
Field make_field(std::uint64_t m);

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree 1..e/2. Coefficients low-degree first, monic.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Polynomial over a field, low-degree coefficient first. Trailing zeros are
/// allowed.
struct Poly {
  std::vector<Element> coeffs;
};

/// The n-th polynomial of degree <= t-1 over F: coefficients are the base-m
/// digits of n. n runs over 0..m^t-1.
Poly nth_poly(const Field& field, std::uint64_t n, std::size_t t);

/// Horner evaluation.
Element eval_poly(const Field& field, const Poly& f, Element point);

/// Coefficient of X^{t-1}; zero when absent.
Element leading_coeff(const Poly& f, std::size_t t);

}  // namespace fpc
