#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpc/code.hpp"
#include "fpc/constructions.hpp"
#include "fpc/field.hpp"

namespace fpc {

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Prime factorization grouped by prime, ascending p.
std::vector<PrimePower> factor_prime_powers(std::uint64_t n);

struct PlanStep {
  enum class Kind { base, compose, augment_inf };
  Kind kind = Kind::base;
  BaseCodeId base = BaseCodeId::ex1;  // for Kind::base
  std::size_t m = 0;                  // for Kind::compose

  static PlanStep from_base(BaseCodeId id) { return {Kind::base, id, 0}; }
  static PlanStep compose(std::size_t m) { return {Kind::compose, BaseCodeId::ex1, m}; }
  static PlanStep augment() { return {Kind::augment_inf, BaseCodeId::ex1, 0}; }

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct PlanTarget {
  std::size_t c = 0;
  std::size_t length = 0;
  std::size_t q = 0;
  std::uint64_t size = 0;
  friend bool operator==(const PlanTarget&, const PlanTarget&) = default;
};

/// Steps run in order: a base code, compositions over GF(m) applied to the
/// previous result, then optionally the all-inf augmentation.
struct ConstructionPlan {
  PlanTarget target;
  std::vector<PlanStep> steps;
  std::string provenance;
  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

/// q-ary 2-frameproof length-4 code with 2(q-1)^2 + 1 words, q odd >= 3.
ConstructionPlan plan_theorem2(std::uint64_t q);

/// q-ary 3-frameproof length-5 code with (5/3)(q-1)^2 + 1 words, q = 4 mod 6.
ConstructionPlan plan_theorem3(std::uint64_t q);

/// Replays the steps and checks the result against the target exactly.
Code execute_plan(const ConstructionPlan& plan);

/// Indented tree, outermost step first, with the (q, M) after each step.
std::string format_plan(const ConstructionPlan& plan);

/// Upper bound c(q^ceil(l/c) - 1) on the size of any q-ary c-frameproof code.
std::uint64_t ssw_bound(std::size_t c, std::size_t length, std::uint64_t q);

/// Leading coefficient l / (l - (t-1) ceil(l/c)) of the asymptotic bound,
/// t in 1..c with t = l mod c.
Rational blackburn_leading(std::size_t c, std::size_t length);

/// M / q^ceil(l/c).
Rational achieved_rate(std::size_t c, std::size_t length, std::uint64_t q, std::uint64_t size);

struct BoundReport {
  std::size_t c = 0, length = 0;
  std::uint64_t q = 0;
  std::uint64_t ssw = 0;
  Rational leading;     // asymptotic leading coefficient only
  Rational rate_upper;  // ssw / q^ceil(l/c)
  std::optional<std::uint64_t> achieved_size;
  std::optional<Rational> achieved;

  bool within_bound() const { return !achieved_size || *achieved_size <= ssw; }
};

BoundReport bound_report(std::size_t c, std::size_t length, std::uint64_t q,
                         std::optional<std::uint64_t> size = std::nullopt);

/// `c=<> l=<> q=<> ssw=<> leading=<num>/<den> achieved=<M|->`
std::string format_bound_line(const BoundReport& report);
std::string format_bound_table(const BoundReport& report);

}  // namespace fpc
