#include "fpc/planner.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "fpc/error.hpp"

namespace fpc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::limit_exceeded, "integer overflow");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorCode::limit_exceeded, "value too large for an exact rational");
  }
  return static_cast<std::int64_t>(v);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

Rational from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  }
  if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) {
    throw Error(ErrorCode::limit_exceeded, "rational overflow");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::vector<PrimePower> factor_prime_powers(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "factorization needs n >= 2");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

namespace {

// Largest odd prime power p^e >= floor among the factors of n. Distinct
// primes give distinct prime powers, so there are no ties.
std::optional<std::uint64_t> largest_odd_prime_power(std::uint64_t n, std::uint64_t floor) {
  std::optional<std::uint64_t> best;
  for (auto [p, e] : factor_prime_powers(n)) {
    if (p == 2) continue;
    const std::uint64_t pe = checked_pow(p, e);
    if (pe >= floor && (!best || pe > *best)) best = pe;
  }
  return best;
}

std::vector<PlanStep> c2_chain(std::uint64_t q) {
  if (q == 3) return {PlanStep::from_base(BaseCodeId::ex1)};
  if (q == 5) return {PlanStep::from_base(BaseCodeId::lem4)};
  const std::uint64_t m = (q - 1) / 2;
  if (is_prime_power(m)) return {PlanStep::from_base(BaseCodeId::ex1), PlanStep::compose(m)};
  auto pe = largest_odd_prime_power(m, 3);
  if (!pe) throw Error(ErrorCode::precondition, "no odd prime power factor >= 3 (impossible)");
  auto chain = c2_chain(2 * m / *pe + 1);
  chain.push_back(PlanStep::compose(*pe));
  return chain;
}

std::vector<PlanStep> c3_chain(std::uint64_t q) {
  if (q == 4) return {PlanStep::from_base(BaseCodeId::ex2)};
  if (q == 10) return {PlanStep::from_base(BaseCodeId::lem5)};
  const std::uint64_t m = (q - 1) / 3;
  if (is_prime_power(m)) return {PlanStep::from_base(BaseCodeId::ex2), PlanStep::compose(m)};
  auto pe = largest_odd_prime_power(m, 5);
  if (!pe) throw Error(ErrorCode::precondition, "no odd prime power factor >= 5 (impossible)");
  auto chain = c3_chain(3 * m / *pe + 1);
  chain.push_back(PlanStep::compose(*pe));
  return chain;
}

}  // namespace

ConstructionPlan plan_theorem2(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) {
    throw Error(ErrorCode::invalid_argument, "c=2 family needs odd q >= 3, got " + std::to_string(q));
  }
  ConstructionPlan plan;
  plan.provenance = "c=2 length-4 induction";
  plan.target = {2, 4, q, checked_mul(2, checked_mul(q - 1, q - 1)) + 1};
  plan.steps = c2_chain(q);
  plan.steps.push_back(PlanStep::augment());
  return plan;
}

ConstructionPlan plan_theorem3(std::uint64_t q) {
  if (q % 6 != 4) {
    throw Error(ErrorCode::invalid_argument, "c=3 family needs q = 4 (mod 6), got " + std::to_string(q));
  }
  ConstructionPlan plan;
  plan.provenance = "c=3 length-5 induction";
  plan.target = {3, 5, q, checked_mul(5, checked_mul(q - 1, q - 1)) / 3 + 1};
  plan.steps = c3_chain(q);
  plan.steps.push_back(PlanStep::augment());
  return plan;
}

Code execute_plan(const ConstructionPlan& plan) {
  if (plan.steps.empty()) throw Error(ErrorCode::invalid_argument, "empty plan");
  if (plan.steps.front().kind != PlanStep::Kind::base) {
    throw Error(ErrorCode::invalid_argument, "plan must start with a base code");
  }
  std::optional<Code> code;
  const std::size_t c = plan.target.c;
  for (const auto& step : plan.steps) {
    switch (step.kind) {
      case PlanStep::Kind::base:
        if (code) throw Error(ErrorCode::invalid_argument, "base code must be the first step only");
        code = base_code(step.base);
        break;
      case PlanStep::Kind::compose:
        if (!is_prime_power(step.m)) {
          throw Error(ErrorCode::not_prime_power,
                      "plan composes over m=" + std::to_string(step.m) + ", not a prime power");
        }
        // Each intermediate code came out of a composition or is a seed, so
        // Property P(2) holds by construction.
        code = compose_lemma2(*code, ComposeParams{.m = step.m, .t = 2, .c = c, .points = {},
                                                   .trust = true});
        break;
      case PlanStep::Kind::augment_inf:
        code = augment_infinity(*code, c, 2, /*trust=*/true);
        break;
    }
  }
  if (code->alphabet_size() != plan.target.q || code->length() != plan.target.length ||
      code->size() != plan.target.size) {
    throw Error(ErrorCode::precondition,
                "plan produced q=" + std::to_string(code->alphabet_size()) +
                    " l=" + std::to_string(code->length()) + " M=" + std::to_string(code->size()) +
                    ", expected q=" + std::to_string(plan.target.q) +
                    " l=" + std::to_string(plan.target.length) +
                    " M=" + std::to_string(plan.target.size));
  }
  return std::move(*code);
}

std::string format_plan(const ConstructionPlan& plan) {
  struct Row {
    std::string label;
    std::uint64_t q, size;
  };
  std::vector<Row> rows;
  std::uint64_t q = 0, size = 0;
  for (const auto& step : plan.steps) {
    switch (step.kind) {
      case PlanStep::Kind::base: {
        auto info = base_code_info(step.base);
        q = info.q;
        size = info.size;
        rows.push_back({"base " + std::string(to_string(step.base)), q, size});
        break;
      }
      case PlanStep::Kind::compose:
        q = (q - 1) * step.m + 1;
        size *= step.m * step.m;
        rows.push_back({"compose m=" + std::to_string(step.m), q, size});
        break;
      case PlanStep::Kind::augment_inf:
        size += 1;
        rows.push_back({"augment_inf", q, size});
        break;
    }
  }
  std::ostringstream out;
  out << "plan c=" << plan.target.c << " l=" << plan.target.length << " q=" << plan.target.q
      << " M=" << plan.target.size << " (" << plan.provenance << ")\n";
  std::size_t depth = 1;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it, ++depth) {
    std::string label = std::string(2 * depth, ' ') + it->label;
    out << std::left << std::setw(28) << label << " -> q=" << it->q << " M=" << it->size << '\n';
  }
  return out.str();
}

std::uint64_t ssw_bound(std::size_t c, std::size_t length, std::uint64_t q) {
  if (c < 2 || length < 2 || q < 2) {
    throw Error(ErrorCode::invalid_argument, "bound needs c, l, q >= 2");
  }
  return checked_mul(c, checked_pow(q, ceil_div(length, c)) - 1);
}

Rational blackburn_leading(std::size_t c, std::size_t length) {
  if (c < 2 || length < 2) throw Error(ErrorCode::invalid_argument, "bound needs c, l >= 2");
  const std::int64_t t = static_cast<std::int64_t>((length - 1) % c + 1);
  const std::int64_t n = static_cast<std::int64_t>(ceil_div(length, c));
  const std::int64_t l = static_cast<std::int64_t>(length);
  const std::int64_t den = l - (t - 1) * n;
  if (den <= 0) {
    throw Error(ErrorCode::precondition, "nonpositive denominator in leading coefficient");
  }
  return Rational(l, den);
}

Rational achieved_rate(std::size_t c, std::size_t length, std::uint64_t q, std::uint64_t size) {
  if (c < 1 || q < 1) throw Error(ErrorCode::invalid_argument, "rate needs c, q >= 1");
  return Rational(to_signed(size), to_signed(checked_pow(q, ceil_div(length, c))));
}

BoundReport bound_report(std::size_t c, std::size_t length, std::uint64_t q,
                         std::optional<std::uint64_t> size) {
  BoundReport r;
  r.c = c;
  r.length = length;
  r.q = q;
  r.ssw = ssw_bound(c, length, q);
  r.leading = blackburn_leading(c, length);
  r.rate_upper = Rational(to_signed(r.ssw), to_signed(checked_pow(q, ceil_div(length, c))));
  if (size) {
    r.achieved_size = size;
    r.achieved = achieved_rate(c, length, q, *size);
  }
  return r;
}

std::string format_bound_line(const BoundReport& r) {
  return "c=" + std::to_string(r.c) + " l=" + std::to_string(r.length) + " q=" +
         std::to_string(r.q) + " ssw=" + std::to_string(r.ssw) + " leading=" + r.leading.str() +
         " achieved=" + (r.achieved_size ? std::to_string(*r.achieved_size) : "-");
}

std::string format_bound_table(const BoundReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& k, const std::string& v) {
    out << "  " << std::left << std::setw(22) << k << v << '\n';
  };
  out << "bounds for c=" << r.c << " l=" << r.length << " q=" << r.q << '\n';
  row("ssw bound", std::to_string(r.ssw));
  row("finite-q rate bound", r.rate_upper.str());
  row("leading (asymptotic)", r.leading.str());
  if (r.achieved_size) {
    row("achieved M", std::to_string(*r.achieved_size));
    row("achieved rate", r.achieved->str());
    row("within ssw bound", r.within_bound() ? "yes" : "NO");
  }
  return out.str();
}

}  // namespace fpc
