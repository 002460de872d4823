#include <doctest.h>

#include "fpc/error.hpp"
#include "fpc/planner.hpp"
#include "fpc/verifier.hpp"
#include "test_util.hpp"

using namespace fpc;

namespace {

using K = PlanStep::Kind;

std::vector<std::size_t> compose_ms(const ConstructionPlan& plan) {
  std::vector<std::size_t> ms;
  for (const auto& s : plan.steps) {
    if (s.kind == K::compose) ms.push_back(s.m);
  }
  return ms;
}

}  // namespace

TEST_CASE("Rational") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(10, 5).str() == "2/1");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5, 3) * Rational(3, 5) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(error_code([] { Rational(1, 0); }) == ErrorCode::invalid_argument);
  // Comparison does not overflow for large terms.
  CHECK(Rational(INT64_MAX - 1, INT64_MAX) < Rational(1));
}

TEST_CASE("factor_prime_powers") {
  CHECK(factor_prime_powers(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factor_prime_powers(97) == std::vector<PrimePower>{{97, 1}});
  CHECK(factor_prime_powers(1024) == std::vector<PrimePower>{{2, 10}});
  for (std::uint64_t n = 2; n < 2000; ++n) {
    std::uint64_t back = 1;
    for (auto [p, e] : factor_prime_powers(n)) {
      CHECK(is_prime_power(p) == PrimePower{p, 1});
      for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == n);
  }
}

TEST_CASE("c=2 plans") {
  auto p7 = plan_theorem2(7);
  CHECK(p7.target == PlanTarget{2, 4, 7, 73});
  CHECK(p7.steps == std::vector<PlanStep>{PlanStep::from_base(BaseCodeId::ex1), PlanStep::compose(3),
                                          PlanStep::augment()});
  auto p5 = plan_theorem2(5);
  CHECK(p5.steps == std::vector<PlanStep>{PlanStep::from_base(BaseCodeId::lem4), PlanStep::augment()});
  CHECK(p5.target.size == 33);
  CHECK(plan_theorem2(19).target.size == 649);
  CHECK(compose_ms(plan_theorem2(19)) == std::vector<std::size_t>{9});

  // 31: (31-1)/2 = 15 is not a prime power; split off 5 and recurse on 7.
  auto p31 = plan_theorem2(31);
  CHECK(p31.steps.front() == PlanStep::from_base(BaseCodeId::ex1));
  CHECK(compose_ms(p31) == std::vector<std::size_t>{3, 5});
  // 13: m = 6, split off 3, recurse on 5.
  auto p13 = plan_theorem2(13);
  CHECK(p13.steps.front() == PlanStep::from_base(BaseCodeId::lem4));
  CHECK(compose_ms(p13) == std::vector<std::size_t>{3});

  CHECK(error_code([] { plan_theorem2(8); }) == ErrorCode::invalid_argument);
  CHECK(error_code([] { plan_theorem2(1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("c=3 plans") {
  CHECK(plan_theorem3(4).steps ==
        std::vector<PlanStep>{PlanStep::from_base(BaseCodeId::ex2), PlanStep::augment()});
  CHECK(plan_theorem3(4).target.size == 16);
  CHECK(plan_theorem3(10).target == PlanTarget{3, 5, 10, 136});
  CHECK(plan_theorem3(22).target.size == 736);
  CHECK(compose_ms(plan_theorem3(22)) == std::vector<std::size_t>{7});
  auto p46 = plan_theorem3(46);
  CHECK(p46.steps.front() == PlanStep::from_base(BaseCodeId::lem5));
  CHECK(compose_ms(p46) == std::vector<std::size_t>{5});
  CHECK(error_code([] { plan_theorem3(18); }) == ErrorCode::invalid_argument);
}

TEST_CASE("every plan composes over prime powers and hits its target") {
  for (std::uint64_t q = 3; q <= 301; q += 2) {
    CAPTURE(q);
    const auto plan = plan_theorem2(q);
    CHECK(plan == plan_theorem2(q));
    std::uint64_t qq = 0, size = 0;
    for (const auto& s : plan.steps) {
      if (s.kind == K::base) {
        qq = base_code_info(s.base).q;
        size = base_code_info(s.base).size;
      } else if (s.kind == K::compose) {
        CHECK(is_prime_power(s.m).has_value());
        CHECK(s.m + 1 >= 4);
        qq = (qq - 1) * s.m + 1;
        size *= s.m * s.m;
      } else {
        ++size;
      }
    }
    CHECK(qq == q);
    CHECK(size == plan.target.size);
  }
  for (std::uint64_t q = 4; q <= 400; q += 6) {
    CAPTURE(q);
    const auto plan = plan_theorem3(q);
    std::uint64_t qq = 0, size = 0;
    for (const auto& s : plan.steps) {
      if (s.kind == K::base) {
        qq = base_code_info(s.base).q;
        size = base_code_info(s.base).size;
      } else if (s.kind == K::compose) {
        CHECK(is_prime_power(s.m).has_value());
        CHECK(s.m >= 4);
        qq = (qq - 1) * s.m + 1;
        size *= s.m * s.m;
      } else {
        ++size;
      }
    }
    CHECK(qq == q);
    CHECK(size == plan.target.size);
  }
}

TEST_CASE("execute_plan") {
  const Code c7 = execute_plan(plan_theorem2(7));
  CHECK(c7.size() == 73);
  CHECK(is_frameproof_naive(c7, 2).verdict);
  const Code c13 = execute_plan(plan_theorem2(13));
  CHECK(c13.size() == 289);
  CHECK(is_frameproof_cover(c13, 2).verdict);
  CHECK(execute_plan(plan_theorem3(22)).size() == 736);

  ConstructionPlan bad = plan_theorem2(7);
  bad.target.size = 74;
  CHECK(error_code([&] { execute_plan(bad); }) == ErrorCode::precondition);
  bad = plan_theorem2(7);
  bad.steps[1].m = 6;
  CHECK(error_code([&] { execute_plan(bad); }) == ErrorCode::not_prime_power);
  bad.steps.clear();
  CHECK(error_code([&] { execute_plan(bad); }) == ErrorCode::invalid_argument);
  bad.steps = {PlanStep::augment()};
  CHECK(error_code([&] { execute_plan(bad); }) == ErrorCode::invalid_argument);
}

TEST_CASE("format_plan") {
  CHECK(format_plan(plan_theorem2(7)) ==
        "plan c=2 l=4 q=7 M=73 (c=2 length-4 induction)\n"
        "  augment_inf                -> q=7 M=73\n"
        "    compose m=3              -> q=7 M=72\n"
        "      base ex1               -> q=3 M=8\n");
}

TEST_CASE("bounds") {
  CHECK(ssw_bound(2, 4, 7) == 96);
  CHECK(ssw_bound(3, 5, 10) == 297);
  CHECK(ssw_bound(3, 4, 10) == 297);
  CHECK(ssw_bound(2, 3, 5) == 48);
  CHECK(blackburn_leading(3, 5) == Rational(5, 3));
  CHECK(blackburn_leading(2, 4) == Rational(2));
  CHECK(blackburn_leading(2, 3) == Rational(1));
  CHECK(blackburn_leading(3, 6) == Rational(3));
  CHECK(blackburn_leading(4, 6) == Rational(3, 2));
  CHECK(achieved_rate(2, 4, 7, 73) == Rational(73, 49));
  CHECK(achieved_rate(2, 4, 101, 20001) == Rational(20001, 10201));
  CHECK(error_code([] { ssw_bound(1, 4, 3); }) == ErrorCode::invalid_argument);
  CHECK(error_code([] { ssw_bound(2, 200, 1000); }) == ErrorCode::limit_exceeded);

  auto r = bound_report(3, 5, 10, 136);
  CHECK(format_bound_line(r) == "c=3 l=5 q=10 ssw=297 leading=5/3 achieved=136");
  CHECK(r.within_bound());
  CHECK(r.rate_upper == Rational(297, 100));
  CHECK(format_bound_line(bound_report(2, 4, 7)) == "c=2 l=4 q=7 ssw=96 leading=2/1 achieved=-");
  CHECK_FALSE(bound_report(2, 4, 3, 17).within_bound());
}

TEST_CASE("achieved rates rise with q and stay under the bound") {
  Rational prev(0);
  for (std::uint64_t q = 3; q <= 201; q += 2) {
    const auto plan = plan_theorem2(q);
    const auto rate = achieved_rate(2, 4, q, plan.target.size);
    CHECK(prev < rate);
    CHECK(rate < Rational(2));
    CHECK(plan.target.size <= ssw_bound(2, 4, q));
    prev = rate;
  }
  prev = Rational(0);
  for (std::uint64_t q = 4; q <= 400; q += 6) {
    const auto plan = plan_theorem3(q);
    const auto rate = achieved_rate(3, 5, q, plan.target.size);
    CHECK(prev < rate);
    CHECK(rate < Rational(5, 3));
    CHECK(plan.target.size <= ssw_bound(3, 5, q));
    prev = rate;
  }
}
