#include <doctest.h>

#include <random>

#include "fpc/constructions.hpp"
#include "fpc/error.hpp"
#include "fpc/random_code.hpp"
#include "fpc/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fpc;

TEST_CASE("seed codes verify") {
  for (auto id : {BaseCodeId::ex1, BaseCodeId::ex2, BaseCodeId::lem4, BaseCodeId::lem5}) {
    const auto info = base_code_info(id);
    const Code code = base_code(id);
    CAPTURE(to_string(id));
    CHECK(code.size() == info.size);
    CHECK(is_frameproof_naive(code, info.c).verdict);
    CHECK(is_frameproof_cover(code, info.c).verdict);
    CHECK(satisfies_property_pt(code, 2).verdict);
    CHECK(oracle::has_property_pt(code.words(), 0, 2));
  }
  CHECK(oracle::is_frameproof(base_code(BaseCodeId::ex1).words(), 2));
  CHECK(oracle::is_frameproof(base_code(BaseCodeId::ex2).words(), 3));
}

TEST_CASE("naive verifier reports the first violation") {
  // 0000 and 1111 frame 0011.
  const Code code(4, 2, {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1}});
  const auto r = is_frameproof_naive(code, 2);
  REQUIRE_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->coalition == std::vector<Word>{{0, 0, 0, 0}, {1, 1, 1, 1}});
  CHECK(r.witness->framed_word == Word{0, 0, 1, 1});
  CHECK(witness_revalidates(*r.witness));
  CHECK(code.contains(r.witness->framed_word));
  CHECK(r.subsets_examined > 0);
}

TEST_CASE("verifier argument checks") {
  const Code ex1 = base_code(BaseCodeId::ex1);
  CHECK(error_code([&] { is_frameproof_naive(ex1, 1); }) == ErrorCode::invalid_argument);
  CHECK(error_code([&] { is_frameproof_cover(ex1, 1); }) == ErrorCode::invalid_argument);
  CHECK(error_code([&] { satisfies_property_pt(ex1, 0); }) == ErrorCode::invalid_argument);
  const Code wide(65, 2, {Word(65, 0)});
  CHECK(error_code([&] { is_frameproof_cover(wide, 2); }) == ErrorCode::unsupported);
  CHECK(is_frameproof_naive(wide, 2).verdict);
  CHECK(is_frameproof_naive(Code(3, 2, {}), 2).verdict);
}

TEST_CASE("naive verifier budget") {
  const Code lem5 = base_code(BaseCodeId::lem5);
  VerifyOptions options;
  options.budget = 100'000;
  try {
    is_frameproof_naive(lem5, 3, options);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
    CHECK(e.budget() == 100'000);
    // Size 1 costs 135*134 pairs; size 2 would push past the budget.
    CHECK(e.verified_size() == 1);
  }
}

TEST_CASE("Property P(t) witnesses") {
  const Code too_many_inf(3, 3, {{0, 0, 1}}, Symbol{0});
  auto r = satisfies_property_pt(too_many_inf, 2);
  REQUIRE_FALSE(r.verdict);
  CHECK(r.witness->kind == WitnessKind::pt_violation);
  CHECK(r.witness->positions == std::vector<std::size_t>{0, 1});
  CHECK(witness_revalidates(*r.witness, Symbol{0}, 2));
  CHECK(satisfies_property_pt(too_many_inf, 3).verdict);

  const Code shared(3, 3, {{1, 1, 2}, {1, 1, 0}}, Symbol{0});
  r = satisfies_property_pt(shared, 2);
  REQUIRE_FALSE(r.verdict);
  CHECK(r.witness->pair.size() == 2);
  CHECK(r.witness->positions == std::vector<std::size_t>{0, 1});
  CHECK(witness_revalidates(*r.witness, Symbol{0}, 2));

  // Agreement on inf does not count.
  const Code inf_agree(3, 3, {{0, 1, 2}, {0, 2, 1}}, Symbol{0});
  CHECK(satisfies_property_pt(inf_agree, 2).verdict);
  CHECK(error_code([] { satisfies_property_pt(Code(2, 2, {{0, 1}}), 2); }) ==
        ErrorCode::precondition);
}

TEST_CASE("naive and cover agree with the definition on random codes") {
  std::mt19937_64 rng(0xC0FFEE);
  std::size_t violations = 0, planted = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto rc = random_case(rng);
    const auto expected = oracle::is_frameproof(rc.code.words(), rc.c);
    const auto naive = is_frameproof_naive(rc.code, rc.c);
    const auto cover = is_frameproof_cover(rc.code, rc.c);
    CHECK(naive.verdict == expected);
    CHECK(cover.verdict == expected);
    for (const auto* r : {&naive, &cover}) {
      if (!r->verdict) {
        REQUIRE(r->witness);
        CHECK(witness_revalidates(*r->witness));
        CHECK(r->witness->coalition.size() <= rc.c);
        CHECK(rc.code.contains(r->witness->framed_word));
        for (const auto& y : r->witness->coalition) CHECK(rc.code.contains(y));
      }
    }
    if (rc.planted) {
      ++planted;
      CHECK_FALSE(naive.verdict);
    }
    violations += !naive.verdict;
  }
  CHECK(planted > 200);
  CHECK(violations > planted);
  CHECK(violations < 1500);
}

TEST_CASE("c-frameproof implies c'-frameproof for c' < c") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const auto rc = random_case(rng, {5, 5, 12, 4});
    bool previous = true;
    for (std::size_t c = 2; c <= 4; ++c) {
      const bool now = is_frameproof_cover(rc.code, c).verdict;
      CHECK((previous || !now));
      previous = now;
    }
  }
}

TEST_CASE("results do not depend on jobs or ISA") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rc = random_case(rng, {4, 6, 40, 3});
    const auto base = is_frameproof_naive(rc.code, rc.c);
    const auto base_cover = is_frameproof_cover(rc.code, rc.c);
    for (auto isa : kernels::available()) {
      for (unsigned jobs : {1u, 3u, 0u}) {
        VerifyOptions options;
        options.jobs = jobs;
        options.isa = isa;
        const auto r = is_frameproof_naive(rc.code, rc.c, options);
        CHECK(r.verdict == base.verdict);
        if (!r.verdict) {
          CHECK(r.witness->coalition == base.witness->coalition);
          CHECK(r.witness->framed_word == base.witness->framed_word);
        }
        CHECK(is_frameproof_cover(rc.code, rc.c, options).verdict == base_cover.verdict);
      }
    }
  }
}
