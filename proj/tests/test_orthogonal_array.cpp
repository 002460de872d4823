#include <doctest.h>

#include <random>

#include "fpc/code_io.hpp"
#include "fpc/error.hpp"
#include "fpc/orthogonal_array.hpp"
#include "fpc/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fpc;

namespace {

std::vector<std::vector<Symbol>> rows_of(const OrthogonalArray& a) {
  std::vector<std::vector<Symbol>> rows;
  for (std::size_t r = 0; r < a.constraints(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());
  return rows;
}

OrthogonalArray with_cell(const OrthogonalArray& a, std::size_t r, std::size_t c, Symbol v) {
  std::vector<Symbol> cells(a.cells().begin(), a.cells().end());
  cells[r * a.runs() + c] = v;
  return {a.constraints(), a.levels(), a.strength(), a.runs(), std::move(cells)};
}

}  // namespace

TEST_CASE("OA(2,3,2) layout") {
  const auto a = build_oa_strength2(2);
  CHECK(a.constraints() == 3);
  CHECK(a.runs() == 4);
  CHECK(a.index() == 1);
  CHECK(format_oa(a) == "oa1 N=4 k=3 s=2 t=2\n0 1 0 1\n0 1 1 0\n0 0 1 1\n");
  CHECK(a.column(3) == Word{1, 0, 1});
}

TEST_CASE("strength-2 arrays for every prime power up to 49") {
  for (std::size_t s : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41,
                        43, 47, 49}) {
    CAPTURE(s);
    const auto a = build_oa_strength2(s);
    CHECK(a.constraints() == s + 1);
    CHECK(a.runs() == s * s);
    CHECK(verify_oa(a).verdict);
    CHECK(oracle::is_strength2_oa(rows_of(a), s));

    // Distinct columns agree in at most one row.
    std::size_t worst = 0;
    for (std::size_t x = 0; x < a.runs(); ++x) {
      for (std::size_t y = x + 1; y < a.runs(); ++y) {
        std::size_t agree = 0;
        for (std::size_t r = 0; r < a.constraints(); ++r) agree += a.at(r, x) == a.at(r, y);
        worst = std::max(worst, agree);
      }
    }
    CHECK(worst <= 1);
  }
  CHECK(error_code([] { build_oa_strength2(6); }) == ErrorCode::not_prime_power);
}

TEST_CASE("every single-cell corruption is detected") {
  for (std::size_t s : {2, 3, 4, 5}) {
    const auto a = build_oa_strength2(s);
    for (std::size_t r = 0; r < a.constraints(); ++r) {
      for (std::size_t c = 0; c < a.runs(); ++c) {
        const Symbol v = static_cast<Symbol>((a.at(r, c) + 1) % s);
        const auto bad = with_cell(a, r, c, v);
        const auto report = verify_oa(bad);
        CHECK_FALSE(report.verdict);
        REQUIRE(report.witness);
        CHECK(report.witness->kind == WitnessKind::oa_violation);
        CHECK(report.witness->observed != report.witness->expected);
        CHECK_FALSE(oracle::is_strength2_oa(rows_of(bad), s));
      }
    }
  }
}

TEST_CASE("verify_oa on inconsistent run counts") {
  const OrthogonalArray a(3, 2, 2, 3, {0, 1, 0, 0, 1, 1, 0, 0, 1});
  const auto r = verify_oa(a);
  CHECK_FALSE(r.verdict);
  CHECK(r.witness->observed == 3);
}

TEST_CASE("constructor validation") {
  CHECK(error_code([] { OrthogonalArray(2, 2, 2, 2, {0, 1, 0}); }) == ErrorCode::dimension_mismatch);
  CHECK(error_code([] { OrthogonalArray(2, 2, 2, 2, {0, 1, 0, 2}); }) ==
        ErrorCode::symbol_out_of_range);
  CHECK(error_code([] { OrthogonalArray(2, 2, 3, 2, {0, 1, 0, 1}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("normalize_column_to_infinity") {
  std::mt19937_64 rng(3);
  for (std::size_t s : {3, 4, 5, 7}) {
    const auto a = build_oa_strength2(s);
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t col = rng() % a.runs();
      const auto b = normalize_column_to_infinity(a, col);
      CHECK(b.column(col) == Word(a.constraints(), 0));
      CHECK(verify_oa(b).verdict);
      // Each row is relabelled by a transposition.
      for (std::size_t r = 0; r < a.constraints(); ++r) {
        const Symbol v = a.at(r, col);
        for (std::size_t j = 0; j < a.runs(); ++j) {
          const Symbol x = a.at(r, j);
          const Symbol want = x == v ? 0 : x == 0 ? v : x;
          CHECK(b.at(r, j) == want);
        }
      }
    }
  }
  const auto a = build_oa_strength2(3);
  CHECK(normalize_column_to_infinity(a, 0) == a);
  CHECK(error_code([&] { normalize_column_to_infinity(a, 9); }) == ErrorCode::invalid_argument);
}

TEST_CASE("oa_to_frameproof") {
  const auto a = build_oa_strength2(4);
  for (std::size_t c : {3, 4}) {
    const Code code = oa_to_frameproof(a, c);
    CHECK(code.size() == 16);
    CHECK(code.length() == 5);
    CHECK(code.alphabet_size() == 4);
    CHECK(is_frameproof_naive(code, c).verdict);
    CHECK(oracle::is_frameproof(code.words(), c));
  }
  CHECK(error_code([&] { oa_to_frameproof(a, 5); }) == ErrorCode::precondition);
}

TEST_CASE("oa_to_pt_code") {
  for (auto [s, size] : {std::pair<std::size_t, std::size_t>{4, 15}, {3, 8}, {2, 3}}) {
    const Code code = oa_to_pt_code(build_oa_strength2(s), 2);
    CHECK(code.size() == size);
    CHECK(code.length() == s + 1);
    CHECK(code.inf_id() == Symbol{0});
    CHECK(satisfies_property_pt(code, 2).verdict);
    CHECK(oracle::has_property_pt(code.words(), 0, 2));
  }
  const auto a = build_oa_strength2(3);
  CHECK(error_code([&] { oa_to_pt_code(a, 3); }) == ErrorCode::precondition);
  const OrthogonalArray doubled(2, 2, 2, 8, {0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(verify_oa(doubled).verdict);
  CHECK(doubled.index() == 2);
  CHECK(error_code([&] { oa_to_pt_code(doubled, 2); }) == ErrorCode::precondition);
}

TEST_CASE("OA text format") {
  for (std::size_t s : {2, 5, 8}) {
    const auto a = build_oa_strength2(s);
    const auto text = format_oa(a);
    const auto b = parse_oa(text);
    CHECK(b == a);
    CHECK(format_oa(b) == text);
  }
  CHECK(error_code([] { parse_oa("oa1 N=2 k=1 s=2 t=1\n0 1\n0 1\n"); }) == ErrorCode::parse);
  CHECK(error_code([] { parse_oa("oa1 N=2 k=1 s=2 t=1\n0\n"); }) == ErrorCode::dimension_mismatch);
  CHECK(error_code([] { parse_oa("oa1 N=2 k=1 s=2 t=1\n0 2\n"); }) == ErrorCode::symbol_out_of_range);
  CHECK(error_code([] { parse_oa("OA N=2 k=1 s=2 t=1\n0 1\n"); }) == ErrorCode::parse);

  const auto path = tmp_path("roundtrip.oa");
  save_oa(path, build_oa_strength2(7));
  CHECK(load_oa(path) == build_oa_strength2(7));
}
