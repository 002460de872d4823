#include <random>
#include <string>

#include "fpc/cli.hpp"
#include "fpc/error.hpp"
#include "fpc/orthogonal_array.hpp"
#include "fpc/random_code.hpp"
#include "fpc/verifier.hpp"

namespace fpc::cli {

namespace {

SelftestCheck fixture_check(BaseCodeId id, const Code& code, unsigned jobs) {
  const auto info = base_code_info(id);
  SelftestCheck check{"fixture " + std::string(to_string(id)), false, {}};
  if (code.alphabet_size() != info.q || code.length() != info.length ||
      code.size() != info.size) {
    check.detail = "expected q=" + std::to_string(info.q) + " l=" + std::to_string(info.length) +
                   " M=" + std::to_string(info.size);
    return check;
  }
  if (!code.inf_id() || !satisfies_property_pt(code, 2).verdict) {
    check.detail = "Property P(2) fails";
    return check;
  }
  VerifyOptions options;
  options.jobs = jobs;
  if (!is_frameproof_naive(code, info.c, options).verdict) {
    check.detail = "not " + std::to_string(info.c) + "-frameproof";
    return check;
  }
  check.passed = true;
  check.detail = "M=" + std::to_string(code.size()) + ", " + std::to_string(info.c) +
                 "-frameproof, P(2)";
  return check;
}

}  // namespace

std::vector<SelftestCheck> selftest(const SelftestOptions& options) {
  std::vector<SelftestCheck> checks;
  for (auto id : {BaseCodeId::ex1, BaseCodeId::ex2, BaseCodeId::lem4, BaseCodeId::lem5}) {
    try {
      auto it = options.fixture_overrides.find(id);
      const Code code = it != options.fixture_overrides.end() ? it->second : base_code(id);
      checks.push_back(fixture_check(id, code, options.jobs));
    } catch (const Error& e) {
      checks.push_back({"fixture " + std::string(to_string(id)), false, e.what()});
    }
  }

  for (std::size_t s : {2, 3, 4, 5, 7, 8, 9}) {
    const auto array = build_oa_strength2(s);
    const bool ok = verify_oa(array).verdict;
    checks.push_back({"OA(2," + std::to_string(s + 1) + "," + std::to_string(s) + ")", ok,
                      ok ? "" : "tuple counts wrong"});
  }

  std::mt19937_64 rng(options.seed);
  std::size_t agree = 0, violations = 0, bad_witness = 0;
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    const auto rc = random_case(rng);
    const auto naive = is_frameproof_naive(rc.code, rc.c);
    const auto cover = is_frameproof_cover(rc.code, rc.c);
    if (naive.verdict == cover.verdict) ++agree;
    for (const auto* r : {&naive, &cover}) {
      if (!r->verdict && !(r->witness && witness_revalidates(*r->witness))) ++bad_witness;
    }
    if (!naive.verdict) ++violations;
  }
  checks.push_back({"naive/cover agreement",
                    agree == options.random_trials && bad_witness == 0,
                    std::to_string(agree) + "/" + std::to_string(options.random_trials) +
                        " agree, " + std::to_string(violations) + " violations, " +
                        std::to_string(bad_witness) + " bad witnesses"});
  return checks;
}

}  // namespace fpc::cli
