#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fpc/code.hpp"
#include "fpc/constructions.hpp"

namespace fpc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kResource = 2;
inline constexpr int kUsage = 64;

/// Parses argv (argv[0] is the program name) and dispatches a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t random_trials = 300;
  unsigned jobs = 1;
  /// Replaces the built-in seed codes (used to check that the fixture
  /// checks can fail).
  std::map<BaseCodeId, Code> fixture_overrides;
};

struct SelftestCheck {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<SelftestCheck> selftest(const SelftestOptions& options);

}  // namespace fpc::cli
