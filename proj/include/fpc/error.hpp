#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpc {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  symbol_out_of_range,
  duplicate_word,
  not_prime_power,
  precondition,
  limit_exceeded,
  budget_exceeded,
  unsupported,
  parse,
  io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the naive frameproof verifier. Coalition sizes 1..verified_size
// were fully checked before the budget ran out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t examined, std::uint64_t budget,
                 std::size_t verified_size, const std::string& what)
      : Error(ErrorCode::budget_exceeded, what),
        examined_(examined),
        budget_(budget),
        verified_size_(verified_size) {}

  std::uint64_t examined() const noexcept { return examined_; }
  std::uint64_t budget() const noexcept { return budget_; }
  std::size_t verified_size() const noexcept { return verified_size_; }

 private:
  std::uint64_t examined_;
  std::uint64_t budget_;
  std::size_t verified_size_;
};

}  // namespace fpc
