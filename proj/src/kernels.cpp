#include "fpc/kernels.hpp"

#include <cstdlib>
#include <string>

#include "fpc/error.hpp"
#include "kernels_impl.hpp"

namespace fpc {

PackedCode::PackedCode(const Code& code)
    : length_(code.length()),
      size_(code.size()),
      stride_((code.size() + kLanes - 1) / kLanes * kLanes),
      columns_(code.length() * stride_, kPadSymbol) {
  for (std::size_t j = 0; j < size_; ++j) {
    auto w = code.word(j);
    for (std::size_t i = 0; i < length_; ++i) columns_[i * stride_ + j] = w[i];
  }
}

namespace kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  return std::nullopt;
}

const Table& scalar_table() {
  static const Table table{Isa::scalar, detail::agreement_masks_scalar,
                           detail::agreement_counts_scalar, detail::descendant_flags_scalar};
  return table;
}

const Table* avx2_table() {
#if defined(FPC_HAVE_AVX2_KERNELS)
  static const Table table{Isa::avx2, detail::agreement_masks_avx2,
                           detail::agreement_counts_avx2, detail::descendant_flags_avx2};
  return &table;
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(FPC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::scalar};
  if (avx2_table() && cpu_supports(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const Table& select(std::optional<Isa> requested) {
  if (!requested) return best();
  if (*requested == Isa::avx2 && avx2_table() && cpu_supports(Isa::avx2)) return *avx2_table();
  if (*requested == Isa::avx2) {
    throw Error(ErrorCode::unsupported, "avx2 kernels are not available on this machine");
  }
  return scalar_table();
}

const Table& best() {
  static const Table& chosen = [] () -> const Table& {
    if (const char* env = std::getenv("FPC_ISA")) {
      auto isa = parse_isa(env);
      if (isa == Isa::scalar) return scalar_table();
      if (isa == Isa::avx2 && avx2_table() && cpu_supports(Isa::avx2)) return *avx2_table();
      return scalar_table();
    }
    if (avx2_table() && cpu_supports(Isa::avx2)) return *avx2_table();
    return scalar_table();
  }();
  return chosen;
}

namespace {

void check_range(const PackedCode& code, std::span<const Symbol> x, std::size_t begin,
                 std::size_t count) {
  if (x.size() != code.length()) {
    throw Error(ErrorCode::dimension_mismatch, "probe word length does not match code");
  }
  if (begin + count > code.size()) {
    throw Error(ErrorCode::invalid_argument, "kernel range outside code");
  }
}

}  // namespace

void agreement_masks(const Table& k, const PackedCode& code, std::span<const Symbol> x,
                     std::size_t begin, std::span<std::uint64_t> out) {
  check_range(code, x, begin, out.size());
  if (code.length() > 64) {
    throw Error(ErrorCode::unsupported, "agreement masks need code length <= 64");
  }
  k.agreement_masks(code.columns(), code.stride(), code.length(), x.data(), begin,
                    begin + out.size(), out.data());
}

void agreement_counts(const Table& k, const PackedCode& code, std::span<const Symbol> x,
                      Symbol skip, std::size_t begin, std::span<std::uint16_t> out) {
  check_range(code, x, begin, out.size());
  k.agreement_counts(code.columns(), code.stride(), code.length(), x.data(), skip, begin,
                     begin + out.size(), out.data());
}

void descendant_flags(const Table& k, const PackedCode& code, std::span<const Symbol> members,
                      std::size_t begin, std::span<std::uint8_t> out) {
  if (code.length() == 0 || members.size() % code.length() != 0) {
    throw Error(ErrorCode::dimension_mismatch, "coalition words do not match code length");
  }
  if (begin + out.size() > code.size()) {
    throw Error(ErrorCode::invalid_argument, "kernel range outside code");
  }
  k.descendant_flags(code.columns(), code.stride(), code.length(), members.data(),
                     members.size() / code.length(), begin, begin + out.size(), out.data());
}

}  // namespace kernels
}  // namespace fpc
