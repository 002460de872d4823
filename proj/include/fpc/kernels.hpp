#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpc/code.hpp"

namespace fpc {

/// Column-major copy of a code for the word-parallel kernels. Each column is
/// padded with kPadSymbol up to a multiple of kLanes words, so vector loads
/// never need a masked tail inside the padded range.
class PackedCode {
 public:
  static constexpr std::size_t kLanes = 16;

  explicit PackedCode(const Code& code);

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t stride() const noexcept { return stride_; }
  const Symbol* columns() const noexcept { return columns_.data(); }
  const Symbol* column(std::size_t i) const noexcept { return columns_.data() + i * stride_; }

 private:
  std::size_t length_;
  std::size_t size_;
  std::size_t stride_;
  std::vector<Symbol> columns_;
};

namespace kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

// Raw-pointer entry points. All kernels operate on words [begin, end) of a
// column-major array with `stride` symbols per column and `length` columns,
// writing out[j - begin] for each word j.
struct Table {
  Isa isa;

  // Bit i of out is set iff word j agrees with x at position i (length <= 64).
  void (*agreement_masks)(const Symbol* cols, std::size_t stride, std::size_t length,
                          const Symbol* x, std::size_t begin, std::size_t end,
                          std::uint64_t* out);

  // Number of positions i with word_j[i] == x[i] and x[i] != skip.
  void (*agreement_counts)(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* x, Symbol skip, std::size_t begin, std::size_t end,
                           std::uint16_t* out);

  // 1 iff every position of word j is matched by one of the `members`
  // row-major coalition words, else 0.
  void (*descendant_flags)(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* members, std::size_t member_count, std::size_t begin,
                           std::size_t end, std::uint8_t* out);
};

const Table& scalar_table();
/// nullptr when the AVX2 variants were not compiled in.
const Table* avx2_table();

bool cpu_supports(Isa isa);
/// Every ISA that is both compiled in and supported by this CPU.
std::vector<Isa> available();

/// Best available table. FPC_ISA=scalar|avx2 in the environment overrides the
/// choice (an unavailable request falls back to scalar). Resolved once.
const Table& best();
const Table& select(std::optional<Isa> requested);

// Span wrappers over a PackedCode.
void agreement_masks(const Table& k, const PackedCode& code, std::span<const Symbol> x,
                     std::size_t begin, std::span<std::uint64_t> out);
void agreement_counts(const Table& k, const PackedCode& code, std::span<const Symbol> x,
                      Symbol skip, std::size_t begin, std::span<std::uint16_t> out);
void descendant_flags(const Table& k, const PackedCode& code, std::span<const Symbol> members,
                      std::size_t begin, std::span<std::uint8_t> out);

}  // namespace kernels
}  // namespace fpc
