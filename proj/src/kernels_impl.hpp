#pragma once

// Kernel entry points shared between the dispatch unit and the per-ISA
// translation units. Keep this header free of inline C++ library code: the
// AVX2 unit is compiled with -mavx2 and must not emit shared inline symbols.

#include <cstddef>
#include <cstdint>

namespace fpc {
using Symbol = std::uint16_t;
}

namespace fpc::kernels::detail {

void agreement_masks_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                            const Symbol* x, std::size_t begin, std::size_t end,
                            std::uint64_t* out);
void agreement_counts_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                             const Symbol* x, Symbol skip, std::size_t begin, std::size_t end,
                             std::uint16_t* out);
void descendant_flags_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                             const Symbol* members, std::size_t member_count, std::size_t begin,
                             std::size_t end, std::uint8_t* out);

#if defined(FPC_HAVE_AVX2_KERNELS)
void agreement_masks_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                          const Symbol* x, std::size_t begin, std::size_t end,
                          std::uint64_t* out);
void agreement_counts_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* x, Symbol skip, std::size_t begin, std::size_t end,
                           std::uint16_t* out);
void descendant_flags_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* members, std::size_t member_count, std::size_t begin,
                           std::size_t end, std::uint8_t* out);
#endif

}  // namespace fpc::kernels::detail
