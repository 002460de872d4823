// Compiled with -mavx2. Only reached after a cpuid check in kernels.cpp.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace fpc::kernels::detail {

namespace {

constexpr std::size_t kLanes = 16;

inline __m256i load_lanes(const Symbol* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

void agreement_masks_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                          const Symbol* x, std::size_t begin, std::size_t end,
                          std::uint64_t* out) {
  std::size_t j = begin;
  for (; j + kLanes <= end; j += kLanes) {
    __m256i wide[4] = {_mm256_setzero_si256(), _mm256_setzero_si256(), _mm256_setzero_si256(),
                       _mm256_setzero_si256()};
    // 16 positions per group fit the 16-bit lanes; each group is widened to
    // 64 bits and shifted into place.
    for (std::size_t g = 0; g * 16 < length; ++g) {
      __m256i acc = _mm256_setzero_si256();
      const std::size_t stop = length < (g + 1) * 16 ? length : (g + 1) * 16;
      for (std::size_t i = g * 16; i < stop; ++i) {
        __m256i eq = _mm256_cmpeq_epi16(load_lanes(cols + i * stride + j),
                                        _mm256_set1_epi16(static_cast<short>(x[i])));
        acc = _mm256_or_si256(
            acc, _mm256_and_si256(eq, _mm256_set1_epi16(static_cast<short>(1u << (i - g * 16)))));
      }
      const __m128i lo = _mm256_castsi256_si128(acc);
      const __m128i hi = _mm256_extracti128_si256(acc, 1);
      const __m128i parts[4] = {lo, _mm_srli_si128(lo, 8), hi, _mm_srli_si128(hi, 8)};
      const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(g * 16));
      for (int k = 0; k < 4; ++k) {
        wide[k] = _mm256_or_si256(wide[k], _mm256_sll_epi64(_mm256_cvtepu16_epi64(parts[k]), shift));
      }
    }
    for (int k = 0; k < 4; ++k) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + (j - begin) + 4 * k), wide[k]);
    }
  }
  if (j < end) agreement_masks_scalar(cols, stride, length, x, j, end, out + (j - begin));
}

void agreement_counts_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* x, Symbol skip, std::size_t begin, std::size_t end,
                           std::uint16_t* out) {
  std::size_t j = begin;
  for (; j + kLanes <= end; j += kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < length; ++i) {
      if (x[i] == skip) continue;
      __m256i eq = _mm256_cmpeq_epi16(load_lanes(cols + i * stride + j),
                                      _mm256_set1_epi16(static_cast<short>(x[i])));
      acc = _mm256_sub_epi16(acc, eq);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + (j - begin)), acc);
  }
  if (j < end) agreement_counts_scalar(cols, stride, length, x, skip, j, end, out + (j - begin));
}

void descendant_flags_avx2(const Symbol* cols, std::size_t stride, std::size_t length,
                           const Symbol* members, std::size_t member_count, std::size_t begin,
                           std::size_t end, std::uint8_t* out) {
  std::size_t j = begin;
  for (; j + kLanes <= end; j += kLanes) {
    __m256i all = _mm256_set1_epi16(-1);
    for (std::size_t i = 0; i < length; ++i) {
      const __m256i v = load_lanes(cols + i * stride + j);
      __m256i hit = _mm256_setzero_si256();
      for (std::size_t y = 0; y < member_count; ++y) {
        hit = _mm256_or_si256(
            hit, _mm256_cmpeq_epi16(v, _mm256_set1_epi16(
                                           static_cast<short>(members[y * length + i]))));
      }
      all = _mm256_and_si256(all, hit);
      if (_mm256_testz_si256(all, all)) break;
    }
    const __m256i ones = _mm256_srli_epi16(all, 15);
    const __m256i packed = _mm256_permute4x64_epi64(_mm256_packus_epi16(ones, ones), 0xD8);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + (j - begin)),
                     _mm256_castsi256_si128(packed));
  }
  if (j < end) {
    descendant_flags_scalar(cols, stride, length, members, member_count, j, end,
                            out + (j - begin));
  }
}

}  // namespace fpc::kernels::detail
