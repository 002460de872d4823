#include "kernels_impl.hpp"

namespace fpc::kernels::detail {

void agreement_masks_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                            const Symbol* x, std::size_t begin, std::size_t end,
                            std::uint64_t* out) {
  for (std::size_t j = begin; j < end; ++j) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < length; ++i) {
      if (cols[i * stride + j] == x[i]) mask |= std::uint64_t{1} << i;
    }
    out[j - begin] = mask;
  }
}

void agreement_counts_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                             const Symbol* x, Symbol skip, std::size_t begin, std::size_t end,
                             std::uint16_t* out) {
  for (std::size_t j = begin; j < end; ++j) {
    std::uint16_t n = 0;
    for (std::size_t i = 0; i < length; ++i) {
      if (x[i] != skip && cols[i * stride + j] == x[i]) ++n;
    }
    out[j - begin] = n;
  }
}

void descendant_flags_scalar(const Symbol* cols, std::size_t stride, std::size_t length,
                             const Symbol* members, std::size_t member_count, std::size_t begin,
                             std::size_t end, std::uint8_t* out) {
  for (std::size_t j = begin; j < end; ++j) {
    bool all = true;
    for (std::size_t i = 0; i < length && all; ++i) {
      const Symbol v = cols[i * stride + j];
      bool hit = false;
      for (std::size_t y = 0; y < member_count && !hit; ++y) hit = members[y * length + i] == v;
      all = hit;
    }
    out[j - begin] = all ? 1 : 0;
  }
}

}  // namespace fpc::kernels::detail
