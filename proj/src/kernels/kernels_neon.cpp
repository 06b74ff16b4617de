#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "graphcurv/kernels.hpp"

namespace graphcurv::kernels::detail {
namespace {

inline std::size_t count_vector(uint64x2_t v) {
  return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

std::size_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                              std::size_t words) {
  std::size_t i = 0;
  std::size_t count = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    vst1q_u64(out + i, v);
    count += count_vector(v);
  }
  for (; i < words; ++i) {
    out[i] = a[i] & b[i];
    count += static_cast<std::size_t>(std::popcount(out[i]));
  }
  return count;
}

std::size_t and_count_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  std::size_t count = 0;
  for (; i + 2 <= words; i += 2) count += count_vector(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

std::size_t popcount_neon(const std::uint64_t* a, std::size_t words) {
  std::size_t i = 0;
  std::size_t count = 0;
  for (; i + 2 <= words; i += 2) count += count_vector(vld1q_u64(a + i));
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

void less_mask_neon(const double* values, std::size_t count, double threshold,
                    std::uint64_t* out) {
  const float64x2_t t = vdupq_n_f64(threshold);
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = w * 64;
    const std::size_t end = base + 64 < count ? base + 64 : count;
    std::uint64_t bits = 0;
    std::size_t i = base;
    for (; i + 2 <= end; i += 2) {
      const uint64x2_t m = vcltq_f64(vld1q_f64(values + i), t);
      bits |= (vgetq_lane_u64(m, 0) & 1u) << (i - base);
      bits |= (vgetq_lane_u64(m, 1) & 1u) << (i + 1 - base);
    }
    for (; i < end; ++i) {
      if (values[i] < threshold) bits |= std::uint64_t{1} << (i - base);
    }
    out[w] = bits;
  }
}

}  // namespace

const KernelTable neon_table{Isa::neon, and_popcount_neon, and_count_neon, popcount_neon,
                             less_mask_neon};

}  // namespace graphcurv::kernels::detail

#endif
