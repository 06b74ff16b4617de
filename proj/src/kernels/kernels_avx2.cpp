// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "graphcurv/kernels.hpp"

namespace graphcurv::kernels::detail {
namespace {

// Nibble-lookup popcount (Mula); AVX2 has no native vector popcount.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                          2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum(__m256i acc64) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc64);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

// Byte counters saturate after 31 blocks of 8 bits each; fold to 64-bit lanes
// every iteration with sad_epu8, which is cheap enough at these sizes.
inline __m256i accumulate(__m256i acc64, __m256i v) {
  return _mm256_add_epi64(acc64, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
}

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                              std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i v = _mm256_and_si256(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
    acc = accumulate(acc, v);
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) {
    out[i] = a[i] & b[i];
    count += static_cast<std::size_t>(_mm_popcnt_u64(out[i]));
  }
  return count;
}

std::size_t and_count_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = accumulate(acc, _mm256_and_si256(va, vb));
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) count += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return count;
}

std::size_t popcount_avx2(const std::uint64_t* a, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    acc = accumulate(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) count += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return count;
}

void less_mask_avx2(const double* values, std::size_t count, double threshold,
                    std::uint64_t* out) {
  const __m256d t = _mm256_set1_pd(threshold);
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = w * 64;
    const std::size_t end = base + 64 < count ? base + 64 : count;
    std::uint64_t bits = 0;
    std::size_t i = base;
    for (; i + 4 <= end; i += 4) {
      // _CMP_LT_OQ: false on NaN, matching the scalar `<`.
      const __m256d v = _mm256_loadu_pd(values + i);
      const auto m = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_cmp_pd(v, t, _CMP_LT_OQ)));
      bits |= m << (i - base);
    }
    for (; i < end; ++i) {
      if (values[i] < threshold) bits |= std::uint64_t{1} << (i - base);
    }
    out[w] = bits;
  }
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, and_popcount_avx2, and_count_avx2, popcount_avx2,
                             less_mask_avx2};

}  // namespace graphcurv::kernels::detail

#endif
