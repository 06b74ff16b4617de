#include <bit>
#include <cstddef>
#include <cstdint>

#include "graphcurv/kernels.hpp"

namespace graphcurv::kernels::detail {
namespace {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                std::uint64_t* out, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    out[i] = a[i] & b[i];
    count += static_cast<std::size_t>(std::popcount(out[i]));
  }
  return count;
}

std::size_t and_count_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

void less_mask_scalar(const double* values, std::size_t count, double threshold,
                      std::uint64_t* out) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = 0;
    const std::size_t base = w * 64;
    const std::size_t end = base + 64 < count ? base + 64 : count;
    for (std::size_t i = base; i < end; ++i) {
      if (values[i] < threshold) bits |= std::uint64_t{1} << (i - base);
    }
    out[w] = bits;
  }
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, and_popcount_scalar, and_count_scalar, popcount_scalar,
                               less_mask_scalar};

}  // namespace graphcurv::kernels::detail
