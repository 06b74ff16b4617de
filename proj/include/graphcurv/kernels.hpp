#pragma once

// Data-parallel inner loops over packed vertex sets.
//
// Every routine exists as a portable scalar reference and, where the target
// supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The active table is
// chosen once at startup from CPU feature detection and can be pinned with
// the GRAPHCURV_ISA environment variable (scalar|avx2|neon). All variants are
// required to produce bit-identical results; tests/test_kernels.cpp checks this.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace graphcurv::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[i] = a[i] & b[i]; returns the popcount of out.
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                              std::size_t words);
  /// Popcount of a & b without storing the intersection.
  std::size_t (*and_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  /// Bit i of out is set iff values[i] < threshold, for i < count. Bits at or
  /// past count in the last word are cleared. out holds ceil(count/64) words.
  void (*less_mask)(const double* values, std::size_t count, double threshold,
                    std::uint64_t* out);
};

/// Table for a specific ISA. Throws InputError when the ISA was not compiled
/// in or the running CPU lacks it.
const KernelTable& table(Isa isa);

/// The table selected for this process.
const KernelTable& active() noexcept;

/// ISAs usable on this machine, scalar first.
std::vector<Isa> available();

/// Runtime switch used by the benchmark and tests. Throws like table().
void select(Isa isa);

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace graphcurv::kernels
