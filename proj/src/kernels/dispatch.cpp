#include <atomic>
#include <cstdlib>
#include <string>

#include "graphcurv/errors.hpp"
#include "graphcurv/kernels.hpp"

namespace graphcurv::kernels {
namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* compiled(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &detail::avx2_table;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return &detail::neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* detect() noexcept {
  if (const char* env = std::getenv("GRAPHCURV_ISA")) {
    const std::string want = env;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == name(isa) && cpu_has(isa) && compiled(isa)) return compiled(isa);
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (cpu_has(isa) && compiled(isa)) return compiled(isa);
  }
  return &detail::scalar_table;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

}  // namespace

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& table(Isa isa) {
  const KernelTable* t = compiled(isa);
  if (t == nullptr || !cpu_has(isa)) {
    throw InputError("kernel ISA '" + std::string(name(isa)) + "' is not available on this machine");
  }
  return *t;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_has(isa) && compiled(isa)) out.push_back(isa);
  }
  return out;
}

void select(Isa isa) { current().store(&table(isa), std::memory_order_relaxed); }

}  // namespace graphcurv::kernels
