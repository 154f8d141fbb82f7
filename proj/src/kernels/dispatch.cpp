#include "nanores/errors.hpp"
#include "nanores/kernels/moment_kernels.hpp"

namespace nanores::kernels {

namespace {

#if defined(NANORES_HAVE_AVX2)
bool cpu_supports_avx2_fma() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

} // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, "scalar", &detail::ball_pair_scalar, &detail::radial_pair_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(NANORES_HAVE_AVX2)
  static const KernelTable table{Isa::avx2, "avx2", &detail::ball_pair_avx2, &detail::radial_pair_avx2};
  static const bool available = cpu_supports_avx2_fma();
  return available ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& select(KernelChoice choice) {
  switch (choice) {
  case KernelChoice::scalar: return scalar_table();
  case KernelChoice::avx2:
    if (const KernelTable* t = avx2_table()) return *t;
    throw UnsupportedError("AVX2 kernels are not available on this build or CPU");
  case KernelChoice::automatic: break;
  }
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

KernelChoice parse_choice(std::string_view text) {
  if (text == "auto") return KernelChoice::automatic;
  if (text == "scalar") return KernelChoice::scalar;
  if (text == "avx2") return KernelChoice::avx2;
  throw UnsupportedError("unknown kernel '" + std::string(text) + "' (expected auto, scalar or avx2)");
}

} // namespace nanores::kernels
