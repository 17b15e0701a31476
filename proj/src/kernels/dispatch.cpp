#include "surfsym/kernels.hpp"

namespace surfsym::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
  }();
  return chosen;
}

void genus_row(const GenusRowArgs& args, std::span<std::int32_t> genus,
               std::span<std::int32_t> lcm) {
  switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: return genus_row_avx2(args, genus, lcm);
#endif
#if defined(__aarch64__)
    case Isa::Neon: return genus_row_neon(args, genus, lcm);
#endif
    default: return genus_row_scalar(args, genus, lcm);
  }
}

}  // namespace surfsym::kernels
