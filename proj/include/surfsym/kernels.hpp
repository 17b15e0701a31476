#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel row kernel behind the direct (m, n) scan for handlebody
// witnesses. For a fixed odd m and the arithmetic row n_j = n_first + j*n_step
// it writes
//
//   lcm[j]   = [m, n_j]
//   genus[j] = [m, n_j] - (m + n_j)/(m, n_j) + 1
//
// Every variant must agree bit-for-bit with the scalar reference.

namespace surfsym::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct GenusRowArgs {
  std::int32_t m;        // odd, >= 1
  std::int32_t n_first;  // >= 1
  std::int32_t n_step;   // >= 0
};

/// Largest value of m or any n_j accepted by the kernels. Keeps m*n below 2^31
/// and both below 2^24 so single-precision quotients are exact.
inline constexpr std::int32_t kMaxOperand = 46340;

/// Validates args against the row length; throws InvalidInput on violation.
void check_genus_row(const GenusRowArgs& args, std::size_t count);

void genus_row_scalar(const GenusRowArgs& args, std::span<std::int32_t> genus,
                      std::span<std::int32_t> lcm);

#if defined(__x86_64__) || defined(_M_X64)
void genus_row_avx2(const GenusRowArgs& args, std::span<std::int32_t> genus,
                    std::span<std::int32_t> lcm);
#endif

#if defined(__aarch64__)
void genus_row_neon(const GenusRowArgs& args, std::span<std::int32_t> genus,
                    std::span<std::int32_t> lcm);
#endif

/// Whether the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Best available variant, detected once.
Isa active_isa();

/// Runs the best available variant.
void genus_row(const GenusRowArgs& args, std::span<std::int32_t> genus,
               std::span<std::int32_t> lcm);

}  // namespace surfsym::kernels
