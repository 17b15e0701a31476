#include <numeric>

#include "surfsym/errors.hpp"
#include "surfsym/kernels.hpp"

namespace surfsym::kernels {

void check_genus_row(const GenusRowArgs& args, std::size_t count) {
  if (args.m < 1 || args.m % 2 == 0) throw InvalidInput("genus row: m must be odd and positive");
  if (args.m > kMaxOperand) throw InvalidInput("genus row: m out of kernel range");
  if (args.n_first < 1 || args.n_step < 0) throw InvalidInput("genus row: bad row parameters");
  if (count == 0) return;
  const auto last = static_cast<std::int64_t>(args.n_first) +
                    static_cast<std::int64_t>(args.n_step) * static_cast<std::int64_t>(count - 1);
  if (last > kMaxOperand) throw InvalidInput("genus row: n out of kernel range");
}

void genus_row_scalar(const GenusRowArgs& args, std::span<std::int32_t> genus,
                      std::span<std::int32_t> lcm) {
  const std::size_t count = genus.size();
  check_genus_row(args, count);
  if (lcm.size() != count) throw InvalidInput("genus row: output spans differ in length");
  std::int32_t n = args.n_first;
  for (std::size_t j = 0; j < count; ++j, n += args.n_step) {
    const std::int32_t d = std::gcd(args.m, n);
    const std::int32_t l = (args.m / d) * n;
    lcm[j] = l;
    genus[j] = l - (args.m / d + n / d) + 1;
  }
}

}  // namespace surfsym::kernels
