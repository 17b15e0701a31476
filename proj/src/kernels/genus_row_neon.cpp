#include <arm_neon.h>

#include "surfsym/errors.hpp"
#include "surfsym/kernels.hpp"

namespace surfsym::kernels {

namespace {

uint32x4_t strip_twos(uint32x4_t v) {
  const uint32x4_t one = vdupq_n_u32(1);
  for (;;) {
    const uint32x4_t even = vceqq_u32(vandq_u32(v, one), vdupq_n_u32(0));
    const uint32x4_t live = vandq_u32(even, vmvnq_u32(vceqzq_u32(v)));
    if (vmaxvq_u32(live) == 0) return v;
    v = vbslq_u32(live, vshrq_n_u32(v, 1), v);
  }
}

uint32x4_t odd_gcd(uint32x4_t a, uint32x4_t b) {
  b = strip_twos(b);
  for (;;) {
    const uint32x4_t done = vceqzq_u32(b);
    if (vminvq_u32(done) != 0) return a;
    const uint32x4_t lo = vminq_u32(a, b);
    const uint32x4_t diff = vabdq_u32(a, b);
    a = vbslq_u32(done, a, lo);
    b = strip_twos(vbslq_u32(done, b, diff));
  }
}

uint32x4_t exact_div(uint32x4_t x, uint32x4_t y) {
  return vcvtnq_u32_f32(vdivq_f32(vcvtq_f32_u32(x), vcvtq_f32_u32(y)));
}

}  // namespace

void genus_row_neon(const GenusRowArgs& args, std::span<std::int32_t> genus,
                    std::span<std::int32_t> lcm) {
  const std::size_t count = genus.size();
  check_genus_row(args, count);
  if (lcm.size() != count) throw InvalidInput("genus row: output spans differ in length");

  const uint32x4_t m = vdupq_n_u32(static_cast<std::uint32_t>(args.m));
  const std::uint32_t lanes[4] = {0, 1, 2, 3};
  const uint32x4_t step = vdupq_n_u32(static_cast<std::uint32_t>(args.n_step));
  uint32x4_t n = vmlaq_u32(vdupq_n_u32(static_cast<std::uint32_t>(args.n_first)), vld1q_u32(lanes), step);
  const uint32x4_t block_step = vdupq_n_u32(4u * static_cast<std::uint32_t>(args.n_step));

  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const uint32x4_t d = odd_gcd(m, n);
    const uint32x4_t mq = exact_div(m, d);
    const uint32x4_t nq = exact_div(n, d);
    const uint32x4_t l = vmulq_u32(mq, n);
    const uint32x4_t gen = vaddq_u32(vsubq_u32(l, vaddq_u32(mq, nq)), vdupq_n_u32(1));
    vst1q_u32(reinterpret_cast<std::uint32_t*>(lcm.data() + j), l);
    vst1q_u32(reinterpret_cast<std::uint32_t*>(genus.data() + j), gen);
    n = vaddq_u32(n, block_step);
  }
  if (j < count) {
    const GenusRowArgs tail{args.m, args.n_first + static_cast<std::int32_t>(j) * args.n_step, args.n_step};
    genus_row_scalar(tail, genus.subspan(j), lcm.subspan(j));
  }
}

}  // namespace surfsym::kernels
