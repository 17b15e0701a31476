#include <immintrin.h>

#include "surfsym/errors.hpp"
#include "surfsym/kernels.hpp"

namespace surfsym::kernels {

namespace {

#define SURFSYM_AVX2 __attribute__((target("avx2")))

SURFSYM_AVX2 __m256i strip_twos(__m256i v) {
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();
  for (;;) {
    const __m256i even = _mm256_cmpeq_epi32(_mm256_and_si256(v, one), zero);
    const __m256i live = _mm256_andnot_si256(_mm256_cmpeq_epi32(v, zero), even);
    if (_mm256_testz_si256(live, live)) return v;
    v = _mm256_blendv_epi8(v, _mm256_srli_epi32(v, 1), live);
  }
}

// gcd of an odd a with arbitrary positive b, lane-wise. Trailing twos of b are
// stripped first (they cannot divide the odd a); the odd/odd binary loop then
// replaces (a, b) by (min, |a - b|) and strips the even difference.
SURFSYM_AVX2 __m256i odd_gcd(__m256i a, __m256i b) {
  const __m256i zero = _mm256_setzero_si256();
  b = strip_twos(b);
  for (;;) {
    const __m256i done = _mm256_cmpeq_epi32(b, zero);
    if (_mm256_movemask_epi8(done) == -1) return a;
    const __m256i lo = _mm256_min_epi32(a, b);
    const __m256i diff = _mm256_abs_epi32(_mm256_sub_epi32(a, b));
    a = _mm256_blendv_epi8(lo, a, done);
    b = strip_twos(_mm256_blendv_epi8(diff, b, done));
  }
}

// Exact integer quotient x/y for y | x and both below 2^24.
SURFSYM_AVX2 __m256i exact_div(__m256i x, __m256i y) {
  const __m256 q = _mm256_div_ps(_mm256_cvtepi32_ps(x), _mm256_cvtepi32_ps(y));
  return _mm256_cvtps_epi32(q);
}

}  // namespace

SURFSYM_AVX2 void genus_row_avx2(const GenusRowArgs& args, std::span<std::int32_t> genus,
                    std::span<std::int32_t> lcm) {
  const std::size_t count = genus.size();
  check_genus_row(args, count);
  if (lcm.size() != count) throw InvalidInput("genus row: output spans differ in length");

  const __m256i m = _mm256_set1_epi32(args.m);
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i lane_step =
      _mm256_mullo_epi32(_mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7), _mm256_set1_epi32(args.n_step));
  const __m256i block_step = _mm256_set1_epi32(8 * args.n_step);

  __m256i n = _mm256_add_epi32(_mm256_set1_epi32(args.n_first), lane_step);
  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    const __m256i d = odd_gcd(m, n);
    const __m256i mq = exact_div(m, d);
    const __m256i nq = exact_div(n, d);
    const __m256i l = _mm256_mullo_epi32(mq, n);
    const __m256i gen = _mm256_add_epi32(_mm256_sub_epi32(l, _mm256_add_epi32(mq, nq)), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lcm.data() + j), l);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(genus.data() + j), gen);
    n = _mm256_add_epi32(n, block_step);
  }
  if (j < count) {
    const GenusRowArgs tail{args.m, args.n_first + static_cast<std::int32_t>(j) * args.n_step, args.n_step};
    genus_row_scalar(tail, genus.subspan(j), lcm.subspan(j));
  }
}

}  // namespace surfsym::kernels
