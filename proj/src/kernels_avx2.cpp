// AVX2 kernel variants. Compiled with -mavx2 -mfma; callers must gate on
// cpu_has_avx2() via the dispatch layer in kernels.cpp.

#include "friablab/kernels.hpp"

#if FRIABLAB_HAVE_AVX2

#include <immintrin.h>

namespace friablab::detail {

namespace {

// Factorial reciprocals for the exp/expm1 Taylor kernels. With the argument
// reduced to |r| <= 0.347 the degree-13 tail is below 1 ulp.
constexpr double kInvFact[] = {
    1.0,                          // 0!
    1.0,                          // 1!
    0.5,                          // 2!
    1.6666666666666666e-01,       // 3!
    4.1666666666666664e-02,       // 4!
    8.3333333333333332e-03,       // 5!
    1.3888888888888889e-03,       // 6!
    1.9841269841269841e-04,       // 7!
    2.4801587301587302e-05,       // 8!
    2.7557319223985893e-06,       // 9!
    2.7557319223985888e-07,       // 10!
    2.5052108385441720e-08,       // 11!
    2.0876756987868100e-09,       // 12!
    1.6059043836821613e-10};      // 13!

inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);

  __m256d xin = x;
  x = _mm256_max_pd(_mm256_min_pd(x, _mm256_set1_pd(710.0)), _mm256_set1_pd(-746.0));

  __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);

  __m256d p = _mm256_set1_pd(kInvFact[13]);
  for (int k = 12; k >= 0; --k) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[k]));

  // 2^n split into two factors so denormal and near-overflow scales stay exact.
  __m128i n32 = _mm256_cvtpd_epi32(n);
  __m128i n1_32 = _mm_srai_epi32(n32, 1);
  __m128i n2_32 = _mm_sub_epi32(n32, n1_32);
  const __m256i bias = _mm256_set1_epi64x(1023);
  __m256i e1 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n1_32), bias), 52);
  __m256i e2 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n2_32), bias), 52);
  __m256d out = _mm256_mul_pd(_mm256_mul_pd(p, _mm256_castsi256_pd(e1)),
                              _mm256_castsi256_pd(e2));

  __m256d under = _mm256_cmp_pd(xin, _mm256_set1_pd(-745.2), _CMP_LT_OQ);
  return _mm256_andnot_pd(under, out);
}

inline __m256d expm1_4(__m256d t) {
  // Small arguments use the series directly; the subtraction form loses
  // digits below |t| ~ 0.35.
  __m256d q = _mm256_set1_pd(kInvFact[13]);
  for (int k = 12; k >= 2; --k) q = _mm256_fmadd_pd(q, t, _mm256_set1_pd(kInvFact[k]));
  __m256d small = _mm256_fmadd_pd(q, _mm256_mul_pd(t, t), t);
  __m256d big = _mm256_sub_pd(exp4(t), _mm256_set1_pd(1.0));
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d use_small = _mm256_cmp_pd(_mm256_and_pd(t, absmask),
                                    _mm256_set1_pd(0.35), _CMP_LT_OQ);
  return _mm256_blendv_pd(big, small, use_small);
}

struct Neumaier4 {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  void add(__m256d x) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d t = _mm256_add_pd(sum, x);
    __m256d sum_big = _mm256_cmp_pd(_mm256_and_pd(sum, absmask),
                                    _mm256_and_pd(x, absmask), _CMP_GE_OQ);
    __m256d big = _mm256_blendv_pd(x, sum, sum_big);
    __m256d small = _mm256_blendv_pd(sum, x, sum_big);
    comp = _mm256_add_pd(comp, _mm256_add_pd(_mm256_sub_pd(big, t), small));
    sum = t;
  }
  // Lanes fold left-to-right into a scalar accumulator so results do not
  // depend on how the caller sizes its input.
  void drain(Neumaier& acc) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    for (int i = 0; i < 4; ++i) {
      acc.add(s[i]);
      acc.add(c[i]);
    }
  }
};

template <class VecTerm, class ScalTerm>
double fused_sum(std::span<const double> logp, VecTerm vec_term, ScalTerm scal_term) {
  Neumaier4 vacc;
  std::size_t i = 0;
  for (; i + 4 <= logp.size(); i += 4)
    vacc.add(vec_term(_mm256_loadu_pd(logp.data() + i)));
  Neumaier acc;
  vacc.drain(acc);
  for (; i < logp.size(); ++i) acc.add(scal_term(logp[i]));
  return acc.value();
}

}  // namespace

double power_sum_avx2(double s, std::span<const double> logp) {
  const __m256d ms = _mm256_set1_pd(-s);
  return fused_sum(
      logp, [&](__m256d w) { return exp4(_mm256_mul_pd(ms, w)); },
      [&](double w) { return std::exp(-s * w); });
}

double alpha_sum_avx2(double a, std::span<const double> logp) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d one = _mm256_set1_pd(1.0);
  return fused_sum(
      logp,
      [&](__m256d w) {
        __m256d e = exp4(_mm256_mul_pd(va, w));
        return _mm256_div_pd(w, _mm256_add_pd(one, e));
      },
      [&](double w) { return w / (1.0 + std::exp(a * w)); });
}

double beta_sum_avx2(double b, std::span<const double> logp) {
  const __m256d vb = _mm256_set1_pd(b);
  return fused_sum(
      logp,
      [&](__m256d w) { return _mm256_div_pd(w, expm1_4(_mm256_mul_pd(vb, w))); },
      [&](double w) { return w / std::expm1(b * w); });
}

std::int64_t signed_parity_sum_avx2(const std::uint64_t* const* planes, int words,
                                    std::size_t n, const std::uint64_t* signs,
                                    std::int8_t* f_out) {
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (int j = 0; j < words; ++j) {
      __m256i m = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(planes[j] + i));
      acc = _mm256_xor_si256(acc, _mm256_and_si256(m, _mm256_set1_epi64x(
                                                          static_cast<long long>(signs[j]))));
    }
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 32));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 16));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 8));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 4));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 2));
    acc = _mm256_xor_si256(acc, _mm256_srli_epi64(acc, 1));
    acc = _mm256_and_si256(acc, one);
    __m256i f = _mm256_sub_epi64(one, _mm256_add_epi64(acc, acc));
    total = _mm256_add_epi64(total, f);
    if (f_out) {
      alignas(32) long long lanes[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), f);
      for (int k = 0; k < 4; ++k) f_out[i + k] = static_cast<std::int8_t>(lanes[k]);
    }
  }
  alignas(32) long long lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  if (i < n) {
    const std::uint64_t* tails[4] = {nullptr, nullptr, nullptr, nullptr};
    // Reuse the scalar loop for the remainder; integer math is exact either way.
    for (int j = 0; j < words; ++j) tails[j] = planes[j] + i;
    sum += signed_parity_sum_scalar(tails, words, n - i, signs,
                                    f_out ? f_out + i : nullptr);
  }
  return sum;
}

}  // namespace friablab::detail

#endif  // FRIABLAB_HAVE_AVX2
