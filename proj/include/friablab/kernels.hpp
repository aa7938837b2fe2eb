#pragma once
// Inner-loop kernels over arrays of log-primes and factor masks.
//
// Every kernel has a scalar reference implementation; the hot ones also have
// an AVX2 variant selected at runtime (override with FRIABLAB_KERNEL=scalar
// or set_kernel_isa). Scalar and AVX2 paths are equivalence-tested: the
// floating-point kernels agree to ~1e-13 relative, the integer kernel
// bit-exactly.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>

namespace friablab {

enum class KernelIsa { scalar, avx2 };

bool cpu_has_avx2();
KernelIsa active_kernel_isa();
void set_kernel_isa(KernelIsa isa);
const char* kernel_isa_name(KernelIsa isa);

// sum over w of exp(-s*w); with w = log p this is sum p^{-s}.
double power_sum(double s, std::span<const double> logp);

// sum over w of w / (1 + exp(a*w)), the left side of the alpha equation.
double alpha_sum(double a, std::span<const double> logp);

// sum over w of w / (exp(b*w) - 1), the left side of the beta equation.
double beta_sum(double b, std::span<const double> logp);

// sum of log(1 + p^{-s}) and of -log(1 - p^{-s}); cold paths, scalar only.
double log1p_power_sum(double s, std::span<const double> logp);
double neg_log1m_power_sum(double s, std::span<const double> logp);

// Signed parity sum. Entry i carries a factor mask split over `words`
// bit-planes: plane[j][i] is word j of the mask. `signs` holds one bit per
// prime index (bit set = sign -1). Returns sum_i (-1)^{popcount(mask_i &
// signs)}; when f_out is non-null also stores the per-entry +-1 values.
std::int64_t signed_parity_sum(const std::uint64_t* const* planes, int words,
                               std::size_t n, const std::uint64_t* signs,
                               std::int8_t* f_out = nullptr);

namespace detail {
double power_sum_scalar(double s, std::span<const double> logp);
double alpha_sum_scalar(double a, std::span<const double> logp);
double beta_sum_scalar(double b, std::span<const double> logp);
std::int64_t signed_parity_sum_scalar(const std::uint64_t* const* planes,
                                      int words, std::size_t n,
                                      const std::uint64_t* signs,
                                      std::int8_t* f_out);
#if FRIABLAB_HAVE_AVX2
double power_sum_avx2(double s, std::span<const double> logp);
double alpha_sum_avx2(double a, std::span<const double> logp);
double beta_sum_avx2(double b, std::span<const double> logp);
std::int64_t signed_parity_sum_avx2(const std::uint64_t* const* planes,
                                    int words, std::size_t n,
                                    const std::uint64_t* signs,
                                    std::int8_t* f_out);
#endif

// Compensated (Neumaier) accumulator used by the scalar kernels and the
// prefix sums in the prime table.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};
}  // namespace detail

}  // namespace friablab
