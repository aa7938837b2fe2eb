// Scalar reference kernels and the runtime ISA dispatch.

#include "friablab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace friablab {

bool cpu_has_avx2() {
#if FRIABLAB_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

KernelIsa detect_isa() {
  if (const char* env = std::getenv("FRIABLAB_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return KernelIsa::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return KernelIsa::avx2;
    return KernelIsa::scalar;
  }
  return cpu_has_avx2() ? KernelIsa::avx2 : KernelIsa::scalar;
}

std::atomic<KernelIsa>& isa_slot() {
  static std::atomic<KernelIsa> slot{detect_isa()};
  return slot;
}

}  // namespace

KernelIsa active_kernel_isa() { return isa_slot().load(std::memory_order_relaxed); }

void set_kernel_isa(KernelIsa isa) {
  if (isa == KernelIsa::avx2 && !cpu_has_avx2())
    throw std::invalid_argument("avx2 kernels not supported on this host");
  isa_slot().store(isa, std::memory_order_relaxed);
}

const char* kernel_isa_name(KernelIsa isa) {
  return isa == KernelIsa::avx2 ? "avx2" : "scalar";
}

namespace detail {

double power_sum_scalar(double s, std::span<const double> logp) {
  Neumaier acc;
  for (double w : logp) acc.add(std::exp(-s * w));
  return acc.value();
}

double alpha_sum_scalar(double a, std::span<const double> logp) {
  Neumaier acc;
  for (double w : logp) acc.add(w / (1.0 + std::exp(a * w)));
  return acc.value();
}

double beta_sum_scalar(double b, std::span<const double> logp) {
  Neumaier acc;
  for (double w : logp) acc.add(w / std::expm1(b * w));
  return acc.value();
}

std::int64_t signed_parity_sum_scalar(const std::uint64_t* const* planes,
                                      int words, std::size_t n,
                                      const std::uint64_t* signs,
                                      std::int8_t* f_out) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < words; ++j) acc ^= planes[j][i] & signs[j];
    int f = 1 - 2 * static_cast<int>(__builtin_parityll(acc));
    total += f;
    if (f_out) f_out[i] = static_cast<std::int8_t>(f);
  }
  return total;
}

}  // namespace detail

double power_sum(double s, std::span<const double> logp) {
#if FRIABLAB_HAVE_AVX2
  if (active_kernel_isa() == KernelIsa::avx2) return detail::power_sum_avx2(s, logp);
#endif
  return detail::power_sum_scalar(s, logp);
}

double alpha_sum(double a, std::span<const double> logp) {
#if FRIABLAB_HAVE_AVX2
  if (active_kernel_isa() == KernelIsa::avx2) return detail::alpha_sum_avx2(a, logp);
#endif
  return detail::alpha_sum_scalar(a, logp);
}

double beta_sum(double b, std::span<const double> logp) {
#if FRIABLAB_HAVE_AVX2
  if (active_kernel_isa() == KernelIsa::avx2) return detail::beta_sum_avx2(b, logp);
#endif
  return detail::beta_sum_scalar(b, logp);
}

double log1p_power_sum(double s, std::span<const double> logp) {
  detail::Neumaier acc;
  for (double w : logp) acc.add(std::log1p(std::exp(-s * w)));
  return acc.value();
}

double neg_log1m_power_sum(double s, std::span<const double> logp) {
  detail::Neumaier acc;
  for (double w : logp) acc.add(-std::log1p(-std::exp(-s * w)));
  return acc.value();
}

std::int64_t signed_parity_sum(const std::uint64_t* const* planes, int words,
                               std::size_t n, const std::uint64_t* signs,
                               std::int8_t* f_out) {
#if FRIABLAB_HAVE_AVX2
  if (active_kernel_isa() == KernelIsa::avx2)
    return detail::signed_parity_sum_avx2(planes, words, n, signs, f_out);
#endif
  return detail::signed_parity_sum_scalar(planes, words, n, signs, f_out);
}

}  // namespace friablab
