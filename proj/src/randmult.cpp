#include "friablab/randmult.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace friablab {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t floor_to_u64(double x) {
  return static_cast<std::uint64_t>(std::floor(x));
}

std::size_t required_prime_count(const PrimeTable& table, double x, double y,
                                 const SignAssignment& a) {
  double bound = std::min(y, std::floor(x));
  if (bound > static_cast<double>(table.limit()))
    throw table_too_small("psi_f: primes up to " + std::to_string(bound) +
                          " required, table covers " + std::to_string(table.limit()));
  if (bound > static_cast<double>(a.limit()))
    throw table_too_small("psi_f: assignment covers primes up to " +
                          std::to_string(a.limit()) + ", need " + std::to_string(bound));
  return table.count_leq(bound);
}

}  // namespace

SignAssignment SignAssignment::seeded(std::uint64_t seed, std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("SignAssignment: limit must be >= 2");
  return SignAssignment(Mode::seeded, seed, limit);
}

SignAssignment SignAssignment::all_plus(std::uint64_t limit) {
  return SignAssignment(Mode::all_plus, 0, limit);
}

SignAssignment SignAssignment::all_minus(std::uint64_t limit) {
  return SignAssignment(Mode::all_minus, 0, limit);
}

SignAssignment SignAssignment::explicit_signs(std::uint64_t limit,
                                              std::vector<std::uint64_t> minus_primes) {
  SignAssignment a(Mode::explicit_list, 0, limit);
  a.minus_primes_ = std::move(minus_primes);
  return a;
}

int SignAssignment::sign(std::uint64_t p) const {
  switch (mode_) {
    case Mode::all_plus:
      return 1;
    case Mode::all_minus:
      return -1;
    case Mode::explicit_list:
      return std::binary_search(minus_primes_.begin(), minus_primes_.end(), p) ? -1 : 1;
    case Mode::seeded:
    default:
      return (mix64(seed_ ^ (p * 0xd1342543de82ef95ULL)) >> 63) ? -1 : 1;
  }
}

std::uint64_t SignAssignment::derive_seed(std::uint64_t base, std::uint64_t trial) {
  return mix64(base ^ mix64(trial + 0x6a09e667f3bcc909ULL));
}

void SignAssignment::fill_sign_bits(const PrimeTable& table, std::size_t count,
                                    std::vector<std::uint64_t>& words) const {
  words.assign((count + 63) / 64, 0);
  auto primes = table.primes();
  for (std::size_t i = 0; i < count; ++i)
    if (sign(primes[i]) < 0) words[i >> 6] |= 1ULL << (i & 63);
}

void SignAssignment::fill_signs(const PrimeTable& table, std::size_t count,
                                std::vector<std::int8_t>& out) const {
  out.resize(count);
  auto primes = table.primes();
  for (std::size_t i = 0; i < count; ++i)
    out[i] = static_cast<std::int8_t>(sign(primes[i]));
}

int f_value(const PrimeTable& table, std::uint64_t n, const SignAssignment& a) {
  if (n < 1) throw std::invalid_argument("f_value: n must be >= 1");
  Factorization fac = table.factor(n);
  if (fac.p_plus() > a.limit())
    throw table_too_small("f_value: prime factor beyond the assignment limit");
  int out = 1;
  for (const auto& [p, e] : fac.factors) {
    if (e >= 2) return 0;
    out *= a.sign(p);
  }
  return out;
}

std::int64_t psi_f(const PrimeTable& table, double x, double y,
                   const SignAssignment& a) {
  if (!(x >= 1)) {
    if (x >= 0) return 0;
    throw std::invalid_argument("psi_f: x must be >= 0");
  }
  if (!(y >= 2)) throw std::invalid_argument("psi_f: y must be >= 2");
  std::uint64_t nx = floor_to_u64(x);
  std::size_t k = required_prime_count(table, x, y, a);
  auto primes = table.primes();
  std::vector<std::int8_t> signs;
  a.fill_signs(table, k, signs);

  std::int64_t total = 0;
  auto rec = [&](auto&& self, std::size_t j0, std::uint64_t prod, int sgn) -> void {
    total += sgn;
    for (std::size_t j = j0; j < k; ++j) {
      std::uint64_t p = primes[j];
      if (p > nx / prod) break;
      self(self, j + 1, prod * p, sgn * signs[j]);
    }
  };
  rec(rec, 0, 1, 1);
  return total;
}

std::int64_t m_f(const PrimeTable& table, double x, const SignAssignment& a) {
  if (!(x >= 1)) throw std::invalid_argument("m_f: x must be >= 1");
  return psi_f(table, x, x, a);
}

std::int64_t degenerate_product(const PrimeTable& table, double y,
                                const SignAssignment& a) {
  if (!(y >= 2)) throw std::invalid_argument("degenerate_product: y must be >= 2");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("degenerate_product: y exceeds the prime table");
  std::size_t k = table.count_leq(y);
  auto primes = table.primes();
  for (std::size_t i = 0; i < k; ++i)
    if (a.sign(primes[i]) < 0) return 0;
  if (k > 62)
    throw std::overflow_error("degenerate_product: 2^pi(y) exceeds 64-bit range");
  return std::int64_t{1} << k;
}

Trajectory trajectory(const PrimeTable& table, double x, const SignAssignment& a) {
  if (!(x >= 2)) throw std::invalid_argument("trajectory: x must be >= 2");
  std::uint64_t nx = floor_to_u64(x);
  std::size_t k = required_prime_count(table, x, x, a);
  auto primes = table.primes();
  std::vector<std::int8_t> signs;
  a.fill_signs(table, k, signs);

  // Group contributions by the largest prime factor: the step at p_k equals
  // f(p_k) * Psi_f(x / p_k, p_{k-1}) expanded over individual n.
  std::vector<std::int64_t> delta(k, 0);
  auto rec = [&](auto&& self, std::size_t j0, std::uint64_t prod, int sgn,
                 std::size_t top) -> void {
    if (prod > 1) delta[top] += sgn;
    for (std::size_t j = j0; j < k; ++j) {
      std::uint64_t p = primes[j];
      if (p > nx / prod) break;
      self(self, j + 1, prod * p, sgn * signs[j], j);
    }
  };
  rec(rec, 0, 1, 1, 0);

  Trajectory out;
  out.x = x;
  out.points.reserve(k);
  std::int64_t running = 1;  // n = 1
  for (std::size_t j = 0; j < k; ++j) {
    running += delta[j];
    out.points.emplace_back(primes[j], running);
  }
  return out;
}

double n_statistic(const PrimeTable& table, double X, double z,
                   const SignAssignment& a) {
  if (!(X >= 2)) throw std::invalid_argument("n_statistic: X must be >= 2");
  if (!(z >= 2)) throw std::invalid_argument("n_statistic: z must be >= 2");
  std::uint64_t nx = floor_to_u64(X);
  std::size_t k = required_prime_count(table, X, z, a);
  auto primes = table.primes();
  std::vector<std::int8_t> signs;
  a.fill_signs(table, k, signs);

  // Collect (n, f(n)) over the squarefree z-friable n <= X, then walk the
  // step function: value on [n_i, n_{i+1}) contributes value^2 (1/n_i - 1/n_{i+1}).
  std::vector<std::pair<std::uint64_t, int>> steps;
  auto rec = [&](auto&& self, std::size_t j0, std::uint64_t prod, int sgn) -> void {
    steps.emplace_back(prod, sgn);
    for (std::size_t j = j0; j < k; ++j) {
      std::uint64_t p = primes[j];
      if (p > nx / prod) break;
      self(self, j + 1, prod * p, sgn * signs[j]);
    }
  };
  rec(rec, 0, 1, 1);
  std::sort(steps.begin(), steps.end());

  double integral = 0.0;
  std::int64_t value = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    value += steps[i].second;
    double lo = static_cast<double>(steps[i].first);
    double hi = (i + 1 < steps.size()) ? static_cast<double>(steps[i + 1].first) : X;
    double v = static_cast<double>(value);
    integral += v * v * (1.0 / lo - 1.0 / hi);
  }
  return integral;
}

}  // namespace friablab
