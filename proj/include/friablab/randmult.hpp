#pragma once
// Seeded +-1 sign assignments on primes and the multiplicative sums they
// induce: f(n), M_f(x), Psi_f(x, y), the degenerate full product, prime-by-
// prime trajectories, and the weighted square integral statistic.

#include <cstdint>
#include <vector>

#include "friablab/primes.hpp"

namespace friablab {

// Deterministic map prime -> {+1, -1}. Seeded assignments are counter-based:
// the sign of p is a pure function of (seed, p), so lookups are random-access
// and independent of evaluation order. Explicit assignments (for exhaustive
// sweeps) store the primes carrying -1.
class SignAssignment {
 public:
  enum class Mode { seeded, all_plus, all_minus, explicit_list };

  static SignAssignment seeded(std::uint64_t seed, std::uint64_t limit);
  static SignAssignment all_plus(std::uint64_t limit);
  static SignAssignment all_minus(std::uint64_t limit);
  // `minus_primes` must be sorted ascending.
  static SignAssignment explicit_signs(std::uint64_t limit,
                                       std::vector<std::uint64_t> minus_primes);

  int sign(std::uint64_t p) const;
  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t limit() const { return limit_; }

  // Stable per-trial seed derivation for parallel experiments.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial);

  // Sign bits for the first `count` table primes: bit set means sign -1.
  void fill_sign_bits(const PrimeTable& table, std::size_t count,
                      std::vector<std::uint64_t>& words) const;
  // Same information as +-1 bytes.
  void fill_signs(const PrimeTable& table, std::size_t count,
                  std::vector<std::int8_t>& out) const;

 private:
  SignAssignment(Mode mode, std::uint64_t seed, std::uint64_t limit)
      : mode_(mode), seed_(seed), limit_(limit) {}

  Mode mode_;
  std::uint64_t seed_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> minus_primes_;
};

// f(n): 0 off the squarefree integers, otherwise the product of signs over
// the distinct prime factors; f(1) = 1.
int f_value(const PrimeTable& table, std::uint64_t n, const SignAssignment& a);

// M_f(x) = sum of f(n) over n <= x.
std::int64_t m_f(const PrimeTable& table, double x, const SignAssignment& a);

// Psi_f(x, y) = sum of f(n) over y-friable n <= x.
std::int64_t psi_f(const PrimeTable& table, double x, double y,
                   const SignAssignment& a);

// Product over p <= y of (1 + sign(p)); equals Psi_f(x, y) whenever
// log x >= theta(y). Value is 0 or 2^pi(y).
std::int64_t degenerate_product(const PrimeTable& table, double y,
                                const SignAssignment& a);

// Psi_f(x, p) for every prime p <= x, advanced one prime at a time.
struct Trajectory {
  double x = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> points;  // (p, Psi_f(x, p))
};

Trajectory trajectory(const PrimeTable& table, double x, const SignAssignment& a);

// Integral over v in [1, X] of Psi_f(v, z)^2 / v^2, evaluated exactly from
// the step structure of v -> Psi_f(v, z).
double n_statistic(const PrimeTable& table, double X, double z,
                   const SignAssignment& a);

}  // namespace friablab
