#pragma once
// Prime table with prefix statistics and table-assisted factorization.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "friablab/errors.hpp"

namespace friablab {

// Prime-exponent decomposition of n >= 1; empty for n = 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

  // Moebius value: 0 if any exponent >= 2, otherwise (-1)^omega.
  int mu() const;
  std::size_t omega() const { return factors.size(); }
  std::uint64_t big_omega() const;
  // Largest prime factor, 1 for n = 1.
  std::uint64_t p_plus() const { return factors.empty() ? 1 : factors.back().first; }
  bool squarefree() const { return mu() != 0; }
};

// Immutable table of all primes <= limit with prefix sums of log p.
// Safe for concurrent reads; all queries are pure.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::span<const double> logs() const { return logs_; }
  std::span<const double> log_prefix() const { return log_prefix_; }

  // Number of table primes <= y; y may be any real >= 0.
  std::size_t count_leq(double y) const;

  // Chebyshev theta: sum of log p over p <= y. Zero below 2.
  double theta(double y) const;

  // pi(y).
  std::uint64_t prime_count(double y) const;

  // Sum of p^{-s} over primes y0 < p <= y1, accumulated in ascending order
  // with compensated summation.
  double prime_power_sum(double y0, double y1, double s) const;

  // Trial division against the table. Inputs with a prime factor beyond the
  // table are rejected with table_too_small.
  Factorization factor(std::uint64_t n) const;

 private:
  void require_covered(double y, const char* op) const;

  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<double> logs_;
  std::vector<double> log_prefix_;
};

PrimeTable build_table(std::uint64_t limit);

}  // namespace friablab
