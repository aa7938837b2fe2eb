#pragma once
// Exact counting and enumeration of y-friable integers, squarefree variants,
// interval deltas, weighted interval sums, and dyadic interval covers.

#include <cstdint>
#include <vector>

#include "friablab/primes.hpp"

namespace friablab {

// (x, y) query with the derived ratio u = log x / log y.
struct SmoothQuery {
  double x;
  double y;
  double u;
  SmoothQuery(double x_, double y_);
};

// Disjoint aligned power-of-two intervals covering (a, b].
struct DyadicCover {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;  // (lo, hi]
};

// All n <= x with P+(n) <= y, ascending; squarefree_only restricts to
// squarefree n. Materialized up front; next()/end() give the pull contract.
class SmoothEnumerator {
 public:
  SmoothEnumerator(const PrimeTable& table, double x, double y,
                   bool squarefree_only);

  bool end() const { return pos_ >= values_.size(); }
  std::uint64_t next();

  const std::vector<std::uint64_t>& values() const { return values_; }

 private:
  std::vector<std::uint64_t> values_;
  std::size_t pos_ = 0;
};

// Psi(x, y): number of y-friable integers <= x.
std::uint64_t psi(const PrimeTable& table, double x, double y);

// Psi*(x, y): squarefree y-friable integers <= x.
std::uint64_t psi_star(const PrimeTable& table, double x, double y);

// Psi*(x+z, y) - Psi*(x, y). Narrow windows (z/x <= 0.1) are enumerated
// directly over (x, x+z] instead of differencing two counts.
std::uint64_t psi_star_delta(const PrimeTable& table, double x, double z,
                             double y);

// Sum of kappa^{omega(r)} over squarefree r in (a, b] whose prime factors
// all lie in (y, z].
double kappa_weighted_interval_sum(const PrimeTable& table, std::uint64_t a,
                                   std::uint64_t b, double y, double z,
                                   double kappa);

// Greedy largest-first aligned cover of (a, b]; the interval count equals
// the popcount of b - a.
DyadicCover dyadic_decompose(std::uint64_t a, std::uint64_t b);

}  // namespace friablab
