#pragma once
// Verification experiments: exact identities checked by exhausting sign
// assignments, and statistical checks run over seeded Monte Carlo trials.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "friablab/primes.hpp"
#include "friablab/randmult.hpp"
#include "friablab/report.hpp"

namespace friablab {

using Rational = boost::multiprecision::cpp_rational;

// Exhaustive sweeps are capped at this many primes (2^20 assignments).
constexpr std::size_t kExhaustiveMaxPrimes = 20;

struct SecondMomentResult {
  Rational mean_sq;            // average of Psi_f(x, y)^2 over all assignments
  std::uint64_t psi_star = 0;  // exact squarefree friable count
  bool equal = false;          // mean_sq == psi_star, exact
};

// Mean of Psi_f(x, y)^2 over all 2^pi sign assignments, as an exact rational.
SecondMomentResult exact_second_moment(const PrimeTable& table, double x, double y);

// For every prime p <= y and every assignment of signs to smaller primes,
// the average of Psi_f(x, p) over sign(p) = +-1 must equal Psi_f(x, p-).
bool martingale_check(const PrimeTable& table, double x, double y);

struct WeightedSupport {
  std::uint64_t n = 1;
  Rational weight;
};

struct BonamiResult {
  Rational lhs;  // |E (sum a_n f(n))^ell|, exact
  Rational rhs;  // (sum mu(n)^2 a_n^2 (ell-1)^{Omega(n)})^{ell/2}
  bool holds = false;
};

// Even-moment bound for sign polynomials over squarefree support.
BonamiResult bonami_check(const PrimeTable& table,
                          const std::vector<WeightedSupport>& support, int ell,
                          double y_max);

// Running-maximum tail of the squared partial sums along primes p <= y vs
// the exact-mean bound psi_star(x, y) / t, over seeded trials.
ExperimentReport doob_check(const PrimeTable& table, const ExperimentConfig& cfg,
                            double x, double y);

// Weighted running maximum of the integral statistics N_j over the geometric
// threshold ladder z_j = z0^{(1+gamma)^j} capped at X = max(x_grid).
ExperimentReport maximal_weighted_check(const PrimeTable& table,
                                        const ExperimentConfig& cfg);

// z_j ladder: z_0, then z0^{(1+gamma)^j} for j >= 1, capped at X; ends at
// the first j with z_j >= X.
std::vector<double> z_schedule(double z0, double gamma, double X);

enum class RatioSurveyKind {
  interval_weight,  // weighted squarefree sums over (a, b] vs (b-a)/log y
  interval_delta,   // short-interval squarefree friable counts vs (z/x) Psi*
  global_decay      // Psi(x, y) vs x e^{-u/2}
};

ExperimentReport ratio_survey(const PrimeTable& table, RatioSurveyKind kind,
                              const ExperimentConfig& cfg);

// Local decay exponent b across a grid of (x, y, d) cells.
ExperimentReport local_b_survey(const PrimeTable& table, const ExperimentConfig& cfg);

// Growth-ratio quantiles across seeded trials plus the exact second-moment
// anchor per cell.
ExperimentReport growth_experiment(const PrimeTable& table,
                                   const ExperimentConfig& cfg);

}  // namespace friablab
