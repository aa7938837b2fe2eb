#pragma once
// Saddle-point equations, the xi function, partial zeta, the Dickman
// function, and the derived parameter bundle used by the surveys.

#include <cstdint>

#include "friablab/primes.hpp"

namespace friablab {

enum class SaddleKind { alpha, beta, xi };

struct SaddleSolution {
  double value = 0.0;
  double residual = 0.0;   // defining sum minus its target, at `value`
  int iterations = 0;
  SaddleKind kind = SaddleKind::alpha;
};

// Nonzero real root of e^xi = 1 + t*xi (zero at t = 1). Root is positive for
// t > 1 and negative for 0 < t < 1.
double xi(double t);
SaddleSolution solve_xi(double t);

// d xi / dt, from the implicit relation xi' = xi / (1 + t*xi - t). The 0/0
// limit at t = 1 is taken by one-sided Richardson extrapolation.
double xi_prime(double t);

// phi(s, y) = sum_{p <= y} log(1 + p^{-s}) and its s-derivative
// phi'(s, y) = -sum_{p <= y} log p / (1 + p^s).
double varphi(const PrimeTable& table, double s, double y);
double varphi_prime(const PrimeTable& table, double s, double y);

// Positive root of sum_{p <= y} log p / (1 + p^alpha) = log x. Requires
// theta(y) > 2 log x; otherwise throws no_positive_root.
SaddleSolution solve_alpha(const PrimeTable& table, double x, double y);

// Positive root of sum_{p <= y} log p / (p^beta - 1) = log x (x > 1).
SaddleSolution solve_beta(const PrimeTable& table, double x, double y);

// First-order saddle approximation 1 - xi(u) / log y with u = log x / log y.
double alpha_first_order(double x, double y);

// Partial zeta: product over p <= y of (1 - p^{-s})^{-1}, s > 0.
double zeta_partial(const PrimeTable& table, double s, double y);

// Dickman rho: 1 on [0, 1], u*rho'(u) = -rho(u-1) beyond; underflows to 0
// for large u. Absolute error <= 1e-8 for u <= 20.
double dickman_rho(double u);

struct DerivedParams {
  double u = 0;        // log x / log y
  double w = 0;        // theta(y) / log x
  double u_y = 0;      // u + log y / log(u + 2)
  double v_alpha = 0;  // (y^{1-alpha} - 1) / ((1-alpha) log y)
  double L_y = 0;      // exp{(log y)^{3/5} / (log_2 y)^{1/5}}
  double L_eps_y = 0;  // exp{(log y)^{3/5-eps}}
  double t_of_d = 0;   // log d / log y
};

DerivedParams derived_params(const PrimeTable& table, double x, double y,
                             double alpha, double d, double eps);

// General-argument sibling of v_alpha: (t^{1-alpha} - 1)/((1-alpha) log t).
double friability_w(double t, double alpha);

// Local decay exponent b with Psi*(x/d, y) = Psi*(x, y) d^{-alpha} e^{-b t^2/u},
// from exact counts and the alpha solver; t = log d / log y.
double local_model_b(const PrimeTable& table, double x, double y, double d);

struct PrimeSumEstimate {
  double exact = 0;  // sum over p <= y of p^{-alpha}
  double model = 0;  // log log y + u w / (w - 1)
};

PrimeSumEstimate prime_sum_estimate(const PrimeTable& table, double x, double y);

}  // namespace friablab
