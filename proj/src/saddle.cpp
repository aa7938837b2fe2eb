#include "friablab/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "friablab/kernels.hpp"
#include "friablab/smooth.hpp"

namespace friablab {

namespace {

double xi_residual(double t, double v) { return std::exp(v) - 1.0 - t * v; }

}  // namespace

SaddleSolution solve_xi(double t) {
  if (!(t > 0)) throw std::invalid_argument("xi: t must be > 0");
  SaddleSolution sol;
  sol.kind = SaddleKind::xi;
  if (t == 1.0) return sol;  // value 0, residual 0

  // g(v) = e^v - 1 - t v has its minimum at v = log t; the nonzero root lies
  // beyond it, on the side away from 0.
  double lo, hi;
  int iters = 0;
  if (t > 1.0) {
    lo = std::log(t);
    hi = std::max(2.0 * lo, 1.0);
    while (xi_residual(t, hi) < 0 && iters < 200) {
      hi *= 2.0;
      ++iters;
    }
  } else {
    hi = std::log(t);  // negative; root lies further left
    lo = std::min(2.0 * hi, -1.0);
    while (xi_residual(t, lo) < 0 && iters < 200) {
      lo *= 2.0;
      ++iters;
    }
  }

  // Orient so residual(lo) <= 0 <= residual(hi).
  double flo = xi_residual(t, lo);
  double fhi = xi_residual(t, hi);
  if (flo > 0 && fhi <= 0) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  for (int i = 0; i < 110 && iters < 200; ++i, ++iters) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = xi_residual(t, mid);
    if (fm <= 0)
      lo = mid;
    else
      hi = mid;
  }
  double v = 0.5 * (lo + hi);
  // one Newton polish; g'(v) = e^v - t
  double gp = std::exp(v) - t;
  if (gp != 0) {
    double v2 = v - xi_residual(t, v) / gp;
    if (std::isfinite(v2) && std::abs(xi_residual(t, v2)) <= std::abs(xi_residual(t, v)))
      v = v2;
  }
  ++iters;
  sol.value = v;
  sol.residual = xi_residual(t, v);
  sol.iterations = iters;
  return sol;
}

double xi(double t) { return solve_xi(t).value; }

namespace {

double xi_prime_raw(double t) {
  double v = xi(t);
  return v / (1.0 + t * v - t);
}

}  // namespace

double xi_prime(double t) {
  if (!(t > 0)) throw std::invalid_argument("xi_prime: t must be > 0");
  if (t != 1.0) return xi_prime_raw(t);
  // 0/0 at t = 1: one-sided limit with Richardson (Neville) extrapolation.
  constexpr int kLevels = 6;
  double h = 1e-2;
  double tab[kLevels][kLevels];
  double hs[kLevels];
  for (int i = 0; i < kLevels; ++i) {
    hs[i] = h;
    tab[i][0] = xi_prime_raw(1.0 + h);
    h *= 0.5;
  }
  for (int j = 1; j < kLevels; ++j)
    for (int i = 0; i + j < kLevels; ++i)
      tab[i][j] = tab[i + 1][j - 1] +
                  (tab[i + 1][j - 1] - tab[i][j - 1]) * hs[i + j] / (hs[i] - hs[i + j]);
  return tab[0][kLevels - 1];
}

double varphi(const PrimeTable& table, double s, double y) {
  if (s < 0) throw std::invalid_argument("varphi: s must be >= 0");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("varphi: y exceeds the prime table");
  std::size_t k = table.count_leq(y);
  return log1p_power_sum(s, table.logs().subspan(0, k));
}

double varphi_prime(const PrimeTable& table, double s, double y) {
  if (s < 0) throw std::invalid_argument("varphi_prime: s must be >= 0");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("varphi_prime: y exceeds the prime table");
  std::size_t k = table.count_leq(y);
  return -alpha_sum(s, table.logs().subspan(0, k));
}

namespace {

// Bisection for a positive decreasing sum hitting `target`, then one Newton
// step off the scalar derivative. Residual tolerance is relative to target.
template <class Sum, class DSum>
SaddleSolution solve_decreasing(Sum sum, DSum dsum, double lo, double hi,
                                double target, SaddleKind kind) {
  SaddleSolution sol;
  sol.kind = kind;
  int iters = 0;
  while (sum(hi) > target && iters < 80) {
    lo = hi;
    hi *= 2.0;
    ++iters;
  }
  for (int i = 0; i < 120 && iters < 190; ++i, ++iters) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sum(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  double v = 0.5 * (lo + hi);
  double g = dsum(v);
  if (g != 0) {
    double v2 = v - (sum(v) - target) / g;
    ++iters;
    if (std::isfinite(v2) && v2 > 0 &&
        std::abs(sum(v2) - target) <= std::abs(sum(v) - target))
      v = v2;
  }
  sol.value = v;
  sol.residual = sum(v) - target;
  sol.iterations = iters;
  return sol;
}

}  // namespace

SaddleSolution solve_alpha(const PrimeTable& table, double x, double y) {
  if (!(x >= 2) || !(y >= 2)) throw std::invalid_argument("solve_alpha: need x, y >= 2");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("solve_alpha: y exceeds the prime table");
  double target = std::log(x);
  double theta = table.theta(y);
  if (!(theta > 2.0 * target))
    throw no_positive_root("solve_alpha: theta(y) <= 2 log x, no positive root");
  std::size_t k = table.count_leq(y);
  auto logs = table.logs().subspan(0, k);
  auto sum = [&](double a) { return alpha_sum(a, logs); };
  auto dsum = [&](double a) {
    // derivative of sum_p w/(1+e^{a w}) in a
    detail::Neumaier acc;
    for (double w : logs) {
      double e = std::exp(a * w);
      double d = 1.0 + e;
      acc.add(-w * w * e / (d * d));
    }
    return acc.value();
  };
  return solve_decreasing(sum, dsum, 0.0, 1.0, target, SaddleKind::alpha);
}

SaddleSolution solve_beta(const PrimeTable& table, double x, double y) {
  if (!(x > 1) || !(y >= 2)) throw std::invalid_argument("solve_beta: need x > 1, y >= 2");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("solve_beta: y exceeds the prime table");
  double target = std::log(x);
  std::size_t k = table.count_leq(y);
  auto logs = table.logs().subspan(0, k);
  auto sum = [&](double b) { return beta_sum(b, logs); };
  auto dsum = [&](double b) {
    detail::Neumaier acc;
    for (double w : logs) {
      double e = std::expm1(b * w);
      double ew = e + 1.0;
      acc.add(-w * w * ew / (e * e));
    }
    return acc.value();
  };
  double lo = 1.0;
  int shrink = 0;
  while (sum(lo) <= target && shrink < 1100) {
    lo *= 0.5;
    ++shrink;
  }
  return solve_decreasing(sum, dsum, lo, std::max(2.0 * lo, 1.0), target,
                          SaddleKind::beta);
}

double alpha_first_order(double x, double y) {
  if (!(y > 1)) throw std::invalid_argument("alpha_first_order: y must be > 1");
  double u = std::log(x) / std::log(y);
  if (!(u > 0)) throw std::invalid_argument("alpha_first_order: need u > 0");
  return 1.0 - xi(u) / std::log(y);
}

double zeta_partial(const PrimeTable& table, double s, double y) {
  if (!(s > 0)) throw std::invalid_argument("zeta_partial: s must be > 0");
  if (y > static_cast<double>(table.limit()))
    throw table_too_small("zeta_partial: y exceeds the prime table");
  std::size_t k = table.count_leq(y);
  return std::exp(neg_log1m_power_sum(s, table.logs().subspan(0, k)));
}

namespace {

// Dickman rho on a uniform mesh h = 2^-10 out to u = 140 (0 beyond, where
// the true value underflows). Mesh values are advanced window by window with
// 4th-order quadrature of the known right-hand side -rho(u-1)/u; derivative
// kinks sit on integer mesh points, so stencils never straddle one.
class RhoTable {
 public:
  static const RhoTable& instance() {
    static RhoTable table;
    return table;
  }

  double eval(double u) const {
    if (u <= 1.0) return 1.0;
    if (u <= 2.0) return 1.0 - std::log(u);
    if (u >= kMaxU) return 0.0;
    double s = u * kNodesPerUnit;
    std::size_t window = static_cast<std::size_t>(u);
    std::size_t wlo = window * kNodesPerUnit;
    // 4-node Lagrange stencil clamped inside [window, window+1]
    std::size_t i = static_cast<std::size_t>(s);
    std::size_t s0 = std::min(std::max(i, wlo + 1) - 1, wlo + kNodesPerUnit - 3);
    double r = s - static_cast<double>(s0);
    const double* f = mesh_.data() + s0;
    double c0 = -(r - 1) * (r - 2) * (r - 3) / 6.0;
    double c1 = r * (r - 2) * (r - 3) / 2.0;
    double c2 = -r * (r - 1) * (r - 3) / 2.0;
    double c3 = r * (r - 1) * (r - 2) / 6.0;
    return c0 * f[0] + c1 * f[1] + c2 * f[2] + c3 * f[3];
  }

 private:
  static constexpr std::size_t kNodesPerUnit = 1024;
  static constexpr double kStep = 1.0 / 1024.0;
  static constexpr double kMaxU = 140.0;

  RhoTable() {
    std::size_t total = static_cast<std::size_t>(kMaxU) * kNodesPerUnit + 1;
    mesh_.resize(total);
    for (std::size_t i = 0; i <= kNodesPerUnit; ++i) mesh_[i] = 1.0;
    for (std::size_t i = kNodesPerUnit + 1; i <= 2 * kNodesPerUnit; ++i)
      mesh_[i] = 1.0 - std::log(static_cast<double>(i) * kStep);

    std::vector<double> g(kNodesPerUnit + 1);
    for (std::size_t m = 2; m + 1 <= static_cast<std::size_t>(kMaxU); ++m) {
      std::size_t base = m * kNodesPerUnit;
      for (std::size_t k = 0; k <= kNodesPerUnit; ++k) {
        double u = static_cast<double>(base + k) * kStep;
        g[k] = -mesh_[base + k - kNodesPerUnit] / u;
      }
      for (std::size_t k = 1; k <= kNodesPerUnit; ++k) {
        double inc;
        if (k == 1)
          inc = (9 * g[0] + 19 * g[1] - 5 * g[2] + g[3]) / 24.0;
        else if (k == kNodesPerUnit)
          inc = (g[k - 3] - 5 * g[k - 2] + 19 * g[k - 1] + 9 * g[k]) / 24.0;
        else
          inc = (-g[k - 2] + 13 * g[k - 1] + 13 * g[k] - g[k + 1]) / 24.0;
        mesh_[base + k] = mesh_[base + k - 1] + inc * kStep;
      }
    }
  }

  std::vector<double> mesh_;
};

}  // namespace

double dickman_rho(double u) {
  if (!(u >= 0)) throw std::invalid_argument("dickman_rho: u must be >= 0");
  double v = RhoTable::instance().eval(u);
  return v < 0 ? 0.0 : v;
}

double friability_w(double t, double alpha) {
  if (!(t >= 2)) throw std::invalid_argument("friability_w: t must be >= 2");
  double lt = std::log(t);
  double q = (1.0 - alpha) * lt;
  if (std::abs(q) < 1e-12) return 1.0;
  return std::expm1(q) / q;
}

DerivedParams derived_params(const PrimeTable& table, double x, double y,
                             double alpha, double d, double eps) {
  if (!(x >= y) || !(y >= 2))
    throw std::invalid_argument("derived_params: need x >= y >= 2");
  if (!(d >= 1)) throw std::invalid_argument("derived_params: need d >= 1");
  if (!(eps > 0) || !(eps < 0.6))
    throw std::invalid_argument("derived_params: need eps in (0, 3/5)");
  DerivedParams out;
  double lx = std::log(x);
  double ly = std::log(y);
  out.u = lx / ly;
  out.w = table.theta(y) / lx;
  out.u_y = out.u + ly / std::log(out.u + 2.0);
  double q = (1.0 - alpha) * ly;
  out.v_alpha = std::abs(q) < 1e-12 ? 1.0 : std::expm1(q) / q;
  double l2y = std::log(ly);
  double fifth_root = std::copysign(std::pow(std::abs(l2y), 0.2), l2y);
  out.L_y = std::exp(std::pow(ly, 0.6) / fifth_root);
  out.L_eps_y = std::exp(std::pow(ly, 0.6 - eps));
  out.t_of_d = std::log(d) / ly;
  return out;
}

double local_model_b(const PrimeTable& table, double x, double y, double d) {
  if (!(d > 1)) throw std::invalid_argument("local_model_b: need d > 1");
  if (!(d <= x)) throw std::invalid_argument("local_model_b: need d <= x");
  if (!(x >= y) || !(y >= 2))
    throw std::invalid_argument("local_model_b: need x >= y >= 2");
  double alpha = solve_alpha(table, x, y).value;
  std::uint64_t psi_full = psi_star(table, x, y);
  std::uint64_t psi_div = psi_star(table, x / d, y);
  if (psi_div == 0) throw degenerate_input("local_model_b: Psi*(x/d, y) = 0");
  double u = std::log(x) / std::log(y);
  double t = std::log(d) / std::log(y);
  double log_ratio = std::log(static_cast<double>(psi_div)) + alpha * std::log(d) -
                     std::log(static_cast<double>(psi_full));
  return -(u / (t * t)) * log_ratio;
}

PrimeSumEstimate prime_sum_estimate(const PrimeTable& table, double x, double y) {
  if (!(x >= 2) || !(y >= 2))
    throw std::invalid_argument("prime_sum_estimate: need x, y >= 2");
  double alpha = solve_alpha(table, x, y).value;
  PrimeSumEstimate out;
  out.exact = table.prime_power_sum(0.0, y, alpha);
  double u = std::log(x) / std::log(y);
  double w = table.theta(y) / std::log(x);
  out.model = std::log(std::log(y)) + u * w / (w - 1.0);
  return out;
}

}  // namespace friablab
