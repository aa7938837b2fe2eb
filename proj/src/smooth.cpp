#include "friablab/smooth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace friablab {

namespace {

std::uint64_t floor_to_u64(double x) {
  if (x >= 9.007199254740992e15)
    throw std::invalid_argument("x too large for exact integer counting");
  return static_cast<std::uint64_t>(std::floor(x));
}

// Primes relevant for membership n <= x, P+(n) <= y: those <= min(y, x).
std::size_t effective_prime_count(const PrimeTable& table, std::uint64_t nx,
                                  double y) {
  double bound = std::min(y, static_cast<double>(nx));
  if (bound > static_cast<double>(table.limit()))
    throw table_too_small("smooth count: primes up to " + std::to_string(bound) +
                          " required, table covers " + std::to_string(table.limit()));
  return table.count_leq(bound);
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint32_t>& k) const {
    std::uint64_t h = k.first * 0x9e3779b97f4a7c15ULL;
    h ^= (h >> 29) ^ (static_cast<std::uint64_t>(k.second) * 0xc2b2ae3d27d4eb4fULL);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

using Memo = std::unordered_map<std::pair<std::uint64_t, std::uint32_t>,
                                std::uint64_t, PairHash>;

// Count of m <= n with all prime factors among the first k table primes.
std::uint64_t count_smooth(const PrimeTable& table, std::uint64_t n,
                           std::uint32_t k, Memo& memo) {
  if (n == 0) return 0;
  auto primes = table.primes();
  while (k > 0 && primes[k - 1] > n)
    k = static_cast<std::uint32_t>(table.count_leq(static_cast<double>(n)));
  if (k == 0) return 1;
  if (primes[k - 1] >= n) return n;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::uint64_t r =
      count_smooth(table, n, k - 1, memo) + count_smooth(table, n / primes[k - 1], k, memo);
  memo.emplace(std::make_pair(n, k), r);
  return r;
}

// Squarefree variant: exponent on each prime is 0 or 1.
std::uint64_t count_squarefree_smooth(const PrimeTable& table, std::uint64_t n,
                                      std::uint32_t k, Memo& memo) {
  if (n == 0) return 0;
  auto primes = table.primes();
  while (k > 0 && primes[k - 1] > n)
    k = static_cast<std::uint32_t>(table.count_leq(static_cast<double>(n)));
  if (k == 0) return 1;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::uint64_t r = count_squarefree_smooth(table, n, k - 1, memo) +
                    count_squarefree_smooth(table, n / primes[k - 1], k - 1, memo);
  memo.emplace(std::make_pair(n, k), r);
  return r;
}

void enumerate_rec(std::span<const std::uint64_t> primes, std::size_t k,
                   std::uint64_t nx, bool squarefree_only, std::size_t j0,
                   std::uint64_t prod, std::vector<std::uint64_t>& out) {
  out.push_back(prod);
  for (std::size_t j = j0; j < k; ++j) {
    std::uint64_t p = primes[j];
    if (p > nx / prod) break;
    std::uint64_t q = prod * p;
    enumerate_rec(primes, k, nx, squarefree_only, j + 1, q, out);
    if (!squarefree_only) {
      while (q <= nx / p) {
        q *= p;
        enumerate_rec(primes, k, nx, squarefree_only, j + 1, q, out);
      }
    }
  }
}

}  // namespace

SmoothQuery::SmoothQuery(double x_, double y_) : x(x_), y(y_) {
  if (!(x >= 1.0)) throw std::invalid_argument("SmoothQuery: x must be >= 1");
  if (!(y >= 2.0)) throw std::invalid_argument("SmoothQuery: y must be >= 2");
  u = std::log(x) / std::log(y);
}

SmoothEnumerator::SmoothEnumerator(const PrimeTable& table, double x, double y,
                                   bool squarefree_only) {
  if (x < 0) throw std::invalid_argument("enumerate_smooth: x must be >= 0");
  if (y < 2) throw std::invalid_argument("enumerate_smooth: y must be >= 2");
  if (x < 1) return;
  std::uint64_t nx = floor_to_u64(x);
  std::size_t k = effective_prime_count(table, nx, y);
  enumerate_rec(table.primes(), k, nx, squarefree_only, 0, 1, values_);
  std::sort(values_.begin(), values_.end());
}

std::uint64_t SmoothEnumerator::next() {
  if (end()) throw std::out_of_range("SmoothEnumerator: past the end");
  return values_[pos_++];
}

std::uint64_t psi(const PrimeTable& table, double x, double y) {
  if (x < 0) throw std::invalid_argument("psi: x must be >= 0");
  if (y < 2) throw std::invalid_argument("psi: y must be >= 2");
  if (x < 1) return 0;
  std::uint64_t nx = floor_to_u64(x);
  std::uint32_t k = static_cast<std::uint32_t>(effective_prime_count(table, nx, y));
  Memo memo;
  return count_smooth(table, nx, k, memo);
}

std::uint64_t psi_star(const PrimeTable& table, double x, double y) {
  if (x < 0) throw std::invalid_argument("psi_star: x must be >= 0");
  if (y < 2) throw std::invalid_argument("psi_star: y must be >= 2");
  if (x < 1) return 0;
  std::uint64_t nx = floor_to_u64(x);
  std::uint32_t k = static_cast<std::uint32_t>(effective_prime_count(table, nx, y));
  Memo memo;
  return count_squarefree_smooth(table, nx, k, memo);
}

namespace {

// Count squarefree products of primes[0..k) landing in (lo, hi]. suffix[j]
// holds the log of the product of primes[j..k); subtrees whose maximal
// reachable product stays at or below lo are pruned.
void window_rec(std::span<const std::uint64_t> primes, std::size_t k,
                const std::vector<double>& suffix, std::uint64_t lo,
                std::uint64_t hi, double log_lo, std::size_t j0,
                std::uint64_t prod, double log_prod, std::uint64_t& count) {
  if (prod > lo) {
    ++count;
    // everything deeper also exceeds lo; keep descending for values <= hi
  } else if (log_prod + suffix[j0] < log_lo - 1e-6) {
    return;
  }
  for (std::size_t j = j0; j < k; ++j) {
    std::uint64_t p = primes[j];
    if (p > hi / prod) break;
    window_rec(primes, k, suffix, lo, hi, log_lo, j + 1, prod * p,
               log_prod + std::log(static_cast<double>(p)), count);
  }
}

}  // namespace

std::uint64_t psi_star_delta(const PrimeTable& table, double x, double z,
                             double y) {
  if (!(x >= y) || !(y >= 2)) throw std::invalid_argument("psi_star_delta: need x >= y >= 2");
  if (!(z > 0)) throw std::invalid_argument("psi_star_delta: need z > 0");
  if (z / x > 0.1) return psi_star(table, x + z, y) - psi_star(table, x, y);

  std::uint64_t lo = floor_to_u64(x);
  std::uint64_t hi = floor_to_u64(x + z);
  if (hi <= lo) return 0;
  std::size_t k = effective_prime_count(table, hi, y);
  auto primes = table.primes();
  std::vector<double> suffix(k + 1, 0.0);
  for (std::size_t j = k; j-- > 0;)
    suffix[j] = suffix[j + 1] + std::log(static_cast<double>(primes[j]));
  std::uint64_t count = 0;
  window_rec(primes, k, suffix, lo, hi, std::log(static_cast<double>(lo)), 0, 1,
             0.0, count);
  return count;
}

double kappa_weighted_interval_sum(const PrimeTable& table, std::uint64_t a,
                                   std::uint64_t b, double y, double z,
                                   double kappa) {
  if (!(b > a) || a < 1) throw std::invalid_argument("kappa sum: need b > a >= 1");
  if (!(y >= 2) || !(z > y)) throw std::invalid_argument("kappa sum: need 2 <= y < z");
  if (kappa < 1) throw std::invalid_argument("kappa sum: need kappa >= 1");
  if (z > static_cast<double>(table.limit()))
    throw table_too_small("kappa sum: z exceeds the prime table");

  auto primes = table.primes();
  std::size_t iy = table.count_leq(y);
  std::size_t iz = table.count_leq(std::min(z, static_cast<double>(b)));

  double total = 0.0;
  // DFS over squarefree products of primes in (y, z], capped at b.
  auto rec = [&](auto&& self, std::size_t j0, std::uint64_t prod,
                 double weight) -> void {
    if (prod > a) total += weight;
    for (std::size_t j = j0; j < iz; ++j) {
      std::uint64_t p = primes[j];
      if (p > b / prod) break;
      self(self, j + 1, prod * p, weight * kappa);
    }
  };
  rec(rec, iy, 1, 1.0);
  return total;
}

DyadicCover dyadic_decompose(std::uint64_t a, std::uint64_t b) {
  if (b <= a) throw std::invalid_argument("dyadic_decompose: need b > a");
  DyadicCover cover;
  cover.a = a;
  cover.b = b;
  std::uint64_t len = b - a;
  std::uint64_t c = 0;
  for (int m = 63; m >= 0; --m) {
    std::uint64_t block = 1ULL << m;
    if (len & block) {
      cover.intervals.emplace_back(a + c, a + c + block);
      c += block;
    }
  }
  return cover;
}

}  // namespace friablab
