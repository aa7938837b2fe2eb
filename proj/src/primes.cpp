// Segmented sieve, prefix statistics, and factorization.

#include "friablab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "friablab/kernels.hpp"

namespace friablab {

int Factorization::mu() const {
  for (const auto& [p, e] : factors)
    if (e >= 2) return 0;
  return (factors.size() % 2 == 0) ? 1 : -1;
}

std::uint64_t Factorization::big_omega() const {
  std::uint64_t total = 0;
  for (const auto& [p, e] : factors) total += e;
  return total;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("prime table limit must be >= 2");

  // Base primes up to sqrt(limit) via a plain sieve.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<bool> base(root + 1, true);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (!base[p]) continue;
    base_primes.push_back(p);
    for (std::uint64_t q = p * p; q <= root; q += p) base[q] = false;
  }

  constexpr std::uint64_t kSegment = 1u << 16;
  std::vector<bool> seg;
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    seg.assign(hi - lo + 1, true);
    for (std::uint64_t p : base_primes) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t q = start; q <= hi; q += p) seg[q - lo] = false;
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (seg[v - lo]) primes_.push_back(v);
  }

  logs_.reserve(primes_.size());
  log_prefix_.reserve(primes_.size());
  detail::Neumaier acc;
  for (std::uint64_t p : primes_) {
    double lp = std::log(static_cast<double>(p));
    logs_.push_back(lp);
    acc.add(lp);
    log_prefix_.push_back(acc.value());
  }
}

PrimeTable build_table(std::uint64_t limit) { return PrimeTable(limit); }

void PrimeTable::require_covered(double y, const char* op) const {
  if (y > static_cast<double>(limit_))
    throw table_too_small(std::string(op) + ": query " + std::to_string(y) +
                          " exceeds table limit " + std::to_string(limit_));
}

std::size_t PrimeTable::count_leq(double y) const {
  if (y < 2.0) return 0;
  std::uint64_t yf = static_cast<std::uint64_t>(std::floor(y));
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), yf) - primes_.begin());
}

double PrimeTable::theta(double y) const {
  if (y < 0) throw std::invalid_argument("theta: y must be >= 0");
  require_covered(y, "theta");
  std::size_t k = count_leq(y);
  return k == 0 ? 0.0 : log_prefix_[k - 1];
}

std::uint64_t PrimeTable::prime_count(double y) const {
  if (y < 0) throw std::invalid_argument("prime_count: y must be >= 0");
  require_covered(y, "prime_count");
  return count_leq(y);
}

double PrimeTable::prime_power_sum(double y0, double y1, double s) const {
  if (y0 < 0 || y1 < y0)
    throw std::invalid_argument("prime_power_sum: need 0 <= y0 <= y1");
  require_covered(y1, "prime_power_sum");
  std::size_t lo = count_leq(y0);
  std::size_t hi = count_leq(y1);
  return power_sum(s, std::span<const double>(logs_).subspan(lo, hi - lo));
}

Factorization PrimeTable::factor(std::uint64_t n) const {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
  Factorization out;
  out.n = n;
  std::uint64_t rem = n;
  for (std::uint64_t p : primes_) {
    if (p > rem / p) break;  // p*p > rem without overflow
    if (rem % p != 0) continue;
    std::uint32_t e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (rem > 1) {
    if (rem > limit_)
      throw table_too_small("factor: cofactor " + std::to_string(rem) +
                            " has a prime factor beyond the table");
    out.factors.emplace_back(rem, 1);
  }
  return out;
}

}  // namespace friablab
