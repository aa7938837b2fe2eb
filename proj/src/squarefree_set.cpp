#include "friablab/squarefree_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "friablab/kernels.hpp"

namespace friablab {

SquarefreeSet::SquarefreeSet(const PrimeTable& table, double x, double y) {
  if (!(x >= 1)) throw std::invalid_argument("SquarefreeSet: x must be >= 1");
  if (!(y >= 2)) throw std::invalid_argument("SquarefreeSet: y must be >= 2");
  double bound = std::min(y, std::floor(x));
  if (bound > static_cast<double>(table.limit()))
    throw table_too_small("SquarefreeSet: prime table too small");
  std::uint64_t nx = static_cast<std::uint64_t>(std::floor(x));
  prime_count_ = table.count_leq(bound);
  auto primes = table.primes();

  // DFS over squarefree products; factors recorded in DFS order, reordered
  // by value afterwards.
  std::vector<std::uint64_t> vals;
  std::vector<std::int32_t> tops;
  std::vector<std::uint32_t> offs{0};
  std::vector<std::uint32_t> flat;
  std::vector<std::uint32_t> stack;
  auto rec = [&](auto&& self, std::size_t j0, std::uint64_t prod) -> void {
    vals.push_back(prod);
    tops.push_back(stack.empty() ? -1 : static_cast<std::int32_t>(stack.back()));
    flat.insert(flat.end(), stack.begin(), stack.end());
    offs.push_back(static_cast<std::uint32_t>(flat.size()));
    for (std::size_t j = j0; j < prime_count_; ++j) {
      std::uint64_t p = primes[j];
      if (p > nx / prod) break;
      stack.push_back(static_cast<std::uint32_t>(j));
      self(self, j + 1, prod * p);
      stack.pop_back();
    }
  };
  rec(rec, 0, 1);

  std::vector<std::size_t> order(vals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });

  values_.resize(vals.size());
  pplus_index_.resize(vals.size());
  offsets_.assign(1, 0);
  offsets_.reserve(vals.size() + 1);
  factor_idx_.reserve(flat.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    std::size_t i = order[r];
    values_[r] = vals[i];
    pplus_index_[r] = tops[i];
    for (std::uint32_t q = offs[i]; q < offs[i + 1]; ++q)
      factor_idx_.push_back(flat[q]);
    offsets_.push_back(static_cast<std::uint32_t>(factor_idx_.size()));
  }

  if (prime_count_ <= 64u * kMaxMaskWords) {
    mask_words_ = static_cast<int>((prime_count_ + 63) / 64);
    for (int w = 0; w < mask_words_; ++w) planes_[w].assign(values_.size(), 0);
    for (std::size_t i = 0; i < values_.size(); ++i)
      for (std::uint32_t q = offsets_[i]; q < offsets_[i + 1]; ++q) {
        std::uint32_t idx = factor_idx_[q];
        planes_[idx >> 6][i] |= 1ULL << (idx & 63);
      }
  }
}

void SquarefreeSet::eval_signs(const PrimeTable& table, const SignAssignment& a,
                               std::vector<std::int8_t>& f) const {
  f.resize(values_.size());
  if (mask_words_ > 0) {
    std::vector<std::uint64_t> bits;
    a.fill_sign_bits(table, prime_count_, bits);
    bits.resize(kMaxMaskWords, 0);
    const std::uint64_t* planes[kMaxMaskWords];
    for (int w = 0; w < mask_words_; ++w) planes[w] = planes_[w].data();
    signed_parity_sum(planes, mask_words_, values_.size(), bits.data(), f.data());
    return;
  }
  std::vector<std::int8_t> signs;
  a.fill_signs(table, prime_count_, signs);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int v = 1;
    for (std::uint32_t q = offsets_[i]; q < offsets_[i + 1]; ++q)
      v *= signs[factor_idx_[q]];
    f[i] = static_cast<std::int8_t>(v);
  }
}

std::int64_t SquarefreeSet::sum_f(const PrimeTable& table,
                                  const SignAssignment& a) const {
  if (mask_words_ > 0) {
    std::vector<std::uint64_t> bits;
    a.fill_sign_bits(table, prime_count_, bits);
    bits.resize(kMaxMaskWords, 0);
    const std::uint64_t* planes[kMaxMaskWords];
    for (int w = 0; w < mask_words_; ++w) planes[w] = planes_[w].data();
    return signed_parity_sum(planes, mask_words_, values_.size(), bits.data(), nullptr);
  }
  std::vector<std::int8_t> f;
  eval_signs(table, a, f);
  std::int64_t sum = 0;
  for (std::int8_t v : f) sum += v;
  return sum;
}

}  // namespace friablab
