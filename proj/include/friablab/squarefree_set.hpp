#pragma once
// Precomputed set of squarefree y-friable integers <= x with factor-index
// lists and, when the prime count fits 256 bits, transposed mask planes for
// the signed parity kernel. Shared by the Monte Carlo experiments so the
// enumeration cost is paid once per grid cell rather than once per trial.

#include <array>
#include <cstdint>
#include <vector>

#include "friablab/primes.hpp"
#include "friablab/randmult.hpp"

namespace friablab {

class SquarefreeSet {
 public:
  static constexpr int kMaxMaskWords = 4;

  SquarefreeSet(const PrimeTable& table, double x, double y);

  std::size_t size() const { return values_.size(); }
  const std::vector<std::uint64_t>& values() const { return values_; }
  // Index (into the table primes) of the largest prime factor; -1 for n = 1.
  const std::vector<std::int32_t>& pplus_index() const { return pplus_index_; }
  std::size_t prime_count() const { return prime_count_; }
  bool has_planes() const { return mask_words_ > 0; }
  int mask_words() const { return mask_words_; }

  // Per-entry f(n) values under `a`, in value order.
  void eval_signs(const PrimeTable& table, const SignAssignment& a,
                  std::vector<std::int8_t>& f) const;

  // Sum of f(n) over entries with value <= x (ascending prefix).
  std::int64_t sum_f(const PrimeTable& table, const SignAssignment& a) const;

 private:
  std::vector<std::uint64_t> values_;       // ascending
  std::vector<std::int32_t> pplus_index_;
  std::vector<std::uint32_t> offsets_;      // CSR into factor_idx_
  std::vector<std::uint32_t> factor_idx_;
  int mask_words_ = 0;
  std::array<std::vector<std::uint64_t>, kMaxMaskWords> planes_;
  std::size_t prime_count_ = 0;
};

}  // namespace friablab
