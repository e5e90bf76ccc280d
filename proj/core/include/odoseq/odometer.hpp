#pragma once

#include <cstddef>
#include <vector>

#include "odoseq/numeric.hpp"

namespace odoseq {

/// The cut counts <k_0, k_1, ...> of an odometer, k_i >= 2, with exact
/// partial products K_n = k_0 * ... * k_{n-1} (K_0 = 1).
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<BigInt> coeffs);
  static CoefficientSequence from_u64(const std::vector<std::uint64_t>& coeffs);

  std::size_t depth() const { return coeffs_.size(); }
  const BigInt& k(std::size_t i) const { return coeffs_.at(i); }
  /// K_n = prod_{i<n} k_i; n may equal depth().
  const BigInt& partial_product(std::size_t n) const { return products_.at(n); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  std::uint64_t k_u64(std::size_t i) const { return to_u64(k(i), "coefficient"); }
  std::uint64_t partial_product_u64(std::size_t n) const {
    return to_u64(partial_product(n), "partial product");
  }

  bool operator==(const CoefficientSequence& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
  std::vector<BigInt> products_;  // products_[n] = K_n, size depth()+1
};

/// A depth-truncated odometer group element: digits x(i) in [0, k_i).
struct OdoPoint {
  std::vector<BigInt> digits;

  static OdoPoint zero(const CoefficientSequence& c);
  static OdoPoint from_u64(const std::vector<std::uint64_t>& digits);
};

/// Checks 0 <= x(i) < k_i and matching depth; throws std::invalid_argument.
void check_point(const CoefficientSequence& c, const OdoPoint& p);

struct StepResult {
  OdoPoint point;
  bool overflow = false;  // carry escaped the truncated depth
};

struct AddResult {
  OdoPoint point;
  BigInt overflow_count;  // how many times the truncated group wrapped
};

/// p + 1 with ripple carry; wrap (all digits k_i - 1) is signaled, not fatal.
StepResult succ(const CoefficientSequence& c, const OdoPoint& p);

/// p + j for j >= 0, computed by mixed-radix addition on the rank.
AddResult add(const CoefficientSequence& c, const OdoPoint& p, const BigInt& j);

/// Row of the n-tower containing p: sum_{m<n} x(m) K_m, in [0, K_n).
BigInt tower_row(const CoefficientSequence& c, const OdoPoint& p, std::size_t n);

/// Position of a point within the n-tower.
struct TowerIndex {
  std::size_t level = 0;
  BigInt row;  // 0 <= row < K_level
};

TowerIndex tower_index(const CoefficientSequence& c, const OdoPoint& p, std::size_t n);

/// Inverse of tower_row at depth n: the digit vector of rank `row`.
OdoPoint point_from_row(const CoefficientSequence& c, const BigInt& row, std::size_t n);

/// Haar measure of the cylinder fixing the first digits to `prefix`:
/// prod 1/k_i, exact.
Rational cylinder_measure(const CoefficientSequence& c, const std::vector<BigInt>& prefix);

/// Regrouped presentation along K-subscripts n_0 < n_1 < ... (each >= 1):
/// k'_0 = K_{n_0}, k'_j = K_{n_j} / K_{n_{j-1}}. Partial products of the
/// output run through exactly the picked K values.
CoefficientSequence regroup(const CoefficientSequence& c, const std::vector<std::size_t>& picks);

}  // namespace odoseq
