#include "odoseq/odometer.hpp"

#include <stdexcept>
#include <string>

namespace odoseq {

CoefficientSequence::CoefficientSequence(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  products_.reserve(coeffs_.size() + 1);
  products_.emplace_back(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < 2)
      throw std::invalid_argument("coefficient k_" + std::to_string(i) + " must be >= 2");
    products_.push_back(products_.back() * coeffs_[i]);
  }
}

CoefficientSequence CoefficientSequence::from_u64(const std::vector<std::uint64_t>& coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (auto k : coeffs) v.emplace_back(static_cast<unsigned long>(k));
  return CoefficientSequence(std::move(v));
}

OdoPoint OdoPoint::zero(const CoefficientSequence& c) {
  OdoPoint p;
  p.digits.assign(c.depth(), BigInt(0));
  return p;
}

OdoPoint OdoPoint::from_u64(const std::vector<std::uint64_t>& digits) {
  OdoPoint p;
  p.digits.reserve(digits.size());
  for (auto d : digits) p.digits.emplace_back(static_cast<unsigned long>(d));
  return p;
}

void check_point(const CoefficientSequence& c, const OdoPoint& p) {
  if (p.digits.size() != c.depth())
    throw std::invalid_argument("point depth " + std::to_string(p.digits.size()) +
                                " does not match coefficient depth " + std::to_string(c.depth()));
  for (std::size_t i = 0; i < p.digits.size(); ++i) {
    if (p.digits[i] < 0 || p.digits[i] >= c.k(i))
      throw std::invalid_argument("digit x(" + std::to_string(i) + ") out of range");
  }
}

StepResult succ(const CoefficientSequence& c, const OdoPoint& p) {
  check_point(c, p);
  StepResult r{p, false};
  for (std::size_t i = 0; i < c.depth(); ++i) {
    r.point.digits[i] += 1;
    if (r.point.digits[i] < c.k(i)) return r;
    r.point.digits[i] = 0;  // carry one
  }
  r.overflow = true;
  return r;
}

AddResult add(const CoefficientSequence& c, const OdoPoint& p, const BigInt& j) {
  check_point(c, p);
  if (j < 0) throw std::invalid_argument("add requires j >= 0");
  const std::size_t n = c.depth();
  BigInt rank = tower_row(c, p, n) + j;
  AddResult out;
  out.overflow_count = rank / c.partial_product(n);
  out.point = point_from_row(c, rank % c.partial_product(n), n);
  return out;
}

BigInt tower_row(const CoefficientSequence& c, const OdoPoint& p, std::size_t n) {
  check_point(c, p);
  if (n > c.depth()) throw std::invalid_argument("tower level exceeds point depth");
  BigInt row = 0;
  for (std::size_t m = 0; m < n; ++m) row += p.digits[m] * c.partial_product(m);
  return row;
}

TowerIndex tower_index(const CoefficientSequence& c, const OdoPoint& p, std::size_t n) {
  return TowerIndex{n, tower_row(c, p, n)};
}

OdoPoint point_from_row(const CoefficientSequence& c, const BigInt& row, std::size_t n) {
  if (n > c.depth()) throw std::invalid_argument("tower level exceeds coefficient depth");
  if (row < 0 || row >= c.partial_product(n)) throw std::invalid_argument("row out of range");
  OdoPoint p = OdoPoint::zero(c);
  BigInt rest = row;
  for (std::size_t i = 0; i < n; ++i) {
    p.digits[i] = rest % c.k(i);
    rest /= c.k(i);
  }
  return p;
}

Rational cylinder_measure(const CoefficientSequence& c, const std::vector<BigInt>& prefix) {
  if (prefix.size() > c.depth()) throw std::invalid_argument("prefix longer than coefficients");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 0 || prefix[i] >= c.k(i))
      throw std::invalid_argument("prefix digit out of range");
  }
  return make_rational(1, c.partial_product(prefix.size()));
}

CoefficientSequence regroup(const CoefficientSequence& c, const std::vector<std::size_t>& picks) {
  std::vector<BigInt> out;
  out.reserve(picks.size());
  std::size_t prev = 0;
  for (std::size_t j = 0; j < picks.size(); ++j) {
    const std::size_t n = picks[j];
    if (n > c.depth()) throw std::invalid_argument("regroup pick out of range");
    if (j == 0 ? n < 1 : n <= prev)
      throw std::invalid_argument("regroup picks must be strictly increasing and >= 1");
    out.push_back(c.partial_product(n) / c.partial_product(prev));
    prev = n;
  }
  return CoefficientSequence(std::move(out));
}

}  // namespace odoseq
