#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace odoseq {

// All group/measure arithmetic in this library is exact. BigInt/Rational are
// the only numeric carriers; no floating point is used anywhere in core.
using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when an operation would materialize something past an explicit cap
// (expansion length, table size, addressable depth).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

/// Canonical "p/q" form, q >= 1 always present ("0/1", "8/81", ...).
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q", a plain integer, or a decimal literal like "0.25" / "-1.5".
Rational rational_from_string(const std::string& text);

inline BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

/// base^exp for exact big-integer exponents; refuses exponents that do not
/// fit in an unsigned long (such powers are never materializable anyway).
inline BigInt big_pow(const BigInt& base, const BigInt& exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (!exp.fits_ulong_p())
    throw CapExceeded("exponent too large to materialize power: " + exp.get_str());
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}

inline std::uint64_t to_u64(const BigInt& v, const char* what = "value") {
  if (v < 0 || !v.fits_ulong_p())
    throw CapExceeded(std::string(what) + " does not fit in 64 bits: " + v.get_str());
  return static_cast<std::uint64_t>(v.get_ui());
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace odoseq
