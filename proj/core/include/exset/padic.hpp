#pragma once

#include <optional>
#include <string>

#include "exset/rational.hpp"

namespace exset {

/// nu_p of a nonzero integer: the exponent of p in z.
long vp_big(const BigInt& z, const BigInt& p);

/// nu_p of a rational; nu_p(0) = infinity. p must be prime.
Valuation vp_rational(const Rational& q, const BigInt& p);

/// q = p^k * unit with p coprime to the unit's numerator and denominator.
struct PPowerDecomposition {
  long exponent;
  Rational unit;
};
PPowerDecomposition decompose_p_power(const Rational& q, const BigInt& p);

/// p^e as an exact rational (e any integer).
Rational p_power(const BigInt& p, long e);

/// An exact scalar p^v * u with u a p-unit rational and v an exact rational
/// valuation. v may be fractional (value-group elements of ramified
/// extensions); materializing to a rational requires integral v. Zero is
/// represented by v = infinity with no unit.
class PAdicScalar {
 public:
  static PAdicScalar zero(BigInt p);
  static PAdicScalar one(BigInt p);
  static PAdicScalar from_rational(BigInt p, const Rational& q);
  /// From explicit parts; unit must be a nonzero p-unit.
  static PAdicScalar from_parts(BigInt p, Rational valuation, Rational unit);

  const BigInt& prime() const { return p_; }
  bool is_zero() const { return val_.is_infinity(); }
  const Valuation& valuation() const { return val_; }
  /// The p-unit part; precondition: nonzero.
  const Rational& unit() const;

  /// Exact rational value; requires an integral valuation.
  Rational to_rational() const;

  PAdicScalar operator-() const;
  friend PAdicScalar operator+(const PAdicScalar& x, const PAdicScalar& y);
  friend PAdicScalar operator-(const PAdicScalar& x, const PAdicScalar& y);
  friend PAdicScalar operator*(const PAdicScalar& x, const PAdicScalar& y);
  PAdicScalar inverse() const;
  PAdicScalar pow(long e) const;

  friend bool operator==(const PAdicScalar& x, const PAdicScalar& y);

  std::string str() const;

 private:
  PAdicScalar(BigInt p, Valuation v, Rational u) : p_(std::move(p)), val_(std::move(v)), unit_(std::move(u)) {}
  BigInt p_;
  Valuation val_;
  Rational unit_;  // 0 iff zero scalar
};

PAdicScalar scalar_add(const PAdicScalar& x, const PAdicScalar& y);
PAdicScalar scalar_mul(const PAdicScalar& x, const PAdicScalar& y);

}  // namespace exset
