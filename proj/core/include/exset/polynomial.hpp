#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exset/padic.hpp"
#include "exset/rational.hpp"

namespace exset {

/// Primitive integer polynomial, constant term first. Minimal polynomials are
/// additionally irreducible with positive leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial z();                       // the polynomial z
  static IntPolynomial linear_of(const Rational& r);  // den*z - num, root r

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(size_t i) const;
  const BigInt& leading() const;

  BigInt content() const;
  /// Content 1 and positive leading coefficient.
  IntPolynomial primitive_normalized() const;

  BigInt eval_int(const BigInt& x) const;
  Rational eval_rational(const Rational& x) const;

  BigInt height() const;  // max |coefficient|

  IntPolynomial derivative() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  /// Lexicographic on (leading, ..., constant); degrees must match to compare.
  static bool lex_less(const IntPolynomial& a, const IntPolynomial& b);

  std::string str() const;

 private:
  std::vector<BigInt> c_;  // empty = zero polynomial
};

/// Dense rational polynomial helpers (internal workhorse for field arithmetic).
using RatPoly = std::vector<Rational>;

RatPoly rp_from(const IntPolynomial& p);
long rp_degree(const RatPoly& p);          // -1 for zero
void rp_trim(RatPoly& p);
RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rational& s);
/// Division with remainder over Q; b nonzero.
void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly rp_gcd(RatPoly a, RatPoly b);      // monic gcd
Rational rp_eval(const RatPoly& p, const Rational& x);
/// Monic squarefree part p / gcd(p, p').
RatPoly rp_squarefree_part(const RatPoly& p);
/// Primitive integer polynomial proportional to p, positive leading coeff.
IntPolynomial rp_to_primitive_int(const RatPoly& p);

/// One finite-slope side of a Newton polygon. A segment of slope s and
/// horizontal length len accounts for len roots of valuation -s.
struct PolygonSegment {
  Rational slope;
  long length;
};

struct NewtonPolygon {
  long zero_root_multiplicity = 0;  // order of vanishing at 0 (infinite-slope part)
  std::vector<PolygonSegment> segments;  // slopes strictly increasing

  /// Root valuations as (valuation, multiplicity), decreasing valuation.
  std::vector<std::pair<Rational, long>> root_valuations() const;
  long total_finite_roots() const;
};

/// Lower convex hull of {(i, v(c_i))} for an arbitrary valuation vector
/// (entries may be infinite = zero coefficients).
NewtonPolygon newton_polygon_from_valuations(const std::vector<Valuation>& vals);

/// Newton polygon of an integer polynomial at p.
NewtonPolygon newton_polygon(const IntPolynomial& poly, const BigInt& p);

/// Exact irreducibility over Q for degrees <= 4 (rational-root tests plus
/// quadratic-split trials). Degree >= 5 raises unsupported-input.
bool is_irreducible_over_q(const IntPolynomial& poly);

/// All positive divisors of |n| at desk scale (|n| <= ~10^12 guard).
std::vector<BigInt> positive_divisors_desk(const BigInt& n);

}  // namespace exset
