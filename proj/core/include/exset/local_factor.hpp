#pragma once

#include <vector>

#include "exset/padic.hpp"
#include "exset/polynomial.hpp"

namespace exset {

/// Canonical representative of x modulo p^m: p^nu(x) * (unit mod p^(m-nu)),
/// exact as a rational; 0 when nu(x) >= m.
Rational canonical_mod(const Rational& x, const BigInt& p, long m);

/// x mod p^k for a p-integral rational (denominator inverted mod p^k).
BigInt rational_mod_pk(const Rational& x, const BigInt& p, long k);

/// Euler-criterion quadratic-residue test for a p-unit, p odd.
bool is_quadratic_residue(const BigInt& a, const BigInt& p);

/// Canonical Hensel square root of a unit residue a mod p^k (p odd): the root
/// whose first p-adic digit lies in 1..(p-1)/2. Precondition: a is a QR mod p.
BigInt sqrt_unit_mod_pk(const BigInt& a, const BigInt& p, long k);

/// One monic Q_p-irreducible factor, coefficients as canonical rational
/// representatives mod p^precision.
struct QpFactor {
  std::vector<Rational> coeffs;  // monic, constant first, size = degree + 1
  long degree = 0;
  Rational root_valuation;       // shared by all roots of the factor
  long ramification = 1;         // e
  long residue_degree = 1;       // f
};

struct QpFactorization {
  std::vector<QpFactor> factors;
  PAdicScalar leading;  // product of monic factors times this equals P
  long precision = 0;   // product congruence holds mod p^precision
};

/// Factor a squarefree integer polynomial over Q_p to the requested precision
/// (Newton-polygon slope splitting, unramified Hensel lifting, integral-slope
/// rescaling, linear-residue recentering). Inputs needing iterated splitting
/// raise unsupported-input naming the obstruction.
QpFactorization qp_factorization(const IntPolynomial& poly, const BigInt& p, long precision);

/// True if the polynomial is irreducible over Q_p at the given working
/// precision (single qp_factorization factor).
bool is_irreducible_over_qp(const IntPolynomial& poly, const BigInt& p, long precision);

namespace detail {

/// Weighted-norm two-factor split of a polynomial f (exact rational
/// coefficients): f = g * h + r with g monic of degree n_inside carrying the
/// roots of valuation >= v, h the polynomial cofactor, and the exact residual
/// r of weight >= target_weight at radius exponent v (weight of c_i z^i is
/// nu(c_i) + i*v). Requires the weight minimum over f to be attained last at
/// index n_inside with a positive gap beyond it. Newton lifting with exact
/// rational Bezout operators; raises precision-exhausted when the residual
/// weight stalls before the target.
struct WeightedSplit {
  std::vector<Rational> g;      // monic, degree n_inside
  std::vector<Rational> h;      // cofactor, degree = deg f - n_inside
  Rational achieved_weight;     // exact residual weight reached
  Rational weight_gap;          // initial dominance gap driving convergence
  int iterations = 0;
};
WeightedSplit weighted_split(const std::vector<Rational>& f, const BigInt& p, const Rational& v,
                             long n_inside, const Rational& target_weight);

/// Weight of a rational coefficient vector at radius exponent v: the minimum
/// of nu(c_i) + i*v (infinity for the zero vector).
Valuation vector_weight(const std::vector<Rational>& f, const BigInt& p, const Rational& v);

}  // namespace detail

}  // namespace exset
