#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exset/local_factor.hpp"
#include "exset/padic.hpp"
#include "exset/polynomial.hpp"

namespace exset {

/// Element of Q(theta) as a rational-coefficient polynomial in theta reduced
/// modulo the (primitive, irreducible, not necessarily monic) generator
/// minimal polynomial.
class NumberFieldElement {
 public:
  NumberFieldElement(IntPolynomial generator, std::vector<Rational> coeffs);
  static NumberFieldElement generator_root(const IntPolynomial& generator);
  static NumberFieldElement from_rational(const IntPolynomial& generator, const Rational& q);

  const IntPolynomial& generator() const { return gen_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
  NumberFieldElement operator-() const;
  NumberFieldElement inverse() const;  // extended gcd modulo the generator
  NumberFieldElement pow(unsigned long e) const;
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

  std::string str() const;

 private:
  IntPolynomial gen_;
  std::vector<Rational> c_;  // degree < deg(gen), trailing zeros trimmed
};

/// P(x) for an integer polynomial P and x in a number field.
NumberFieldElement nf_eval_int_poly(const IntPolynomial& poly, const NumberFieldElement& x);

/// The minimal polynomial over Z of an element of Q(theta): squarefree part of
/// the characteristic polynomial, computed through interpolated resultants.
IntPolynomial minpoly_of_element(const NumberFieldElement& x);

struct HeightRecord {
  BigInt height;  // max |coefficient| of the primitive minimal polynomial
  long degree;
  IntPolynomial minpoly;
};

HeightRecord height_of(const Rational& q);
HeightRecord height_of(const NumberFieldElement& x);

/// An algebraic number with a chosen p-adic embedding: a primitive irreducible
/// minimal polynomial plus a branch (Q_p-irreducible factor index and a root
/// index inside that factor).
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(BigInt p, const Rational& q);
  /// All branches of a minimal polynomial in canonical order (factor index,
  /// then root index).
  static std::vector<AlgebraicNumber> branches_of(const IntPolynomial& minpoly, const BigInt& p,
                                                  long precision = 60);
  static AlgebraicNumber branch_of(const IntPolynomial& minpoly, const BigInt& p, int factor_index,
                                   int root_index, long precision = 60);

  const IntPolynomial& minpoly() const { return minpoly_; }
  const BigInt& prime() const { return p_; }
  int factor_index() const { return factor_index_; }
  int root_index() const { return root_index_; }
  long degree() const { return minpoly_.degree(); }
  /// Degree of Q_p(alpha) over Q_p (the branch factor's degree).
  long qp_degree() const;
  const QpFactor& factor() const;
  const QpFactorization& factorization() const { return *fac_; }
  bool is_zero() const;
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational rational_value() const;

  /// nu(alpha) from the branch factor's Newton polygon (infinity for 0).
  Valuation valuation() const;

  HeightRecord height() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  std::string str() const;

 private:
  AlgebraicNumber(IntPolynomial mp, BigInt p, int fi, int ri, std::shared_ptr<const QpFactorization> fac);
  IntPolynomial minpoly_;
  BigInt p_;
  int factor_index_;
  int root_index_;
  std::shared_ptr<const QpFactorization> fac_;
};

/// A positive quantity coeff * p^exp with exact rational coeff > 0 and exact
/// rational exponent; ordering is decided exactly by clearing denominators.
struct PPower {
  Rational coeff;
  Rational exp;
};
int ppower_compare(const PPower& a, const PPower& b, const BigInt& p);
/// Compare against p^(-t): the size of a p-adic value of valuation t.
int ppower_compare_pvaluation(const PPower& a, const Valuation& t, const BigInt& p);

/// Conjugate-pair lower bound, returned squared so it stays rational:
/// (2^(-3n/2) n^(-5n/2) H^(-2n))^2. Compare squares.
Rational liouville_bound_conjugates_squared(long n, const BigInt& H);
/// The bound itself when it is rational (3n/2 and 5n/2 integral).
std::optional<Rational> liouville_bound_conjugates_exact(long n, const BigInt& H);

/// Non-conjugate lower bound (n+1)^-m (m+1)^-n H(a)^-m H(b)^-n max{1,|a|} max{1,|b|}.
PPower liouville_bound_general(long n, long m, const BigInt& Ha, const BigInt& Hb,
                               const Valuation& va, const Valuation& vb);

/// Applicable Liouville bound for a distinct pair, squared (uniform exact
/// comparisons): conjugate clause when the minimal polynomials coincide.
PPower liouville_bound_pair_squared(const AlgebraicNumber& a, const AlgebraicNumber& b);

enum class HeightBoundOp { Power, Product, Sum };
/// Explicit-constant version of the height inequalities: C^n H^n for powers,
/// C (H1 H2)^(m1 m2) for products, C^k (H1...Hk)^(m1...mk) for sums.
BigInt height_bound(HeightBoundOp op, const std::vector<HeightRecord>& inputs, const BigInt& C,
                    long power_exponent = 0);

/// One polynomial of an exceptional-set description with the selected
/// branches (empty selection = all branches).
struct SetPolynomial {
  IntPolynomial poly;
  std::vector<std::pair<int, int>> selected;  // (factor, root); empty = all
};

struct ClosureWitness {
  bool ok = true;
  std::string reason;
  IntPolynomial poly;
  int factor_index = -1;
  int root_index = -1;
};

/// Thm-1 hypothesis: every polynomial carries all of its roots and every root
/// lies in B(0, p^rho_exponent) (open ball; rho infinite = no ball filter).
ClosureWitness is_conjugation_closed(const std::vector<SetPolynomial>& polys, const BigInt& p,
                                     const Valuation& rho_exponent, long precision = 60);
/// The weaker Q_p-only closure: selected branches form whole Q_p-factors.
ClosureWitness is_qp_conjugation_closed(const std::vector<SetPolynomial>& polys, const BigInt& p,
                                        const Valuation& rho_exponent, long precision = 60);

/// Exact p-adic distance nu(a - b) for branches of degree <= 2 over Q_p,
/// p odd. Identical branches give infinity.
Valuation padic_distance_deg2(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace exset
