#pragma once

#include <memory>
#include <vector>

#include "exset/local_factor.hpp"
#include "exset/padic.hpp"
#include "exset/polynomial.hpp"

namespace exset {

/// A finitely presented extension K/Q_p: monic defining polynomial at working
/// precision, with n = e*f.
class ExtensionDesc {
 public:
  /// Builds and classifies the extension; the defining polynomial must be
  /// monic with integer coefficients and irreducible over Q_p (checked via
  /// qp_factorization at the working precision).
  static std::shared_ptr<const ExtensionDesc> create(BigInt p, const IntPolynomial& defining,
                                                     long precision);

  const BigInt& prime() const { return p_; }
  long degree() const { return n_; }
  long ramification() const { return e_; }
  long residue_degree() const { return f_; }
  long precision() const { return prec_; }
  const std::vector<BigInt>& defining() const { return def_; }
  const BigInt& modulus() const { return pk_; }

 private:
  ExtensionDesc() = default;
  BigInt p_;
  std::vector<BigInt> def_;  // monic, canonical mod p^prec, size n+1
  long n_ = 0, e_ = 1, f_ = 1, prec_ = 0;
  BigInt pk_;
};

/// Element of O_K known modulo p^precision, coordinates in the power basis.
struct ExtElement {
  std::shared_ptr<const ExtensionDesc> ext;
  std::vector<BigInt> coords;  // length n, canonical in [0, p^precision)
  long precision = 0;
};

ExtElement ext_zero(std::shared_ptr<const ExtensionDesc> ext);
ExtElement ext_one(std::shared_ptr<const ExtensionDesc> ext);
ExtElement ext_generator(std::shared_ptr<const ExtensionDesc> ext);
/// Embed a p-integral rational.
ExtElement ext_from_rational(std::shared_ptr<const ExtensionDesc> ext, const Rational& q);
/// From p-integral rational coordinates.
ExtElement ext_from_coords(std::shared_ptr<const ExtensionDesc> ext, const std::vector<Rational>& coords);

ExtElement ext_add(const ExtElement& a, const ExtElement& b);
ExtElement ext_sub(const ExtElement& a, const ExtElement& b);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);
ExtElement ext_pow(const ExtElement& a, unsigned long e);
/// Evaluate an integer polynomial at an element.
ExtElement ext_eval_poly(const IntPolynomial& poly, const ExtElement& x);

/// Norm N_{K/Q_p}(x) as a base-field approximation: determinant of the
/// multiplication-by-x matrix in the power basis. Integral operations lose no
/// precision; the result is the exact residue mod p^precision.
struct ExtNorm {
  BigInt residue;   // canonical in [0, p^precision)
  long precision;
};
ExtNorm ext_norm(const ExtElement& x);

/// nu(x) = nu_p(N(x)) / n. Raises insufficient-precision when the norm's
/// valuation cannot be resolved below the working precision.
Valuation ext_valuation(const ExtElement& x);

/// Valuation of an arbitrary rational computed through the extension (handles
/// non-integral inputs by p-power scaling and 0 exactly).
Valuation ext_valuation_of_rational(std::shared_ptr<const ExtensionDesc> ext, const Rational& q);

}  // namespace exset
