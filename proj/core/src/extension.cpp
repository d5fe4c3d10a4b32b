#include "exset/extension.hpp"

#include <algorithm>

namespace exset {

std::shared_ptr<const ExtensionDesc> ExtensionDesc::create(BigInt p, const IntPolynomial& defining,
                                                           long precision) {
  require_prime(p);
  if (precision < 1) fail(ErrorKind::Precondition, "precision", "precision must be >= 1");
  long n = defining.degree();
  if (n < 1 || defining.leading() != 1)
    fail(ErrorKind::Precondition, "defining-polynomial", "defining polynomial must be monic of degree >= 1");

  auto fac = qp_factorization(defining, p, precision);
  if (fac.factors.size() != 1)
    fail(ErrorKind::Precondition, "reducible-defining-polynomial",
         "defining polynomial splits over Q_p at working precision");

  auto desc = std::shared_ptr<ExtensionDesc>(new ExtensionDesc());
  desc->p_ = std::move(p);
  desc->n_ = n;
  desc->e_ = fac.factors[0].ramification;
  desc->f_ = fac.factors[0].residue_degree;
  desc->prec_ = precision;
  desc->pk_ = pow_int(desc->p_, static_cast<unsigned long>(precision));
  desc->def_.resize(n + 1);
  for (long i = 0; i <= n; ++i) {
    BigInt c = defining.coeff(i) % desc->pk_;
    if (c < 0) c += desc->pk_;
    desc->def_[i] = c;
  }
  if (desc->n_ != desc->e_ * desc->f_)
    fail(ErrorKind::Internal, "ramification", "n != e*f after classification");
  return desc;
}

namespace {

void check_same(const ExtElement& a, const ExtElement& b) {
  if (a.ext.get() != b.ext.get())
    fail(ErrorKind::Precondition, "extension-mismatch", "elements of different extensions");
}

}  // namespace

ExtElement ext_zero(std::shared_ptr<const ExtensionDesc> ext) {
  long n = ext->degree();
  long prec = ext->precision();
  return {std::move(ext), std::vector<BigInt>(n, BigInt(0)), prec};
}

ExtElement ext_one(std::shared_ptr<const ExtensionDesc> ext) {
  ExtElement e = ext_zero(std::move(ext));
  e.coords[0] = 1;
  return e;
}

ExtElement ext_generator(std::shared_ptr<const ExtensionDesc> ext) {
  if (ext->degree() < 2)
    fail(ErrorKind::Precondition, "degree", "generator needs degree >= 2");
  ExtElement e = ext_zero(std::move(ext));
  e.coords[1] = 1;
  return e;
}

ExtElement ext_from_rational(std::shared_ptr<const ExtensionDesc> ext, const Rational& q) {
  ExtElement e = ext_zero(ext);
  e.coords[0] = rational_mod_pk(q, ext->prime(), ext->precision());
  return e;
}

ExtElement ext_from_coords(std::shared_ptr<const ExtensionDesc> ext, const std::vector<Rational>& coords) {
  if (static_cast<long>(coords.size()) > ext->degree())
    fail(ErrorKind::Precondition, "coords", "too many coordinates");
  ExtElement e = ext_zero(ext);
  for (size_t i = 0; i < coords.size(); ++i)
    e.coords[i] = rational_mod_pk(coords[i], ext->prime(), ext->precision());
  return e;
}

ExtElement ext_add(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  ExtElement out = a;
  out.precision = std::min(a.precision, b.precision);
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % a.ext->modulus();
  return out;
}

ExtElement ext_sub(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  ExtElement out = a;
  out.precision = std::min(a.precision, b.precision);
  for (size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = (a.coords[i] - b.coords[i]) % a.ext->modulus();
    if (out.coords[i] < 0) out.coords[i] += a.ext->modulus();
  }
  return out;
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  const auto& ext = *a.ext;
  long n = ext.degree();
  const BigInt& pk = ext.modulus();
  std::vector<BigInt> prod(2 * n - 1, BigInt(0));
  for (long i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (long j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a.coords[i] * b.coords[j]) % pk;
  }
  // Reduce modulo the monic defining polynomial.
  for (long d = 2 * n - 2; d >= n; --d) {
    if (prod[d] == 0) continue;
    BigInt c = prod[d];
    prod[d] = 0;
    for (long i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] - c * ext.defining()[i]) % pk;
      if (prod[d - n + i] < 0) prod[d - n + i] += pk;
    }
  }
  ExtElement out = ext_zero(a.ext);
  out.precision = std::min(a.precision, b.precision);
  for (long i = 0; i < n; ++i) out.coords[i] = prod[i];
  return out;
}

ExtElement ext_pow(const ExtElement& a, unsigned long e) {
  ExtElement acc = ext_one(a.ext), base = a;
  while (e > 0) {
    if (e & 1) acc = ext_mul(acc, base);
    base = ext_mul(base, base);
    e >>= 1;
  }
  return acc;
}

ExtElement ext_eval_poly(const IntPolynomial& poly, const ExtElement& x) {
  ExtElement acc = ext_zero(x.ext);
  for (size_t i = poly.coeffs().size(); i-- > 0;) {
    acc = ext_mul(acc, x);
    acc = ext_add(acc, ext_from_rational(x.ext, Rational(poly.coeffs()[i])));
  }
  return acc;
}

ExtNorm ext_norm(const ExtElement& x) {
  const auto& ext = *x.ext;
  long n = ext.degree();
  const BigInt& pk = ext.modulus();
  if (x.precision < 1)
    fail(ErrorKind::Precondition, "precision", "norm needs precision >= 1");

  // Column j holds the coordinates of x * t^j.
  std::vector<std::vector<BigInt>> col(n);
  ExtElement cur = x;
  for (long j = 0; j < n; ++j) {
    col[j] = cur.coords;
    if (j + 1 < n) cur = ext_mul(cur, ext_generator(x.ext));
  }
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m[i][j] = col[j][i];

  // Exact integer determinant of the representative matrix; det is a
  // polynomial in the entries, so the result represents the true determinant
  // mod p^precision. Fraction-free elimination (Bareiss).
  BigInt denom(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      long swap = -1;
      for (long i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return {BigInt(0), x.precision};  // zero column: det = 0
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] /= denom;
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
    if (denom == 0) denom = 1;
  }
  BigInt det = n == 1 ? m[0][0] : m[n - 1][n - 1] * sign;
  BigInt residue = det % pk;
  if (residue < 0) residue += pk;
  return {residue, x.precision};
}

Valuation ext_valuation(const ExtElement& x) {
  ExtNorm nm = ext_norm(x);
  if (nm.residue == 0)
    fail(ErrorKind::InsufficientPrecision, "insufficient-precision",
         "norm vanishes mod p^" + std::to_string(nm.precision) +
             "; the valuation is unresolved at this precision");
  long v = vp_big(nm.residue, x.ext->prime());
  if (v >= nm.precision)
    fail(ErrorKind::InsufficientPrecision, "insufficient-precision",
         "norm valuation reaches the working precision");
  return Valuation(make_rational(v, x.ext->degree()));
}

Valuation ext_valuation_of_rational(std::shared_ptr<const ExtensionDesc> ext, const Rational& q) {
  if (q == 0) return Valuation::infinity();
  auto d = decompose_p_power(q, ext->prime());
  ExtElement e = ext_from_rational(ext, d.unit);
  Valuation v = ext_valuation(e);
  return Valuation(v.finite() + d.exponent);
}

}  // namespace exset
