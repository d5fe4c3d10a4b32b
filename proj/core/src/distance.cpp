#include "exset/algebraic.hpp"

namespace exset {

namespace {

// Every branch of degree <= 2 over Q_p (p odd) is x1 + x2*sqrt(d) with x1
// exact rational, x2 = sign*sqrt(x2sq) for an exact rational square x2sq, and
// d from the canonical set {1, u, p, u*p} (u = least non-residue). All the
// data below is exact; approximations are materialized only to resolve
// valuations of Q_p-sums.
enum class DClass { Qp, U, P, UP };

struct QuadCoords {
  DClass d;
  Rational x1;
  Rational x2sq;  // 0 iff the value is x1 itself
  int sign = 1;   // which square root branch
};

BigInt least_nonresidue(const BigInt& p) {
  for (BigInt u = 2; u < p; ++u)
    if (!is_quadratic_residue(u, p)) return u;
  fail(ErrorKind::Internal, "nonresidue", "no quadratic non-residue found");
}

// nu(sqrt(d)) as a rational (0 or 1/2).
Rational sqrt_d_valuation(DClass d) {
  return (d == DClass::P || d == DClass::UP) ? make_rational(1, 2) : Rational(0);
}

// Approximate sqrt(q) mod p^k for an exact rational Q_p-square q != 0,
// canonical branch.
Rational approx_sqrt(const Rational& q, const BigInt& p, long k) {
  auto d = decompose_p_power(q, p);
  if (d.exponent % 2 != 0)
    fail(ErrorKind::Internal, "sqrt-odd", "approx_sqrt of a non-square (odd valuation)");
  BigInt w = rational_mod_pk(d.unit, p, k);
  BigInt s = sqrt_unit_mod_pk(w, p, k);
  return p_power(p, d.exponent / 2) * Rational(s);
}

Rational approx_value(const QuadCoords& c, const BigInt& p, long k) {
  if (c.d != DClass::Qp)
    fail(ErrorKind::Internal, "approx-quad", "approximation of a non-Q_p value");
  if (c.x2sq == 0) return c.x1;
  return c.x1 + Rational(c.sign) * approx_sqrt(c.x2sq, p, k);
}

QuadCoords make_coords(const AlgebraicNumber& a) {
  const BigInt& p = a.prime();
  if (a.degree() == 1) return {DClass::Qp, a.rational_value(), Rational(0), 1};

  Rational A(a.minpoly().coeff(2)), B(a.minpoly().coeff(1)), C(a.minpoly().coeff(0));
  Rational x1 = -B / (2 * A);
  Rational delta = B * B - 4 * A * C;
  auto dec = decompose_p_power(delta, p);
  bool even = dec.exponent % 2 == 0;
  BigInt wres = rational_mod_pk(dec.unit, p, 1);
  bool qr = is_quadratic_residue(wres, p);

  if (even && qr) {
    // Split case: two Q_p roots x1 +/- sqrt(delta)/(2A). Identify which sign
    // this branch's linear factor carries.
    if (a.qp_degree() != 1) fail(ErrorKind::Internal, "split-shape", "expected linear factors");
    QuadCoords c{DClass::Qp, x1, delta / (4 * A * A), 1};
    const Rational& froot = a.factor().coeffs[0];  // factor z + c0: root = -c0
    for (long k : {24L, 48L}) {
      Valuation plus = vp_rational(approx_value(c, p, k) + froot, p);
      QuadCoords cm = c;
      cm.sign = -1;
      Valuation minus = vp_rational(approx_value(cm, p, k) + froot, p);
      if (plus == minus) continue;  // not yet separated
      if (minus > plus) c.sign = -1;
      return c;
    }
    fail(ErrorKind::InsufficientPrecision, "branch-matching",
         "cannot match the root to its factor at working precision");
  }

  // Inert or ramified: one quadratic factor, root index picks the sign.
  if (a.qp_degree() != 2) fail(ErrorKind::Internal, "quad-shape", "expected one quadratic factor");
  int sign = a.root_index() == 0 ? 1 : -1;
  BigInt u = least_nonresidue(p);
  if (even) {
    // d = u: x2 = sqrt(delta/u)/(2A)
    return {DClass::U, x1, delta / (4 * A * A * Rational(u)), sign};
  }
  if (qr) {
    // d = p
    return {DClass::P, x1, delta / (4 * A * A * Rational(p)), sign};
  }
  return {DClass::UP, x1, delta / (4 * A * A * Rational(u) * Rational(p)), sign};
}

// nu(sa*sqrt(qa) - sb*sqrt(qb)) for exact rational Q_p-squares; exact except
// for the equal-valuation distinct-square case, resolved by escalation.
Valuation sqrt_difference_valuation(const Rational& qa, int sa, const Rational& qb, int sb,
                                    const BigInt& p) {
  if (qa == qb && (sa == sb || qa == 0)) return Valuation::infinity();
  if (qa == 0) return Valuation(vp_rational(qb, p).finite() / 2);
  if (qb == 0) return Valuation(vp_rational(qa, p).finite() / 2);
  if (qa == qb) return Valuation(vp_rational(qa, p).finite() / 2);  // dx2 = +-2 sqrt(qa)
  Valuation va = vp_rational(qa, p), vb = vp_rational(qb, p);
  if (va != vb) return Valuation(min(va, vb).finite() / 2);
  for (long k = 32; k <= 1 << 14; k *= 2) {
    Rational diff = Rational(sa) * approx_sqrt(qa, p, k) - Rational(sb) * approx_sqrt(qb, p, k);
    if (diff == 0) continue;
    Valuation v = vp_rational(diff, p);
    if (v < Valuation(Rational(k - 2))) return v;
  }
  fail(ErrorKind::BudgetExceeded, "distance-precision", "square-root difference did not resolve");
}

// nu of a difference of two Q_p values given as coordinates.
Valuation qp_value_difference(const QuadCoords& a, const QuadCoords& b, const BigInt& p) {
  Rational dx1 = a.x1 - b.x1;
  bool same_sqrt = a.x2sq == b.x2sq && (a.x2sq == 0 || a.sign == b.sign);
  if (same_sqrt) return vp_rational(dx1, p);
  Valuation v2 = sqrt_difference_valuation(a.x2sq, a.sign, b.x2sq, b.sign, p);
  if (dx1 == 0) return v2;
  Valuation v1 = vp_rational(dx1, p);
  if (v1 != v2) return min(v1, v2);
  // Equal leading valuations inside Q_p: escalate on the full values.
  for (long k = 32; k <= 1 << 14; k *= 2) {
    Rational diff = approx_value(a, p, k) - approx_value(b, p, k);
    if (diff == 0) continue;
    Valuation v = vp_rational(diff, p);
    if (v < Valuation(Rational(k - 2))) return v;
  }
  fail(ErrorKind::BudgetExceeded, "distance-precision", "value difference did not resolve");
}

}  // namespace

Valuation padic_distance_deg2(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.prime() != b.prime())
    fail(ErrorKind::Precondition, "prime-mismatch", "distance needs a common prime");
  const BigInt& p = a.prime();
  if (p == 2) fail(ErrorKind::UnsupportedInput, "even-prime", "deg-2 distances implemented for odd p");
  if (a.degree() > 2 || b.degree() > 2)
    fail(ErrorKind::UnsupportedInput, "degree", "distances implemented for degree <= 2");
  if (a == b) return Valuation::infinity();

  QuadCoords ca = make_coords(a), cb = make_coords(b);

  if (ca.d == cb.d) {
    if (ca.d == DClass::Qp) return qp_value_difference(ca, cb, p);
    // a - b = dx1 + (x2a - x2b) sqrt(d); components are independent.
    Valuation v1 = ca.x1 == cb.x1 ? Valuation::infinity() : vp_rational(ca.x1 - cb.x1, p);
    Valuation v2 = sqrt_difference_valuation(ca.x2sq, ca.sign, cb.x2sq, cb.sign, p);
    if (!v2.is_infinity()) v2 = Valuation(v2.finite() + sqrt_d_valuation(ca.d));
    return min(v1, v2);
  }

  // Exactly one value lies in Q_p: components along 1 and sqrt(d) separate.
  if (ca.d == DClass::Qp || cb.d == DClass::Qp) {
    const QuadCoords& q = ca.d == DClass::Qp ? ca : cb;
    const QuadCoords& w = ca.d == DClass::Qp ? cb : ca;
    QuadCoords w1{DClass::Qp, w.x1, Rational(0), 1};
    Valuation v1 = qp_value_difference(q, w1, p);
    Valuation v2 = Valuation(vp_rational(w.x2sq, p).finite() / 2 + sqrt_d_valuation(w.d));
    return min(v1, v2);
  }

  // Genuinely different quadratic fields: P_b(a) = A_b (a-b)(a-b') with the
  // two differences conjugate over Q_p(a), so
  //   nu(a-b) = (nu(P_b(a)) - nu(A_b)) / 2.
  Rational Ab(b.minpoly().coeff(2)), Bb(b.minpoly().coeff(1)), Cb(b.minpoly().coeff(0));
  // a = x1 + x2 sqrt(d): a^2 = (x1^2 + x2sq*d) + 2 x1 x2 sqrt(d).
  BigInt u = least_nonresidue(p);
  Rational dval = ca.d == DClass::U ? Rational(u) : (ca.d == DClass::P ? Rational(p) : Rational(u) * Rational(p));
  Rational y1 = Ab * (ca.x1 * ca.x1 + ca.x2sq * dval) + Bb * ca.x1 + Cb;
  Rational y2factor = 2 * Ab * ca.x1 + Bb;  // y2 = x2 * y2factor
  Valuation vy1 = y1 == 0 ? Valuation::infinity() : vp_rational(y1, p);
  Valuation vy2 = (y2factor == 0 || ca.x2sq == 0)
                      ? Valuation::infinity()
                      : Valuation(vp_rational(y2factor, p).finite() +
                                  vp_rational(ca.x2sq, p).finite() / 2 + sqrt_d_valuation(ca.d));
  Valuation vP = min(vy1, vy2);
  if (vP.is_infinity()) fail(ErrorKind::Internal, "distance-zero", "P_b(a) = 0 for non-conjugates");
  return Valuation((vP.finite() - vp_rational(Rational(Ab), p).finite()) / 2);
}

}  // namespace exset
