#include "exset/algebraic.hpp"

#include <algorithm>

namespace exset {

namespace {

std::vector<Rational> reduce_mod_generator(const IntPolynomial& gen, std::vector<Rational> c) {
  RatPoly g = rp_from(gen);
  rp_trim(c);
  if (rp_degree(c) >= gen.degree()) {
    RatPoly q, r;
    rp_divmod(c, g, q, r);
    c = std::move(r);
  }
  return c;
}

void check_same_generator(const NumberFieldElement& a, const NumberFieldElement& b) {
  if (!(a.generator() == b.generator()))
    fail(ErrorKind::Precondition, "generator-mismatch", "elements of different number fields");
}

}  // namespace

NumberFieldElement::NumberFieldElement(IntPolynomial generator, std::vector<Rational> coeffs)
    : gen_(std::move(generator)), c_(reduce_mod_generator(gen_, std::move(coeffs))) {
  if (gen_.degree() < 1)
    fail(ErrorKind::Precondition, "generator", "generator must have degree >= 1");
}

NumberFieldElement NumberFieldElement::generator_root(const IntPolynomial& generator) {
  return NumberFieldElement(generator, {Rational(0), Rational(1)});
}

NumberFieldElement NumberFieldElement::from_rational(const IntPolynomial& generator, const Rational& q) {
  return NumberFieldElement(generator, {q});
}

Rational NumberFieldElement::rational_value() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() == 1) return c_[0];
  fail(ErrorKind::Precondition, "not-rational", "element is not rational");
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
  check_same_generator(a, b);
  return NumberFieldElement(a.gen_, rp_add(a.c_, b.c_));
}

NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
  check_same_generator(a, b);
  return NumberFieldElement(a.gen_, rp_sub(a.c_, b.c_));
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
  check_same_generator(a, b);
  return NumberFieldElement(a.gen_, rp_mul(a.c_, b.c_));
}

NumberFieldElement NumberFieldElement::operator-() const {
  return NumberFieldElement(gen_, rp_scale(c_, Rational(-1)));
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::Precondition, "division-by-zero", "inverse of 0");
  // Extended Euclid over Q: u*c + v*gen = gcd (a nonzero constant).
  RatPoly r0 = c_, r1 = rp_from(gen_);
  RatPoly u0{Rational(1)}, u1{};
  while (rp_degree(r1) >= 0) {
    RatPoly q, r;
    rp_divmod(r0, r1, q, r);
    RatPoly u2 = rp_sub(u0, rp_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (rp_degree(r0) != 0)
    fail(ErrorKind::Internal, "reducible-generator", "gcd(element, generator) is not constant");
  return NumberFieldElement(gen_, rp_scale(u0, 1 / r0[0]));
}

NumberFieldElement NumberFieldElement::pow(unsigned long e) const {
  NumberFieldElement acc = from_rational(gen_, Rational(1));
  NumberFieldElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  return a.gen_ == b.gen_ && a.c_ == b.c_;
}

std::string NumberFieldElement::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(c_[i]);
    if (i >= 1) s += "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

NumberFieldElement nf_eval_int_poly(const IntPolynomial& poly, const NumberFieldElement& x) {
  NumberFieldElement acc = NumberFieldElement::from_rational(x.generator(), Rational(0));
  for (size_t i = poly.coeffs().size(); i-- > 0;)
    acc = acc * x + NumberFieldElement::from_rational(x.generator(), Rational(poly.coeffs()[i]));
  return acc;
}

namespace {

/// Resultant over Q via the Sylvester determinant (exact Gaussian
/// elimination; matrices stay tiny at desk scale).
Rational sylvester_resultant(const RatPoly& a, const RatPoly& b) {
  long da = rp_degree(a), db = rp_degree(b);
  if (da < 0 || db < 0) return Rational(0);
  if (da == 0) return pow_rational(a[0], db);
  if (db == 0) return pow_rational(b[0], da);
  long n = da + db;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (long r = 0; r < db; ++r)
    for (long i = 0; i <= da; ++i) m[r][r + da - i] = a[i];
  for (long r = 0; r < da; ++r)
    for (long i = 0; i <= db; ++i) m[db + r][r + db - i] = b[i];
  Rational det(1);
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (long i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (long j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace

IntPolynomial minpoly_of_element(const NumberFieldElement& x) {
  const IntPolynomial& gen = x.generator();
  long n = gen.degree();
  if (x.is_rational()) {
    Rational q = x.is_zero() ? Rational(0) : x.coeffs()[0];
    return IntPolynomial::linear_of(q);
  }
  // char(z) = prod_i (z - x(theta_i)) = Res_y(gen(y), z - x(y)) / lc(gen)^deg(x),
  // recovered from n+1 interpolation samples in z.
  RatPoly xs = x.coeffs();
  long m = rp_degree(xs);
  Rational lc_pow = pow_rational(Rational(gen.leading()), m);
  std::vector<Rational> zs, vals;
  for (long j = 0; j <= n; ++j) {
    Rational z(j);
    RatPoly c = rp_scale(xs, Rational(-1));
    if (c.empty()) c.resize(1, Rational(0));
    else c[0] += z;
    vals.push_back(sylvester_resultant(rp_from(gen), c) / lc_pow);
    zs.push_back(z);
  }
  RatPoly charpoly;
  for (long j = 0; j <= n; ++j) {
    RatPoly basis{Rational(1)};
    Rational denom(1);
    for (long i = 0; i <= n; ++i) {
      if (i == j) continue;
      basis = rp_mul(basis, RatPoly{-zs[i], Rational(1)});
      denom *= zs[j] - zs[i];
    }
    charpoly = rp_add(charpoly, rp_scale(basis, vals[j] / denom));
  }
  return rp_to_primitive_int(rp_squarefree_part(charpoly));
}

HeightRecord height_of(const Rational& q) {
  IntPolynomial mp = IntPolynomial::linear_of(q);
  return {mp.height(), 1, mp};
}

HeightRecord height_of(const NumberFieldElement& x) {
  IntPolynomial mp = minpoly_of_element(x);
  return {mp.height(), mp.degree(), mp};
}

AlgebraicNumber::AlgebraicNumber(IntPolynomial mp, BigInt p, int fi, int ri,
                                 std::shared_ptr<const QpFactorization> fac)
    : minpoly_(std::move(mp)), p_(std::move(p)), factor_index_(fi), root_index_(ri), fac_(std::move(fac)) {}

AlgebraicNumber AlgebraicNumber::from_rational(BigInt p, const Rational& q) {
  require_prime(p);
  IntPolynomial mp = IntPolynomial::linear_of(q);
  Rational rv = q == 0 ? Rational(0) : vp_rational(q, p).finite();
  auto fac = std::make_shared<QpFactorization>(
      QpFactorization{{QpFactor{{-q, Rational(1)}, 1, rv, 1, 1}},
                      PAdicScalar::from_rational(p, Rational(mp.leading())),
                      0});
  return AlgebraicNumber(std::move(mp), std::move(p), 0, 0, std::move(fac));
}

std::vector<AlgebraicNumber> AlgebraicNumber::branches_of(const IntPolynomial& minpoly, const BigInt& p,
                                                          long precision) {
  IntPolynomial mp = minpoly.primitive_normalized();
  if (mp.degree() == 1) return {from_rational(p, make_rational(-mp.coeff(0), mp.coeff(1)))};
  if (!is_irreducible_over_q(mp))
    fail(ErrorKind::Precondition, "reducible-minpoly", "minimal polynomial must be irreducible");
  auto fac = std::make_shared<QpFactorization>(qp_factorization(mp, p, precision));
  std::vector<AlgebraicNumber> out;
  for (int fi = 0; fi < static_cast<int>(fac->factors.size()); ++fi)
    for (int ri = 0; ri < fac->factors[fi].degree; ++ri)
      out.push_back(AlgebraicNumber(mp, p, fi, ri, fac));
  return out;
}

AlgebraicNumber AlgebraicNumber::branch_of(const IntPolynomial& minpoly, const BigInt& p,
                                           int factor_index, int root_index, long precision) {
  auto all = branches_of(minpoly, p, precision);
  for (auto& a : all)
    if (a.factor_index() == factor_index && a.root_index() == root_index) return a;
  fail(ErrorKind::Precondition, "branch-index", "no such branch");
}

long AlgebraicNumber::qp_degree() const { return factor().degree; }

const QpFactor& AlgebraicNumber::factor() const { return fac_->factors.at(factor_index_); }

bool AlgebraicNumber::is_zero() const { return minpoly_ == IntPolynomial::z(); }

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) fail(ErrorKind::Precondition, "not-rational", "irrational algebraic number");
  return make_rational(-minpoly_.coeff(0), minpoly_.coeff(1));
}

Valuation AlgebraicNumber::valuation() const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(factor().root_valuation);
}

HeightRecord AlgebraicNumber::height() const {
  return {minpoly_.height(), minpoly_.degree(), minpoly_};
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.p_ == b.p_ && a.minpoly_ == b.minpoly_ && a.factor_index_ == b.factor_index_ &&
         a.root_index_ == b.root_index_;
}

std::string AlgebraicNumber::str() const {
  return "root(" + minpoly_.str() + "; branch " + std::to_string(factor_index_) + "." +
         std::to_string(root_index_) + ")";
}

// ---------------------------------------------------------------------------
// Exact positive quantities coeff * p^exp and the Liouville bounds.
// ---------------------------------------------------------------------------

int ppower_compare(const PPower& a, const PPower& b, const BigInt& p) {
  if (a.coeff <= 0 || b.coeff <= 0)
    fail(ErrorKind::Precondition, "ppower-sign", "PPower quantities must be positive");
  Rational delta = b.exp - a.exp;
  long d = static_cast<long>(mpz_get_si(delta.get_den().get_mpz_t()));
  Rational lhs = pow_rational(a.coeff / b.coeff, d);
  Rational rhs = pow_rational(Rational(p), static_cast<long>(mpz_get_si(Rational(delta * d).get_num().get_mpz_t())));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

int ppower_compare_pvaluation(const PPower& a, const Valuation& t, const BigInt& p) {
  if (t.is_infinity()) return 1;  // p^{-inf} = 0 < any positive quantity
  return ppower_compare(a, PPower{Rational(1), -t.finite()}, p);
}

Rational liouville_bound_conjugates_squared(long n, const BigInt& H) {
  if (n < 2) fail(ErrorKind::Precondition, "conjugate-degree", "conjugate bound needs n >= 2");
  if (H < 1) fail(ErrorKind::Precondition, "height", "height must be >= 1");
  Rational r(1);
  r /= Rational(pow_int(BigInt(2), static_cast<unsigned long>(3 * n)));
  r /= Rational(pow_int(BigInt(n), static_cast<unsigned long>(5 * n)));
  r /= Rational(pow_int(H, static_cast<unsigned long>(4 * n)));
  return r;
}

std::optional<Rational> liouville_bound_conjugates_exact(long n, const BigInt& H) {
  if (n % 2 != 0) return std::nullopt;
  Rational r(1);
  r /= Rational(pow_int(BigInt(2), static_cast<unsigned long>(3 * n / 2)));
  r /= Rational(pow_int(BigInt(n), static_cast<unsigned long>(5 * n / 2)));
  r /= Rational(pow_int(H, static_cast<unsigned long>(2 * n)));
  return r;
}

PPower liouville_bound_general(long n, long m, const BigInt& Ha, const BigInt& Hb,
                               const Valuation& va, const Valuation& vb) {
  if (n < 1 || m < 1) fail(ErrorKind::Precondition, "degree", "degrees must be >= 1");
  Rational q(1);
  q /= Rational(pow_int(BigInt(n + 1), static_cast<unsigned long>(m)));
  q /= Rational(pow_int(BigInt(m + 1), static_cast<unsigned long>(n)));
  q /= Rational(pow_int(Ha, static_cast<unsigned long>(m)));
  q /= Rational(pow_int(Hb, static_cast<unsigned long>(n)));
  // max{1, |x|} = p^{max(0, -nu)}; the number 0 (infinite valuation) gives 1.
  Rational e(0);
  if (!va.is_infinity() && va.finite() < 0) e += -va.finite();
  if (!vb.is_infinity() && vb.finite() < 0) e += -vb.finite();
  return {q, e};
}

PPower liouville_bound_pair_squared(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.prime() != b.prime())
    fail(ErrorKind::Precondition, "prime-mismatch", "pair bound needs a common prime");
  if (a.minpoly() == b.minpoly())
    return {liouville_bound_conjugates_squared(a.degree(), a.minpoly().height()), Rational(0)};
  PPower g = liouville_bound_general(a.degree(), b.degree(), a.minpoly().height(),
                                     b.minpoly().height(), a.valuation(), b.valuation());
  return {g.coeff * g.coeff, g.exp * 2};
}

BigInt height_bound(HeightBoundOp op, const std::vector<HeightRecord>& inputs, const BigInt& C,
                    long power_exponent) {
  if (C <= 1) fail(ErrorKind::Precondition, "height-constant", "C must be > 1");
  switch (op) {
    case HeightBoundOp::Power: {
      if (inputs.size() != 1 || power_exponent < 1)
        fail(ErrorKind::Precondition, "height-power", "power clause takes one input and n >= 1");
      return pow_int(C, static_cast<unsigned long>(power_exponent)) *
             pow_int(inputs[0].height, static_cast<unsigned long>(power_exponent));
    }
    case HeightBoundOp::Product: {
      if (inputs.size() != 2)
        fail(ErrorKind::Precondition, "height-product", "product clause takes two inputs");
      unsigned long mm = static_cast<unsigned long>(inputs[0].degree * inputs[1].degree);
      return C * pow_int(inputs[0].height * inputs[1].height, mm);
    }
    case HeightBoundOp::Sum: {
      if (inputs.empty()) fail(ErrorKind::Precondition, "height-sum", "sum clause needs inputs");
      BigInt hs(1);
      long mprod = 1;
      for (const auto& r : inputs) {
        hs *= r.height;
        mprod *= r.degree;
      }
      return pow_int(C, inputs.size()) * pow_int(hs, static_cast<unsigned long>(mprod));
    }
  }
  fail(ErrorKind::Internal, "height-op", "unknown op");
}

namespace {

ClosureWitness closure_check(const std::vector<SetPolynomial>& polys, const BigInt& p,
                             const Valuation& rho_exponent, long precision, bool qp_only) {
  for (const auto& sp : polys) {
    IntPolynomial poly = sp.poly.primitive_normalized();
    auto branches = AlgebraicNumber::branches_of(poly, p, precision);
    if (!sp.selected.empty()) {
      for (const auto& br : branches) {
        std::pair<int, int> key{br.factor_index(), br.root_index()};
        bool chosen = std::find(sp.selected.begin(), sp.selected.end(), key) != sp.selected.end();
        if (chosen) continue;
        if (!qp_only)
          return {false, "missing algebraic conjugate", poly, br.factor_index(), br.root_index()};
        // Q_p-only closure: a missing root matters only when another root of
        // the same Q_p-factor is selected.
        for (const auto& sel : sp.selected)
          if (sel.first == br.factor_index())
            return {false, "missing Q_p-conjugate inside a factor", poly, br.factor_index(),
                    br.root_index()};
      }
    }
    if (!rho_exponent.is_infinity()) {
      for (const auto& br : branches) {
        if (!sp.selected.empty() && qp_only) {
          std::pair<int, int> key{br.factor_index(), br.root_index()};
          if (std::find(sp.selected.begin(), sp.selected.end(), key) == sp.selected.end()) continue;
        }
        // inside the open ball iff nu(root) > -rho_exponent
        if (!(br.valuation() > Valuation(-rho_exponent.finite())))
          return {false, "root outside B(0, rho)", poly, br.factor_index(), br.root_index()};
      }
    }
  }
  return {};
}

}  // namespace

ClosureWitness is_conjugation_closed(const std::vector<SetPolynomial>& polys, const BigInt& p,
                                     const Valuation& rho_exponent, long precision) {
  return closure_check(polys, p, rho_exponent, precision, false);
}

ClosureWitness is_qp_conjugation_closed(const std::vector<SetPolynomial>& polys, const BigInt& p,
                                        const Valuation& rho_exponent, long precision) {
  return closure_check(polys, p, rho_exponent, precision, true);
}

}  // namespace exset
