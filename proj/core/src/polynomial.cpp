#include "exset/polynomial.hpp"

#include <algorithm>

namespace exset {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::z() { return IntPolynomial({BigInt(0), BigInt(1)}); }

IntPolynomial IntPolynomial::linear_of(const Rational& r) {
  return IntPolynomial({-r.get_num(), r.get_den()}).primitive_normalized();
}

const BigInt& IntPolynomial::coeff(size_t i) const {
  static const BigInt kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) fail(ErrorKind::Precondition, "zero-polynomial", "leading() of 0");
  return c_.back();
}

BigInt IntPolynomial::content() const {
  BigInt g(0);
  for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_normalized() const {
  if (c_.empty()) return *this;
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rational IntPolynomial::eval_rational(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
  return acc;
}

BigInt IntPolynomial::height() const {
  BigInt h(0);
  for (const auto& a : c_) {
    BigInt v = abs(a);
    if (v > h) h = v;
  }
  return h;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(out));
}

bool IntPolynomial::lex_less(const IntPolynomial& a, const IntPolynomial& b) {
  for (size_t k = a.c_.size(); k-- > 0;) {
    size_t i = k;
    if (a.c_[i] != b.coeff(i)) return a.c_[i] < b.coeff(i);
  }
  return false;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0 && c_.size() > 1) continue;
    if (!s.empty()) s += c_[i] >= 0 ? " + " : " - ";
    else if (c_[i] < 0) s += "-";
    BigInt v = abs(c_[i]);
    if (i == 0 || v != 1) s += v.get_str();
    if (i >= 1) s += "z";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

RatPoly rp_from(const IntPolynomial& p) {
  RatPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.emplace_back(a);
  return out;
}

long rp_degree(const RatPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<long>(i);
  return -1;
}

void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  rp_trim(out);
  return out;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  rp_trim(out);
  return out;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (rp_degree(a) < 0 || rp_degree(b) < 0) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  rp_trim(out);
  return out;
}

RatPoly rp_scale(const RatPoly& a, const Rational& s) {
  RatPoly out(a);
  for (auto& x : out) x *= s;
  rp_trim(out);
  return out;
}

void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  long db = rp_degree(b);
  if (db < 0) fail(ErrorKind::Precondition, "division-by-zero", "polynomial division by 0");
  r = a;
  rp_trim(r);
  q.assign(std::max<long>(rp_degree(a) - db + 1, 0), Rational(0));
  while (rp_degree(r) >= db) {
    long dr = rp_degree(r);
    Rational f = r[dr] / b[db];
    q[dr - db] = f;
    for (long i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
    rp_trim(r);
  }
  rp_trim(q);
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (rp_degree(b) >= 0) {
    RatPoly q, r;
    rp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  long d = rp_degree(a);
  if (d >= 0 && a[d] != 1) a = rp_scale(a, 1 / a[d]);
  return a;
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RatPoly rp_squarefree_part(const RatPoly& p) {
  long d = rp_degree(p);
  if (d <= 0) return p;
  RatPoly dp(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * Rational(static_cast<long>(i));
  rp_trim(dp);
  RatPoly g = rp_gcd(p, dp);
  RatPoly q, r;
  rp_divmod(p, g, q, r);
  long dq = rp_degree(q);
  if (dq >= 0 && q[dq] != 1) q = rp_scale(q, 1 / q[dq]);
  return q;
}

IntPolynomial rp_to_primitive_int(const RatPoly& p) {
  BigInt den(1);
  for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<BigInt> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rational v = p[i] * Rational(den);
    c[i] = v.get_num();
  }
  return IntPolynomial(std::move(c)).primitive_normalized();
}

std::vector<std::pair<Rational, long>> NewtonPolygon::root_valuations() const {
  std::vector<std::pair<Rational, long>> out;
  // Slopes increase left to right, so -slope (the valuation) decreases.
  for (const auto& s : segments) out.emplace_back(-s.slope, s.length);
  return out;
}

long NewtonPolygon::total_finite_roots() const {
  long n = 0;
  for (const auto& s : segments) n += s.length;
  return n;
}

NewtonPolygon newton_polygon_from_valuations(const std::vector<Valuation>& vals) {
  NewtonPolygon np;
  // Initial infinite-slope part: leading zero coefficients.
  size_t start = 0;
  while (start < vals.size() && vals[start].is_infinity()) ++start;
  if (start == vals.size())
    fail(ErrorKind::Precondition, "zero-polynomial", "Newton polygon of 0");
  np.zero_root_multiplicity = static_cast<long>(start);

  // Lower convex hull over the finite points, scanning left to right.
  std::vector<std::pair<long, Rational>> hull;  // (index, valuation)
  for (size_t i = start; i < vals.size(); ++i) {
    if (vals[i].is_infinity()) continue;
    std::pair<long, Rational> pt{static_cast<long>(i), vals[i].finite()};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b if it lies on or above segment a->pt (monotone-chain lower hull).
      if ((b.second - a.second) * (pt.first - a.first) >=
          (pt.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(std::move(pt));
  }
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    Rational slope = (hull[k + 1].second - hull[k].second) / Rational(hull[k + 1].first - hull[k].first);
    np.segments.push_back({slope, hull[k + 1].first - hull[k].first});
  }
  return np;
}

NewtonPolygon newton_polygon(const IntPolynomial& poly, const BigInt& p) {
  require_prime(p);
  if (poly.is_zero()) fail(ErrorKind::Precondition, "zero-polynomial", "Newton polygon of 0");
  std::vector<Valuation> vals;
  vals.reserve(poly.coeffs().size());
  for (const auto& a : poly.coeffs())
    vals.push_back(a == 0 ? Valuation::infinity() : Valuation(Rational(vp_big(a, p))));
  return newton_polygon_from_valuations(vals);
}

std::vector<BigInt> positive_divisors_desk(const BigInt& n) {
  BigInt m = abs(n);
  if (m == 0) fail(ErrorKind::Precondition, "divisors-of-zero", "divisors of 0");
  if (m > BigInt("1000000000000"))
    fail(ErrorKind::BudgetExceeded, "divisor-budget", "divisor enumeration above desk scale");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  for (size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
  return small;
}

namespace {

bool has_rational_root(const IntPolynomial& p) {
  // Candidates a/b with a | constant, b | leading. Strip z-powers first.
  const auto& c = p.coeffs();
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) return true;  // root 0
  auto as = positive_divisors_desk(c[0]);
  auto bs = positive_divisors_desk(c.back());
  for (const auto& a : as)
    for (const auto& b : bs) {
      Rational r = make_rational(a, b);
      if (p.eval_rational(r) == 0 || p.eval_rational(-r) == 0) return true;
    }
  return false;
}

bool splits_into_quadratics(const IntPolynomial& p) {
  // p primitive of degree 4 with no rational roots. Try p = (a2 z^2+a1 z+a0)
  // (b2 z^2+b1 z+b0) over Z with a2*b2 = p4, a0*b0 = p0 and the two linear
  // middle equations solved for a1, b1.
  const auto& c = p.coeffs();
  const BigInt &p0 = c[0], &p1 = c[1], &p2 = c[2], &p3 = c[3], &p4 = c[4];
  if (p0 == 0) return true;  // rational root, handled earlier
  auto lead = positive_divisors_desk(p4);
  auto cons = positive_divisors_desk(p0);
  // Height bound on quadratic factors of a quartic (coarse Mignotte-style):
  // coefficients of a factor are bounded by 4 * (sum |p_i|) in absolute value.
  BigInt bound(0);
  for (const auto& a : c) bound += abs(a);
  bound *= 4;
  for (const auto& a2 : lead) {
    BigInt b2 = p4 / a2;  // a2 > 0 WLOG (sign folded into the constant pair)
    for (const auto& a0d : cons)
      for (int sa : {1, -1}) {
        BigInt a0 = sa * a0d;
        BigInt b0 = p0 / a0;
        // z^3 and z^1 coefficients give a 2x2 linear system in (a1, b1):
        //   b2*a1 + a2*b1 = p3
        //   b0*a1 + a0*b1 = p1
        BigInt det = b2 * a0 - a2 * b0;
        BigInt a1, b1;
        if (det != 0) {
          BigInt n_a1 = p3 * a0 - a2 * p1;
          BigInt n_b1 = b2 * p1 - p3 * b0;
          if (n_a1 % det != 0 || n_b1 % det != 0) continue;
          a1 = n_a1 / det;
          b1 = n_b1 / det;
          if (a1 * b0 + a0 * b1 != p1) continue;
          if (a2 * b0 + a1 * b1 + a0 * b2 == p2) return true;
        } else {
          // Singular system: scan a1 within the factor height bound.
          if (bound > 100000)
            fail(ErrorKind::BudgetExceeded, "irreducibility-budget",
                 "quartic factor scan above desk scale");
          for (BigInt t = -bound; t <= bound; ++t) {
            a1 = t;
            BigInt rem = p3 - b2 * a1;
            if (rem % a2 != 0) continue;
            b1 = rem / a2;
            if (a1 * b0 + a0 * b1 == p1 && a2 * b0 + a1 * b1 + a0 * b2 == p2) return true;
          }
        }
      }
  }
  return false;
}

}  // namespace

bool is_irreducible_over_q(const IntPolynomial& poly) {
  IntPolynomial p = poly.primitive_normalized();
  long d = p.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > 4)
    fail(ErrorKind::UnsupportedInput, "irreducibility-degree",
         "irreducibility over Q implemented for degree <= 4");
  if (has_rational_root(p)) return false;
  if (d <= 3) return true;
  return !splits_into_quadratics(p);
}

}  // namespace exset
