#include "exset/padic.hpp"

#include <utility>

namespace exset {

bool is_prime_desk(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(const BigInt& p) {
  if (!is_prime_desk(p))
    fail(ErrorKind::Precondition, "not-prime", "p = " + p.get_str() + " is not a prime >= 2");
}

long exact_ceil_ln(const BigInt& x) {
  if (x < 1) fail(ErrorKind::Precondition, "ln-domain", "ceil ln needs x >= 1");
  if (x == 1) return 0;
  // Find the least k with e^k >= x by exact rational brackets of e^k:
  // lower = partial Taylor sum of e^k, upper = lower + tail bound.
  auto brackets = [](long k, long terms) -> std::pair<Rational, Rational> {
    Rational term(1), sum(1);
    for (long i = 1; i <= terms; ++i) {
      term *= Rational(k, i);
      sum += term;
    }
    // Tail: term * sum_{j>=1} (k/(terms+1))^j, geometric once terms+1 > k.
    Rational ratio(k, terms + 1);
    Rational tail = term * ratio / (1 - ratio);
    return {sum, sum + tail};
  };
  for (long k = 1;; ++k) {
    for (long terms = 4 * (k + 2);; terms *= 2) {
      if (terms <= 2 * k) continue;
      auto [lo, hi] = brackets(k, terms);
      if (lo >= x) return k;       // e^k certainly >= x
      if (hi < x) break;           // e^k certainly < x, try k+1
      // bracket straddles x: refine
      if (terms > 1 << 20)
        fail(ErrorKind::BudgetExceeded, "ln-bracket", "cannot separate e^k from x");
    }
  }
}

long vp_big(const BigInt& z, const BigInt& p) {
  if (z == 0) fail(ErrorKind::Precondition, "vp-zero", "vp_big of 0");
  BigInt r;
  return static_cast<long>(mpz_remove(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp_rational(const Rational& q, const BigInt& p) {
  require_prime(p);
  if (q == 0) return Valuation::infinity();
  long vn = vp_big(q.get_num(), p);
  long vd = vp_big(q.get_den(), p);
  return Valuation(Rational(vn - vd));
}

PPowerDecomposition decompose_p_power(const Rational& q, const BigInt& p) {
  if (q == 0) fail(ErrorKind::Precondition, "vp-zero", "cannot decompose 0");
  BigInt num, den;
  long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
  return {vn - vd, make_rational(num, den)};
}

Rational p_power(const BigInt& p, long e) {
  if (e >= 0) return Rational(pow_int(p, static_cast<unsigned long>(e)));
  return Rational(1) / Rational(pow_int(p, static_cast<unsigned long>(-e)));
}

PAdicScalar PAdicScalar::zero(BigInt p) {
  require_prime(p);
  return PAdicScalar(std::move(p), Valuation::infinity(), Rational(0));
}

PAdicScalar PAdicScalar::one(BigInt p) {
  require_prime(p);
  return PAdicScalar(std::move(p), Valuation(Rational(0)), Rational(1));
}

PAdicScalar PAdicScalar::from_rational(BigInt p, const Rational& q) {
  require_prime(p);
  if (q == 0) return zero(std::move(p));
  auto d = decompose_p_power(q, p);
  return PAdicScalar(std::move(p), Valuation(Rational(d.exponent)), d.unit);
}

PAdicScalar PAdicScalar::from_parts(BigInt p, Rational valuation, Rational unit) {
  require_prime(p);
  if (unit == 0) fail(ErrorKind::Precondition, "zero-unit", "from_parts with unit 0");
  if (mpz_divisible_p(unit.get_num().get_mpz_t(), p.get_mpz_t()) ||
      mpz_divisible_p(unit.get_den().get_mpz_t(), p.get_mpz_t()))
    fail(ErrorKind::Precondition, "non-unit", "unit part divisible by p");
  return PAdicScalar(std::move(p), Valuation(std::move(valuation)), std::move(unit));
}

const Rational& PAdicScalar::unit() const {
  if (is_zero()) fail(ErrorKind::Precondition, "zero-unit", "unit() of the zero scalar");
  return unit_;
}

Rational PAdicScalar::to_rational() const {
  if (is_zero()) return Rational(0);
  const Rational& v = val_.finite();
  if (!is_integer(v))
    fail(ErrorKind::UnsupportedInput, "fractional-valuation",
         "scalar with valuation " + to_string(v) + " is not rational");
  return p_power(p_, static_cast<long>(mpz_get_si(v.get_num().get_mpz_t()))) * unit_;
}

PAdicScalar PAdicScalar::operator-() const {
  if (is_zero()) return *this;
  return PAdicScalar(p_, val_, -unit_);
}

PAdicScalar scalar_add(const PAdicScalar& x, const PAdicScalar& y) {
  if (x.prime() != y.prime())
    fail(ErrorKind::Precondition, "prime-mismatch", "adding scalars over different primes");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Rational &vx = x.valuation().finite(), &vy = y.valuation().finite();
  Rational diff = vx - vy;
  if (!is_integer(diff))
    fail(ErrorKind::UnsupportedInput, "fractional-valuation",
         "sum of scalars whose valuations differ by a non-integer is not of unit form");
  // Factor out p^min and add the rational residue exactly.
  const Rational& vmin = vx < vy ? vx : vy;
  long ex = static_cast<long>(mpz_get_si(Rational(vx - vmin).get_num().get_mpz_t()));
  long ey = static_cast<long>(mpz_get_si(Rational(vy - vmin).get_num().get_mpz_t()));
  Rational residue = p_power(x.prime(), ex) * x.unit() + p_power(x.prime(), ey) * y.unit();
  if (residue == 0) return PAdicScalar::zero(x.prime());
  auto d = decompose_p_power(residue, x.prime());
  return PAdicScalar::from_parts(x.prime(), vmin + Rational(d.exponent), d.unit);
}

PAdicScalar operator+(const PAdicScalar& x, const PAdicScalar& y) { return scalar_add(x, y); }
PAdicScalar operator-(const PAdicScalar& x, const PAdicScalar& y) { return scalar_add(x, -y); }

PAdicScalar scalar_mul(const PAdicScalar& x, const PAdicScalar& y) {
  if (x.prime() != y.prime())
    fail(ErrorKind::Precondition, "prime-mismatch", "multiplying scalars over different primes");
  if (x.is_zero() || y.is_zero()) return PAdicScalar::zero(x.prime());
  // p-units are closed under multiplication, so no renormalization can occur.
  return PAdicScalar::from_parts(x.prime(), x.valuation().finite() + y.valuation().finite(),
                                 x.unit() * y.unit());
}

PAdicScalar operator*(const PAdicScalar& x, const PAdicScalar& y) { return scalar_mul(x, y); }

PAdicScalar PAdicScalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Precondition, "division-by-zero", "inverse of 0");
  return PAdicScalar(p_, Valuation(-val_.finite()), 1 / unit_);
}

PAdicScalar PAdicScalar::pow(long e) const {
  if (is_zero()) {
    if (e <= 0) fail(ErrorKind::Precondition, "division-by-zero", "0 to a nonpositive power");
    return *this;
  }
  return PAdicScalar(p_, Valuation(val_.finite() * e), pow_rational(unit_, e));
}

bool operator==(const PAdicScalar& x, const PAdicScalar& y) {
  if (x.prime() != y.prime()) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.valuation() == y.valuation() && x.unit_ == y.unit_;
}

std::string PAdicScalar::str() const {
  if (is_zero()) return "0";
  return p_.get_str() + "^(" + val_.str() + ")*" + to_string(unit_);
}

}  // namespace exset
