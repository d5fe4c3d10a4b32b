#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "exset/errors.hpp"

namespace exset {

// Exact arithmetic lives on GMP. mpq_class is kept canonical (gcd(num,den)=1,
// den>0) by construction, which is exactly the ExactRational invariant.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::Precondition, "zero-denominator", "rational with denominator 0");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt floor_rational(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// base^e for possibly negative integer e (base nonzero when e < 0).
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long a = neg ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (neg) {
    if (r == 0) fail(ErrorKind::Precondition, "zero-inverse", "0 to a negative power");
    r = 1 / r;
  }
  return r;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) {
  return is_integer(q) ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// A p-adic valuation value: an exact rational or +infinity (the valuation of 0).
class Valuation {
 public:
  Valuation() : inf_(true) {}
  /*implicit*/ Valuation(Rational v) : inf_(false), v_(std::move(v)) {}
  /*implicit*/ Valuation(long v) : inf_(false), v_(v) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinity() const { return inf_; }
  const Rational& finite() const {
    if (inf_) fail(ErrorKind::Precondition, "infinite-valuation", "finite() on infinity");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : exset::to_string(v_); }

 private:
  bool inf_;
  Rational v_;
};

/// Desk-scale primality: deterministic trial division.
bool is_prime_desk(const BigInt& n);

/// Requires p prime (trial check); throws a typed precondition error otherwise.
void require_prime(const BigInt& p);

/// Smallest k with e^k >= x for integer x >= 1; exact via rational bracketing
/// of powers of e. This is the ceil of the natural log used by the delta
/// recurrence.
long exact_ceil_ln(const BigInt& x);

}  // namespace exset
