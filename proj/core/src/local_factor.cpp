#include "exset/local_factor.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace exset {

Rational canonical_mod(const Rational& x, const BigInt& p, long m) {
  if (x == 0) return x;
  auto d = decompose_p_power(x, p);
  if (d.exponent >= m) return Rational(0);
  long digits = m - d.exponent;
  BigInt pk = pow_int(p, static_cast<unsigned long>(digits));
  BigInt rep = rational_mod_pk(d.unit, p, digits);
  (void)pk;
  if (rep == 0) return Rational(0);
  return p_power(p, d.exponent) * Rational(rep);
}

BigInt rational_mod_pk(const Rational& x, const BigInt& p, long k) {
  BigInt pk = pow_int(p, static_cast<unsigned long>(k));
  BigInt num = x.get_num() % pk;
  if (num < 0) num += pk;
  BigInt den = x.get_den() % pk;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0)
    fail(ErrorKind::Precondition, "non-integral", "denominator divisible by p in mod-p^k reduction");
  return (num * inv) % pk;
}

bool is_quadratic_residue(const BigInt& a, const BigInt& p) {
  if (p == 2) fail(ErrorKind::UnsupportedInput, "even-prime", "QR test requires odd p");
  BigInt e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

BigInt sqrt_unit_mod_pk(const BigInt& a, const BigInt& p, long k) {
  // Root mod p by scan (desk primes), then linear Hensel steps.
  BigInt r(0);
  bool found = false;
  if (p > 100000)
    fail(ErrorKind::BudgetExceeded, "sqrt-scan", "mod-p square-root scan above desk scale");
  for (BigInt x = 1; x < p; ++x)
    if ((x * x - a) % p == 0) {
      r = x;
      found = true;
      break;
    }
  if (!found) fail(ErrorKind::Precondition, "non-residue", "square root of a non-residue");
  // Canonical branch: first digit in 1..(p-1)/2.
  if (r > (p - 1) / 2) r = p - r;
  BigInt pj = p;
  for (long j = 1; j < k; ++j) {
    // r' = r + t*p^j with 2*r*t = (a - r^2)/p^j mod p.
    BigInt pj1 = pj * p;
    BigInt diff = (a - r * r) % pj1;
    if (diff < 0) diff += pj1;
    BigInt q = (diff / pj) % p;
    BigInt inv2r;
    BigInt two_r = (2 * r) % p;
    if (mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorKind::Internal, "hensel-sqrt", "2r not invertible");
    BigInt t = (q * inv2r) % p;
    r += t * pj;
    pj = pj1;
  }
  return r % pj;
}

// ---------------------------------------------------------------------------
// F_p[z] helpers: coefficients canonical in [0, p), constant term first.
// ---------------------------------------------------------------------------

namespace {

using FpPoly = std::vector<BigInt>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_deg(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const BigInt& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  fp_trim(out);
  return out;
}

FpPoly fp_monic(const FpPoly& f, const BigInt& p) {
  FpPoly out = f;
  fp_trim(out);
  if (out.empty()) return out;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), out.back().get_mpz_t(), p.get_mpz_t());
  for (auto& c : out) c = (c * inv) % p;
  return out;
}

// a = q*b + r over F_p, b nonzero.
void fp_divmod(const FpPoly& a, const FpPoly& b, const BigInt& p, FpPoly& q, FpPoly& r) {
  r = a;
  fp_trim(r);
  long db = fp_deg(b);
  if (db < 0) fail(ErrorKind::Internal, "fp-div-zero", "division by zero poly");
  q.assign(std::max<long>(fp_deg(a) - db + 1, 0), BigInt(0));
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  while (fp_deg(r) >= db) {
    long dr = fp_deg(r);
    BigInt f = (r[dr] * inv) % p;
    q[dr - db] = f;
    for (long i = 0; i <= db; ++i) {
      r[dr - db + i] = (r[dr - db + i] - f * b[i]) % p;
      if (r[dr - db + i] < 0) r[dr - db + i] += p;
    }
    fp_trim(r);
  }
  fp_trim(q);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const BigInt& p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly q, r;
    fp_divmod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// Extended Euclid: u*a + v*b = gcd (gcd monic).
void fp_bezout(const FpPoly& a, const FpPoly& b, const BigInt& p, FpPoly& u, FpPoly& v) {
  FpPoly r0 = a, r1 = b, u0 = {BigInt(1)}, u1 = {}, v0 = {}, v1 = {BigInt(1)};
  fp_trim(r0);
  fp_trim(r1);
  auto sub_mul = [&p](const FpPoly& x, const FpPoly& q, const FpPoly& y) {
    FpPoly qy = fp_mul(q, y, p);
    FpPoly out(std::max(x.size(), qy.size()), BigInt(0));
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (size_t i = 0; i < qy.size(); ++i) {
      out[i] = (out[i] - qy[i]) % p;
      if (out[i] < 0) out[i] += p;
    }
    fp_trim(out);
    return out;
  };
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(r0, r1, p, q, r);
    FpPoly u2 = sub_mul(u0, q, u1);
    FpPoly v2 = sub_mul(v0, q, v1);
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  // Normalize so the combination is monic.
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), r0.back().get_mpz_t(), p.get_mpz_t());
  for (auto& c : u0) c = (c * inv) % p;
  for (auto& c : v0) c = (c * inv) % p;
  u = std::move(u0);
  v = std::move(v0);
}

FpPoly fp_derivative(const FpPoly& f, const BigInt& p) {
  if (f.size() <= 1) return {};
  FpPoly out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = (f[i] * BigInt(static_cast<long>(i))) % p;
  fp_trim(out);
  return out;
}

bool fp_has_root(const FpPoly& f, const BigInt& p, BigInt* root) {
  for (BigInt x = 0; x < p; ++x) {
    BigInt acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) {
      if (root) *root = x;
      return true;
    }
  }
  return false;
}

// Full factorization over F_p at desk scale (deg <= 5, p <= 1000 for the
// quadratic scan). Returns monic irreducible factors with multiplicities.
std::vector<std::pair<FpPoly, long>> fp_factor(FpPoly f, const BigInt& p) {
  std::vector<std::pair<FpPoly, long>> out;
  f = fp_monic(f, p);
  if (fp_deg(f) <= 0) return out;

  auto push = [&out](const FpPoly& q, long mult) {
    for (auto& e : out)
      if (e.first == q) {
        e.second += mult;
        return;
      }
    out.emplace_back(q, mult);
  };

  // Peel roots first.
  std::vector<std::pair<FpPoly, long>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, mult] = stack.back();
    stack.pop_back();
    long d = fp_deg(g);
    if (d == 0) continue;
    if (d == 1) {
      push(g, mult);
      continue;
    }
    FpPoly dg = fp_derivative(g, p);
    if (dg.empty()) {
      // g(z) = h(z^p) = h(z)^p over F_p.
      long pl = static_cast<long>(p.get_si());
      FpPoly h((d / pl) + 1, BigInt(0));
      for (long i = 0; i * pl <= d; ++i) h[i] = g[i * pl];
      stack.emplace_back(h, mult * pl);
      continue;
    }
    FpPoly gc = fp_gcd(g, dg, p);
    if (fp_deg(gc) > 0) {
      FpPoly q, r;
      fp_divmod(g, gc, p, q, r);
      stack.emplace_back(q, mult);   // squarefree part appears once more
      stack.emplace_back(gc, mult);  // repeated part continues
      continue;
    }
    BigInt root;
    if (fp_has_root(g, p, &root)) {
      FpPoly lin{(p - root) % p, BigInt(1)};
      FpPoly q, r;
      fp_divmod(g, lin, p, q, r);
      push(lin, mult);
      stack.emplace_back(q, mult);
      continue;
    }
    if (d <= 3) {
      push(g, mult);  // no roots: degree 2 or 3 is irreducible
      continue;
    }
    if (p > 1000)
      fail(ErrorKind::BudgetExceeded, "modp-factor-budget",
           "quadratic divisor scan above desk prime bound");
    bool split = false;
    for (BigInt b = 0; b < p && !split; ++b)
      for (BigInt c = 0; c < p && !split; ++c) {
        FpPoly quad{c, b, BigInt(1)};
        FpPoly q, r;
        fp_divmod(g, quad, p, q, r);
        if (r.empty()) {
          stack.emplace_back(quad, mult);
          stack.emplace_back(q, mult);
          split = true;
        }
      }
    if (split) continue;
    if (d <= 5) {
      push(g, mult);  // no roots, no quadratic divisors: deg 4/5 irreducible
      continue;
    }
    fail(ErrorKind::BudgetExceeded, "modp-factor-degree",
         "mod-p factorization implemented for degree <= 5");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (size_t i = a.first.size(); i-- > 0;)
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting of a coprime mod-p split of a monic integral polynomial.
// ---------------------------------------------------------------------------

// f monic with p-integral rational coefficients; gbar, hbar monic coprime
// mod p with gbar*hbar = f mod p. Returns monic integer-coefficient lifts
// mod p^k with f = g*h (mod p^k).
void hensel_lift_pair(const std::vector<Rational>& f, const FpPoly& gbar, const FpPoly& hbar,
                      const BigInt& p, long k, std::vector<BigInt>& g_out,
                      std::vector<BigInt>& h_out) {
  BigInt pk = pow_int(p, static_cast<unsigned long>(k));
  std::vector<BigInt> fk(f.size());
  for (size_t i = 0; i < f.size(); ++i) fk[i] = rational_mod_pk(f[i], p, k);

  FpPoly u, v;  // u*gbar + v*hbar = 1 mod p
  fp_bezout(gbar, hbar, p, u, v);

  std::vector<BigInt> g(gbar.begin(), gbar.end()), h(hbar.begin(), hbar.end());
  BigInt pj(1);
  long dg = fp_deg(gbar);
  for (long j = 1; j < k; ++j) {
    pj *= p;
    BigInt pj1 = pj * p;
    // d = (f - g*h) / p^j mod p
    std::vector<BigInt> prod(g.size() + h.size() - 1, BigInt(0));
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = 0; b < h.size(); ++b) prod[a + b] = (prod[a + b] + g[a] * h[b]) % pj1;
    FpPoly d(std::max(fk.size(), prod.size()), BigInt(0));
    for (size_t i = 0; i < d.size(); ++i) {
      BigInt fi = i < fk.size() ? fk[i] % pj1 : BigInt(0);
      BigInt pi = i < prod.size() ? prod[i] : BigInt(0);
      BigInt diff = (fi - pi) % pj1;
      if (diff < 0) diff += pj1;
      d[i] = (diff / pj) % p;
    }
    fp_trim(d);
    if (d.empty()) continue;
    // Solve a*h + b*g = d mod p with deg a < deg g.
    FpPoly dv = fp_mul(d, v, p);
    FpPoly q, a;
    fp_divmod(dv, gbar, p, q, a);  // a = d*v mod gbar
    // b = (d - a*hbar)/gbar + d*u  computed as  b = d*u + q*hbar
    FpPoly b = fp_mul(d, u, p);
    FpPoly qh = fp_mul(q, hbar, p);
    if (b.size() < qh.size()) b.resize(qh.size(), BigInt(0));
    for (size_t i = 0; i < qh.size(); ++i) b[i] = (b[i] + qh[i]) % p;
    fp_trim(b);
    // Update g += p^j a, h += p^j b.
    if (g.size() < a.size()) g.resize(a.size(), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) g[i] = (g[i] + pj * a[i]) % pj1;
    if (h.size() < b.size()) h.resize(b.size(), BigInt(0));
    for (size_t i = 0; i < b.size(); ++i) h[i] = (h[i] + pj * b[i]) % pj1;
    for (auto& c : g) if (c < 0) c += pj1;
    for (auto& c : h) if (c < 0) c += pj1;
  }
  (void)dg;
  g_out = std::move(g);
  h_out = std::move(h);
}

}  // namespace

// ---------------------------------------------------------------------------
// Weighted two-factor split (shared by Weierstrass preparation and the
// polygon slope splitting below).
// ---------------------------------------------------------------------------

namespace detail {

Valuation vector_weight(const std::vector<Rational>& f, const BigInt& p, const Rational& v) {
  Valuation w = Valuation::infinity();
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    Valuation wi = vp_rational(f[i], p) + Valuation(v * Rational(static_cast<long>(i)));
    w = min(w, wi);
  }
  return w;
}

WeightedSplit weighted_split(const std::vector<Rational>& f, const BigInt& p, const Rational& v,
                             long n_inside, const Rational& target_weight) {
  std::vector<Rational> fv(f);
  rp_trim(fv);
  const long T = static_cast<long>(fv.size()) - 1;
  if (n_inside < 0 || n_inside > T)
    fail(ErrorKind::Precondition, "split-index", "factor degree outside coefficient range");

  // Dominance check: weight minimum attained at n_inside and nowhere later.
  std::vector<Valuation> w(fv.size());
  for (size_t i = 0; i < fv.size(); ++i)
    w[i] = fv[i] == 0 ? Valuation::infinity()
                      : vp_rational(fv[i], p) + Valuation(v * Rational(static_cast<long>(i)));
  Valuation mu = Valuation::infinity();
  for (const auto& wi : w) mu = min(mu, wi);
  if (w[n_inside] != mu)
    fail(ErrorKind::Precondition, "split-dominance", "weight minimum not attained at the split index");
  Rational gap(-1);
  for (long i = n_inside + 1; i <= T; ++i) {
    if (w[i].is_infinity()) continue;
    Rational g = w[i].finite() - mu.finite();
    if (g <= 0)
      fail(ErrorKind::Precondition, "split-dominance", "weight minimum re-attained beyond the split index");
    if (gap < 0 || g < gap) gap = g;
  }
  if (gap < 0) gap = 1;  // nothing beyond N: polynomial part is exact

  // Coefficient-size control: congruences mod p^red perturb weights by at
  // least red + T*min(v,0), which must stay above the target.
  Rational excess = v < 0 ? Rational(-v * T) : Rational(0);
  Rational red_q = target_weight + excess + 4;
  long red = static_cast<long>(mpz_get_si(floor_rational(red_q).get_mpz_t())) + 1;
  auto reduce = [&](std::vector<Rational>& a) {
    for (auto& x : a) x = canonical_mod(x, p, red);
  };

  WeightedSplit result;
  result.weight_gap = gap;

  // Degenerate ends: nothing to split.
  if (n_inside == 0) {
    result.g = {Rational(1)};
    result.h = fv;
    result.achieved_weight = red_q;
    return result;
  }

  // Initial pair from the polygon prefix: g0 = monic-ized inside prefix,
  // h0 = f div g0. Newton lifting with exact rational Bezout operators keeps
  // both factors polynomial, so the residual f - g*h is exact.
  RatPoly g(fv.begin(), fv.begin() + n_inside + 1);
  for (auto& x : g) x /= g[n_inside];
  RatPoly h, rem0;
  rp_divmod(fv, g, h, rem0);
  reduce(g);
  reduce(h);

  Valuation best = Valuation(make_rational(-1, 1)) ;
  int stall = 0;
  for (int iter = 0; iter < 200; ++iter) {
    RatPoly r = rp_sub(fv, rp_mul(g, h));
    Valuation wr = vector_weight(r, p, v);
    if (wr >= Valuation(target_weight)) {
      g.resize(n_inside + 1, Rational(0));
      h.resize(T - n_inside + 1, Rational(0));
      result.g = std::move(g);
      result.h = std::move(h);
      result.achieved_weight = wr.is_infinity() ? red_q : wr.finite();
      result.iterations = iter;
      return result;
    }
    if (iter == 0 || wr > best) {
      best = wr;
      stall = 0;
    } else if (++stall >= 3) {
      fail(ErrorKind::InsufficientPrecision, "precision-exhausted",
           "weighted split stalled at residual weight " + best.str() + " (target " +
               to_string(target_weight) + ")");
    }
    // Bezout over Q for the current pair: a*g + b*h = 1.
    RatPoly r0 = g, r1 = h, a0{Rational(1)}, a1{}, b0{}, b1{Rational(1)};
    while (rp_degree(r1) >= 0) {
      RatPoly q, rr;
      rp_divmod(r0, r1, q, rr);
      RatPoly a2 = rp_sub(a0, rp_mul(q, a1));
      RatPoly b2 = rp_sub(b0, rp_mul(q, b1));
      r0 = std::move(r1); r1 = std::move(rr);
      a0 = std::move(a1); a1 = std::move(a2);
      b0 = std::move(b1); b1 = std::move(b2);
    }
    if (rp_degree(r0) != 0)
      fail(ErrorKind::InsufficientPrecision, "precision-exhausted",
           "split factors lost coprimality during lifting");
    RatPoly a = rp_scale(a0, 1 / r0[0]);
    RatPoly b = rp_scale(b0, 1 / r0[0]);
    // dg = (b*r mod g) keeps g monic; dh = a*r + ((b*r) div g) * h.
    RatPoly br = rp_mul(b, r);
    RatPoly qq, dg;
    rp_divmod(br, g, qq, dg);
    RatPoly dh = rp_add(rp_mul(a, r), rp_mul(qq, h));
    g = rp_add(g, dg);
    h = rp_add(h, dh);
    g.resize(n_inside + 1, Rational(0));
    // The update preserves deg dh <= deg h, but trim defensively.
    if (rp_degree(h) > T - n_inside) h.resize(T - n_inside + 1);
    reduce(g);
    reduce(h);
  }
  fail(ErrorKind::InsufficientPrecision, "precision-exhausted",
       "weighted split did not reach the target weight after 200 iterations");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Q_p factorization.
// ---------------------------------------------------------------------------

namespace {

struct WorkOut {
  std::vector<QpFactor> factors;
};

// f: monic, exact rational coefficients, constant term nonzero.
void factor_rec(std::vector<Rational> f, const BigInt& p, long kwork, int depth, WorkOut& out) {
  if (depth > 64)
    fail(ErrorKind::UnsupportedInput, "iterated-splitting",
         "recentering depth exceeded (wild ramification beyond the implemented splitting)");
  long d = static_cast<long>(f.size()) - 1;
  if (d <= 0) return;
  if (d == 1) {
    QpFactor fac;
    fac.coeffs = {canonical_mod(f[0], p, kwork), Rational(1)};
    fac.degree = 1;
    Valuation rv = vp_rational(f[0], p);
    fac.root_valuation = rv.is_infinity() ? Rational(0) : rv.finite();
    fac.ramification = 1;
    fac.residue_degree = 1;
    out.factors.push_back(std::move(fac));
    return;
  }

  std::vector<Valuation> vals(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    vals[i] = f[i] == 0 ? Valuation::infinity() : vp_rational(f[i], p);
  NewtonPolygon np = newton_polygon_from_valuations(vals);
  if (np.zero_root_multiplicity > 0)
    fail(ErrorKind::Internal, "zero-root", "zero root inside factor recursion");

  if (np.segments.size() > 1) {
    // Split off the highest-valuation root group at a radius strictly
    // between the first two root valuations.
    Rational lam1 = -np.segments[0].slope;
    Rational lam2 = -np.segments[1].slope;
    Rational v = (lam1 + lam2) / 2;
    long n_inside = np.segments[0].length;
    Rational target = Rational(kwork) + (v < 0 ? Rational(-v * d) : Rational(v * d)) + 4;
    auto split = detail::weighted_split(f, p, v, n_inside, target);
    // Monic-ize g; the exact cofactor is f / g with the remainder discarded.
    std::vector<Rational> g = split.g;
    Rational lead = g[n_inside];
    for (auto& x : g) x /= lead;
    RatPoly q, r;
    rp_divmod(f, g, q, r);
    q.resize(d - n_inside + 1, Rational(0));
    for (auto& x : g) x = canonical_mod(x, p, kwork + 4);
    for (auto& x : q) x = canonical_mod(x, p, kwork + 4);
    factor_rec(g, p, kwork, depth + 1, out);
    factor_rec(q, p, kwork, depth + 1, out);
    return;
  }

  // Single slope: all roots share valuation lam = u/vden.
  Rational lam = -np.segments[0].slope;
  BigInt u_num = lam.get_num(), v_den = lam.get_den();

  if (v_den > 1) {
    if (v_den == d) {
      QpFactor fac;
      fac.coeffs.resize(f.size());
      for (size_t i = 0; i < f.size(); ++i) fac.coeffs[i] = canonical_mod(f[i], p, kwork);
      fac.coeffs[d] = 1;
      fac.degree = d;
      fac.root_valuation = lam;
      fac.ramification = d;  // totally ramified: slope denominator = degree
      fac.residue_degree = 1;
      out.factors.push_back(std::move(fac));
      return;
    }
    fail(ErrorKind::UnsupportedInput, "fractional-slope-segment",
         "single fractional slope " + to_string(lam) + " of composite length " + std::to_string(d) +
             " requires iterated (residual-polynomial) splitting");
  }

  long lam_i = static_cast<long>(mpz_get_si(u_num.get_mpz_t()));
  if (lam_i != 0) {
    // Rescale z = p^lam * w to move the roots to valuation 0.
    std::vector<Rational> g(f.size());
    for (size_t i = 0; i < f.size(); ++i)
      g[i] = f[i] * p_power(p, lam_i * (static_cast<long>(i) - d));
    WorkOut sub;
    factor_rec(g, p, kwork + std::abs(lam_i) * d + 4, depth + 1, sub);
    for (auto& fac : sub.factors) {
      // Undo the substitution: G(w) -> p^(lam*degG) G(z / p^lam).
      long dg = fac.degree;
      for (long i = 0; i <= dg; ++i)
        fac.coeffs[i] = canonical_mod(fac.coeffs[i] * p_power(p, lam_i * (dg - i)), p,
                                      kwork + std::abs(lam_i) * dg + 4);
      fac.root_valuation += lam_i;
      out.factors.push_back(std::move(fac));
    }
    return;
  }

  // Unit-root case: reduce mod p and factor.
  FpPoly fbar(f.size());
  for (size_t i = 0; i < f.size(); ++i) fbar[i] = rational_mod_pk(f[i], p, 1);
  fp_trim(fbar);
  auto parts = fp_factor(fbar, p);
  if (parts.empty()) fail(ErrorKind::Internal, "modp-empty", "unit part with empty factorization");

  if (parts.size() == 1 && parts[0].second == 1) {
    // Irreducible mod p: unramified irreducible over Q_p.
    QpFactor fac;
    fac.coeffs.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) fac.coeffs[i] = canonical_mod(f[i], p, kwork);
    fac.coeffs[d] = 1;
    fac.degree = d;
    fac.root_valuation = 0;
    fac.ramification = 1;
    fac.residue_degree = d;
    out.factors.push_back(std::move(fac));
    return;
  }

  if (parts.size() > 1) {
    // Coprime split: lift the first part against the rest.
    FpPoly gbar = parts[0].first;
    for (long m = 1; m < parts[0].second; ++m) gbar = fp_mul(gbar, parts[0].first, p);
    FpPoly hbar{BigInt(1)};
    for (size_t i = 1; i < parts.size(); ++i)
      for (long m = 0; m < parts[i].second; ++m) hbar = fp_mul(hbar, parts[i].first, p);
    std::vector<BigInt> g, h;
    hensel_lift_pair(f, gbar, hbar, p, kwork + 4, g, h);
    std::vector<Rational> gq(g.begin(), g.end()), hq(h.begin(), h.end());
    factor_rec(gq, p, kwork, depth + 1, out);
    factor_rec(hq, p, kwork, depth + 1, out);
    return;
  }

  // Single repeated factor q^m.
  const FpPoly& q = parts[0].first;
  if (fp_deg(q) >= 2)
    fail(ErrorKind::UnsupportedInput, "repeated-residual-factor",
         "repeated non-linear residual factor mod p needs an unramified base extension "
         "(iterated splitting)");
  // q = z - a: recenter at a and recurse; the shifted polygon must move.
  BigInt a = (p - q[0]) % p;
  std::vector<Rational> shifted(f.size(), Rational(0));
  // f(z + a) via repeated Horner in (z + a).
  for (size_t i = f.size(); i-- > 0;) {
    // shifted = shifted * (z + a) + f[i]
    std::vector<Rational> next(f.size(), Rational(0));
    for (size_t j = 0; j + 1 < f.size(); ++j) {
      if (shifted[j] == 0) continue;
      next[j + 1] += shifted[j];
      next[j] += shifted[j] * Rational(a);
    }
    next[0] += f[i];
    shifted = std::move(next);
  }
  WorkOut sub;
  factor_rec(shifted, p, kwork + 8, depth + 1, sub);
  for (auto& fac : sub.factors) {
    // Undo the shift: G(z) -> G(z - a)... factors of f(z) are G(z - a) with
    // G a factor of f(z + a); expand exactly.
    std::vector<Rational> gshift(fac.coeffs.size(), Rational(0));
    for (size_t i = fac.coeffs.size(); i-- > 0;) {
      std::vector<Rational> next(fac.coeffs.size(), Rational(0));
      for (size_t j = 0; j + 1 < fac.coeffs.size(); ++j) {
        if (gshift[j] == 0) continue;
        next[j + 1] += gshift[j];
        next[j] -= gshift[j] * Rational(a);
      }
      next[0] += fac.coeffs[i];
      gshift = std::move(next);
    }
    for (auto& x : gshift) x = canonical_mod(x, p, kwork + 4);
    fac.coeffs = std::move(gshift);
    fac.root_valuation = 0;  // roots are a + (positive-valuation), still units
    out.factors.push_back(std::move(fac));
  }
}

bool factor_less(const QpFactor& a, const QpFactor& b) {
  if (a.root_valuation != b.root_valuation) return a.root_valuation > b.root_valuation;
  if (a.degree != b.degree) return a.degree < b.degree;
  for (size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return false;
}

}  // namespace

QpFactorization qp_factorization(const IntPolynomial& poly, const BigInt& p, long precision) {
  require_prime(p);
  if (precision < 1) fail(ErrorKind::Precondition, "precision", "precision must be >= 1");
  IntPolynomial P = poly.primitive_normalized();
  if (P.degree() < 1) fail(ErrorKind::Precondition, "constant-polynomial", "cannot factor a constant");

  // Separability over Q (irreducible inputs are separable; internal users may
  // pass products, which must still be squarefree).
  {
    RatPoly a = rp_from(P), da = rp_from(P.derivative());
    if (rp_degree(rp_gcd(a, da)) > 0)
      fail(ErrorKind::Precondition, "not-separable", "repeated roots over Q");
  }

  QpFactorization result{{}, PAdicScalar::from_rational(p, Rational(P.leading())), precision};

  // A zero constant term means z divides P; P primitive irreducible => P = z,
  // but tolerate products with a single z factor.
  std::vector<Rational> f = rp_from(P);
  long strip = 0;
  while (f.size() > 1 && f[0] == 0) {
    f.erase(f.begin());
    ++strip;
  }
  if (strip > 1) fail(ErrorKind::Precondition, "not-separable", "z^2 divides the input");
  if (strip == 1) {
    QpFactor zf;
    zf.coeffs = {Rational(0), Rational(1)};
    zf.degree = 1;
    zf.root_valuation = 0;  // by convention; the zero root is flagged elsewhere
    zf.ramification = 1;
    zf.residue_degree = 1;
    result.factors.push_back(std::move(zf));
  }

  if (static_cast<long>(f.size()) - 1 >= 1) {
    // Monic-ize over Q and recurse.
    Rational lead = f.back();
    for (auto& x : f) x /= lead;
    for (long slack = 8; slack <= 64; slack *= 2) {
      WorkOut work;
      factor_rec(f, p, precision + slack, 0, work);
      // Validate: leading * product of factors == P mod p^precision.
      RatPoly prod{Rational(P.leading())};
      for (const auto& fac : work.factors) prod = rp_mul(prod, fac.coeffs);
      if (strip == 1) prod = rp_mul(prod, RatPoly{Rational(0), Rational(1)});
      RatPoly diff = rp_sub(prod, rp_from(P));
      bool ok = true;
      for (const auto& x : diff)
        if (x != 0 && vp_rational(x, p) < Valuation(Rational(precision))) ok = false;
      if (ok) {
        // Reduce to the requested precision only when every coefficient is
        // p-integral; negative-valuation coefficients (p | lc inputs) keep
        // their higher-precision representatives so the product congruence
        // stays valid.
        bool integral = true;
        for (const auto& fac : work.factors)
          for (const auto& x : fac.coeffs)
            if (x != 0 && vp_rational(x, p) < Valuation(Rational(0))) integral = false;
        if (integral)
          for (auto& fac : work.factors)
            for (auto& x : fac.coeffs) x = canonical_mod(x, p, precision);
        for (auto& fac : work.factors)
          result.factors.push_back(std::move(fac));
        std::sort(result.factors.begin(), result.factors.end(), factor_less);
        return result;
      }
    }
    fail(ErrorKind::Internal, "factor-validation",
         "factor product failed the congruence check at every slack level");
  }

  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

bool is_irreducible_over_qp(const IntPolynomial& poly, const BigInt& p, long precision) {
  return qp_factorization(poly, p, precision).factors.size() == 1;
}

}  // namespace exset
