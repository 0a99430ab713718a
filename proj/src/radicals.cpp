#include "spectra/radicals.hpp"

#include <algorithm>
#include <stdexcept>

#include "spectra/lll.hpp"

namespace spectra {

namespace {

void require_positive(const NFElement& r) {
  if (!r.field()) throw std::invalid_argument("uninitialized element");
  if (r.is_zero() || exact_sign(r) <= 0)
    throw std::invalid_argument("operand must embed to a positive real");
}

bool norm_value_passes(const Rational& nrm, long n) {
  return rational_nth_root(rational_abs(nrm), static_cast<unsigned long>(n)).has_value();
}

// LLL-based reconstruction of a candidate n-th root of s in its field, from a
// high-precision real approximation. Positives are verified exactly by the
// caller; this is only a candidate generator.
std::vector<NFElement> reconstruct_candidates(const NFElement& s, long n, mpfr_prec_t prec) {
  const auto& K = s.field();
  long d = K->degree();
  RealInterval sv = embed_real(s, prec);
  if (sv.sign() <= 0) return {};
  RealInterval y(prec);
  mpfr_rootn_ui(y.lo_mut(), sv.lo_raw(), static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_rootn_ui(y.hi_mut(), sv.hi_raw(), static_cast<unsigned long>(n), MPFR_RNDU);

  auto [tlo, thi] = K->theta_bracket(prec);
  RealInterval theta = RealInterval::from_rationals(tlo, thi, prec + 32);

  // relation lattice over (y, 1, theta, ..., theta^(d-1))
  std::vector<RealInterval> xs;
  xs.push_back(y);
  RealInterval tp = RealInterval::from_long(1, prec);
  xs.push_back(tp);
  for (long j = 1; j < d; ++j) {
    tp = RealInterval::mul(tp, theta, prec + 32);
    xs.push_back(tp);
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(prec > 24 ? prec - 16 : 8));
  size_t rows = xs.size();
  std::vector<std::vector<Integer>> basis(rows, std::vector<Integer>(rows + 1, Integer(0)));
  for (size_t i = 0; i < rows; ++i) {
    basis[i][i] = 1;
    Rational mid = xs[i].mid_q() * Rational(scale);
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), mid.get_num().get_mpz_t(), mid.get_den().get_mpz_t());
    basis[i][rows] = rounded;
  }
  lll_reduce(basis);

  std::vector<NFElement> out;
  for (const auto& row : basis) {
    const Integer& a0 = row[0];
    if (a0 == 0) continue;
    // beta = -(a_1 + a_2 theta + ... + a_d theta^(d-1)) / a_0
    std::vector<Rational> coords(static_cast<size_t>(d), Rational(0));
    bool too_tall = false;
    for (long j = 0; j < d; ++j) {
      Rational c(-row[static_cast<size_t>(j) + 1], a0);
      c.canonicalize();
      if (mpz_sizeinbase(c.get_num().get_mpz_t(), 2) > 220 ||
          mpz_sizeinbase(c.get_den().get_mpz_t(), 2) > 220)
        too_tall = true;
      coords[static_cast<size_t>(j)] = c;
    }
    if (too_tall) continue;
    out.push_back(K->element(std::move(coords)));
    if (out.size() >= 4) break;
  }
  return out;
}

}  // namespace

bool norm_filter(const NFElement& r, long n) {
  if (r.is_zero()) throw std::invalid_argument("norm filter of zero");
  if (n < 1) throw std::invalid_argument("norm filter requires n >= 1");
  return norm_value_passes(nf_norm(r), n);
}

MembershipResult nf_membership_power(const NFElement& r, long m, long n,
                                     mpfr_prec_t precision_cap) {
  if (n < 1) throw std::invalid_argument("membership requires n >= 1");
  require_positive(r);
  NFElement s = r.pow(m);
  if (n == 1) return {s, true};

  Rational ns = nf_norm(s);
  if (n % 2 == 0 && ns < 0) return {std::nullopt, true};
  if (!norm_value_passes(ns, n)) return {std::nullopt, true};

  const auto& K = s.field();
  if (K->degree() == 1 || s.is_rational()) {
    // exact rational n-th root; for elements rational inside a larger field a
    // failure here is not conclusive (the root may be irrational in K)
    auto root = rational_nth_root(s.rational_value(), static_cast<unsigned long>(n));
    if (root) return {K->from_rational(*root), true};
    if (K->degree() == 1) return {std::nullopt, true};
  }

  for (mpfr_prec_t prec = 128; prec <= precision_cap; prec *= 2) {
    for (auto& cand : reconstruct_candidates(s, n, prec)) {
      NFElement beta = cand;
      if (beta.is_zero()) continue;
      if (exact_sign(beta) < 0) {
        if (n % 2 != 0) continue;
        beta = -beta;
      }
      if (beta.pow(n) == s) return {beta, true};
    }
  }

  if (n == 2) {
    // complete fallback for square roots
    auto w = nf_sqrt(s);
    if (w) return {*w, true};
    return {std::nullopt, true};
  }
  return {std::nullopt, false};
}

WeilHeight weil_height(const NFElement& a, mpfr_prec_t precision) {
  if (!a.field()) throw std::invalid_argument("uninitialized element");
  if (a.is_zero()) throw std::invalid_argument("height of zero");

  // In a field with a real embedding the only roots of unity are +-1.
  if (a.is_one() || (-a).is_one())
    return {RealInterval::from_long(0, 64), 1};

  mpfr_prec_t goal = std::max<mpfr_prec_t>(precision, 16);

  if (a.is_rational()) {
    Rational v = rational_abs(a.rational_value());
    Integer num_abs = abs(v.get_num());
    Integer top = num_abs > v.get_den() ? num_abs : Integer(v.get_den());
    RealInterval t(goal + 16);
    mpfr_set_z(t.lo_mut(), top.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(t.hi_mut(), top.get_mpz_t(), MPFR_RNDU);
    RealInterval h = t.log(goal + 16);
    return {h, 1};
  }

  QPolynomial mp = nf_minpoly(a);
  long d = mp.degree();
  // primitive integer polynomial (Mahler measure includes its leading coeff)
  Integer den(1);
  for (const auto& c : mp.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> P(mp.coeffs().size());
  for (size_t i = 0; i < P.size(); ++i) P[i] = Rational(mp.coeffs()[i] * Rational(den)).get_num();
  Integer content(0);
  for (const auto& c : P) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : P) c /= content;

  // log M(P) by Graeffe iteration with interval coefficients:
  // each step squares the roots; 2^-k log M(P_k) recovers log M(P) with an
  // error bounded by 2^-k * log sqrt(binom(2d, d)).
  long iters = static_cast<long>(std::min<mpfr_prec_t>(goal, 192)) + 8;
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(2 * iters + goal + 64);

  std::vector<RealInterval> F(P.size(), RealInterval(wp));
  for (size_t i = 0; i < P.size(); ++i) {
    mpfr_set_z(F[i].lo_mut(), P[i].get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(F[i].hi_mut(), P[i].get_mpz_t(), MPFR_RNDU);
  }
  RealInterval log2 = RealInterval::from_long(2, wp).log(wp);
  RealInterval shift_acc = RealInterval::from_long(0, wp);
  Rational half_pow(1);
  for (long j = 1; j <= iters; ++j) {
    half_pow /= 2;
    // G(y) with G(x^2) = (-1)^d F(x) F(-x); G's roots are the squares
    size_t n = F.size();
    std::vector<RealInterval> prod(2 * n - 1, RealInterval(wp));
    for (size_t i1 = 0; i1 < n; ++i1)
      for (size_t i2 = 0; i2 < n; ++i2) {
        RealInterval term = RealInterval::mul(F[i1], F[i2], wp);
        if (i2 % 2 == 1) term = term.neg();
        prod[i1 + i2] = RealInterval::add(prod[i1 + i2], term, wp);
      }
    std::vector<RealInterval> G(n, RealInterval(wp));
    bool flip = (static_cast<long>(n - 1) % 2) != 0;
    for (size_t i = 0; i < n; ++i) G[i] = flip ? prod[2 * i].neg() : prod[2 * i];
    // rescale by a power of two to keep exponents bounded
    long emax = -100000;
    for (const auto& g : G) {
      if (!mpfr_zero_p(g.lo_raw())) emax = std::max(emax, static_cast<long>(mpfr_get_exp(g.lo_raw())));
      if (!mpfr_zero_p(g.hi_raw())) emax = std::max(emax, static_cast<long>(mpfr_get_exp(g.hi_raw())));
    }
    if (emax > -100000 && emax != 0) {
      for (auto& g : G) {
        mpfr_mul_2si(g.lo_mut(), g.lo_raw(), -emax, MPFR_RNDD);
        mpfr_mul_2si(g.hi_mut(), g.hi_raw(), -emax, MPFR_RNDU);
      }
      shift_acc = RealInterval::add(
          shift_acc, RealInterval::mul_q(log2, Rational(emax) * half_pow, wp), wp);
    }
    F = std::move(G);
  }
  // |F|_2 brackets M(F_final): |F|_2 / sqrt(binom(2d,d)) <= M <= |F|_2
  RealInterval norm2 = RealInterval::from_long(0, wp);
  for (const auto& g : F) norm2 = RealInterval::add(norm2, RealInterval::mul(g, g, wp), wp);
  norm2 = norm2.sqrt(wp);
  RealInterval log_norm = norm2.log(wp);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * d),
               static_cast<unsigned long>(d));
  RealInterval lb(wp);
  mpfr_set_z(lb.lo_mut(), binom.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(lb.hi_mut(), binom.get_mpz_t(), MPFR_RNDU);
  RealInterval half_log_binom = RealInterval::mul_q(lb.log(wp), Rational(1, 2), wp);
  RealInterval log_m_final =
      RealInterval::hull(RealInterval::sub(log_norm, half_log_binom, wp), log_norm);
  RealInterval log_m =
      RealInterval::add(shift_acc, RealInterval::mul_q(log_m_final, half_pow, wp), wp);
  RealInterval h = RealInterval::mul_q(log_m, Rational(1, d), goal + 32);
  // heights are nonnegative; the norm lower bound can dip below zero
  if (h.contains_zero() || h.sign() < 0) {
    RealInterval zero = RealInterval::from_long(0, h.precision());
    RealInterval clamped(h.precision());
    mpfr_set_zero(clamped.lo_mut(), 1);
    mpfr_set(clamped.hi_mut(), h.hi_raw(), MPFR_RNDU);
    if (mpfr_sgn(clamped.hi_raw()) < 0) mpfr_set_zero(clamped.hi_mut(), 1);
    h = clamped;
  }
  return {h, d};
}

RootBoundCertificate root_bound(const NFElement& r, mpfr_prec_t precision) {
  require_positive(r);
  if (r.is_one()) throw std::invalid_argument("root bound requires r != 1");

  RootBoundCertificate cert;
  cert.r = r;
  cert.norm = nf_norm(r);

  std::vector<long> candidates;
  if (rational_abs(cert.norm) != 1) {
    cert.branch = RootBoundBranch::valuation;
    Integer g(0);
    for (const auto& [p, e] : rational_valuations(cert.norm)) {
      Integer ae(e < 0 ? -e : e);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ae.get_mpz_t());
    }
    cert.bound = g;
    if (g == 0) throw std::logic_error("valuation branch with unit norm");
    // valid exponents divide the bound
    for (Integer k(1); k * k <= g; ++k) {
      if (g % k != 0) continue;
      candidates.push_back(k.get_si());
      Integer other = g / k;
      if (other != k) candidates.push_back(other.get_si());
    }
    std::sort(candidates.begin(), candidates.end());
  } else {
    cert.branch = RootBoundBranch::unit_height;
    long D = r.field()->degree();
    if (D < 2)
      throw std::logic_error("unit-height branch unreachable over Q for r != 1");
    WeilHeight h = weil_height(r, precision);
    cert.height = h;
    // Voutier: a non-torsion algebraic number of degree <= D has
    // h > 2 / (D (log 3D)^3), so r^(1/n) in K forces n < h(r) D (log 3D)^3 / 2.
    mpfr_prec_t wp = 128;
    RealInterval threeD = RealInterval::from_long(3 * D, wp);
    RealInterval lg = threeD.log(wp);
    RealInterval cube = RealInterval::mul(RealInterval::mul(lg, lg, wp), lg, wp);
    Rational dz(D, 2);
    dz.canonicalize();
    RealInterval factor = RealInterval::mul_q(cube, dz, wp);
    RealInterval prod = RealInterval::mul(h.value, factor, wp);
    Rational upper = prod.hi_q();
    Integer B;
    mpz_fdiv_q(B.get_mpz_t(), upper.get_num().get_mpz_t(), upper.get_den().get_mpz_t());
    if (B < 1) B = 1;  // n = 1 is always admissible
    cert.bound = B;
    for (long nn = 1; nn <= B.get_si(); ++nn) candidates.push_back(nn);
  }

  mpfr_prec_t member_cap = std::max<mpfr_prec_t>(512, precision);
  for (long nn : candidates) {
    auto res = nf_membership_power(r, 1, nn, member_cap);
    if (res.witness)
      cert.exponents.emplace(nn, *res.witness);
    else if (!res.complete)
      cert.exponents_complete = false;
  }
  return cert;
}

RadicalDegreeResult radical_degree(const NFElement& r, long n) {
  require_positive(r);
  if (n < 1) throw std::invalid_argument("radical_degree requires n >= 1");
  RadicalDegreeResult out;
  for (long s = 1; s <= n; ++s) {
    auto res = nf_membership_power(r, s, n);
    if (res.witness) {
      out.t = s;
      return out;
    }
    if (!res.complete) out.complete = false;
  }
  throw std::logic_error("radical_degree: no witness found at s = n");
}

DenominatorBound denominator_bound(const NFElement& r, long t) {
  require_positive(r);
  if (r.is_one()) throw std::invalid_argument("denominator bound requires r != 1");
  if (t < 1) throw std::invalid_argument("denominator bound requires t >= 1");
  DenominatorBound out;
  out.t = t;
  Integer max_bound(0);
  bool complete = true;
  for (long s = 1; s <= t; ++s) {
    RootBoundCertificate cert = root_bound(r.pow(s));
    complete = complete && cert.exponents_complete;
    if (cert.bound > max_bound) max_bound = cert.bound;
    out.per_power.push_back(std::move(cert));
  }
  out.exponents_complete = complete;
  out.n0 = max_bound.get_si() + 1;
  return out;
}

}  // namespace spectra
