#include "spectra/interval.hpp"

#include <stdexcept>

namespace spectra {

RealInterval::RealInterval() : RealInterval(64) {}

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, o.prec_);
  mpfr_init2(hi_, o.prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    prec_ = o.prec_;
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  prec_ = o.prec_;
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void RealInterval::assert_valid() const {
  if (mpfr_cmp(lo_, hi_) > 0) throw std::logic_error("interval endpoints crossed");
}

RealInterval RealInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_rationals(const Rational& lo, const Rational& hi,
                                          mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  RealInterval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

int RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool RealInterval::intersects(const RealInterval& o) const {
  return !(mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0);
}

bool RealInterval::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

static Rational mpfr_to_q(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw std::domain_error("non-finite interval endpoint");
  Rational out;
  mpfr_get_q(out.get_mpq_t(), x);
  return out;
}

Rational RealInterval::lo_q() const { return mpfr_to_q(lo_); }
Rational RealInterval::hi_q() const { return mpfr_to_q(hi_); }
Rational RealInterval::width_q() const { return hi_q() - lo_q(); }
Rational RealInterval::mid_q() const { return (lo_q() + hi_q()) / 2; }

double RealInterval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

static std::string dyadic_str(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return "0";
  if (!mpfr_number_p(x)) throw std::domain_error("non-finite interval endpoint");
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  // canonicalize: odd mantissa
  unsigned long tz = mpz_scan1(mant.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant.get_mpz_t(), mant.get_mpz_t(), tz);
    e += static_cast<mpfr_exp_t>(tz);
  }
  return mant.get_str() + "*2^" + std::to_string(static_cast<long>(e));
}

std::string RealInterval::lo_str() const { return dyadic_str(lo_); }
std::string RealInterval::hi_str() const { return dyadic_str(hi_); }

static void set_from_dyadic(mpfr_ptr x, const std::string& s, mpfr_rnd_t rnd) {
  if (s == "0") {
    mpfr_set_zero(x, 1);
    return;
  }
  auto pos = s.find("*2^");
  if (pos == std::string::npos) throw std::invalid_argument("malformed dyadic literal: " + s);
  Integer mant(s.substr(0, pos));
  long e = std::stol(s.substr(pos + 3));
  int inexact = mpfr_set_z_2exp(x, mant.get_mpz_t(), e, rnd);
  if (inexact != 0) throw std::invalid_argument("dyadic literal exceeds stated precision: " + s);
}

RealInterval RealInterval::from_dyadic_strings(const std::string& lo, const std::string& hi,
                                               mpfr_prec_t prec) {
  RealInterval r(prec);
  set_from_dyadic(r.lo_, lo, MPFR_RNDD);
  set_from_dyadic(r.hi_, hi, MPFR_RNDU);
  r.assert_valid();
  return r;
}

std::string RealInterval::decimal(int digits) const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_) + 8);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, m);
  mpfr_clear(m);
  return std::string(buf);
}

RealInterval RealInterval::neg() const {
  RealInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::abs() const {
  if (sign() >= 0 && mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return neg();
  RealInterval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_t na;
  mpfr_init2(na, prec_);
  mpfr_neg(na, lo_, MPFR_RNDU);
  if (mpfr_cmp(na, hi_) > 0)
    mpfr_set(r.hi_, na, MPFR_RNDU);
  else
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  mpfr_clear(na);
  return r;
}

RealInterval RealInterval::add(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sub(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::mul(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::div(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec) {
  if (b.contains_zero()) throw std::domain_error("interval division by interval containing 0");
  RealInterval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::mul_q(const RealInterval& a, const Rational& q, mpfr_prec_t prec) {
  RealInterval r(prec);
  if (q >= 0) {
    mpfr_mul_q(r.lo_, a.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, a.hi_, q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_, a.hi_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, a.lo_, q.get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

RealInterval RealInterval::add_q(const RealInterval& a, const Rational& q, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_add_q(r.lo_, a.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(r.hi_, a.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::intersect(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_set(r.lo_, mpfr_cmp(a.lo_, b.lo_) >= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(a.hi_, b.hi_) <= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::domain_error("empty interval intersection");
  return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_set(r.lo_, mpfr_cmp(a.lo_, b.lo_) <= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(a.hi_, b.hi_) >= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::log(mpfr_prec_t prec) const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of interval not strictly positive");
  RealInterval r(prec);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sqrt(mpfr_prec_t prec) const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of interval with negative lower bound");
  RealInterval r(prec);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pow_ui(unsigned long e, mpfr_prec_t prec) const {
  RealInterval acc = from_long(1, prec);
  RealInterval base = *this;
  while (e > 0) {
    if (e & 1UL) acc = mul(acc, base, prec);
    base = mul(base, base, prec);
    e >>= 1UL;
  }
  return acc;
}

void RealInterval::set_precision_round_outward(mpfr_prec_t prec) {
  mpfr_prec_round(lo_, prec, MPFR_RNDD);
  mpfr_prec_round(hi_, prec, MPFR_RNDU);
  prec_ = prec;
}

}  // namespace spectra
