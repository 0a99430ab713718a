#pragma once

#include <mpfr.h>

#include <string>

#include "spectra/rational.hpp"

namespace spectra {

// Closed dyadic interval [lo, hi] with directed outward rounding. Endpoints
// are MPFR numbers (integer mantissa times a power of two), so every endpoint
// is an exact rational and serialization is lossless.
class RealInterval {
 public:
  RealInterval();
  explicit RealInterval(mpfr_prec_t prec);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval from_rational(const Rational& q, mpfr_prec_t prec);
  static RealInterval from_rationals(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  static RealInterval from_long(long v, mpfr_prec_t prec = 64);
  // Parses the canonical dyadic form produced by lo_str()/hi_str().
  static RealInterval from_dyadic_strings(const std::string& lo, const std::string& hi,
                                          mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  // -1 if hi < 0, +1 if lo > 0, 0 if the interval straddles or touches zero.
  int sign() const;
  bool contains_zero() const { return sign() == 0; }
  bool contains(const Rational& q) const;
  bool contains(const RealInterval& inner) const;
  bool intersects(const RealInterval& o) const;
  bool is_point() const;

  Rational lo_q() const;
  Rational hi_q() const;
  Rational width_q() const;
  Rational mid_q() const;
  double mid_double() const;

  // Canonical dyadic serialization: "0" or "<odd mantissa>*2^<exp>".
  std::string lo_str() const;
  std::string hi_str() const;
  // Midpoint rendered with the given number of significant decimal digits.
  std::string decimal(int digits = 12) const;

  RealInterval neg() const;
  RealInterval abs() const;

  static RealInterval add(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec);
  static RealInterval sub(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec);
  static RealInterval mul(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec);
  static RealInterval div(const RealInterval& a, const RealInterval& b, mpfr_prec_t prec);
  static RealInterval mul_q(const RealInterval& a, const Rational& q, mpfr_prec_t prec);
  static RealInterval add_q(const RealInterval& a, const Rational& q, mpfr_prec_t prec);
  static RealInterval intersect(const RealInterval& a, const RealInterval& b);
  static RealInterval hull(const RealInterval& a, const RealInterval& b);

  // Requires lo > 0.
  RealInterval log(mpfr_prec_t prec) const;
  // Requires lo >= 0.
  RealInterval sqrt(mpfr_prec_t prec) const;
  RealInterval pow_ui(unsigned long e, mpfr_prec_t prec) const;

  // Raw endpoint access for code that works with mpfr directly.
  const __mpfr_struct* lo_raw() const { return lo_; }
  const __mpfr_struct* hi_raw() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }
  void set_precision_round_outward(mpfr_prec_t prec);

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
  void assert_valid() const;
};

}  // namespace spectra
