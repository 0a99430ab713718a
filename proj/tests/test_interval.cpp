#include <doctest.h>

#include "spectra/interval.hpp"

using namespace spectra;

TEST_CASE("directed rounding encloses exact rationals") {
  Rational third(1, 3);
  RealInterval iv = RealInterval::from_rational(third, 64);
  CHECK(iv.contains(third));
  CHECK(iv.lo_q() < third);
  CHECK(iv.hi_q() > third);
  CHECK(iv.width_q() > 0);
  CHECK(iv.width_q() < Rational(1, Integer(1) << 60));
}

TEST_CASE("arithmetic keeps containment") {
  RealInterval a = RealInterval::from_rational(Rational(1, 3), 64);
  RealInterval b = RealInterval::from_rational(Rational(-2, 7), 64);
  CHECK(RealInterval::add(a, b, 64).contains(Rational(1, 3) + Rational(-2, 7)));
  CHECK(RealInterval::sub(a, b, 64).contains(Rational(1, 3) - Rational(-2, 7)));
  CHECK(RealInterval::mul(a, b, 64).contains(Rational(1, 3) * Rational(-2, 7)));
  CHECK(RealInterval::div(a, b, 64).contains(Rational(1, 3) / Rational(-2, 7)));
  CHECK(a.abs().contains(Rational(1, 3)));
  CHECK(b.abs().contains(Rational(2, 7)));
  CHECK(RealInterval::mul_q(a, Rational(21), 64).contains(Rational(7)));
}

TEST_CASE("signs and comparisons") {
  CHECK(RealInterval::from_long(5).sign() == 1);
  CHECK(RealInterval::from_long(-5).sign() == -1);
  CHECK(RealInterval::from_rationals(Rational(-1), Rational(1), 64).sign() == 0);
  RealInterval t = RealInterval::from_rationals(Rational(1), Rational(2), 64);
  CHECK(t.contains(Rational(3, 2)));
  CHECK_FALSE(t.contains(Rational(3)));
}

TEST_CASE("pow and log") {
  RealInterval two = RealInterval::from_long(2, 128);
  RealInterval eight = two.pow_ui(3, 128);
  CHECK(eight.contains(Rational(8)));
  RealInterval lg = eight.log(128);
  // log 8 = 2.0794415416798359282...
  CHECK(lg.lo_q() < parse_rational("2.0794415416798360"));
  CHECK(lg.hi_q() > parse_rational("2.0794415416798359"));
  CHECK(lg.width_q() < Rational(1, 1000000));
  RealInterval rt = two.sqrt(128);
  CHECK(RealInterval::mul(rt, rt, 128).contains(Rational(2)));
}

TEST_CASE("dyadic serialization round-trips exactly") {
  RealInterval a = RealInterval::from_rational(Rational(-7, 9), 96);
  RealInterval back = RealInterval::from_dyadic_strings(a.lo_str(), a.hi_str(), a.precision());
  CHECK(back.lo_q() == a.lo_q());
  CHECK(back.hi_q() == a.hi_q());
  CHECK(back.lo_str() == a.lo_str());
  CHECK(back.hi_str() == a.hi_str());
  CHECK(RealInterval::from_long(0).lo_str() == "0");
}

TEST_CASE("intersect and hull") {
  RealInterval a = RealInterval::from_rationals(Rational(0), Rational(2), 64);
  RealInterval b = RealInterval::from_rationals(Rational(1), Rational(3), 64);
  RealInterval i = RealInterval::intersect(a, b);
  CHECK(i.lo_q() == Rational(1));
  CHECK(i.hi_q() == Rational(2));
  RealInterval h = RealInterval::hull(a, b);
  CHECK(h.lo_q() == Rational(0));
  CHECK(h.hi_q() == Rational(3));
  CHECK(a.intersects(b));
  CHECK(h.contains(i));
}

TEST_CASE("decimal display is midpoint-based and deterministic") {
  RealInterval x = RealInterval::from_rational(Rational(1, 2), 64);
  CHECK(x.decimal(6) == "0.5");
  CHECK(x.decimal(6) == x.decimal(6));
}
