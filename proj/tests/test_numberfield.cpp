#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "spectra/numberfield.hpp"

using namespace spectra;

namespace {

FieldPtr sqrt_field(long n) {
  return NumberField::create_largest_root(QPolynomial({Rational(-n), Rational(0), Rational(1)}));
}

FieldPtr golden_field() {
  // x^2 - x - 1, theta = golden ratio
  return NumberField::create_largest_root(QPolynomial({Rational(-1), Rational(-1), Rational(1)}));
}

std::vector<FieldPtr> sample_fields() {
  return {NumberField::rationals(), sqrt_field(2), sqrt_field(5), golden_field(),
          NumberField::create_largest_root(QPolynomial({Rational(-2), Rational(0), Rational(0), Rational(1)}))};
}

NFElement random_element(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rational> c;
  for (long i = 0; i < f->degree(); ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    c.push_back(v);
  }
  return f->element(std::move(c));
}

}  // namespace

TEST_CASE("field construction validates its input") {
  CHECK_THROWS_AS(NumberField::create(QPolynomial({Rational(-1), Rational(0), Rational(1)}),
                                      Rational(-2), Rational(2)),
                  std::invalid_argument);  // reducible
  CHECK_THROWS_AS(NumberField::create(QPolynomial({Rational(-2), Rational(0), Rational(2)}),
                                      Rational(1), Rational(2)),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(NumberField::create(QPolynomial({Rational(-2), Rational(0), Rational(1)}),
                                      Rational(-2), Rational(2)),
                  std::invalid_argument);  // two roots inside
  FieldPtr k = NumberField::create(QPolynomial({Rational(-2), Rational(0), Rational(1)}),
                                   Rational(1), Rational(2));
  CHECK(k->degree() == 2);
}

TEST_CASE("arithmetic laws hold exactly on random elements") {
  std::mt19937 rng(7);
  for (const auto& f : sample_fields()) {
    for (int i = 0; i < 12; ++i) {
      NFElement a = random_element(f, rng);
      NFElement b = random_element(f, rng);
      NFElement c = random_element(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * nf_invert(a) == f->one());
    }
  }
}

TEST_CASE("inversion examples") {
  FieldPtr q = NumberField::rationals();
  CHECK(nf_invert(q->from_rational(2)) == q->from_rational(Rational(1, 2)));

  FieldPtr k = sqrt_field(2);
  NFElement theta = k->generator();
  CHECK(nf_invert(theta) == k->element({Rational(0), Rational(1, 2)}));
  // (1 + theta)(theta - 1) = theta^2 - 1 = 1, so 1/(1+theta) = theta - 1
  NFElement a = k->one() + theta;
  NFElement expected = k->element({Rational(-1), Rational(1)});
  CHECK(a * expected == k->one());
  CHECK(nf_invert(a) == expected);
  CHECK_THROWS_AS(nf_invert(k->zero()), std::domain_error);
}

TEST_CASE("minimal polynomials") {
  FieldPtr k5 = sqrt_field(5);
  CHECK(nf_minpoly(k5->from_rational(3)) == QPolynomial({Rational(-3), Rational(1)}));
  CHECK(nf_minpoly(k5->generator()) == QPolynomial({Rational(-5), Rational(0), Rational(1)}));
  // (1 + theta)/2 is the golden ratio: alpha^2 = alpha + 1
  NFElement alpha = k5->element({Rational(1, 2), Rational(1, 2)});
  CHECK(alpha * alpha == alpha + k5->one());
  CHECK(nf_minpoly(alpha) == QPolynomial({Rational(-1), Rational(-1), Rational(1)}));
}

TEST_CASE("minpoly annihilates and its degree divides the field degree") {
  std::mt19937 rng(11);
  for (const auto& f : sample_fields()) {
    for (int i = 0; i < 6; ++i) {
      NFElement a = random_element(f, rng);
      QPolynomial mp = nf_minpoly(a);
      CHECK(eval_poly(mp, a).is_zero());
      CHECK(f->degree() % mp.degree() == 0);
    }
  }
}

TEST_CASE("norms") {
  FieldPtr q = NumberField::rationals();
  CHECK(nf_norm(q->from_rational(5)) == Rational(5));
  FieldPtr k5 = sqrt_field(5);
  CHECK(nf_norm(k5->element({Rational(3, 2), Rational(1, 2)})) == Rational(1));
  FieldPtr k2 = sqrt_field(2);
  CHECK(nf_norm(k2->generator()) == Rational(-2));
}

TEST_CASE("norm is multiplicative (property)") {
  std::mt19937 rng(13);
  for (const auto& f : sample_fields())
    for (int i = 0; i < 8; ++i) {
      NFElement a = random_element(f, rng);
      NFElement b = random_element(f, rng);
      CHECK(nf_norm(a * b) == nf_norm(a) * nf_norm(b));
    }
}

TEST_CASE("real embedding enclosures") {
  FieldPtr q = NumberField::rationals();
  RealInterval half = embed_real(q->from_rational(Rational(1, 2)), 53);
  CHECK(half.contains(Rational(1, 2)));
  CHECK(half.width_q() <= rational_pow(Rational(1, 2), 52));

  FieldPtr k5 = sqrt_field(5);
  // independent oracle for sqrt(5): an outward-rounded mpfr enclosure must
  // contain the (much tighter) certified embedding interval
  RealInterval oracle(80);
  mpfr_sqrt_ui(oracle.lo_mut(), 5, MPFR_RNDD);
  mpfr_sqrt_ui(oracle.hi_mut(), 5, MPFR_RNDU);
  RealInterval theta = embed_real(k5->generator(), 64);
  CHECK(oracle.contains(theta));
  CHECK(theta.lo_q() < parse_rational("2.2360679775"));
  CHECK(theta.hi_q() > parse_rational("2.2360679774"));
  RealInterval val = embed_real(k5->element({Rational(3, 2), Rational(1, 2)}), 64);
  CHECK(val.lo_q() < parse_rational("2.6180339888"));
  CHECK(val.hi_q() > parse_rational("2.6180339887"));
}

TEST_CASE("embedding width contract and nesting") {
  FieldPtr k2 = sqrt_field(2);
  NFElement a = k2->element({Rational(7, 3), Rational(-2, 5)});
  for (mpfr_prec_t p : {16L, 32L, 64L, 128L, 256L}) {
    RealInterval iv = embed_real(a, p);
    Rational scale = rational_abs(iv.lo_q());
    if (scale < 1) scale = 1;
    CHECK(iv.width_q() <= rational_pow(Rational(1, 2), static_cast<long>(p) - 1) * scale);
  }
  RealInterval coarse = embed_real(a, 32);
  RealInterval fine = embed_real(a, 64);
  CHECK(coarse.contains(fine));
}

TEST_CASE("exact signs") {
  FieldPtr k2 = sqrt_field(2);
  NFElement theta = k2->generator();
  CHECK(exact_sign(k2->zero()) == 0);
  // theta - 141421356/100000000 > 0, theta - 141421357/100000000 < 0
  CHECK(exact_sign(theta - k2->from_rational(parse_rational("1.41421356"))) == 1);
  CHECK(exact_sign(theta - k2->from_rational(parse_rational("1.41421357"))) == -1);
}

TEST_CASE("compositum of Q with anything is the identity") {
  auto c1 = compositum(NumberField::rationals(), NumberField::rationals());
  CHECK(c1.field->degree() == 1);
  FieldPtr k2 = sqrt_field(2);
  auto c2 = compositum(k2, NumberField::rationals());
  CHECK(c2.field == k2);
  NFElement img = c2.map1.apply(c2.map1.from->generator());
  CHECK(img == c2.field->generator());
}

TEST_CASE("compositum Q(sqrt2), Q(sqrt3) has degree 4 and honest maps") {
  FieldPtr k2 = sqrt_field(2);
  FieldPtr k3 = sqrt_field(3);
  auto comp = compositum(k2, k3);
  CHECK(comp.field->degree() == 4);
  NFElement r2 = comp.map1.apply(k2->generator());
  NFElement r3 = comp.map2.apply(k3->generator());
  CHECK(r2 * r2 == comp.field->from_rational(2));
  CHECK(r3 * r3 == comp.field->from_rational(3));
  // sqrt2 + sqrt3 generates the compositum
  CHECK(nf_minpoly(r2 + r3).degree() == 4);
  // maps are ring homomorphisms on random samples
  std::mt19937 rng(17);
  for (int i = 0; i < 6; ++i) {
    NFElement a = random_element(k2, rng), b = random_element(k2, rng);
    CHECK(comp.map1.apply(a + b) == comp.map1.apply(a) + comp.map1.apply(b));
    CHECK(comp.map1.apply(a * b) == comp.map1.apply(a) * comp.map1.apply(b));
    // injectivity on samples
    if (!(a == b)) CHECK(!(comp.map1.apply(a) == comp.map1.apply(b)));
  }
  // embeddings commute: numeric values agree
  RealInterval lhs = embed_real(k2->generator(), 80);
  RealInterval rhs = embed_real(r2, 80);
  CHECK(lhs.intersects(rhs));
}

TEST_CASE("compositum of a field with itself stays small") {
  FieldPtr k2a = sqrt_field(2);
  FieldPtr k2b = sqrt_field(2);
  auto comp = compositum(k2a, k2b);
  CHECK(comp.field->degree() == 2);
  CHECK(comp.map1.apply(k2a->generator()) == comp.map2.apply(k2b->generator()));
}

TEST_CASE("square roots in a field are decided completely") {
  FieldPtr k5 = sqrt_field(5);
  NFElement u = k5->element({Rational(3, 2), Rational(1, 2)});  // (3+sqrt5)/2
  auto w = nf_sqrt(u);
  REQUIRE(w.has_value());
  CHECK(*w == k5->element({Rational(1, 2), Rational(1, 2)}));
  CHECK((*w) * (*w) == u);

  CHECK_FALSE(nf_sqrt(k5->from_rational(2)).has_value());  // sqrt2 not in Q(sqrt5)
  CHECK(nf_sqrt(k5->from_rational(4)) == k5->from_rational(2));
  CHECK_FALSE(nf_sqrt(k5->from_rational(-1)).has_value());
  FieldPtr q = NumberField::rationals();
  CHECK(nf_sqrt(q->from_rational(Rational(9, 4))) == q->from_rational(Rational(3, 2)));
  CHECK_FALSE(nf_sqrt(q->from_rational(2)).has_value());
}

TEST_CASE("express_in_powers solves subfield membership") {
  FieldPtr k5 = sqrt_field(5);
  NFElement alpha = k5->element({Rational(1, 2), Rational(1, 2)});
  auto c = express_in_powers(alpha, k5->generator());  // sqrt5 = 2 alpha - 1
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(-1));
  CHECK((*c)[1] == Rational(2));
  auto none = express_in_powers(k5->from_rational(3), k5->generator());
  CHECK_FALSE(none.has_value());
}
