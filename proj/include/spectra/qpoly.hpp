#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "spectra/interval.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<long> coeffs);

  static QPolynomial x_power(size_t n);
  static QPolynomial constant(const Rational& c);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator-() const;
  QPolynomial scaled(const Rational& s) const;
  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;
  QPolynomial mod(const QPolynomial& d) const { return divmod(d).second; }

  QPolynomial derivative() const;
  QPolynomial monic() const;
  // p(x) -> p(x^2)
  QPolynomial compose_square() const;
  // p(x) -> s^deg(p) * p(x/s), the root-scaling map used to monicize.
  QPolynomial scale_roots_inverse(const Integer& s) const;

  Rational eval(const Rational& x) const;
  RealInterval eval_interval(const RealInterval& x, mpfr_prec_t prec) const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
  void normalize();
};

QPolynomial qpoly_gcd(const QPolynomial& a, const QPolynomial& b);  // monic result
QPolynomial squarefree_part(const QPolynomial& f);
Rational resultant(const QPolynomial& a, const QPolynomial& b);

// Sturm-based certified real root machinery. Input need not be squarefree;
// counting and isolation operate on the squarefree part.
int count_real_roots(const QPolynomial& f, const Rational& lo, const Rational& hi);
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPolynomial& f);

// Shrinks an isolating interval of a simple real root of f until
// hi - lo <= 2^-target_bits. Endpoints must not be roots unless lo == hi.
// The refinement path is deterministic and independent of target_bits, so
// results for increasing targets are nested.
std::pair<Rational, Rational> refine_root(const QPolynomial& f, Rational lo, Rational hi,
                                          long target_bits);

// Factorization over Q: monic irreducible factors with multiplicities;
// the product of factors^multiplicities equals f up to a rational constant.
std::vector<std::pair<QPolynomial, int>> factor_over_q(const QPolynomial& f);
bool irreducible_over_q(const QPolynomial& f);

}  // namespace spectra
