#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "spectra/interval.hpp"
#include "spectra/qpoly.hpp"
#include "spectra/rational.hpp"

namespace spectra {

constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;

// Thrown when an exact sign decision exceeds the configured precision cap.
class PrecisionCapReached : public std::runtime_error {
 public:
  explicit PrecisionCapReached(const std::string& what) : std::runtime_error(what) {}
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator/(const NFElement& o) const;
  NFElement operator-() const;
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }

  NFElement inverse() const;
  NFElement pow(long e) const;

  // The element as a polynomial in the generator.
  QPolynomial as_polynomial() const;

  std::string str(const std::string& var = "t") const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Real algebraic number field Q[x]/(f) with a distinguished real embedding:
// an isolating interval selecting one real root of f. Immutable; the internal
// refinement cache is synchronized and deterministic, so concurrent use needs
// no external locking.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // f must be monic irreducible; [lo, hi] must isolate exactly one real root.
  static FieldPtr create(const QPolynomial& f, const Rational& emb_lo, const Rational& emb_hi);
  static FieldPtr create_largest_root(const QPolynomial& f);
  static FieldPtr rationals();

  long degree() const { return poly_.degree(); }
  const QPolynomial& defining_poly() const { return poly_; }
  std::pair<Rational, Rational> embedding_interval() const { return {emb_lo_, emb_hi_}; }

  NFElement element(std::vector<Rational> coords) const;
  NFElement from_rational(const Rational& q) const;
  NFElement zero() const { return from_rational(0); }
  NFElement one() const { return from_rational(1); }
  NFElement generator() const;

  bool same_as(const NumberField& o) const;

  // Isolating interval of the distinguished root refined to width <= 2^-bits.
  // The refinement path is deterministic, so successive calls are nested.
  std::pair<Rational, Rational> theta_bracket(long bits) const;

 private:
  NumberField(QPolynomial f, Rational lo, Rational hi);
  QPolynomial poly_;
  Rational emb_lo_, emb_hi_;
  mutable std::mutex mu_;
  mutable Rational ref_lo_, ref_hi_;
};

// --- core field operations ---

NFElement nf_invert(const NFElement& a);
QPolynomial nf_minpoly(const NFElement& a);
Rational nf_norm(const NFElement& a);

// Certified enclosure of the distinguished real embedding;
// width <= 2^(1-precision) * max(1, |value|). Results at doubled precision
// are sub-intervals of the coarser ones.
RealInterval embed_real(const NFElement& a, mpfr_prec_t precision);

// Exact sign under the embedding: 0 iff the element is zero. Escalates
// internal precision up to cap and throws PrecisionCapReached beyond it.
int exact_sign(const NFElement& a, mpfr_prec_t cap = kDefaultPrecisionCap);

// Field embedding K -> L fixed by the image of K's generator.
struct FieldHom {
  FieldPtr from, to;
  NFElement generator_image;
  NFElement apply(const NFElement& a) const;
};

// Solves target = sum_j x_j gen^j over Q if possible (membership of target
// in the subfield generated by gen).
std::optional<std::vector<Rational>> express_in_powers(const NFElement& gen,
                                                       const NFElement& target);

// Field obtained by adjoining to K a real algebraic tau, given by a rational
// polynomial annihilating it and an isolating interval. Returns an absolute
// field E = Q(theta_K + c*tau) with certified images of theta_K and tau.
struct AdjoinResult {
  FieldPtr field;
  NFElement base_image;  // image of K's generator
  NFElement tau_image;
  long shift;  // the c used for the primitive element
};
AdjoinResult adjoin_root(const FieldPtr& K, const QPolynomial& tau_poly, const Rational& tau_lo,
                         const Rational& tau_hi);

struct CompositumResult {
  FieldPtr field;
  FieldHom map1, map2;
};
CompositumResult compositum(const FieldPtr& k1, const FieldPtr& k2);

// Complete decision: the square root of u in its own field, embedding-positive,
// or nullopt if u is provably not a square (or embeds negative).
std::optional<NFElement> nf_sqrt(const NFElement& u);

// Horner evaluation of a rational polynomial at a field element.
NFElement eval_poly(const QPolynomial& p, const NFElement& x);

}  // namespace spectra
