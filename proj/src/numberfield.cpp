#include "spectra/numberfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

void check_compatible(const NFElement& a, const NFElement& b) {
  if (!a.field() || !b.field()) throw std::invalid_argument("uninitialized field element");
  if (a.field() == b.field()) return;
  if (!a.field()->same_as(*b.field()))
    throw std::invalid_argument("field elements belong to different fields");
}

// reduce a coefficient vector of length <= 2d-1 modulo the monic defining poly
std::vector<Rational> reduce_mod(std::vector<Rational> c, const QPolynomial& f) {
  size_t d = static_cast<size_t>(f.degree());
  for (size_t k = c.size(); k-- > d;) {
    Rational top = c[k];
    if (top != 0) {
      for (size_t j = 0; j < d; ++j) c[k - d + j] -= top * f.coeff(j);
    }
    c.pop_back();
  }
  c.resize(d, Rational(0));
  return c;
}

// extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic
std::tuple<QPolynomial, QPolynomial, QPolynomial> poly_extgcd(const QPolynomial& a,
                                                              const QPolynomial& b) {
  QPolynomial r0 = a, r1 = b;
  QPolynomial s0 = QPolynomial::constant(1), s1;
  QPolynomial t0, t1 = QPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPolynomial s2 = s0 - q * s1;
    QPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational lead = r0.leading();
  return {r0.scaled(1 / lead), s0.scaled(1 / lead), t0.scaled(1 / lead)};
}

// Solves M x = rhs over Q (square M given as column vectors). Free variables
// are set to zero; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> cols,
                                                  std::vector<Rational> rhs) {
  size_t rows = rhs.size(), ncols = cols.size();
  // augmented row-major matrix
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  for (size_t i = 0; i < rows; ++i) m[i][ncols] = rhs[i];

  std::vector<long> pivot_col(rows, -1);
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rational inv = 1 / m[rank][col];
    for (size_t j = col; j <= ncols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col[rank] = static_cast<long>(col);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (m[i][ncols] != 0) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (size_t i = 0; i < rank; ++i) x[static_cast<size_t>(pivot_col[i])] = m[i][ncols];
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// NFElement

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("null field");
  if (static_cast<long>(coords_.size()) != field_->degree())
    throw std::invalid_argument("coordinate vector length must equal field degree");
}

bool NFElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool NFElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool NFElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational NFElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

NFElement NFElement::operator+(const NFElement& o) const {
  check_compatible(*this, o);
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return NFElement(field_, std::move(c));
}

NFElement NFElement::operator-(const NFElement& o) const {
  check_compatible(*this, o);
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return NFElement(field_, std::move(c));
}

NFElement NFElement::operator*(const NFElement& o) const {
  check_compatible(*this, o);
  size_t d = coords_.size();
  std::vector<Rational> c(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) c[i + j] += coords_[i] * o.coords_[j];
  }
  return NFElement(field_, reduce_mod(std::move(c), field_->defining_poly()));
}

NFElement NFElement::operator/(const NFElement& o) const { return *this * o.inverse(); }

NFElement NFElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& v : c) v = -v;
  return NFElement(field_, std::move(c));
}

bool NFElement::operator==(const NFElement& o) const {
  check_compatible(*this, o);
  return coords_ == o.coords_;
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  auto [g, u, v] = poly_extgcd(as_polynomial(), field_->defining_poly());
  if (g.degree() != 0) throw std::logic_error("defining polynomial not irreducible");
  // u * a == 1 (mod f) after normalizing g to 1
  QPolynomial inv = u.mod(field_->defining_poly());
  std::vector<Rational> c(static_cast<size_t>(field_->degree()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = inv.coeff(i);
  return NFElement(field_, std::move(c));
}

NFElement NFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElement acc = field_->one();
  NFElement base = *this;
  unsigned long ue = static_cast<unsigned long>(e);
  while (ue > 0) {
    if (ue & 1UL) acc = acc * base;
    base = base * base;
    ue >>= 1UL;
  }
  return acc;
}

QPolynomial NFElement::as_polynomial() const { return QPolynomial(coords_); }

std::string NFElement::str(const std::string& var) const {
  return as_polynomial().str(var);
}

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField(QPolynomial f, Rational lo, Rational hi)
    : poly_(std::move(f)), emb_lo_(std::move(lo)), emb_hi_(std::move(hi)),
      ref_lo_(emb_lo_), ref_hi_(emb_hi_) {}

FieldPtr NumberField::create(const QPolynomial& f, const Rational& emb_lo,
                             const Rational& emb_hi) {
  if (f.degree() < 1) throw std::invalid_argument("defining polynomial must be nonconstant");
  if (!f.is_monic()) throw std::invalid_argument("defining polynomial must be monic");
  if (f.degree() == 1) {
    Rational theta = -f.coeff(0);
    return FieldPtr(new NumberField(f, theta, theta));
  }
  if (!irreducible_over_q(f))
    throw std::invalid_argument("defining polynomial must be irreducible over Q");
  if (emb_lo > emb_hi) throw std::invalid_argument("embedding interval endpoints out of order");
  if (f.eval(emb_lo) == 0 || f.eval(emb_hi) == 0)
    throw std::invalid_argument("embedding interval endpoints must not be roots");
  if (count_real_roots(f, emb_lo, emb_hi) != 1)
    throw std::invalid_argument("embedding interval must isolate exactly one real root");
  return FieldPtr(new NumberField(f, emb_lo, emb_hi));
}

FieldPtr NumberField::create_largest_root(const QPolynomial& f) {
  if (f.degree() == 1) return create(f.monic(), 0, 0);
  auto roots = isolate_real_roots(f);
  if (roots.empty()) throw std::invalid_argument("defining polynomial has no real root");
  return create(f, roots.back().first, roots.back().second);
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = [] {
    QPolynomial x = QPolynomial::x_power(1);
    return FieldPtr(new NumberField(x, 0, 0));
  }();
  return q;
}

NFElement NumberField::element(std::vector<Rational> coords) const {
  return NFElement(shared_from_this(), std::move(coords));
}

NFElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
  c[0] = q;
  return NFElement(shared_from_this(), std::move(c));
}

NFElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-poly_.coeff(0));
  std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
  c[1] = 1;
  return NFElement(shared_from_this(), std::move(c));
}

bool NumberField::same_as(const NumberField& o) const {
  return poly_ == o.poly_ && emb_lo_ == o.emb_lo_ && emb_hi_ == o.emb_hi_;
}

std::pair<Rational, Rational> NumberField::theta_bracket(long bits) const {
  if (degree() == 1) return {emb_lo_, emb_lo_};
  std::scoped_lock lock(mu_);
  Rational target = rational_pow(Rational(1, 2), bits);
  if (ref_hi_ - ref_lo_ > target) {
    auto [lo, hi] = refine_root(poly_, ref_lo_, ref_hi_, bits);
    ref_lo_ = lo;
    ref_hi_ = hi;
  }
  return {ref_lo_, ref_hi_};
}

// ---------------------------------------------------------------------------
// core operations

NFElement nf_invert(const NFElement& a) { return a.inverse(); }

QPolynomial nf_minpoly(const NFElement& a) {
  const auto& K = a.field();
  if (!K) throw std::invalid_argument("uninitialized element");
  long d = K->degree();
  // powers of a as coordinate columns
  std::vector<std::vector<Rational>> cols;
  NFElement p = K->one();
  cols.push_back(p.coords());
  for (long k = 1; k <= d; ++k) {
    p = p * a;
    auto sol = solve_linear(cols, p.coords());
    if (sol) {
      std::vector<Rational> mc(static_cast<size_t>(k) + 1, Rational(0));
      for (long j = 0; j < k; ++j) mc[static_cast<size_t>(j)] = -(*sol)[static_cast<size_t>(j)];
      mc[static_cast<size_t>(k)] = 1;
      return QPolynomial(std::move(mc));
    }
    cols.push_back(p.coords());
  }
  throw std::logic_error("minimal polynomial search exceeded field degree");
}

Rational nf_norm(const NFElement& a) {
  if (!a.field()) throw std::invalid_argument("uninitialized element");
  if (a.is_zero()) return Rational(0);
  if (a.field()->degree() == 1) return a.rational_value();
  return resultant(a.field()->defining_poly(), a.as_polynomial());
}

RealInterval embed_real(const NFElement& a, mpfr_prec_t precision) {
  if (precision < 8) throw std::invalid_argument("embedding precision must be at least 8 bits");
  const auto& K = a.field();
  if (!K) throw std::invalid_argument("uninitialized element");
  Rational bound_scale = rational_pow(Rational(1, 2), static_cast<long>(precision) - 1);
  if (K->degree() == 1 || a.is_rational()) {
    Rational v = a.coords().empty() ? Rational(0) : a.coords()[0];
    if (K->degree() > 1 && !a.is_rational()) throw std::logic_error("unreachable");
    RealInterval r = RealInterval::from_rational(
        K->degree() == 1 ? a.rational_value() : a.coords()[0], precision + 4);
    return r;
  }
  std::optional<RealInterval> acc;
  for (long wb = 16;; wb *= 2) {
    auto [lo, hi] = K->theta_bracket(wb);
    RealInterval theta = RealInterval::from_rationals(lo, hi, wb + 32);
    RealInterval v = a.as_polynomial().eval_interval(theta, wb + 32);
    acc = acc ? RealInterval::intersect(*acc, v) : v;
    Rational w = acc->width_q();
    Rational lo_abs = std::min(rational_abs(acc->lo_q()), rational_abs(acc->hi_q()));
    Rational scale = acc->contains_zero() || lo_abs < 1 ? Rational(1) : lo_abs;
    if (w <= bound_scale * scale) return *acc;
    if (wb > (1L << 26)) throw std::logic_error("embedding refinement failed to converge");
  }
}

int exact_sign(const NFElement& a, mpfr_prec_t cap) {
  const auto& K = a.field();
  if (!K) throw std::invalid_argument("uninitialized element");
  if (a.is_zero()) return 0;
  if (a.is_rational()) return a.coords()[0] < 0 ? -1 : 1;
  for (long wb = 32; wb <= static_cast<long>(cap); wb *= 2) {
    auto [lo, hi] = K->theta_bracket(wb);
    RealInterval theta = RealInterval::from_rationals(lo, hi, wb + 32);
    RealInterval v = a.as_polynomial().eval_interval(theta, wb + 32);
    int s = v.sign();
    if (s != 0) return s;
  }
  throw PrecisionCapReached("sign undecided at precision cap " + std::to_string(cap));
}

NFElement FieldHom::apply(const NFElement& a) const {
  if (!a.field()->same_as(*from))
    throw std::invalid_argument("homomorphism applied to element of wrong field");
  return eval_poly(a.as_polynomial(), generator_image);
}

NFElement eval_poly(const QPolynomial& p, const NFElement& x) {
  NFElement acc = x.field()->zero();
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + x.field()->from_rational(c[i]);
  return acc;
}

std::optional<std::vector<Rational>> express_in_powers(const NFElement& gen,
                                                       const NFElement& target) {
  check_compatible(gen, target);
  long d = gen.field()->degree();
  std::vector<std::vector<Rational>> cols;
  NFElement p = gen.field()->one();
  cols.push_back(p.coords());
  for (long j = 1; j < d; ++j) {
    p = p * gen;
    cols.push_back(p.coords());
  }
  return solve_linear(std::move(cols), target.coords());
}

// ---------------------------------------------------------------------------
// adjoining a real algebraic number: E = Q(theta + c*tau)

namespace {

// polynomials with NFElement coefficients, for gcd computations over a field
struct KPoly {
  FieldPtr field;
  std::vector<NFElement> c;  // lowest first

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  long degree() const { return static_cast<long>(c.size()) - 1; }
};

KPoly kp_mul(const KPoly& a, const KPoly& b) {
  if (a.c.empty() || b.c.empty()) return {a.field, {}};
  std::vector<NFElement> out(a.c.size() + b.c.size() - 1, a.field->zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  KPoly r{a.field, std::move(out)};
  r.trim();
  return r;
}

KPoly kp_mod(const KPoly& a, const KPoly& b) {
  KPoly rem = a;
  rem.trim();
  long db = b.degree();
  NFElement linv = b.c.back().inverse();
  while (rem.degree() >= db) {
    NFElement q = rem.c.back() * linv;
    long shift = rem.degree() - db;
    for (long j = 0; j <= db; ++j)
      rem.c[static_cast<size_t>(shift + j)] =
          rem.c[static_cast<size_t>(shift + j)] - q * b.c[static_cast<size_t>(j)];
    rem.c.pop_back();
    rem.trim();
    if (rem.c.empty()) break;
  }
  return rem;
}

KPoly kp_gcd_monic(KPoly a, KPoly b) {
  a.trim();
  b.trim();
  while (!b.c.empty()) {
    KPoly r = kp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.c.empty()) return a;
  NFElement linv = a.c.back().inverse();
  for (auto& x : a.c) x = x * linv;
  return a;
}

// f(x0 - c*y) as a polynomial in y
QPolynomial shifted_in_y(const QPolynomial& f, const Rational& x0, long c) {
  QPolynomial acc;  // result accumulates f_i * (x0 - c y)^i
  QPolynomial base({x0, Rational(-c)});
  QPolynomial power = QPolynomial::constant(1);
  for (long i = 0; i <= f.degree(); ++i) {
    acc = acc + power.scaled(f.coeff(static_cast<size_t>(i)));
    if (i < f.degree()) power = power * base;
  }
  return acc;
}

QPolynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                 const std::vector<Rational>& ys) {
  // Newton divided differences, exact over Q
  size_t n = xs.size();
  std::vector<Rational> coef(ys);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n; i-- > j;) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  QPolynomial result = QPolynomial::constant(coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    QPolynomial lin({-xs[i], Rational(1)});
    result = result * lin + QPolynomial::constant(coef[i]);
  }
  return result;
}

}  // namespace

AdjoinResult adjoin_root(const FieldPtr& K, const QPolynomial& tau_poly, const Rational& tau_lo,
                         const Rational& tau_hi) {
  if (tau_poly.degree() < 1) throw std::invalid_argument("tau polynomial must be nonconstant");
  if (!(tau_lo == tau_hi && tau_poly.eval(tau_lo) == 0) &&
      count_real_roots(tau_poly, tau_lo, tau_hi) != 1)
    throw std::invalid_argument("tau interval must isolate exactly one real root");

  long d = K->degree();
  long e = tau_poly.degree();
  QPolynomial f = K->defining_poly();

  for (long c = 1; c <= 64; ++c) {
    // R(x) = Res_y(tau_poly(y), f(x - c y)) by evaluation/interpolation
    long deg_r = d * e;
    std::vector<Rational> xs, ys;
    QPolynomial taum = tau_poly.monic();
    for (long j = 0; static_cast<long>(xs.size()) < deg_r + 1; ++j) {
      Rational x0 = (j % 2 == 0) ? Rational(j / 2) : Rational(-(j / 2 + 1));
      xs.push_back(x0);
      ys.push_back(resultant(taum, shifted_in_y(f, x0, c)));
    }
    QPolynomial R = lagrange_interpolate(xs, ys);
    if (R.degree() != deg_r) throw std::logic_error("resultant degree mismatch");
    if (qpoly_gcd(R, R.derivative()).degree() != 0) continue;  // not squarefree: next shift

    auto factors = factor_over_q(R);

    // certified selection of the factor vanishing at gamma = theta + c*tau
    const QPolynomial* chosen = nullptr;
    Rational glo, ghi;
    for (long bits = 16; bits <= (1L << 22); bits *= 2) {
      auto [tlo, thi] = K->theta_bracket(bits);
      auto [ulo, uhi] = refine_root(tau_poly, tau_lo, tau_hi, bits);
      Rational jlo = tlo + Rational(c) * ulo;
      Rational jhi = thi + Rational(c) * uhi;
      const QPolynomial* unique_factor = nullptr;
      bool clean = true;
      int with_roots = 0;
      for (const auto& [fac, mult] : factors) {
        int cnt;
        try {
          cnt = count_real_roots(fac, jlo, jhi);
        } catch (const std::domain_error&) {
          clean = false;
          break;
        }
        if (cnt > 1) {
          clean = false;
          break;
        }
        if (cnt == 1) {
          ++with_roots;
          unique_factor = &fac;
        }
      }
      if (clean && with_roots == 1) {
        chosen = unique_factor;
        glo = jlo;
        ghi = jhi;
        break;
      }
    }
    if (!chosen) throw std::logic_error("failed to certify compositum factor selection");

    FieldPtr E = NumberField::create(*chosen, glo, ghi);
    NFElement gamma = E->generator();

    // theta is the unique common root of f(y) and tau_poly((gamma - y)/c)
    KPoly A{E, {}};
    for (long i = 0; i <= f.degree(); ++i)
      A.c.push_back(E->from_rational(f.coeff(static_cast<size_t>(i))));
    A.trim();
    Rational cinv = Rational(1) / Rational(c);
    KPoly z{E, {gamma * E->from_rational(cinv), E->from_rational(-cinv)}};  // (gamma - y)/c
    KPoly B{E, {E->zero()}};
    for (long k = taum.degree(); k >= 0; --k) {
      B = kp_mul(B, z);
      if (B.c.empty()) B.c.push_back(E->zero());
      B.c[0] = B.c[0] + E->from_rational(taum.coeff(static_cast<size_t>(k)));
      B.trim();
    }
    KPoly g = kp_gcd_monic(A, B);
    if (g.degree() != 1) continue;  // unlucky shift despite squarefree resultant
    NFElement theta_img = -g.c[0];
    NFElement tau_img = (gamma - theta_img) * E->from_rational(cinv);

    if (!eval_poly(f, theta_img).is_zero() || !eval_poly(tau_poly, tau_img).is_zero())
      throw std::logic_error("adjoin_root images fail exact verification");
    return AdjoinResult{E, theta_img, tau_img, c};
  }
  throw std::logic_error("no primitive-element shift found");
}

CompositumResult compositum(const FieldPtr& k1, const FieldPtr& k2) {
  if (!k1 || !k2) throw std::invalid_argument("null field");
  if (k2->degree() == 1) {
    FieldHom id{k1, k1, k1->generator()};
    FieldHom incl{k2, k1, k1->from_rational(-k2->defining_poly().coeff(0))};
    return {k1, id, incl};
  }
  if (k1->degree() == 1) {
    FieldHom incl{k1, k2, k2->from_rational(-k1->defining_poly().coeff(0))};
    FieldHom id{k2, k2, k2->generator()};
    return {k2, incl, id};
  }
  auto [lo, hi] = k2->embedding_interval();
  AdjoinResult adj = adjoin_root(k1, k2->defining_poly(), lo, hi);
  FieldHom m1{k1, adj.field, adj.base_image};
  FieldHom m2{k2, adj.field, adj.tau_image};
  return {adj.field, m1, m2};
}

std::optional<NFElement> nf_sqrt(const NFElement& u) {
  const auto& K = u.field();
  if (!K) throw std::invalid_argument("uninitialized element");
  if (u.is_zero()) return K->zero();
  int sg = exact_sign(u);
  if (sg < 0) return std::nullopt;
  if (K->degree() == 1 || u.is_rational()) {
    auto r = rational_nth_root(u.rational_value(), 2);
    if (!r) {
      if (K->degree() == 1) return std::nullopt;
    } else {
      return K->from_rational(*r);
    }
  }
  if (K->degree() == 1) return std::nullopt;

  QPolynomial mu = nf_minpoly(u);
  QPolynomial P = mu.compose_square();  // annihilates sqrt(u)

  // isolating bracket for the positive square root of u
  Rational slo, shi;
  bool isolated = false;
  for (mpfr_prec_t p = 32; p <= (1 << 22); p *= 2) {
    RealInterval uv = embed_real(u, p);
    if (uv.sign() <= 0) continue;
    RealInterval sq = uv.sqrt(p + 8);
    slo = sq.lo_q();
    shi = sq.hi_q();
    try {
      if (count_real_roots(P, slo, shi) == 1) {
        isolated = true;
        break;
      }
    } catch (const std::domain_error&) {
      // endpoint hit a root; refine further
    }
  }
  if (!isolated) throw std::logic_error("failed to isolate square root");

  AdjoinResult adj = adjoin_root(K, P, slo, shi);
  if (adj.field->degree() > K->degree()) return std::nullopt;  // proven non-square
  auto coords = express_in_powers(adj.base_image, adj.tau_image);
  if (!coords) throw std::logic_error("square root expression failed unexpectedly");
  NFElement w = K->element(*coords);
  if (!(w * w == u)) throw std::logic_error("square root verification failed");
  if (exact_sign(w) < 0) w = -w;
  return w;
}

}  // namespace spectra
