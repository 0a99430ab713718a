#include "spectra/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spectra {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void QPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::x_power(size_t n) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::constant(const Rational& c) {
  return QPolynomial(std::vector<Rational>{c});
}

const Rational& QPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v = -v;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::scaled(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v *= s;
  return QPolynomial(std::move(c));
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(c_);
  long dd = d.degree();
  long dr = static_cast<long>(rem.size()) - 1;
  if (dr < dd) return {QPolynomial(), *this};
  std::vector<Rational> quot(dr - dd + 1, Rational(0));
  const Rational& lead = d.c_.back();
  for (long k = dr - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q != 0)
      for (long j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::monic() const {
  if (c_.empty()) throw std::domain_error("monic of zero polynomial");
  return scaled(1 / c_.back());
}

QPolynomial QPolynomial::compose_square() const {
  if (c_.empty()) return {};
  std::vector<Rational> c(2 * (c_.size() - 1) + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::scale_roots_inverse(const Integer& s) const {
  // p(x) = sum a_i x^i  ->  sum a_i s^(deg-i) x^i
  if (c_.empty()) return {};
  std::vector<Rational> c(c_);
  Rational pw(1);
  for (size_t i = c_.size(); i-- > 0;) {
    c[i] *= pw;
    pw *= Rational(s);
  }
  return QPolynomial(std::move(c));
}

Rational QPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RealInterval QPolynomial::eval_interval(const RealInterval& x, mpfr_prec_t prec) const {
  RealInterval acc = RealInterval::from_long(0, prec);
  for (size_t i = c_.size(); i-- > 0;)
    acc = RealInterval::add_q(RealInterval::mul(acc, x, prec), c_[i], prec);
  return acc;
}

std::string QPolynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    first = false;
    Rational mag = rational_abs(a);
    if (i == 0 || mag != 1) os << rational_str(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QPolynomial qpoly_gcd(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial f = a, g = b;
  while (!g.is_zero()) {
    QPolynomial r = f.mod(g);
    f = std::move(g);
    g = std::move(r);
    if (!g.is_zero()) g = g.monic();
  }
  if (f.is_zero()) return f;
  return f.monic();
}

QPolynomial squarefree_part(const QPolynomial& f) {
  if (f.is_zero() || f.degree() == 0) return f;
  QPolynomial g = qpoly_gcd(f, f.derivative());
  if (g.degree() == 0) return f;
  return f.divmod(g).first;
}

Rational resultant(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  QPolynomial f = a, g = b;
  Rational acc(1);
  bool negate = false;
  while (g.degree() > 0) {
    QPolynomial r = f.mod(g);
    long df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
    if ((df % 2) && (dg % 2)) negate = !negate;
    if (r.is_zero()) return Rational(0);
    acc *= rational_pow(g.leading(), df - dr);
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant
  acc *= rational_pow(g.leading(), f.degree());
  return negate ? -acc : acc;
}

// ---------------------------------------------------------------------------
// Sturm sequences over Z with primitive normalization.

namespace {

using ZVec = std::vector<Integer>;

ZVec to_primitive_z(const QPolynomial& f) {
  Integer den(1);
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZVec z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rational t = f.coeffs()[i] * Rational(den);
    z[i] = t.get_num();
  }
  Integer content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : z) c /= content;
  return z;
}

void strip_content(ZVec& z) {
  Integer content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : z) c /= content;
}

// Pseudo-remainder with an even power of the divisor's leading coefficient,
// so the sign of the true remainder is preserved.
ZVec sign_safe_prem(const ZVec& a, const ZVec& b) {
  ZVec rem = a;
  long db = static_cast<long>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<long>(rem.size()) - 1 >= db) {
    long dr = static_cast<long>(rem.size()) - 1;
    Integer lr = rem.back();
    // rem <- lb^2 * rem - (lb * lr) * x^(dr-db) * b
    for (auto& c : rem) c *= lb * lb;
    Integer m = lb * lr;
    for (long j = 0; j <= db; ++j) rem[dr - db + j] -= m * b[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return rem;
}

std::vector<ZVec> sturm_chain(const QPolynomial& f) {
  std::vector<ZVec> chain;
  ZVec f0 = to_primitive_z(f);
  chain.push_back(f0);
  if (f0.size() <= 1) return chain;
  ZVec f1(f0.size() - 1);
  for (size_t i = 1; i < f0.size(); ++i) f1[i - 1] = f0[i] * static_cast<long>(i);
  strip_content(f1);
  chain.push_back(f1);
  while (chain.back().size() > 1) {
    ZVec r = sign_safe_prem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    strip_content(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_at(const ZVec& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  // Horner scaled by d^deg: acc = sum p_i n^i d^(deg-i), same sign as p(x)
  Integer acc = p.back();
  Integer dpow(1);
  for (size_t i = p.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + p[i] * dpow;
  }
  return mpz_sgn(acc.get_mpz_t());
}

int sign_variations(const std::vector<ZVec>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

Rational cauchy_bound(const QPolynomial& f) {
  Rational m(0);
  const Rational lead = rational_abs(f.leading());
  for (long i = 0; i < f.degree(); ++i) {
    Rational v = rational_abs(f.coeff(i)) / lead;
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace

int count_real_roots(const QPolynomial& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw std::domain_error("root count of zero polynomial");
  QPolynomial sf = squarefree_part(f);
  if (sf.degree() == 0) return 0;
  if (sf.eval(lo) == 0 || sf.eval(hi) == 0)
    throw std::domain_error("root counting endpoints must not be roots");
  auto chain = sturm_chain(sf);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPolynomial& f) {
  std::vector<std::pair<Rational, Rational>> out;
  if (f.is_zero()) throw std::domain_error("root isolation of zero polynomial");
  QPolynomial sf = squarefree_part(f);
  if (sf.degree() <= 0) return out;
  auto chain = sturm_chain(sf);
  Rational bound = cauchy_bound(sf);
  Rational lo = -bound, hi = bound;
  // endpoints exceed every root in absolute value, so they are not roots
  struct Seg {
    Rational lo, hi;
    int count;
  };
  int total = sign_variations(chain, lo) - sign_variations(chain, hi);
  std::vector<Seg> stack{{lo, hi, total}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    while (sf.eval(mid) == 0) {
      // nudge off an exact root; the root keeps an isolating interval of its own
      mid = (s.lo + 3 * mid) / 4;
      if (mid == s.lo) throw std::logic_error("degenerate bisection segment");
    }
    auto vm = sign_variations(chain, mid);
    int left = sign_variations(chain, s.lo) - vm;
    stack.push_back({mid, s.hi, s.count - left});
    stack.push_back({s.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rational, Rational> refine_root(const QPolynomial& f, Rational lo, Rational hi,
                                          long target_bits) {
  if (lo == hi) return {lo, hi};
  QPolynomial sf = squarefree_part(f);
  QPolynomial df = sf.derivative();
  Rational flo = sf.eval(lo), fhi = sf.eval(hi);
  if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
    throw std::invalid_argument("refine_root requires a sign-change bracket");
  int slo = flo > 0 ? 1 : -1;
  Rational target = rational_pow(Rational(1, 2), target_bits);
  auto width = [&]() { return hi - lo; };
  // round y to a dyadic with about `bits` fractional bits
  auto round_dyadic = [](const Rational& y, long bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Rational t = y * Rational(scale);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    Rational r(fl, scale);
    r.canonicalize();
    return r;
  };
  while (width() > target) {
    Rational w = width();
    bool newton_ok = false;
    // Newton proposal once the bracket is reasonably tight
    if (w < Rational(1, 16)) {
      Rational m = (lo + hi) / 2;
      Rational fm = sf.eval(m);
      Rational dm = df.eval(m);
      if (dm != 0) {
        Rational y = m - fm / dm;
        // candidate half-width ~ w^2, quadratic convergence once it sticks
        Rational h = w * w;
        // path must depend only on the current bracket, not on target_bits,
        // so refinements for different targets are prefixes of one chain
        long bits = 8;
        {
          Rational t = h;
          while (t < 1 && bits < 1 << 22) {
            t *= 2;
            bits += 1;
          }
          bits += 16;
        }
        Rational yl = round_dyadic(y - h, bits);
        Rational yh = round_dyadic(y + h, bits) + rational_pow(Rational(1, 2), bits);
        if (yl > lo && yh < hi) {
          Rational fl = sf.eval(yl), fh = sf.eval(yh);
          if (fl != 0 && fh != 0 && (fl > 0) != (fh > 0)) {
            lo = yl;
            hi = yh;
            slo = fl > 0 ? 1 : -1;
            newton_ok = true;
          }
        }
      }
    }
    if (!newton_ok) {
      Rational m = (lo + hi) / 2;
      Rational fm = sf.eval(m);
      if (fm == 0) return {m, m};
      if ((fm > 0 ? 1 : -1) == slo)
        lo = m;
      else
        hi = m;
    }
  }
  return {lo, hi};
}

}  // namespace spectra
