#include "spectra/moebius.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spectra {

std::string matrix_class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::identity: return "identity";
    case MatrixClass::elliptic: return "elliptic";
    case MatrixClass::parabolic: return "parabolic";
    case MatrixClass::hyperbolic: return "hyperbolic";
  }
  return "?";
}

MoebiusMatrix::MoebiusMatrix(NFElement a, NFElement b, NFElement c, NFElement d, mpfr_prec_t cap)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (!(a_ * d_ - b_ * c_ == a_.field()->one()))
    throw std::invalid_argument("matrix determinant must be exactly 1");
  canonicalize(cap);
}

void MoebiusMatrix::canonicalize(mpfr_prec_t cap) {
  for (const NFElement* e : {&a_, &b_, &c_, &d_}) {
    if (e->is_zero()) continue;
    if (exact_sign(*e, cap) < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    return;
  }
  throw std::invalid_argument("zero matrix is not projective");
}

MoebiusMatrix MoebiusMatrix::identity(const FieldPtr& field) {
  return MoebiusMatrix(field->one(), field->zero(), field->zero(), field->one());
}

MoebiusMatrix MoebiusMatrix::operator*(const MoebiusMatrix& o) const {
  return MoebiusMatrix(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MoebiusMatrix MoebiusMatrix::inverse() const {
  return MoebiusMatrix(d_, -b_, -c_, a_);
}

bool MoebiusMatrix::is_identity() const {
  return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

bool MoebiusMatrix::operator==(const MoebiusMatrix& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::string MoebiusMatrix::str() const {
  std::ostringstream os;
  os << "[[" << a_.str() << ", " << b_.str() << "], [" << c_.str() << ", " << d_.str() << "]]";
  return os.str();
}

std::string Word::name() const {
  std::string s;
  for (int l : letters) {
    int idx = std::abs(l) - 1;
    char base = static_cast<char>('a' + (idx % 26));
    s += l > 0 ? base : static_cast<char>(base - 'a' + 'A');
  }
  return s;
}

MatrixClass classify(const MoebiusMatrix& m, mpfr_prec_t cap) {
  if (m.is_identity()) return MatrixClass::identity;
  NFElement tr = m.trace();
  NFElement disc = tr * tr - m.field()->from_rational(4);
  int s = exact_sign(disc, cap);
  if (s > 0) return MatrixClass::hyperbolic;
  if (s < 0) return MatrixClass::elliptic;
  return MatrixClass::parabolic;
}

namespace {

NFElement abs_element(const NFElement& e, mpfr_prec_t cap) {
  if (e.is_zero()) return e;
  return exact_sign(e, cap) < 0 ? -e : e;
}

// E = K(sqrt(u)) with the positive square root, as an absolute field.
struct SqrtExtension {
  FieldPtr field;
  FieldHom hom;       // K -> E
  NFElement root;     // sqrt(u) > 0 in E
};

SqrtExtension extend_by_sqrt(const NFElement& u) {
  const FieldPtr& K = u.field();
  if (auto w = nf_sqrt(u)) {
    return {K, FieldHom{K, K, K->generator()}, *w};
  }
  if (K->degree() == 1) {
    Rational uq = u.rational_value();
    std::vector<Rational> pc{-uq, Rational(0), Rational(1)};
    QPolynomial f{std::move(pc)};
    // positive root lives in (0, max(1,u)+1]; 0 is not a root since u != 0
    Rational hi = (uq < 1 ? Rational(1) : uq) + 1;
    FieldPtr E = NumberField::create(f, Rational(0), hi);
    FieldHom hom{K, E, E->from_rational(-K->defining_poly().coeff(0))};
    return {E, hom, E->generator()};
  }
  QPolynomial mu = nf_minpoly(u);
  QPolynomial P = mu.compose_square();
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
    }
  }
  if (!isolated) throw std::logic_error("failed to isolate sqrt for extension");
  AdjoinResult adj = adjoin_root(K, P, slo, shi);
  NFElement w = adj.tau_image;
  if (!(w * w == eval_poly(u.as_polynomial(), adj.base_image)))
    throw std::logic_error("sqrt extension verification failed");
  return {adj.field, FieldHom{K, adj.field, adj.base_image}, w};
}

}  // namespace

LengthEntry translation_length(const Word& w, mpfr_prec_t precision, mpfr_prec_t cap) {
  const MoebiusMatrix& m = w.matrix;
  LengthEntry entry;
  entry.word = w;
  entry.trace = m.trace();
  entry.abs_trace = abs_element(entry.trace, cap);
  entry.cls = classify(m, cap);
  entry.precision = precision;
  if (entry.cls != MatrixClass::hyperbolic)
    throw std::invalid_argument("translation length requires a hyperbolic element");

  const FieldPtr& K = m.field();
  NFElement disc = entry.trace * entry.trace - K->from_rational(4);
  SqrtExtension ext = extend_by_sqrt(disc);
  entry.ext_field = ext.field;
  entry.base_to_ext = ext.hom;
  NFElement tr_e = ext.hom.apply(entry.abs_trace);
  NFElement lambda = (tr_e + ext.root) * ext.field->from_rational(Rational(1, 2));
  // lambda satisfies x^2 - |tr| x + 1 = 0 and lambda > 1
  if (!(lambda * lambda - lambda * tr_e + ext.field->one() == ext.field->zero()))
    throw std::logic_error("eigenvalue fails its quadratic identity");
  if (exact_sign(lambda - ext.field->one(), cap) <= 0)
    throw std::logic_error("eigenvalue must exceed 1");
  entry.eigenvalue = lambda;
  RealInterval lv = embed_real(lambda, precision + 8);
  entry.length = RealInterval::mul_q(lv.log(precision + 8), Rational(2), precision + 8);
  return entry;
}

LengthEntry translation_length(const MoebiusMatrix& m, mpfr_prec_t precision, mpfr_prec_t cap) {
  return translation_length(Word{{}, m}, precision, cap);
}

std::vector<LengthEntry> enumerate_words(const std::vector<MoebiusMatrix>& generators,
                                         long max_len, mpfr_prec_t precision, mpfr_prec_t cap) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  const FieldPtr& K = generators[0].field();
  for (const auto& g : generators)
    if (g.field() != K && !g.field()->same_as(*K))
      throw std::invalid_argument("generators must share one field");

  // alphabet order: g1, g1^-1, g2, g2^-1, ...
  std::vector<int> alphabet;
  std::vector<MoebiusMatrix> letter_matrix;
  for (size_t i = 0; i < generators.size(); ++i) {
    alphabet.push_back(static_cast<int>(i) + 1);
    letter_matrix.push_back(generators[i]);
    alphabet.push_back(-(static_cast<int>(i) + 1));
    letter_matrix.push_back(generators[i].inverse());
  }

  std::vector<LengthEntry> out;
  std::map<std::pair<int, std::string>, size_t> seen;  // (class, |trace| coords)

  auto record = [&](const std::vector<int>& letters, const MoebiusMatrix& m) {
    NFElement tr = m.trace();
    NFElement abs_tr = abs_element(tr, cap);
    MatrixClass cls = classify(m, cap);
    std::string key;
    for (const auto& c : abs_tr.coords()) key += rational_str(c) + ",";
    auto k = std::make_pair(static_cast<int>(cls), key);
    if (seen.count(k)) return;
    seen.emplace(k, out.size());
    Word w{letters, m};
    if (cls == MatrixClass::hyperbolic) {
      out.push_back(translation_length(w, precision, cap));
    } else {
      LengthEntry e;
      e.word = w;
      e.trace = tr;
      e.abs_trace = abs_tr;
      e.cls = cls;
      e.precision = precision;
      out.push_back(std::move(e));
    }
  };

  // iterative shortlex DFS by target length
  std::vector<int> letters;
  std::function<void(const MoebiusMatrix&, long)> rec = [&](const MoebiusMatrix& m, long remaining) {
    if (remaining == 0) {
      record(letters, m);
      return;
    }
    for (size_t ai = 0; ai < alphabet.size(); ++ai) {
      int l = alphabet[ai];
      if (!letters.empty() && letters.back() == -l) continue;  // free reduction
      letters.push_back(l);
      rec(m * letter_matrix[ai], remaining - 1);
      letters.pop_back();
    }
  };
  for (long len = 1; len <= max_len; ++len) rec(MoebiusMatrix::identity(K), len);
  return out;
}

FieldPtr trace_field(const std::vector<MoebiusMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const FieldPtr& K = generators[0].field();
  size_t n = generators.size();

  std::vector<NFElement> traces;
  for (size_t i = 0; i < n; ++i) traces.push_back(generators[i].trace());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) traces.push_back((generators[i] * generators[j]).trace());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        traces.push_back((generators[i] * generators[j] * generators[k]).trace());

  // stabilization samples: a few length-4 products
  std::vector<NFElement> samples;
  if (n >= 2) {
    samples.push_back((generators[0] * generators[1] * generators[0] * generators[1]).trace());
    samples.push_back(
        (generators[0] * generators[0] * generators[1] * generators[1]).trace());
    samples.push_back(
        (generators[1] * generators[0] * generators[1].inverse() * generators[0]).trace());
  } else {
    samples.push_back((generators[0] * generators[0] * generators[0] * generators[0]).trace());
  }

  for (int attempt = 1; attempt <= 32; ++attempt) {
    // primitive element candidate: weighted sum of the trace generators
    NFElement s = K->zero();
    Rational w(1);
    for (const auto& t : traces) {
      s = s + t * K->from_rational(w);
      w *= attempt;
    }
    // membership of every trace and every sample in Q(s)
    bool ok = true;
    for (const auto& t : traces)
      if (!express_in_powers(s, t)) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& t : samples)
        if (!express_in_powers(s, t)) {
          ok = false;
          break;
        }
    if (!ok) continue;

    QPolynomial mp = nf_minpoly(s);
    if (mp.degree() == 1) return NumberField::rationals();
    if (mp.degree() == K->degree()) return K;
    auto roots = isolate_real_roots(mp);
    for (mpfr_prec_t p = 64; p <= (1 << 22); p *= 2) {
      RealInterval sv = embed_real(s, p);
      Rational lo = sv.lo_q(), hi = sv.hi_q();
      int containing = 0;
      std::pair<Rational, Rational> host;
      for (const auto& iv : roots) {
        if (lo >= iv.first && hi <= iv.second) {
          ++containing;
          host = iv;
        }
      }
      if (containing == 1) return NumberField::create(mp, host.first, host.second);
    }
    throw std::logic_error("failed to match trace field embedding");
  }
  throw std::logic_error("no primitive element found for trace field");
}

std::optional<NonElementarityWitness> nonelementarity_witness(
    const std::vector<LengthEntry>& entries) {
  std::vector<size_t> hyp;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].hyperbolic()) hyp.push_back(i);
  for (size_t a = 0; a < hyp.size(); ++a) {
    for (size_t b = a + 1; b < hyp.size(); ++b) {
      const MoebiusMatrix& A = entries[hyp[a]].word.matrix;
      const MoebiusMatrix& B = entries[hyp[b]].word.matrix;
      NFElement ctr = (A * B * A.inverse() * B.inverse()).trace();
      NFElement diff = ctr - A.field()->from_rational(2);
      if (!diff.is_zero())
        return NonElementarityWitness{hyp[a], hyp[b], ctr};
    }
  }
  return std::nullopt;
}

}  // namespace spectra
