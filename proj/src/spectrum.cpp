#include "spectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spectra {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::dependent: return "dependent";
    case Verdict::independent: return "independent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

IndependenceCertificate certify_pair(const LengthEntry& e1, const LengthEntry& e2,
                                     mpfr_prec_t precision) {
  if (!e1.hyperbolic() || !e2.hyperbolic())
    throw std::invalid_argument("certify_pair requires hyperbolic entries");
  IndependenceCertificate cert;
  cert.precision = precision;

  CompositumResult comp = compositum(e1.ext_field, e2.ext_field);
  cert.compositum_field = comp.field;
  cert.hom1 = comp.map1;
  cert.hom2 = comp.map2;
  NFElement l1 = comp.map1.apply(*e1.eigenvalue);
  NFElement l2 = comp.map2.apply(*e2.eigenvalue);
  cert.lambda1 = l1;
  cert.lambda2 = l2;

  try {
    // bounds: p*len1 = q*len2 (reduced) forces lambda1^(1/q) and
    // lambda2^(1/p) into the compositum
    cert.rb1 = root_bound(l1, precision);
    cert.rb2 = root_bound(l2, precision);
    cert.bound_q = cert.rb1->bound;
    cert.bound_p = cert.rb2->bound;

    RealInterval lg1 = embed_real(l1, precision).log(precision);
    RealInterval lg2 = embed_real(l2, precision).log(precision);
    cert.log_ratio = RealInterval::div(lg2, lg1, precision);  // = len2/len1 = p/q

    long bq = cert.bound_q.get_si(), bp = cert.bound_p.get_si();
    if (bq < 1 || bp < 1) throw std::logic_error("root bounds must be >= 1");
    std::vector<std::pair<long, long>> candidates;
    for (long q = 1; q <= bq; ++q)
      for (long p = 1; p <= bp; ++p) {
        if (std::gcd(p, q) != 1) continue;
        if (!cert.log_ratio->contains(Rational(p, q))) continue;
        candidates.emplace_back(p, q);
      }
    if (candidates.size() > 4096) {
      cert.verdict = Verdict::inconclusive;
      cert.reason = "candidate set too large at precision " + std::to_string(precision);
      return cert;
    }
    for (auto [p, q] : candidates) {
      if (l1.pow(p) == l2.pow(q)) {
        cert.verdict = Verdict::dependent;
        cert.p = p;
        cert.q = q;
        // numeric cross-check: p*len1 - q*len2 encloses 0
        RealInterval diff = RealInterval::sub(
            RealInterval::mul_q(*e1.length, Rational(p), precision),
            RealInterval::mul_q(*e2.length, Rational(q), precision), precision);
        if (!diff.contains_zero())
          throw std::logic_error("dependent verdict contradicts numeric lengths");
        return cert;
      }
      cert.checked.emplace_back(p, q);
    }
    cert.verdict = Verdict::independent;
    return cert;
  } catch (const PrecisionCapReached& e) {
    cert.verdict = Verdict::inconclusive;
    cert.reason = std::string("precision cap: ") + e.what();
    return cert;
  }
}

PairSearchResult find_independent_pair(const std::vector<MoebiusMatrix>& generators,
                                       long max_len, mpfr_prec_t precision, mpfr_prec_t cap) {
  PairSearchResult res;
  res.entries = enumerate_words(generators, max_len, precision, cap);
  std::vector<size_t> hyp;
  for (size_t i = 0; i < res.entries.size(); ++i)
    if (res.entries[i].hyperbolic()) hyp.push_back(i);
  if (hyp.size() < 2) {
    res.reason = "no-hyperbolics";
    return res;
  }
  // pairs ordered by total word length, then by entry order
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < hyp.size(); ++a)
    for (size_t b = a + 1; b < hyp.size(); ++b) pairs.emplace_back(hyp[a], hyp[b]);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    size_t lx = res.entries[x.first].word.letters.size() + res.entries[x.second].word.letters.size();
    size_t ly = res.entries[y.first].word.letters.size() + res.entries[y.second].word.letters.size();
    return lx < ly;
  });
  for (const auto& [i, j] : pairs) {
    IndependenceCertificate cert = certify_pair(res.entries[i], res.entries[j], precision);
    bool independent = cert.verdict == Verdict::independent;
    res.verdicts.emplace_back(i, j, std::move(cert));
    if (independent) {
      res.found = true;
      res.index1 = i;
      res.index2 = j;
      return res;
    }
  }
  res.reason = "all-dependent";
  return res;
}

DensityReport density_report(const LengthEntry& e1, const LengthEntry& e2,
                             const IndependenceCertificate& cert, long grid) {
  if (cert.verdict != Verdict::independent)
    throw std::invalid_argument("density report requires an independent certificate");
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  double l1 = e1.length->mid_double();
  double l2 = e2.length->mid_double();
  DensityReport rep;
  rep.grid = grid;
  double best = -1;
  for (long a = 1; a <= grid; ++a)
    for (long b = -grid; b <= grid; ++b) {
      if (b == 0) continue;
      double v = std::fabs(a * l1 + b * l2);
      if (best < 0 || v < best) {
        best = v;
        rep.best_a = a;
        rep.best_b = b;
      }
    }
  rep.min_abs = best;
  return rep;
}

}  // namespace spectra
