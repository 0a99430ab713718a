#pragma once

#include "spectra/moebius.hpp"
#include "spectra/radicals.hpp"

namespace spectra {

enum class Verdict { dependent, independent, inconclusive };

std::string verdict_name(Verdict v);

// Certificate for a pair of translation lengths.
//
//   dependent(p, q):  p * len1 == q * len2 exactly, witnessed by
//                     lambda1^p == lambda2^q in the compositum.
//   independent:      if p * len1 == q * len2 for reduced p/q, Bezout forces
//                     lambda1^(1/q), lambda2^(1/p) into the compositum, so
//                     q <= bound_q and p <= bound_p by the root bounds; every
//                     such candidate consistent with the log-ratio interval is
//                     listed in `checked` and refuted by exact power
//                     comparison, and the interval excludes all others.
struct IndependenceCertificate {
  Verdict verdict = Verdict::inconclusive;
  long p = 0, q = 0;                           // dependent verdicts
  Integer bound_p, bound_q;                    // independent verdicts
  std::vector<std::pair<long, long>> checked;  // exactly refuted (p, q)
  std::string reason;                          // inconclusive verdicts

  FieldPtr compositum_field;
  std::optional<FieldHom> hom1, hom2;          // eigenvalue fields -> compositum
  std::optional<NFElement> lambda1, lambda2;   // images in the compositum
  std::optional<RootBoundCertificate> rb1, rb2;
  std::optional<RealInterval> log_ratio;       // encloses len2 / len1
  mpfr_prec_t precision = 0;
};

IndependenceCertificate certify_pair(const LengthEntry& e1, const LengthEntry& e2,
                                     mpfr_prec_t precision);

// Spectrum search: first pair (by total word length, then entry order)
// certified independent, plus the verdicts examined along the way.
struct PairSearchResult {
  std::vector<LengthEntry> entries;
  bool found = false;
  size_t index1 = 0, index2 = 0;
  std::vector<std::tuple<size_t, size_t, IndependenceCertificate>> verdicts;
  std::string reason;  // when not found: "no-hyperbolics" or "all-dependent"
};

PairSearchResult find_independent_pair(const std::vector<MoebiusMatrix>& generators,
                                       long max_len, mpfr_prec_t precision,
                                       mpfr_prec_t cap = kDefaultPrecisionCap);

// Minimum of |a len1 + b len2| over 0 < |a|, |b| <= grid; numeric
// illustration of how small integer combinations of an independent pair get.
struct DensityReport {
  long grid = 0;
  double min_abs = 0.0;
  long best_a = 0, best_b = 0;
};
DensityReport density_report(const LengthEntry& e1, const LengthEntry& e2,
                             const IndependenceCertificate& cert, long grid);

}  // namespace spectra
