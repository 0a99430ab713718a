#pragma once

#include <map>
#include <optional>

#include "spectra/numberfield.hpp"

namespace spectra {

// Answer of the radical membership oracle. A present witness is
// unconditional (verified by exact arithmetic). An absent witness is
// conclusive only when `complete` is set; otherwise the search was heuristic.
struct MembershipResult {
  std::optional<NFElement> witness;
  bool complete = false;
};

// Decides r^(m/n) in K (the field of r) with an exact witness beta,
// beta^n = r^m and beta embedding-positive. r must embed positive.
MembershipResult nf_membership_power(const NFElement& r, long m, long n,
                                     mpfr_prec_t precision_cap = kDefaultPrecisionCap);

// Sound rejection: false only when r^(1/n) is certainly not in the field
// (|N(r)| is not an n-th rational power). Passing proves nothing.
bool norm_filter(const NFElement& r, long n);

// Absolute logarithmic Weil height: (1/d) log M(p) for the primitive integer
// minimal polynomial p, enclosed by a certified interval. Zero exactly on
// roots of unity.
struct WeilHeight {
  RealInterval value;
  long degree = 1;
};
WeilHeight weil_height(const NFElement& a, mpfr_prec_t precision);

enum class RootBoundBranch { valuation, unit_height };

// Finite exponent data for r: every n with r^(1/n) in K divides bound
// (valuation branch) or is at most bound (unit-height branch). The exponent
// map carries exact witnesses; exponents_complete records whether every
// negative membership answer inside the bound was conclusive.
struct RootBoundCertificate {
  NFElement r;
  RootBoundBranch branch = RootBoundBranch::valuation;
  Integer bound;
  Rational norm;
  std::optional<WeilHeight> height;  // unit-height branch only
  std::map<long, NFElement> exponents;
  bool exponents_complete = true;
};
RootBoundCertificate root_bound(const NFElement& r, mpfr_prec_t precision = 256);

// [K(r^(1/n)) : K] via the minimal s with r^(s/n) in K. complete mirrors the
// oracle's flags for the refuted s < t.
struct RadicalDegreeResult {
  long t = 1;
  bool complete = true;
};
RadicalDegreeResult radical_degree(const NFElement& r, long n);

// Minimal n0 such that every reduced m/n with [K(r^(m/n)):K] <= t has n < n0.
struct DenominatorBound {
  long t = 1;
  long n0 = 1;
  bool exponents_complete = true;
  std::vector<RootBoundCertificate> per_power;
};
DenominatorBound denominator_bound(const NFElement& r, long t);

}  // namespace spectra
