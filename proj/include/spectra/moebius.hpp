#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/numberfield.hpp"

namespace spectra {

enum class MatrixClass { identity, elliptic, parabolic, hyperbolic };

std::string matrix_class_name(MatrixClass c);

// Projective determinant-1 matrix over a number field. The representative is
// canonical: the first nonzero entry of (a, b, c, d) embeds positive, so
// M and -M compare equal.
class MoebiusMatrix {
 public:
  MoebiusMatrix() = default;  // placeholder; real matrices come from the validating ctor
  MoebiusMatrix(NFElement a, NFElement b, NFElement c, NFElement d,
                mpfr_prec_t cap = kDefaultPrecisionCap);
  static MoebiusMatrix identity(const FieldPtr& field);

  const NFElement& a() const { return a_; }
  const NFElement& b() const { return b_; }
  const NFElement& c() const { return c_; }
  const NFElement& d() const { return d_; }
  const FieldPtr& field() const { return a_.field(); }

  MoebiusMatrix operator*(const MoebiusMatrix& o) const;
  MoebiusMatrix inverse() const;
  NFElement trace() const { return a_ + d_; }
  bool is_identity() const;
  bool operator==(const MoebiusMatrix& o) const;

  std::string str() const;

 private:
  NFElement a_, b_, c_, d_;
  void canonicalize(mpfr_prec_t cap);
};

// Freely reduced word in the generators: letters are +-(i+1) for generator i,
// with the ordered matrix product carried along.
struct Word {
  std::vector<int> letters;
  MoebiusMatrix matrix;
  std::string name() const;  // "a", "B" (capital = inverse), "" for the empty word
};

MatrixClass classify(const MoebiusMatrix& m, mpfr_prec_t cap = kDefaultPrecisionCap);

struct LengthEntry {
  Word word;
  NFElement trace;
  NFElement abs_trace;
  MatrixClass cls = MatrixClass::identity;
  // hyperbolic entries only:
  FieldPtr ext_field;                    // E = K or quadratic over K
  std::optional<FieldHom> base_to_ext;   // K -> E
  std::optional<NFElement> eigenvalue;   // lambda > 1, lambda + 1/lambda = |trace|
  std::optional<RealInterval> length;    // contains 2 log lambda
  mpfr_prec_t precision = 0;
  bool hyperbolic() const { return cls == MatrixClass::hyperbolic; }
};

// Exact eigenvalue and certified length of a hyperbolic element.
LengthEntry translation_length(const Word& w, mpfr_prec_t precision,
                               mpfr_prec_t cap = kDefaultPrecisionCap);
LengthEntry translation_length(const MoebiusMatrix& m, mpfr_prec_t precision,
                               mpfr_prec_t cap = kDefaultPrecisionCap);

// One entry per freely reduced word of length <= max_len, deduplicated by
// (|trace|, class), in shortlex order of the first representative.
std::vector<LengthEntry> enumerate_words(const std::vector<MoebiusMatrix>& generators,
                                         long max_len, mpfr_prec_t precision,
                                         mpfr_prec_t cap = kDefaultPrecisionCap);

// Subfield of the ambient field generated by traces of single generators,
// pairs and triples, with sampled longer words as a stabilization check.
FieldPtr trace_field(const std::vector<MoebiusMatrix>& generators);

// Sufficient witness of non-elementarity: two hyperbolic entries whose
// commutator has trace != 2 exactly.
struct NonElementarityWitness {
  size_t idx1 = 0, idx2 = 0;
  NFElement commutator_trace;
};
std::optional<NonElementarityWitness> nonelementarity_witness(
    const std::vector<LengthEntry>& entries);

}  // namespace spectra
