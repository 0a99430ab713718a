#pragma once

#include <json.hpp>

#include "spectra/groupfile.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct ReportConfig {
  long max_word_len = 6;
  mpfr_prec_t precision = 256;
  mpfr_prec_t precision_cap = kDefaultPrecisionCap;
  std::string command = "spectrum";  // "spectrum" or "certify"
};

// Builds the canonical JSON report for a group file. All rationals are
// decimal strings, all interval endpoints exact dyadics; the output is a
// deterministic function of (group, config).
nlohmann::json build_report(const GroupFile& group, const ReportConfig& cfg);

struct VerifyResult {
  bool ok = true;
  std::string error;  // first violated equality, with a JSON-pointer anchor
};

// Re-checks a report using exact arithmetic only: per-entry and
// per-certificate identities (word products, eigenvalue equations, witness
// powers, exact refutations, bound re-derivations) plus a deterministic
// recomputation of every derived field.
VerifyResult verify_report(const nlohmann::json& report);

std::string dump_canonical(const nlohmann::json& j);

// Serialization helpers shared by the report builder and the verifier.
nlohmann::json interval_json(const RealInterval& iv);
nlohmann::json coords_json(const NFElement& e);
nlohmann::json field_json(const FieldPtr& f);
nlohmann::json entry_json(const LengthEntry& e);
nlohmann::json root_bound_json(const RootBoundCertificate& rb);
nlohmann::json certificate_json(const IndependenceCertificate& c, size_t i1, size_t i2,
                                const std::optional<DensityReport>& density);

}  // namespace spectra
