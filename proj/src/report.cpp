#include "spectra/report.hpp"

#include <numeric>
#include <sstream>

#include "spectra/version.hpp"

namespace spectra {

using nlohmann::json;

std::string dump_canonical(const json& j) { return j.dump(2); }

json interval_json(const RealInterval& iv) {
  return json{{"lo", iv.lo_str()}, {"hi", iv.hi_str()},
              {"precision", static_cast<long>(iv.precision())}};
}

json coords_json(const NFElement& e) {
  json a = json::array();
  for (const auto& c : e.coords()) a.push_back(rational_str(c));
  return a;
}

json field_json(const FieldPtr& f) {
  json pc = json::array();
  for (const auto& c : f->defining_poly().coeffs()) pc.push_back(rational_str(c));
  auto [lo, hi] = f->embedding_interval();
  return json{{"poly", pc}, {"embedding", {rational_str(lo), rational_str(hi)}}};
}

json entry_json(const LengthEntry& e) {
  json out;
  out["word"] = e.word.name();
  out["letters"] = e.word.letters;
  out["class"] = matrix_class_name(e.cls);
  out["trace"] = coords_json(e.trace);
  out["abs_trace"] = coords_json(e.abs_trace);
  if (e.hyperbolic()) {
    out["eigenvalue"] = json{{"field", field_json(e.ext_field)},
                             {"base_image", coords_json(e.base_to_ext->generator_image)},
                             {"coords", coords_json(*e.eigenvalue)}};
    json lj = interval_json(*e.length);
    lj["display"] = e.length->decimal(12);
    out["length"] = lj;
  }
  return out;
}

json root_bound_json(const RootBoundCertificate& rb) {
  json out;
  out["branch"] = rb.branch == RootBoundBranch::valuation ? "valuation" : "unit-height";
  out["bound"] = rb.bound.get_str();
  out["norm"] = rational_str(rb.norm);
  out["complete"] = rb.exponents_complete;
  if (rb.height) {
    json h = interval_json(rb.height->value);
    h["degree"] = rb.height->degree;
    out["height"] = h;
  }
  json exps = json::array();
  for (const auto& [n, wit] : rb.exponents)
    exps.push_back(json{{"n", n}, {"witness", coords_json(wit)}});
  out["exponents"] = exps;
  return out;
}

json certificate_json(const IndependenceCertificate& c, size_t i1, size_t i2,
                      const std::optional<DensityReport>& density) {
  json out;
  out["entry1"] = i1;
  out["entry2"] = i2;
  out["verdict"] = verdict_name(c.verdict);
  out["precision"] = static_cast<long>(c.precision);
  if (c.compositum_field) {
    out["compositum"] = json{{"field", field_json(c.compositum_field)},
                             {"hom1", coords_json(c.hom1->generator_image)},
                             {"hom2", coords_json(c.hom2->generator_image)}};
    out["lambda1"] = coords_json(*c.lambda1);
    out["lambda2"] = coords_json(*c.lambda2);
  }
  if (c.verdict == Verdict::dependent) {
    out["p"] = c.p;
    out["q"] = c.q;
  }
  if (c.verdict == Verdict::independent) {
    out["bound_p"] = c.bound_p.get_str();
    out["bound_q"] = c.bound_q.get_str();
    json checked = json::array();
    for (auto [p, q] : c.checked) checked.push_back(json::array({p, q}));
    out["checked"] = checked;
  }
  if (c.rb1) out["root_bound_1"] = root_bound_json(*c.rb1);
  if (c.rb2) out["root_bound_2"] = root_bound_json(*c.rb2);
  if (c.log_ratio) out["log_ratio"] = interval_json(*c.log_ratio);
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (density)
    out["density"] = json{{"grid", density->grid},
                          {"min_abs", density->min_abs},
                          {"best_a", density->best_a},
                          {"best_b", density->best_b}};
  return out;
}

json build_report(const GroupFile& group, const ReportConfig& cfg) {
  json out;
  out["tool"] = "spectra";
  out["version"] = kVersion;
  out["config"] = json{{"command", cfg.command},
                       {"max_word_len", cfg.max_word_len},
                       {"precision", static_cast<long>(cfg.precision)},
                       {"precision_cap", static_cast<long>(cfg.precision_cap)}};
  out["group"] = group.canonical;

  json tf_json;
  {
    FieldPtr tf = trace_field(group.generators);
    json pc = json::array();
    for (const auto& c : tf->defining_poly().coeffs()) pc.push_back(rational_str(c));
    tf_json = json{{"poly", pc}, {"degree", tf->degree()}};
  }
  out["trace_field"] = tf_json;

  if (cfg.command == "spectrum") {
    auto entries = enumerate_words(group.generators, cfg.max_word_len, cfg.precision,
                                   cfg.precision_cap);
    json sj = json::array();
    for (const auto& e : entries) sj.push_back(entry_json(e));
    out["spectrum"] = sj;
    auto wit = nonelementarity_witness(entries);
    out["witness"] = wit ? json{{"entry1", wit->idx1},
                                {"entry2", wit->idx2},
                                {"commutator_trace", coords_json(wit->commutator_trace)}}
                         : json(nullptr);
    out["certificates"] = json::array();
    return out;
  }
  if (cfg.command != "certify") throw std::invalid_argument("unknown report command");

  PairSearchResult search =
      find_independent_pair(group.generators, cfg.max_word_len, cfg.precision, cfg.precision_cap);
  json sj = json::array();
  for (const auto& e : search.entries) sj.push_back(entry_json(e));
  out["spectrum"] = sj;
  auto wit = nonelementarity_witness(search.entries);
  out["witness"] = wit ? json{{"entry1", wit->idx1},
                              {"entry2", wit->idx2},
                              {"commutator_trace", coords_json(wit->commutator_trace)}}
                       : json(nullptr);
  json certs = json::array();
  for (const auto& [i, j, cert] : search.verdicts) {
    std::optional<DensityReport> density;
    if (cert.verdict == Verdict::independent)
      density = density_report(search.entries[i], search.entries[j], cert, 100);
    certs.push_back(certificate_json(cert, i, j, density));
  }
  out["certificates"] = certs;
  out["result"] = search.found
                      ? json{{"found", true},
                             {"entry1", search.index1},
                             {"entry2", search.index2}}
                      : json{{"found", false}, {"reason", search.reason}};
  return out;
}

// ---------------------------------------------------------------------------
// verification

namespace {

// first differing JSON path, depth-first
std::string first_diff(const json& a, const json& b, const std::string& path) {
  if (a == b) return "";
  if (a.type() != b.type()) return path;
  if (a.is_object()) {
    for (auto& [k, v] : a.items()) {
      if (!b.contains(k)) return path + "/" + k;
      auto d = first_diff(v, b.at(k), path + "/" + k);
      if (!d.empty()) return d;
    }
    for (auto& [k, v] : b.items())
      if (!a.contains(k)) return path + "/" + k;
    return path;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return path;
    for (size_t i = 0; i < a.size(); ++i) {
      auto d = first_diff(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return path;
  }
  return path;
}

NFElement parse_coords(const FieldPtr& f, const json& arr, const std::string& where) {
  if (!arr.is_array() || static_cast<long>(arr.size()) != f->degree())
    throw GroupFileError(where + ": bad coordinate vector");
  std::vector<Rational> c;
  for (const auto& v : arr) c.push_back(parse_rational(v.get<std::string>()));
  return f->element(std::move(c));
}

}  // namespace

VerifyResult verify_report(const json& report) {
  auto fail = [](const std::string& msg) { return VerifyResult{false, msg}; };
  try {
    if (!report.is_object()) return fail("report must be a JSON object");
    for (const char* key : {"config", "group", "spectrum", "certificates"})
      if (!report.contains(key)) return fail(std::string("missing field: ") + key);

    const json& cj = report.at("config");
    ReportConfig cfg;
    cfg.command = cj.at("command").get<std::string>();
    cfg.max_word_len = cj.at("max_word_len").get<long>();
    cfg.precision = cj.at("precision").get<long>();
    cfg.precision_cap = cj.at("precision_cap").get<long>();
    if (cfg.command != "spectrum" && cfg.command != "certify")
      return fail("/config/command: unknown command");

    GroupFile group = parse_group_json(report.at("group"));

    // --- spot checks: the exact identities the certificates assert ---
    const json& spectrum = report.at("spectrum");
    if (!spectrum.is_array()) return fail("/spectrum: not an array");
    std::vector<MoebiusMatrix> mats;
    for (size_t i = 0; i < spectrum.size(); ++i) {
      const json& ej = spectrum[i];
      std::string at = "/spectrum/" + std::to_string(i);
      const auto& letters = ej.at("letters");
      MoebiusMatrix m = MoebiusMatrix::identity(group.field);
      int prev = 0;
      for (const auto& lj : letters) {
        int l = lj.get<int>();
        if (l == 0 || std::abs(l) > static_cast<int>(group.generators.size()))
          return fail(at + "/letters: letter out of range");
        if (prev == -l) return fail(at + "/letters: word not freely reduced");
        const MoebiusMatrix& g = group.generators[static_cast<size_t>(std::abs(l) - 1)];
        m = m * (l > 0 ? g : g.inverse());
        prev = l;
      }
      mats.push_back(m);
      NFElement tr = m.trace();
      if (coords_json(tr) != ej.at("trace")) return fail(at + "/trace: letters do not reproduce the trace");
      if (ej.at("class").get<std::string>() == "hyperbolic") {
        const json& ev = ej.at("eigenvalue");
        FieldPtr E;
        try {
          json fj = ev.at("field");
          std::vector<Rational> pc;
          for (const auto& v : fj.at("poly")) pc.push_back(parse_rational(v.get<std::string>()));
          E = NumberField::create(QPolynomial(std::move(pc)),
                                  parse_rational(fj.at("embedding")[0].get<std::string>()),
                                  parse_rational(fj.at("embedding")[1].get<std::string>()));
        } catch (const std::invalid_argument& e) {
          return fail(at + "/eigenvalue/field: " + e.what());
        }
        NFElement base_img = parse_coords(E, ev.at("base_image"), at + "/eigenvalue/base_image");
        if (!eval_poly(group.field->defining_poly(), base_img).is_zero())
          return fail(at + "/eigenvalue/base_image: not a root of the base polynomial");
        NFElement lam = parse_coords(E, ev.at("coords"), at + "/eigenvalue/coords");
        NFElement abs_tr = parse_coords(group.field, ej.at("abs_trace"), at + "/abs_trace");
        NFElement tr_e = eval_poly(abs_tr.as_polynomial(), base_img);
        if (!(lam * lam - lam * tr_e + E->one() == E->zero()))
          return fail(at + "/eigenvalue: lambda^2 - |tr| lambda + 1 != 0");
        if (exact_sign(lam - E->one()) <= 0)
          return fail(at + "/eigenvalue: lambda must exceed 1");
        // certified length: the reported interval must contain 2 log lambda
        RealInterval lam_iv = embed_real(lam, cfg.precision + 8);
        RealInterval len = RealInterval::mul_q(lam_iv.log(cfg.precision + 8), Rational(2),
                                               cfg.precision + 8);
        RealInterval reported = RealInterval::from_dyadic_strings(
            ej.at("length").at("lo").get<std::string>(),
            ej.at("length").at("hi").get<std::string>(),
            ej.at("length").at("precision").get<long>());
        if (!reported.intersects(len))
          return fail(at + "/length: interval is inconsistent with 2 log lambda");
      }
    }

    const json& certs = report.at("certificates");
    if (!certs.is_array()) return fail("/certificates: not an array");
    for (size_t ci = 0; ci < certs.size(); ++ci) {
      const json& c = certs[ci];
      std::string at = "/certificates/" + std::to_string(ci);
      std::string verdict = c.at("verdict").get<std::string>();
      if (verdict == "inconclusive") continue;
      size_t i1 = c.at("entry1").get<size_t>(), i2 = c.at("entry2").get<size_t>();
      if (i1 >= spectrum.size() || i2 >= spectrum.size())
        return fail(at + ": entry index out of range");
      json fj = c.at("compositum").at("field");
      FieldPtr E;
      try {
        std::vector<Rational> pc;
        for (const auto& v : fj.at("poly")) pc.push_back(parse_rational(v.get<std::string>()));
        E = NumberField::create(QPolynomial(std::move(pc)),
                                parse_rational(fj.at("embedding")[0].get<std::string>()),
                                parse_rational(fj.at("embedding")[1].get<std::string>()));
      } catch (const std::invalid_argument& e) {
        return fail(at + "/compositum/field: " + e.what());
      }
      NFElement l1 = parse_coords(E, c.at("lambda1"), at + "/lambda1");
      NFElement l2 = parse_coords(E, c.at("lambda2"), at + "/lambda2");
      // eigenvalue images must be roots of x^2 - |tr| x + 1 for their entries
      for (auto [idx, lam, homkey] :
           {std::tuple<size_t, NFElement, const char*>{i1, l1, "hom1"},
            std::tuple<size_t, NFElement, const char*>{i2, l2, "hom2"}}) {
        NFElement hom_img =
            parse_coords(E, c.at("compositum").at(homkey), at + "/compositum/" + homkey);
        const json& ev = spectrum[idx].at("eigenvalue");
        std::vector<Rational> epc;
        for (const auto& v : ev.at("field").at("poly"))
          epc.push_back(parse_rational(v.get<std::string>()));
        if (!eval_poly(QPolynomial(std::move(epc)), hom_img).is_zero())
          return fail(at + ": hom image is not a root of the eigenvalue field polynomial");
        std::vector<Rational> lc;
        for (const auto& v : ev.at("coords")) lc.push_back(parse_rational(v.get<std::string>()));
        if (!(eval_poly(QPolynomial(std::move(lc)), hom_img) == lam))
          return fail(at + ": lambda image does not match the entry eigenvalue");
      }
      if (verdict == "dependent") {
        long p = c.at("p").get<long>(), q = c.at("q").get<long>();
        if (p < 1 || q < 1 || std::gcd(p, q) != 1)
          return fail(at + ": dependent exponents must be coprime positives");
        if (!(l1.pow(p) == l2.pow(q)))
          return fail(at + ": lambda1^p == lambda2^q fails exactly");
      } else if (verdict == "independent") {
        // re-derive the bounds and candidate list, then re-refute exactly
        RootBoundCertificate rb1 = root_bound(l1, cfg.precision);
        RootBoundCertificate rb2 = root_bound(l2, cfg.precision);
        if (rb1.bound.get_str() != c.at("bound_q").get<std::string>())
          return fail(at + "/bound_q: does not match the re-derived root bound");
        if (rb2.bound.get_str() != c.at("bound_p").get<std::string>())
          return fail(at + "/bound_p: does not match the re-derived root bound");
        for (const auto* rbj : {&c.at("root_bound_1"), &c.at("root_bound_2")}) {
          const RootBoundCertificate& rb = rbj == &c.at("root_bound_1") ? rb1 : rb2;
          const NFElement& lam = rbj == &c.at("root_bound_1") ? l1 : l2;
          for (const auto& ex : rbj->at("exponents")) {
            long n = ex.at("n").get<long>();
            NFElement wit = parse_coords(E, ex.at("witness"), at + "/exponents/witness");
            if (!(wit.pow(n) == lam))
              return fail(at + ": exponent witness fails witness^n == lambda");
          }
        }
        RealInterval ratio = RealInterval::from_dyadic_strings(
            c.at("log_ratio").at("lo").get<std::string>(),
            c.at("log_ratio").at("hi").get<std::string>(),
            c.at("log_ratio").at("precision").get<long>());
        // the reported ratio interval must contain the true log ratio
        RealInterval lg1 = embed_real(l1, cfg.precision).log(cfg.precision);
        RealInterval lg2 = embed_real(l2, cfg.precision).log(cfg.precision);
        RealInterval true_ratio = RealInterval::div(lg2, lg1, cfg.precision);
        if (!ratio.intersects(true_ratio))
          return fail(at + "/log_ratio: inconsistent with the eigenvalues");
        std::vector<std::pair<long, long>> checked;
        for (const auto& pq : c.at("checked"))
          checked.emplace_back(pq[0].get<long>(), pq[1].get<long>());
        size_t pos = 0;
        for (long q = 1; q <= rb1.bound.get_si(); ++q)
          for (long p = 1; p <= rb2.bound.get_si(); ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (!true_ratio.contains(Rational(p, q)) && !ratio.contains(Rational(p, q))) continue;
            // candidate consistent with the interval: must be listed and refuted
            if (pos >= checked.size() || checked[pos] != std::make_pair(p, q))
              return fail(at + "/checked: candidate (" + std::to_string(p) + "," +
                          std::to_string(q) + ") missing");
            if (l1.pow(p) == l2.pow(q))
              return fail(at + ": candidate (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is an exact dependence, certificate is wrong");
            ++pos;
          }
        if (pos != checked.size()) return fail(at + "/checked: extra candidates listed");
      }
    }

    // --- determinism check: regenerate the whole report and compare ---
    json regen = build_report(group, cfg);
    if (regen != report) {
      std::string d = first_diff(report, regen, "");
      return fail("report does not match deterministic regeneration at " +
                  (d.empty() ? std::string("/") : d));
    }
    return VerifyResult{true, ""};
  } catch (const GroupFileError& e) {
    return fail(std::string("group: ") + e.what());
  } catch (const json::exception& e) {
    return fail(std::string("malformed report: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("verification error: ") + e.what());
  }
}

}  // namespace spectra
