#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectra/report.hpp"
#include "spectra/version.hpp"

namespace py = pybind11;
using namespace spectra;

namespace {

// thin value wrappers so the immutable shared_ptr<const NumberField> core
// maps cleanly onto python objects

struct PyField {
  FieldPtr f;
};

struct PyElement {
  NFElement e;
};

struct PyMatrix {
  MoebiusMatrix m;
};

struct PyEntry {
  LengthEntry e;
};

struct PyCertificate {
  IndependenceCertificate c;
};

std::vector<Rational> parse_coord_list(const std::vector<std::string>& coords, long degree) {
  if (static_cast<long>(coords.size()) > degree)
    throw std::invalid_argument("more coordinates than the field degree");
  std::vector<Rational> out(static_cast<size_t>(degree), Rational(0));
  for (size_t i = 0; i < coords.size(); ++i) out[i] = parse_rational(coords[i]);
  return out;
}

std::vector<std::string> coord_strings(const NFElement& e) {
  std::vector<std::string> out;
  for (const auto& c : e.coords()) out.push_back(rational_str(c));
  return out;
}

py::dict interval_dict(const RealInterval& iv) {
  py::dict d;
  d["lo"] = iv.lo_str();
  d["hi"] = iv.hi_str();
  d["lo_float"] = iv.lo_q().get_d();
  d["hi_float"] = iv.hi_q().get_d();
  d["mid"] = iv.mid_double();
  return d;
}

PyEntry make_entry(const LengthEntry& e) { return PyEntry{e}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact translation-length spectra of Fuchsian groups";
  m.attr("__version__") = kVersion;

  py::register_exception<PrecisionCapReached>(m, "PrecisionCapReached");
  py::register_exception<GroupFileError>(m, "GroupFileError");

  py::class_<PyField>(m, "NumberField")
      .def(py::init([](const std::vector<std::string>& poly,
                       std::optional<std::pair<std::string, std::string>> embedding) {
             std::vector<Rational> cs;
             for (const auto& c : poly) cs.push_back(parse_rational(c));
             QPolynomial f{std::move(cs)};
             if (embedding)
               return PyField{NumberField::create(f, parse_rational(embedding->first),
                                                  parse_rational(embedding->second))};
             return PyField{NumberField::create_largest_root(f)};
           }),
           py::arg("poly"), py::arg("embedding") = std::nullopt,
           "Number field Q[x]/(poly) with a distinguished real root (largest "
           "real root when no isolating interval is given). Coefficients are "
           "rational strings, lowest degree first.")
      .def_static("rationals", [] { return PyField{NumberField::rationals()}; })
      .def_property_readonly("degree", [](const PyField& f) { return f.f->degree(); })
      .def_property_readonly("poly",
                             [](const PyField& f) {
                               std::vector<std::string> out;
                               for (const auto& c : f.f->defining_poly().coeffs())
                                 out.push_back(rational_str(c));
                               return out;
                             })
      .def("element",
           [](const PyField& f, const std::vector<std::string>& coords) {
             return PyElement{f.f->element(parse_coord_list(coords, f.f->degree()))};
           })
      .def("__call__",
           [](const PyField& f, const std::string& rational) {
             return PyElement{f.f->from_rational(parse_rational(rational))};
           })
      .def("generator", [](const PyField& f) { return PyElement{f.f->generator()}; })
      .def("__repr__", [](const PyField& f) {
        return "NumberField(" + f.f->defining_poly().str() + ")";
      });

  py::class_<PyElement>(m, "Element")
      .def_property_readonly("coords", [](const PyElement& a) { return coord_strings(a.e); })
      .def("__add__", [](const PyElement& a, const PyElement& b) { return PyElement{a.e + b.e}; })
      .def("__sub__", [](const PyElement& a, const PyElement& b) { return PyElement{a.e - b.e}; })
      .def("__mul__", [](const PyElement& a, const PyElement& b) { return PyElement{a.e * b.e}; })
      .def("__truediv__",
           [](const PyElement& a, const PyElement& b) { return PyElement{a.e / b.e}; })
      .def("__neg__", [](const PyElement& a) { return PyElement{-a.e}; })
      .def("__pow__", [](const PyElement& a, long k) { return PyElement{a.e.pow(k)}; })
      .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.e == b.e; })
      .def("inverse", [](const PyElement& a) { return PyElement{a.e.inverse()}; })
      .def("is_zero", [](const PyElement& a) { return a.e.is_zero(); })
      .def("minpoly",
           [](const PyElement& a) {
             QPolynomial mp = nf_minpoly(a.e);
             std::vector<std::string> out;
             for (const auto& c : mp.coeffs()) out.push_back(rational_str(c));
             return out;
           })
      .def("norm", [](const PyElement& a) { return rational_str(nf_norm(a.e)); })
      .def("sign", [](const PyElement& a) { return exact_sign(a.e); })
      .def(
          "embed",
          [](const PyElement& a, long precision) { return interval_dict(embed_real(a.e, precision)); },
          py::arg("precision") = 64)
      .def("__repr__", [](const PyElement& a) { return a.e.str(); });

  m.def(
      "membership",
      [](const PyElement& r, long mm, long n) {
        auto res = nf_membership_power(r.e, mm, n);
        return py::make_tuple(
            res.witness ? py::cast(PyElement{*res.witness}) : py::none().cast<py::object>(),
            res.complete);
      },
      py::arg("r"), py::arg("m"), py::arg("n"),
      "Witness for r^(m/n) in its field, or None; second value reports "
      "whether a negative answer is conclusive.");

  m.def(
      "norm_filter",
      [](const PyElement& r, long n) { return norm_filter(r.e, n); },
      py::arg("r"), py::arg("n"));

  m.def(
      "weil_height",
      [](const PyElement& a, long precision) {
        WeilHeight h = weil_height(a.e, precision);
        py::dict d = interval_dict(h.value);
        d["degree"] = h.degree;
        return d;
      },
      py::arg("a"), py::arg("precision") = 128);

  m.def(
      "root_bound",
      [](const PyElement& r, long precision) {
        RootBoundCertificate c = root_bound(r.e, precision);
        py::dict d;
        d["branch"] = c.branch == RootBoundBranch::valuation ? "valuation" : "unit-height";
        d["bound"] = c.bound.get_si();
        d["norm"] = rational_str(c.norm);
        d["complete"] = c.exponents_complete;
        py::dict exps;
        for (const auto& [n, w] : c.exponents) exps[py::int_(n)] = PyElement{w};
        d["exponents"] = exps;
        if (c.height) d["height"] = interval_dict(c.height->value);
        return d;
      },
      py::arg("r"), py::arg("precision") = 256);

  m.def(
      "radical_degree",
      [](const PyElement& r, long n) {
        auto rd = radical_degree(r.e, n);
        return py::make_tuple(rd.t, rd.complete);
      },
      py::arg("r"), py::arg("n"));

  m.def(
      "denominator_bound",
      [](const PyElement& r, long t) { return denominator_bound(r.e, t).n0; },
      py::arg("r"), py::arg("t"));

  m.def("bezout_pair", [](long mm, long n) {
    auto [x, y] = bezout_pair(mm, n);
    return py::make_tuple(x.get_si(), y.get_si());
  });

  py::class_<PyMatrix>(m, "MoebiusMatrix")
      .def(py::init([](const PyField& f, const std::vector<std::vector<std::string>>& entries) {
             if (entries.size() != 4)
               throw std::invalid_argument("expected four entries [a, b, c, d]");
             std::vector<NFElement> es;
             for (const auto& coords : entries)
               es.push_back(f.f->element(parse_coord_list(coords, f.f->degree())));
             return PyMatrix{MoebiusMatrix(es[0], es[1], es[2], es[3])};
           }),
           py::arg("field"), py::arg("entries"))
      .def("__matmul__", [](const PyMatrix& a, const PyMatrix& b) { return PyMatrix{a.m * b.m}; })
      .def("__mul__", [](const PyMatrix& a, const PyMatrix& b) { return PyMatrix{a.m * b.m}; })
      .def("inverse", [](const PyMatrix& a) { return PyMatrix{a.m.inverse()}; })
      .def("trace", [](const PyMatrix& a) { return PyElement{a.m.trace()}; })
      .def("__eq__", [](const PyMatrix& a, const PyMatrix& b) { return a.m == b.m; })
      .def("__repr__", [](const PyMatrix& a) { return a.m.str(); });

  m.def("classify", [](const PyMatrix& mm) { return matrix_class_name(classify(mm.m)); });

  py::class_<PyEntry>(m, "LengthEntry")
      .def_property_readonly("word", [](const PyEntry& e) { return e.e.word.name(); })
      .def_property_readonly("letters", [](const PyEntry& e) { return e.e.word.letters; })
      .def_property_readonly("cls",
                             [](const PyEntry& e) { return matrix_class_name(e.e.cls); })
      .def_property_readonly("abs_trace",
                             [](const PyEntry& e) { return coord_strings(e.e.abs_trace); })
      .def_property_readonly("hyperbolic", [](const PyEntry& e) { return e.e.hyperbolic(); })
      .def_property_readonly("eigenvalue",
                             [](const PyEntry& e) -> py::object {
                               if (!e.e.eigenvalue) return py::none();
                               return py::cast(PyElement{*e.e.eigenvalue});
                             })
      .def_property_readonly("length",
                             [](const PyEntry& e) -> py::object {
                               if (!e.e.length) return py::none();
                               py::dict d = interval_dict(*e.e.length);
                               d["display"] = e.e.length->decimal(12);
                               return d;
                             })
      .def("__repr__", [](const PyEntry& e) {
        std::string s = "LengthEntry(word=" + e.e.word.name() + ", class=" +
                        matrix_class_name(e.e.cls);
        if (e.e.length) s += ", length=" + e.e.length->decimal(12);
        return s + ")";
      });

  m.def(
      "translation_length",
      [](const PyMatrix& mm, long precision) {
        return make_entry(translation_length(mm.m, precision));
      },
      py::arg("matrix"), py::arg("precision") = 256);

  m.def(
      "enumerate_words",
      [](const std::vector<PyMatrix>& gens, long max_len, long precision) {
        std::vector<MoebiusMatrix> ms;
        for (const auto& g : gens) ms.push_back(g.m);
        std::vector<PyEntry> out;
        for (auto& e : enumerate_words(ms, max_len, precision)) out.push_back(make_entry(e));
        return out;
      },
      py::arg("generators"), py::arg("max_len") = 6, py::arg("precision") = 256);

  m.def("trace_field", [](const std::vector<PyMatrix>& gens) {
    std::vector<MoebiusMatrix> ms;
    for (const auto& g : gens) ms.push_back(g.m);
    return PyField{trace_field(ms)};
  });

  py::class_<PyCertificate>(m, "Certificate")
      .def_property_readonly("verdict",
                             [](const PyCertificate& c) { return verdict_name(c.c.verdict); })
      .def_property_readonly("p", [](const PyCertificate& c) { return c.c.p; })
      .def_property_readonly("q", [](const PyCertificate& c) { return c.c.q; })
      .def_property_readonly("bound_p",
                             [](const PyCertificate& c) { return c.c.bound_p.get_si(); })
      .def_property_readonly("bound_q",
                             [](const PyCertificate& c) { return c.c.bound_q.get_si(); })
      .def_property_readonly("checked", [](const PyCertificate& c) { return c.c.checked; })
      .def_property_readonly("reason", [](const PyCertificate& c) { return c.c.reason; })
      .def("__repr__", [](const PyCertificate& c) {
        std::string s = "Certificate(" + verdict_name(c.c.verdict);
        if (c.c.verdict == Verdict::dependent)
          s += ", p=" + std::to_string(c.c.p) + ", q=" + std::to_string(c.c.q);
        return s + ")";
      });

  m.def(
      "certify_pair",
      [](const PyEntry& e1, const PyEntry& e2, long precision) {
        return PyCertificate{certify_pair(e1.e, e2.e, precision)};
      },
      py::arg("e1"), py::arg("e2"), py::arg("precision") = 256,
      "Certifies that two translation lengths are Q-linearly dependent "
      "(with the exact relation) or independent (with a denominator bound "
      "and exhaustive exact refutations).");

  m.def(
      "find_independent_pair",
      [](const std::vector<PyMatrix>& gens, long max_len, long precision) -> py::object {
        std::vector<MoebiusMatrix> ms;
        for (const auto& g : gens) ms.push_back(g.m);
        PairSearchResult res = find_independent_pair(ms, max_len, precision);
        if (!res.found) return py::none();
        const auto& cert = std::get<2>(res.verdicts.back());
        return py::make_tuple(make_entry(res.entries[res.index1]),
                              make_entry(res.entries[res.index2]), PyCertificate{cert});
      },
      py::arg("generators"), py::arg("max_len") = 6, py::arg("precision") = 256);

  m.def(
      "density_report",
      [](const PyEntry& e1, const PyEntry& e2, const PyCertificate& c, long grid) {
        DensityReport r = density_report(e1.e, e2.e, c.c, grid);
        py::dict d;
        d["grid"] = r.grid;
        d["min_abs"] = r.min_abs;
        d["best_a"] = r.best_a;
        d["best_b"] = r.best_b;
        return d;
      },
      py::arg("e1"), py::arg("e2"), py::arg("certificate"), py::arg("grid") = 100);

  m.def("load_group", [](const std::string& text) {
    GroupFile g = parse_group_json(nlohmann::json::parse(text));
    std::vector<PyMatrix> gens;
    for (const auto& mm : g.generators) gens.push_back(PyMatrix{mm});
    return py::make_tuple(PyField{g.field}, gens, g.name);
  });

  m.def(
      "build_report",
      [](const std::string& group_json, const std::string& command, long max_len,
         long precision) {
        GroupFile g = parse_group_json(nlohmann::json::parse(group_json));
        ReportConfig cfg;
        cfg.command = command;
        cfg.max_word_len = max_len;
        cfg.precision = precision;
        return dump_canonical(build_report(g, cfg));
      },
      py::arg("group_json"), py::arg("command") = "certify", py::arg("max_len") = 6,
      py::arg("precision") = 256);

  m.def("verify_report", [](const std::string& report_json) {
    VerifyResult r = verify_report(nlohmann::json::parse(report_json));
    return py::make_tuple(r.ok, r.error);
  });
}
