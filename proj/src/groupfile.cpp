#include "spectra/groupfile.hpp"

#include <fstream>
#include <sstream>

namespace spectra {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw GroupFileError(where + ": " + what);
}

Rational coord_value(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer or a rational string");
}

}  // namespace

GroupFile parse_group_json(const json& j) {
  if (!j.is_object()) throw GroupFileError("top level must be a JSON object");
  GroupFile out;

  if (j.contains("metadata")) {
    const auto& md = j.at("metadata");
    if (!md.is_object()) fail("metadata", "must be an object");
    out.name = md.value("name", "");
    out.notes = md.value("notes", "");
  }

  if (!j.contains("field") || !j.at("field").is_object())
    throw GroupFileError("field: missing or not an object");
  const auto& fj = j.at("field");
  if (!fj.contains("poly") || !fj.at("poly").is_array())
    fail("field.poly", "missing coefficient array");
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < fj.at("poly").size(); ++i) {
    const auto& c = fj.at("poly")[i];
    Rational v = coord_value(c, "field.poly[" + std::to_string(i) + "]");
    if (v.get_den() != 1) fail("field.poly[" + std::to_string(i) + "]", "must be an integer");
    coeffs.push_back(v);
  }
  QPolynomial poly{std::move(coeffs)};
  if (poly.degree() < 1) fail("field.poly", "must be nonconstant");
  if (!poly.is_monic()) fail("field.poly", "must be monic");

  try {
    if (fj.contains("embedding")) {
      const auto& e = fj.at("embedding");
      if (!e.is_array() || e.size() != 2) fail("field.embedding", "expected [lo, hi]");
      Rational lo = coord_value(e[0], "field.embedding[0]");
      Rational hi = coord_value(e[1], "field.embedding[1]");
      out.field = NumberField::create(poly, lo, hi);
    } else {
      out.field = NumberField::create_largest_root(poly);
    }
  } catch (const std::invalid_argument& e) {
    fail("field", e.what());
  }

  if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
    throw GroupFileError("generators: missing or empty");
  size_t d = static_cast<size_t>(out.field->degree());
  for (size_t gi = 0; gi < j.at("generators").size(); ++gi) {
    const auto& gj = j.at("generators")[gi];
    std::string where = "generators[" + std::to_string(gi) + "]";
    if (!gj.is_array() || gj.size() != 4) fail(where, "expected four entries [a, b, c, d]");
    std::vector<NFElement> entries;
    for (size_t k = 0; k < 4; ++k) {
      const auto& ej = gj[k];
      std::string ewhere = where + "[" + std::to_string(k) + "]";
      if (!ej.is_array()) fail(ewhere, "entry must be a coordinate array");
      if (ej.size() > d) fail(ewhere, "more coordinates than the field degree");
      std::vector<Rational> coords(d, Rational(0));
      for (size_t ci = 0; ci < ej.size(); ++ci)
        coords[ci] = coord_value(ej[ci], ewhere + "[" + std::to_string(ci) + "]");
      entries.push_back(out.field->element(std::move(coords)));
    }
    try {
      out.generators.emplace_back(entries[0], entries[1], entries[2], entries[3]);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }

  // canonical echo
  json canon;
  canon["metadata"] = {{"name", out.name}, {"notes", out.notes}};
  json pc = json::array();
  for (const auto& c : out.field->defining_poly().coeffs()) pc.push_back(rational_str(c));
  auto [elo, ehi] = out.field->embedding_interval();
  canon["field"] = {{"poly", pc}, {"embedding", {rational_str(elo), rational_str(ehi)}}};
  json gens = json::array();
  for (const auto& g : out.generators) {
    json mat = json::array();
    for (const NFElement* e : {&g.a(), &g.b(), &g.c(), &g.d()}) {
      json coords = json::array();
      for (const auto& c : e->coords()) coords.push_back(rational_str(c));
      mat.push_back(coords);
    }
    gens.push_back(mat);
  }
  canon["generators"] = gens;
  out.canonical = canon;
  return out;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupFileError("cannot open group file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // convert byte offset to a line/column anchor
    size_t line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw GroupFileError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": JSON parse error: " + e.what());
  }
  try {
    return parse_group_json(j);
  } catch (const GroupFileError& e) {
    throw GroupFileError(path + ": " + e.what());
  }
}

}  // namespace spectra
