#include <doctest.h>

#include <fstream>
#include <random>

#include "spectra/report.hpp"

using namespace spectra;
using nlohmann::json;

namespace {

GroupFile load_data(const std::string& name) {
  return load_group_file(std::string(SPECTRA_DATA_DIR) + "/" + name);
}

ReportConfig certify_cfg(long max_len = 5, long precision = 128) {
  ReportConfig cfg;
  cfg.command = "certify";
  cfg.max_word_len = max_len;
  cfg.precision = precision;
  return cfg;
}

// digit-twiddling mutation inside a JSON string value at `ptr`
json mutate_digit(const json& report, const json::json_pointer& ptr, size_t which = 0) {
  json copy = report;
  std::string s = copy.at(ptr).get<std::string>();
  size_t seen = 0;
  for (char& c : s) {
    if (c >= '0' && c <= '9') {
      if (seen++ == which) {
        c = c == '9' ? '3' : static_cast<char>(c + 1);
        copy[ptr] = s;
        return copy;
      }
    }
  }
  FAIL("no digit to mutate at " << ptr.to_string());
  return copy;
}

}  // namespace

TEST_CASE("group file parsing and validation diagnostics") {
  GroupFile g = load_data("psl2z.json");
  CHECK(g.name == "psl2z");
  CHECK(g.field->degree() == 1);
  CHECK(g.generators.size() == 2);

  // det != 1 is rejected with a located message
  json bad = g.canonical;
  bad["generators"][0] = {{"1"}, {"0"}, {"0"}, {"2"}};
  CHECK_THROWS_WITH_AS(parse_group_json(bad),
                       doctest::Contains("generators[0]"), GroupFileError);

  json bad2 = g.canonical;
  bad2["field"]["poly"] = {1, 1, 1, 0};  // zero leading coefficient
  CHECK_THROWS_AS(parse_group_json(bad2), GroupFileError);
}

TEST_CASE("canonical reports round-trip byte for byte") {
  GroupFile g = load_data("psl2z.json");
  ReportConfig cfg;
  cfg.command = "spectrum";
  cfg.max_word_len = 4;
  cfg.precision = 128;
  json rep = build_report(g, cfg);
  std::string s1 = dump_canonical(rep);
  json reparsed = json::parse(s1);
  CHECK(dump_canonical(reparsed) == s1);
  CHECK(reparsed == rep);
}

TEST_CASE("spectrum report content for PSL(2,Z)") {
  GroupFile g = load_data("psl2z.json");
  ReportConfig cfg;
  cfg.command = "spectrum";
  cfg.max_word_len = 5;
  cfg.precision = 256;
  json rep = build_report(g, cfg);
  CHECK(rep.at("trace_field").at("degree") == 1);
  bool trace3 = false;
  for (const auto& e : rep.at("spectrum")) {
    if (e.at("class") == "hyperbolic" && e.at("abs_trace")[0] == "3") {
      trace3 = true;
      CHECK(e.at("length").at("display").get<std::string>().substr(0, 12) == "1.9248473002");
    }
  }
  CHECK(trace3);
  CHECK_FALSE(rep.at("witness").is_null());
}

TEST_CASE("verify accepts untampered certify reports") {
  for (const char* name : {"psl2z.json", "cyclic_trace3.json", "unipotent.json"}) {
    GroupFile g = load_data(name);
    json rep = build_report(g, certify_cfg());
    VerifyResult v = verify_report(rep);
    INFO(name, ": ", v.error);
    CHECK(v.ok);
  }
}

TEST_CASE("verify accepts a certify report over a quadratic field") {
  GroupFile g = load_data("sqrt2.json");
  json rep = build_report(g, certify_cfg(3, 128));
  VerifyResult v = verify_report(rep);
  INFO(v.error);
  CHECK(v.ok);
}

TEST_CASE("verify rejects edited exponents, witnesses and digits") {
  GroupFile g = load_data("psl2z.json");
  json rep = build_report(g, certify_cfg(6, 256));
  REQUIRE(rep.at("result").at("found").get<bool>());
  REQUIRE(verify_report(rep).ok);

  // locate the independent certificate
  size_t ci = rep.at("certificates").size() - 1;
  std::string base = "/certificates/" + std::to_string(ci);

  SUBCASE("dependent p edited") {
    // first certificate in a PSL2Z run is usually dependent; find one
    for (size_t k = 0; k < rep.at("certificates").size(); ++k) {
      if (rep.at("certificates")[k].at("verdict") == "dependent") {
        json bad = rep;
        long p = bad["certificates"][k]["p"].get<long>();
        bad["certificates"][k]["p"] = p + 1;
        CHECK_FALSE(verify_report(bad).ok);
        return;
      }
    }
  }
  SUBCASE("witness coordinate edited") {
    json::json_pointer ptr(base + "/root_bound_1/exponents/0/witness/0");
    json bad = mutate_digit(rep, ptr);
    CHECK_FALSE(verify_report(bad).ok);
  }
  SUBCASE("length digit edited") {
    // find the hyperbolic entry used by the certificate
    size_t i1 = rep.at("certificates")[ci].at("entry1").get<size_t>();
    json::json_pointer ptr("/spectrum/" + std::to_string(i1) + "/length/lo");
    json bad = mutate_digit(rep, ptr, 3);
    CHECK_FALSE(verify_report(bad).ok);
  }
  SUBCASE("display digit edited") {
    size_t i1 = rep.at("certificates")[ci].at("entry1").get<size_t>();
    json::json_pointer ptr("/spectrum/" + std::to_string(i1) + "/length/display");
    json bad = mutate_digit(rep, ptr, 5);
    CHECK_FALSE(verify_report(bad).ok);
  }
  SUBCASE("bound edited") {
    json::json_pointer ptr(base + "/bound_q");
    json bad = mutate_digit(rep, ptr);
    CHECK_FALSE(verify_report(bad).ok);
  }
}

TEST_CASE("verify accepts reports for randomized groups") {
  // random products of S and T give random PSL(2,Z) subgroups
  std::mt19937 rng(91);
  GroupFile base = load_data("psl2z.json");
  for (int trial = 0; trial < 6; ++trial) {
    MoebiusMatrix a = base.generators[rng() % 2];
    for (int i = 0; i < 3; ++i) a = a * base.generators[rng() % 2];
    MoebiusMatrix b = base.generators[rng() % 2];
    for (int i = 0; i < 2; ++i) b = b * base.generators[rng() % 2];
    json gens = json::array();
    for (const MoebiusMatrix* m : {&a, &b}) {
      json mat = json::array();
      for (const NFElement* e : {&m->a(), &m->b(), &m->c(), &m->d()}) {
        json coords = json::array();
        for (const auto& c : e->coords()) coords.push_back(rational_str(c));
        mat.push_back(coords);
      }
      gens.push_back(mat);
    }
    json gj = {{"metadata", {{"name", "random-" + std::to_string(trial)}, {"notes", ""}}},
               {"field", {{"poly", {0, 1}}}},
               {"generators", gens}};
    GroupFile g = parse_group_json(gj);
    json rep = build_report(g, certify_cfg(3, 128));
    VerifyResult v = verify_report(rep);
    INFO("trial ", trial, ": ", v.error);
    CHECK(v.ok);
  }
}
