#include <doctest.h>

#ifdef SPECTRA_BIN

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPECTRA_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(SPECTRA_DATA_DIR) + "/" + name; }
std::string work(const std::string& name) {
  return std::string(SPECTRA_TEST_WORK_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli: spectrum table for PSL(2,Z)") {
  auto res = run_cli("spectrum " + data("psl2z.json") + " --max-word-len 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("1.9248473002") != std::string::npos);
  CHECK(res.output.find("hyperbolic") != std::string::npos);
  CHECK(res.output.find("non-elementarity witness: entries") != std::string::npos);
}

TEST_CASE("cli: unipotent spectrum has no hyperbolic rows") {
  auto res = run_cli("spectrum " + data("unipotent.json") + " --max-word-len 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("hyperbolic") == std::string::npos);
  CHECK(res.output.find("parabolic") != std::string::npos);
}

TEST_CASE("cli: malformed group file exits 2") {
  std::string path = work("det0.json");
  std::ofstream(path) << R"({"field": {"poly": [0, 1]},
    "generators": [[["1"], ["1"], ["1"], ["1"]]]})";
  auto res = run_cli("spectrum " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("determinant") != std::string::npos);

  std::string bad = work("unparseable.json");
  std::ofstream(bad) << "{ not json";
  auto res2 = run_cli("spectrum " + bad);
  CHECK(res2.exit_code == 2);
  CHECK(res2.output.find(":1:") != std::string::npos);  // line-anchored
}

TEST_CASE("cli: certify finds the PSL(2,Z) pair and verify accepts it") {
  std::string rep = work("psl2z_cert.json");
  auto res = run_cli("certify " + data("psl2z.json") + " --max-word-len 6 --json " + rep);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("independent pair") != std::string::npos);
  auto ver = run_cli("verify " + rep);
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("verifies") != std::string::npos);
}

TEST_CASE("cli: cyclic group certify exits 4 with all-dependent matrix") {
  auto res = run_cli("certify " + data("cyclic_trace3.json") + " --max-word-len 5");
  CHECK(res.exit_code == 4);
  CHECK(res.output.find("all-dependent") != std::string::npos);
}

TEST_CASE("cli: tampered report is rejected with exit 5") {
  std::string rep = work("tamper_cert.json");
  auto res = run_cli("certify " + data("psl2z.json") + " --max-word-len 5 --json " + rep);
  CHECK(res.exit_code == 0);
  std::ifstream in(rep);
  nlohmann::json j = nlohmann::json::parse(in);
  // flip a digit in a checked pair / p,q field if present, else in a length
  bool mutated = false;
  for (auto& c : j["certificates"]) {
    if (c.contains("p")) {
      c["p"] = c["p"].get<long>() + 1;
      mutated = true;
      break;
    }
  }
  if (!mutated) {
    for (auto& e : j["spectrum"]) {
      if (!e.contains("length")) continue;
      std::string s = e["length"]["display"].get<std::string>();
      s[s.size() - 1] = s.back() == '9' ? '3' : static_cast<char>(s.back() + 1);
      e["length"]["display"] = s;
      mutated = true;
      break;
    }
    REQUIRE(mutated);
  }
  std::string bad = work("tampered.json");
  std::ofstream(bad) << j.dump(2) << "\n";
  auto ver = run_cli("verify " + bad);
  CHECK(ver.exit_code == 5);
  CHECK(ver.output.find("verification failed") != std::string::npos);
}

#endif  // SPECTRA_BIN
