#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spectra/report.hpp"
#include "spectra/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitNoPair = 4;
constexpr int kExitVerifyFailed = 5;

long env_precision_cap() {
  const char* v = std::getenv("SPECTRA_PRECISION_CAP");
  if (!v) return spectra::kDefaultPrecisionCap;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (end == v || cap < 64) {
    std::cerr << "spectra: ignoring invalid SPECTRA_PRECISION_CAP\n";
    return spectra::kDefaultPrecisionCap;
  }
  return cap;
}

void write_json(const nlohmann::json& report, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << spectra::dump_canonical(report) << "\n";
}

void print_spectrum_table(const nlohmann::json& report) {
  std::cout << "word          |trace|               class       length\n";
  std::cout << "------------------------------------------------------------\n";
  for (const auto& e : report.at("spectrum")) {
    std::string word = e.at("word").get<std::string>();
    std::string tr;
    for (const auto& c : e.at("abs_trace")) tr += (tr.empty() ? "" : ",") + c.get<std::string>();
    std::string cls = e.at("class").get<std::string>();
    std::string len = e.contains("length") ? e.at("length").at("display").get<std::string>() : "-";
    std::printf("%-13s %-21s %-11s %s\n", word.c_str(), tr.c_str(), cls.c_str(), len.c_str());
  }
  const auto& w = report.at("witness");
  if (!w.is_null())
    std::cout << "non-elementarity witness: entries " << w.at("entry1") << " and "
              << w.at("entry2") << " (commutator trace != 2)\n";
  else
    std::cout << "non-elementarity witness: none found at this depth (inconclusive)\n";
}

int run_report_command(const std::string& command, const std::string& file, long max_len,
                       long precision, const std::string& json_path) {
  spectra::GroupFile group;
  try {
    group = spectra::load_group_file(file);
  } catch (const spectra::GroupFileError& e) {
    std::cerr << "spectra: " << e.what() << "\n";
    return kExitParse;
  }
  spectra::ReportConfig cfg;
  cfg.command = command;
  cfg.max_word_len = max_len;
  cfg.precision = precision;
  cfg.precision_cap = env_precision_cap();
  if (cfg.precision < 8) {
    std::cerr << "spectra: precision must be at least 8 bits\n";
    return kExitParse;
  }

  nlohmann::json report;
  try {
    report = spectra::build_report(group, cfg);
  } catch (const spectra::PrecisionCapReached& e) {
    std::cerr << "spectra: inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  }
  write_json(report, json_path);

  if (command == "spectrum") {
    print_spectrum_table(report);
    return kExitOk;
  }

  // certify
  print_spectrum_table(report);
  std::cout << "\n";
  const auto& result = report.at("result");
  bool any_inconclusive = false;
  for (const auto& c : report.at("certificates"))
    if (c.at("verdict") == "inconclusive") any_inconclusive = true;
  if (result.at("found").get<bool>()) {
    size_t i1 = result.at("entry1").get<size_t>(), i2 = result.at("entry2").get<size_t>();
    const auto& s = report.at("spectrum");
    std::cout << "independent pair: entries " << i1 << " (word " << s[i1].at("word") << ", length "
              << s[i1].at("length").at("display") << ") and " << i2 << " (word "
              << s[i2].at("word") << ", length " << s[i2].at("length").at("display") << ")\n";
    for (const auto& c : report.at("certificates")) {
      if (c.at("entry1").get<size_t>() == i1 && c.at("entry2").get<size_t>() == i2 &&
          c.at("verdict") == "independent") {
        std::cout << "  denominator bounds: p <= " << c.at("bound_p").get<std::string>()
                  << ", q <= " << c.at("bound_q").get<std::string>() << "; "
                  << c.at("checked").size() << " candidate(s) refuted exactly\n";
        if (c.contains("density")) {
          const auto& d = c.at("density");
          std::cout << "  density: min |a l1 + b l2| = " << d.at("min_abs").get<double>()
                    << " at (a,b) = (" << d.at("best_a").get<long>() << ","
                    << d.at("best_b").get<long>() << "), grid " << d.at("grid").get<long>()
                    << "\n";
        }
      }
    }
    return kExitOk;
  }
  std::cout << "no independent pair found: " << result.at("reason").get<std::string>() << " ("
            << report.at("certificates").size() << " pairwise verdicts)\n";
  return any_inconclusive ? kExitInconclusive : kExitNoPair;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"length spectra of finitely generated Fuchsian groups, with exact "
               "independence certificates"};
  app.set_version_flag("--version", spectra::kVersion);
  app.require_subcommand(1);

  std::string file, json_path;
  long max_len = 6, precision = 256;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "group definition (JSON)")->required();
    cmd->add_option("--max-word-len", max_len, "maximum word length (default 6)");
    cmd->add_option("--precision", precision, "working precision in bits (default 256)");
    cmd->add_option("--json", json_path, "write the JSON report to this path");
  };
  CLI::App* spectrum = app.add_subcommand("spectrum", "enumerate the translation-length spectrum");
  add_common(spectrum);
  CLI::App* certify =
      app.add_subcommand("certify", "search for a Q-linearly independent pair of lengths");
  add_common(certify);
  CLI::App* verify = app.add_subcommand("verify", "re-check a report by exact arithmetic");
  std::string report_path;
  verify->add_option("report", report_path, "report JSON produced by spectrum/certify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (spectrum->parsed()) return run_report_command("spectrum", file, max_len, precision, json_path);
    if (certify->parsed()) return run_report_command("certify", file, max_len, precision, json_path);
    if (verify->parsed()) {
      std::ifstream in(report_path);
      if (!in) {
        std::cerr << "spectra: cannot open report: " << report_path << "\n";
        return kExitParse;
      }
      nlohmann::json report;
      try {
        report = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "spectra: report parse error: " << e.what() << "\n";
        return kExitParse;
      }
      spectra::VerifyResult res = spectra::verify_report(report);
      if (res.ok) {
        std::cout << "report verifies: every certificate re-checks exactly\n";
        return kExitOk;
      }
      std::cerr << "verification failed: " << res.error << "\n";
      return kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "spectra: error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
