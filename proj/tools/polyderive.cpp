// polyderive command-line front end. Reports go to stdout as JSON, a short
// summary goes to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyderive/polyderive.hpp"

namespace pd = polyderive;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pd::parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pd::json load_document(const std::string& path) { return pd::parse_json_text(read_file(path)); }

pd::Polygon load_polygon(const std::string& path) { return pd::polygon_from_json(load_document(path)); }

void emit(const pd::json& report) { std::cout << report.dump(2) << "\n"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYDERIVE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw pd::parse_error(std::string("POLYDERIVE_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

int status_exit(const pd::json& report) { return report.at("status") == "ok" ? kOk : kFailure; }

void summarize(const pd::json& r) {
  std::cerr << r.value("command", "") << ": " << r.at("status").get<std::string>();
  if (r.contains("verdict")) {
    const auto& v = r["verdict"];
    std::cerr << ", " << (v.at("regular").get<bool>() ? "regular" : "not regular") << " ("
              << v.at("parity").get<std::string>() << ")";
    if (v.contains("alpha_squared")) std::cerr << ", alpha^2 = " << v["alpha_squared"].get<std::string>();
  }
  if (r.contains("error")) std::cerr << "\n  " << r["error"].get<std::string>();
  if (r.contains("diagnostics"))
    for (const auto& d : r["diagnostics"]) std::cerr << "\n  " << d.get<std::string>();
  if (r.contains("notes"))
    for (const auto& n : r["notes"]) std::cerr << "\n  " << n.get<std::string>();
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular space polygons: support systems and derived polygons in exact arithmetic"};
  app.require_subcommand(1);

  std::string file;

  auto* check = app.add_subcommand("check", "genericity, Deltas and regularity verdict");
  check->add_option("file", file, "polygon JSON")->required();

  std::string alpha_text;
  bool alpha_root = false;
  bool negative_root = false;
  auto* derive = app.add_subcommand("derive", "support system and derived polygon");
  derive->add_option("file", file, "polygon JSON")->required();
  auto* alpha_opt = derive->add_option("--alpha", alpha_text, "alpha as p/q, integer or decimal");
  derive->add_flag("--alpha-root", alpha_root, "odd n: use the canonical root of alpha^2 (default)")
      ->excludes(alpha_opt);
  derive->add_flag("--negative-root", negative_root, "odd n: use the negative root");

  auto* analyze = app.add_subcommand("analyze", "structural analysis as a candidate derived polygon");
  analyze->add_option("file", file, "polygon JSON")->required();

  std::string kind;
  std::uint64_t seed = 0;
  int bound = pd::GenConfig{}.coordinate_bound;
  std::string output;
  auto* generate = app.add_subcommand("generate", "seeded fixture");
  generate->add_option("--kind", kind, "quad | pentagon | hexagon-lift | alt-sign")
      ->required()
      ->check(CLI::IsMember({"quad", "pentagon", "hexagon-lift", "alt-sign"}));
  auto* gen_seed = generate->add_option("--seed", seed, "seed (default POLYDERIVE_SEED or 1)");
  generate->add_option("--bound", bound, "coordinate bound")->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", output, "write to file instead of stdout");

  std::string suite = "all";
  std::size_t samples = 100;
  auto* verify = app.add_subcommand("verify", "seeded property suites");
  std::vector<std::string> suites = pd::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--samples", samples, "samples per suite")->check(CLI::PositiveNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "seed (default POLYDERIVE_SEED or 1)");

  auto* plot = app.add_subcommand("plot", "line-based plot data");
  plot->add_option("file", file, "polygon JSON or report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const auto r = pd::check_report(load_polygon(file));
      emit(r);
      summarize(r);
      return status_exit(r);
    }
    if (derive->parsed()) {
      pd::DeriveOptions opts;
      if (!alpha_text.empty()) opts.alpha = pd::Rational::parse(alpha_text);
      opts.negative_root = negative_root;
      const auto r = pd::derive_report(load_polygon(file), opts);
      emit(r);
      summarize(r);
      return status_exit(r);
    }
    if (analyze->parsed()) {
      const auto r = pd::analyze_report(load_polygon(file));
      emit(r);
      summarize(r);
      return kOk;
    }
    if (generate->parsed()) {
      pd::GenConfig cfg;
      cfg.seed = gen_seed->count() ? seed : default_seed();
      cfg.coordinate_bound = bound;
      const auto doc = pd::fixture_json(*pd::fixture_kind_from_string(kind), cfg);
      if (output.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw pd::parse_error("cannot write " + output);
        out << doc.dump(2) << "\n";
      }
      std::cerr << "generate: " << kind << " seed " << cfg.seed << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      const std::uint64_t base = verify_seed->count() ? seed : default_seed();
      const std::vector<std::string> names = suite == "all" ? pd::suite_names() : std::vector<std::string>{suite};
      pd::json report{{"command", "verify"}, {"seed", base}, {"samples", samples}, {"suites", pd::json::array()}};
      bool all_ok = true;
      for (const auto& name : names) {
        const auto result = pd::run_suite(name, samples, base);
        all_ok = all_ok && result.ok();
        report["suites"].push_back(pd::suite_result_json(result));
        std::cerr << "verify " << name << ": " << result.passed << "/" << result.samples << " passed ("
                  << result.seconds << " s)\n";
      }
      report["ok"] = all_ok;
      emit(report);
      return all_ok ? kOk : kFailure;
    }
    if (plot->parsed()) {
      std::cout << pd::plot_data(load_document(file));
      return kOk;
    }
  } catch (const pd::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pd::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pd::zero_division& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
