#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hocolim/verify.hpp"
#include "hocolim/workspace.hpp"

namespace {

int max_degree_cap() {
  if (const char* env = std::getenv("HOCOLIM_MAX_DEGREE")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw hocolim::ws::WsError("HOCOLIM_MAX_DEGREE is not an integer");
    }
  }
  return 8;
}

void emit(const hocolim::verify::Report& r, const std::string& format) {
  if (format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homotopy colimits over dg-categories: homology, cofibrant "
               "replacement, weighted colimits and invariant verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string file, format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for the randomized property suites");

  std::string name;
  auto* homology = app.add_subcommand("homology", "per-degree homology of a "
                                                  "named complex");
  homology->add_option("file", file, "workspace JSON")->required();
  homology->add_option("--name", name, "complex name")->required();

  std::string mode = "direct", output;
  int truncation = -1;
  std::vector<std::string> away_from;
  auto* replace = app.add_subcommand(
      "replace", "pointwise cofibrant replacement of a named diagram");
  replace->add_option("file", file, "workspace JSON")->required();
  replace->add_option("--diagram", name, "diagram name")->required();
  replace->add_option("--mode", mode, "direct | bar")
      ->check(CLI::IsMember({"direct", "bar"}));
  replace->add_option("--truncation", truncation,
                      "bar truncation (default: HOCOLIM_MAX_DEGREE)");
  replace->add_option("--away-from", away_from,
                      "objects kept as-is (direct mode)");
  replace->add_option("--output", output, "write the output workspace here");

  std::string weight, check_quillen;
  auto* wcolim = app.add_subcommand(
      "wcolim", "weighted colimit of a diagram against a weight");
  wcolim->add_option("file", file, "workspace JSON")->required();
  wcolim->add_option("--weight", weight, "weight diagram name")->required();
  wcolim->add_option("--diagram", name, "diagram name")->required();
  wcolim->add_option("--check-quillen", check_quillen,
                     "verify the weight preserves this weak equivalence");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("file", file, "workspace JSON")->required();
  verify->add_option("--suite", suite,
                     "axioms | reedy | bar | counterexample | all")
      ->check(CLI::IsMember({"axioms", "reedy", "bar", "counterexample",
                             "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const int cap = max_degree_cap();
    auto w = hocolim::ws::load_file(file);
    hocolim::verify::Report report;
    if (*homology) {
      report = hocolim::verify::cmd_homology(w, name);
    } else if (*replace) {
      if (truncation < 0) truncation = cap;
      truncation = std::min(truncation, cap);
      auto res =
          hocolim::verify::cmd_replace(w, name, mode, truncation, away_from);
      report = res.report;
      if (!output.empty()) hocolim::ws::save_file(output, res.output);
    } else if (*wcolim) {
      report = hocolim::verify::cmd_wcolim(w, weight, name, check_quillen);
    } else {
      report = hocolim::verify::cmd_verify(w, suite, seed);
    }
    emit(report, format);
    return report.ok() ? 0 : 1;
  } catch (const hocolim::ws::WsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
