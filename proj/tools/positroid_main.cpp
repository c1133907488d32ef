#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "positroid/analysis.hpp"
#include "positroid/diagram.hpp"
#include "positroid/errors.hpp"
#include "positroid/ideal.hpp"
#include "positroid/verify.hpp"

namespace {

using namespace positroid;

struct InputOptions {
  std::string path;
  std::string inline_text;

  LeDiagram load() const {
    if (!inline_text.empty()) {
      std::string text = inline_text;
      for (char& c : text)
        if (c == ';') c = '\n';
      return parse_grid(text);
    }
    if (path == "-") {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      return parse_grid(buffer.str());
    }
    std::ifstream file(path);
    if (!file) throw Error("cannot open input file: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_grid(buffer.str());
  }
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  auto* in = cmd->add_option("--in", input.path, "input .le file ('-' for stdin)");
  auto* inl = cmd->add_option("--inline", input.inline_text,
                              "inline diagram, rows separated by ';'");
  in->excludes(inl);
  cmd->callback([&input]() {
    if (input.path.empty() && input.inline_text.empty())
      throw CLI::RequiredError("--in or --inline");
  });
}

int cmd_validate(const InputOptions& input, const std::string& format) {
  LeDiagram d = input.load();
  auto violations = validate_le(d);
  auto [loops, coloops] = loops_coloops(d);
  BoundaryLabels labels = boundary_labels(d);

  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j;
    j["valid"] = violations.empty();
    auto list = nlohmann::json::array();
    for (const LeViolation& v : violations) {
      nlohmann::json entry;
      entry["at"] = {v.at.row, v.at.col};
      entry["above"] = {v.above.row, v.above.col};
      entry["left"] = {v.left.row, v.left.col};
      list.push_back(entry);
    }
    j["violations"] = list;
    j["loops"] = loops.to_vector();
    j["coloops"] = coloops.to_vector();
    j["diagram"] = nlohmann::json::parse(diagram_to_json(d));
    out << j.dump(2) << "\n";
  } else {
    if (violations.empty()) {
      out << "valid";
    } else {
      out << "invalid (" << violations.size() << " Le violation"
          << (violations.size() == 1 ? "" : "s") << ")";
    }
    out << "; " << (loops.empty() ? "no loops" : "loops " + loops.braced()) << "; "
        << (coloops.empty() ? "no coloops" : "coloops " + coloops.braced()) << "\n";
    for (const LeViolation& v : violations) {
      out << "  box (" << labels.row_label(v.at.row) << "," << labels.col_label(v.at.col)
          << ") [grid (" << v.at.row << "," << v.at.col << ")] is empty but ("
          << labels.row_label(v.above.row) << "," << labels.col_label(v.above.col)
          << ") above and (" << labels.row_label(v.left.row) << ","
          << labels.col_label(v.left.col) << ") to its left are dotted\n";
    }
  }
  std::cout << out.str();
  return violations.empty() ? 0 : 1;
}

int cmd_analyze(const InputOptions& input, const std::string& format, bool auto_reduce,
                bool show_witnesses) {
  LeDiagram d = input.load();
  Analysis a = analyze(d, auto_reduce, show_witnesses);
  std::cout << (format == "json" ? render_json(a) : render_text(a));
  return a.ok() ? 0 : 1;
}

int cmd_hasse(const InputOptions& input, bool auto_reduce) {
  LeDiagram d = input.load();
  Analysis a = analyze(d, auto_reduce, false);
  std::cout << hasse_dot(a.image);
  return a.ok() ? 0 : 1;
}

int cmd_sweep(int max_n, int samples, std::uint64_t seed, const std::string& mutant_name) {
  auto mutant = mutant_from_name(mutant_name);
  if (!mutant) throw CLI::ValidationError("--mutate", "unknown mutant: " + mutant_name);

  SweepOptions options;
  options.max_n = max_n;
  options.samples = samples;
  options.seed = seed;
  options.mutant = *mutant;

  auto start = std::chrono::steady_clock::now();
  SweepResult result = run_sweep(options);
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  std::ostringstream out;
  out << "sweep: max-n=" << max_n << " samples=" << samples;
  if (samples > 0) out << " seed=" << seed;
  if (*mutant != Mutant::none) out << " mutant=" << mutant_name;
  out << "\n";
  out << "diagrams checked: " << result.counters.diagrams
      << " (loop/coloop-free: " << result.counters.loop_free
      << ", random samples: " << result.counters.random_samples << ")\n";
  out << "subsets cross-checked: " << result.counters.subsets
      << " (path families: " << result.counters.families << ")\n";
  out << "witness checks: " << result.counters.divide_checks << " divide, "
      << result.counters.augment_checks << " augment\n";
  out << "violations: " << result.violations.size() << "\n";
  if (!result.violations.empty()) {
    const SweepViolation& first = result.violations.front();
    for (const std::string& detail : first.details) out << "  " << detail << "\n";
    out << "counterexample:\n" << first.diagram.to_grid();
    if (result.minimized && !(*result.minimized == first.diagram))
      out << "minimized:\n" << result.minimized->to_grid();
  }
  std::cout << out.str();
  std::cerr << "elapsed: " << elapsed.count() << " s\n";
  return result.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Le-diagram positroids: bases, h-vectors, and their monomial order ideals"};
  app.require_subcommand(1);

  InputOptions input;
  std::string format = "text";
  bool auto_reduce = false;
  bool show_witnesses = false;
  int max_n = 6;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string mutant_name = "none";

  auto* validate = app.add_subcommand("validate", "check the Le-property and report loops/coloops");
  add_input_options(validate, input);
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "bases, h-vectors, monomials, and the order-ideal verdict");
  add_input_options(analyze_cmd, input);
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--auto-reduce", auto_reduce, "delete loops and contract coloops first");
  analyze_cmd->add_flag("--show-witnesses", show_witnesses,
                        "include divide/augment witnesses per basis");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the monomial image, DOT format");
  add_input_options(hasse, input);
  hasse->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  hasse->add_flag("--auto-reduce", auto_reduce, "delete loops and contract coloops first");

  auto* sweep = app.add_subcommand("sweep", "run every invariant on small diagrams");
  sweep->add_option("--max-n", max_n, "exhaustive over all valid diagrams up to this ground set")
      ->check(CLI::Range(0, 12));
  auto* samples_opt = sweep->add_option("--samples", samples, "seeded random diagrams (n <= 9)");
  auto* seed_opt = sweep->add_option("--seed", seed, "seed for the random suite");
  sweep->add_option("--mutate", mutant_name,
                    "inject a known-broken variant (harness self-test): none|phi-unfiltered");
  sweep->callback([&]() {
    if (samples_opt->count() > 0 && samples > 0 && seed_opt->count() == 0)
      throw CLI::RequiredError("--seed (required with --samples)");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input, format);
    if (app.got_subcommand(analyze_cmd))
      return cmd_analyze(input, format, auto_reduce, show_witnesses);
    if (app.got_subcommand(hasse)) return cmd_hasse(input, auto_reduce);
    if (app.got_subcommand(sweep)) return cmd_sweep(max_n, samples, seed, mutant_name);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
