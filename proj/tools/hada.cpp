// hada: command-line driver for Hadamard products of points, lines and point sets.
//
// Exit status: 0 verdicts as expected, 1 mathematical mismatch, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "hada/commands.hpp"
#include "hada/errors.hpp"
#include "hada/fixtures.hpp"
#include "hada/instance.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Flags {
  std::string input;
  std::string output;
  std::string fixtures;
  std::uint64_t seed = 0;
  int degree = 2;
  int space = 3;
  std::size_t n = 0;
  std::size_t m = 3;
  bool json = false;
};

int print_report(const hada::io::Report& report, const hada::io::InstanceFile* inst, bool json) {
  std::vector<std::string> diffs;
  if (inst && !inst->expect.is_null()) {
    diffs = hada::io::match_expectation(inst->expect, report.json.at("results"));
  }
  if (json) {
    auto out = report.json;
    if (inst && !inst->expect.is_null()) out["expectation_diffs"] = diffs;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << hada::io::render_text(report);
    for (const auto& d : diffs) std::cout << "expectation mismatch: " << d << "\n";
  }
  return report.ok() && diffs.empty() ? kOk : kMismatch;
}

int run_verify(const Flags& f) {
  hada::io::ReplaySummary summary;
  if (!f.input.empty()) {
    summary.outcomes.push_back(hada::io::replay_fixture(f.input));
  } else {
    summary = hada::io::replay_fixtures(f.fixtures.empty() ? hada::io::fixture_directory()
                                                           : std::filesystem::path(f.fixtures));
  }
  bool input_error = false;
  if (f.json) {
    hada::io::Json out;
    out["fixtures"] = summary.outcomes.size();
    out["passed"] = summary.passed();
    out["failed"] = summary.failed();
    hada::io::Json list = hada::io::Json::array();
    for (const auto& o : summary.outcomes) {
      list.push_back({{"name", o.name}, {"passed", o.passed}, {"diffs", o.diffs}, {"error", o.error}});
    }
    out["outcomes"] = list;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& o : summary.outcomes) {
      std::cout << (o.passed ? "PASS " : "FAIL ") << o.name << "\n";
      for (const auto& d : o.diffs) std::cout << "  " << d << "\n";
      if (!o.error.empty()) std::cout << "  error: " << o.error << "\n";
    }
    std::cout << summary.outcomes.size() << " fixtures, " << summary.passed() << " passed, "
              << summary.failed() << " failed\n";
  }
  for (const auto& o : summary.outcomes) input_error = input_error || !o.error.empty();
  if (summary.ok()) return kOk;
  if (summary.outcomes.empty() || (input_error && !f.input.empty())) return kInputError;
  return kMismatch;
}

int run(const std::string& command, const Flags& f, const CLI::App& sub) {
  hada::io::CommandOptions opts;
  if (sub.count("--seed")) opts.seed = f.seed;
  if (sub.count("--degree")) opts.degree = f.degree;
  if (command == "verify") return run_verify(f);
  if (command == "random") {
    opts.space = f.space;
    opts.m = f.m;
    opts.n = f.n ? f.n : f.m;
    opts.seed = f.seed;
    const auto report = hada::io::run_command("random", hada::io::InstanceFile{}, opts);
    if (!f.output.empty()) {
      std::ofstream out(f.output);
      if (!out) throw hada::ParseError("cannot write " + f.output);
      out << report.json["results"]["instance"].dump(2) << "\n";
    }
    return print_report(report, nullptr, f.json);
  }
  if (f.input.empty()) throw hada::ParseError(command + ": --input FILE is required");
  const auto inst = hada::io::parse_instance(f.input);
  const auto report = hada::io::run_command(command, inst, opts);
  return print_report(report, &inst, f.json);
}

const std::map<std::string, std::string> kDescriptions = {
    {"product", "Hadamard products of the named points, lines and sets"},
    {"classify", "point-line case and two-point incidence in P^2"},
    {"grid", "grid product of X on L and X' on L'"},
    {"hilbert", "Hilbert function, regularity index and h-vector"},
    {"quadric", "quadric through a P^3 grid and its ruling check"},
    {"implicitize", "forms of a given degree vanishing on L * L'"},
    {"ci", "minimal generator degrees and complete intersection verdict"},
    {"verify", "replay every fixture in the fixture directory"},
    {"random", "generate a seeded generic grid instance and analyze it"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard products of points, lines and finite point sets"};
  app.require_subcommand(1);
  Flags f;
  for (const auto& name : hada::io::command_names()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("--input", f.input, "instance file (JSON)");
    sub->add_option("--seed", f.seed, "seed for sampling");
    sub->add_option("--degree", f.degree, "form degree for implicitize");
    sub->add_flag("--json", f.json, "emit a JSON report");
    if (name == "random") {
      sub->add_option("--space", f.space, "ambient dimension, 2 or 3")->check(CLI::IsMember({2, 3}));
      sub->add_option("--m", f.m, "size of X'")->check(CLI::Range(1, 50));
      sub->add_option("--n", f.n, "size of X (default: m)")->check(CLI::Range(0, 50));
      sub->add_option("--output", f.output, "also write the generated instance here");
    }
    if (name == "verify") sub->add_option("--fixtures", f.fixtures, "fixture directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  const auto* sub = app.get_subcommands().front();
  try {
    return run(sub->get_name(), f, *sub);
  } catch (const hada::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const hada::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
