#include "hada/fixtures.hpp"

#include <algorithm>
#include <cstdlib>

#include "hada/commands.hpp"
#include "hada/errors.hpp"
#include "hada/instance.hpp"

#ifndef HADA_DEFAULT_FIXTURES
#define HADA_DEFAULT_FIXTURES "fixtures"
#endif

namespace hada::io {

std::size_t ReplaySummary::passed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; }));
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("HADA_FIXTURES"); env && *env) return env;
  return HADA_DEFAULT_FIXTURES;
}

FixtureOutcome replay_fixture(const std::filesystem::path& file) {
  FixtureOutcome out;
  out.name = file.stem().string();
  try {
    const auto inst = parse_instance(file);
    if (inst.command.empty()) throw ParseError(file.string() + ": fixture has no command");
    if (inst.expect.is_null()) throw ParseError(file.string() + ": fixture has no expect block");
    const auto report = run_command(inst.command, inst);
    out.diffs = match_expectation(inst.expect, report.json["results"]);
    for (const auto& [k, v] : report.json["verdicts"].items()) {
      if (!v.get<bool>()) out.diffs.push_back("verdict " + k + " failed");
    }
    out.passed = out.diffs.empty();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

ReplaySummary replay_fixtures(const std::filesystem::path& dir) {
  ReplaySummary s;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return s;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) s.outcomes.push_back(replay_fixture(f));
  return s;
}

}  // namespace hada::io
