#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hada::io {

struct FixtureOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> diffs;  // expectation mismatches and failed verdicts
  std::string error;               // set when the fixture could not be run
};

struct ReplaySummary {
  std::vector<FixtureOutcome> outcomes;

  std::size_t passed() const;
  std::size_t failed() const { return outcomes.size() - passed(); }
  /// False for an empty directory as well as for any failure.
  bool ok() const { return !outcomes.empty() && failed() == 0; }
};

/// $HADA_FIXTURES when set, else the bundled fixture directory.
std::filesystem::path fixture_directory();

/// Runs the fixture's command and compares the report's results against its
/// "expect" block. Never throws.
FixtureOutcome replay_fixture(const std::filesystem::path& file);

/// Every *.json file of the directory, in name order.
ReplaySummary replay_fixtures(const std::filesystem::path& dir);

}  // namespace hada::io
