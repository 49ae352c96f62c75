#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hada/instance.hpp"

namespace hada::io {

/// Command-line overrides; unset fields fall back to the instance file.
struct CommandOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
  std::optional<int> space;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
};

/// {"command", "space", "args", "results", "verdicts", "ok"}. Verdicts are
/// theorem predictions checked on inputs that meet the theorem's hypotheses;
/// "ok" is false when any of them fails. Exact values are strings.
struct Report {
  Json json;
  bool ok() const { return json.value("ok", false); }
};

const std::vector<std::string>& command_names();

/// Throws ParseError for unknown commands or arguments of the wrong kind, and
/// propagates errors of the underlying operation.
Report run_command(const std::string& command, const InstanceFile& instance,
                   const CommandOptions& options = {});

/// Generic instance for the grid theorems: random lines cut out by planes with
/// no zero coefficient and point sets X (size n) and X' (size m) meeting every
/// grid hypothesis. Deterministic in the seed.
InstanceFile random_instance(int space, std::size_t n, std::size_t m, std::uint64_t seed);

/// Paths where `actual` differs from `expected`. Objects match when every
/// expected key matches; arrays and scalars must match exactly.
std::vector<std::string> match_expectation(const Json& expected, const Json& actual,
                                           const std::string& path = "");

/// Indented plain-text rendering of a report.
std::string render_text(const Report& report);

}  // namespace hada::io
