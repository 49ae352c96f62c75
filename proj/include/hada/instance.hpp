#pragma once

// JSON instance files: named lines and point sets with exact coordinates.
//
//   {
//     "space": 3,
//     "command": "grid",
//     "lines":  {"L": [[1,-1,1,2], [1,2,-1,1]], "L'": [[1,2,-2,1], [2,2,1,-4]]},
//     "points": {"X": [[-2,1,1,1], ...], "X'": [...]},
//     "args":   ["X", "X'", "L", "L'"],
//     "seed": 7, "degree": 2,
//     "expect": {...}
//   }
//
// Coordinates are JSON integers or "p/q" strings. An entry of "lines" is a
// single coefficient vector (a hyperplane; a line of P^2) or a list of two
// plane vectors (a line of P^3).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hada/projective.hpp"

namespace hada::io {

using Json = nlohmann::ordered_json;

struct NamedLine {
  std::string name;
  std::vector<Hyperplane> planes;  // one hyperplane, or two planes cutting a line of P^3

  friend bool operator==(const NamedLine&, const NamedLine&) = default;
};

struct NamedPoints {
  std::string name;
  std::vector<ProjPoint> points;

  friend bool operator==(const NamedPoints&, const NamedPoints&) = default;
};

struct InstanceFile {
  int space = 2;
  std::string command;  // empty when the file only carries data
  std::vector<NamedLine> lines;
  std::vector<NamedPoints> points;
  std::vector<std::string> args;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
  std::optional<std::size_t> samples;
  Json expect;  // null when absent

  const NamedLine* find_line(const std::string& name) const;
  const NamedPoints* find_points(const std::string& name) const;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError with the offending field path ("points.X[2][1]").
InstanceFile parse_instance_text(const std::string& text, const std::string& origin = "<input>");
InstanceFile parse_instance(const std::filesystem::path& path);

/// Canonical serialization: coordinates as JSON integers.
Json emit_instance(const InstanceFile& instance);

}  // namespace hada::io
