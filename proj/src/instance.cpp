#include "hada/instance.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hada/errors.hpp"

namespace hada::io {
namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& path, const std::string& what) {
  throw ParseError(origin + ": " + (path.empty() ? "" : path + ": ") + what);
}

Rational read_rational(const Json& v, const std::string& origin, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(origin, path, e.what());
    }
  }
  if (v.is_number_float()) {
    fail(origin, path, "floating-point value " + v.dump() + "; write integers or \"p/q\" strings");
  }
  fail(origin, path, "expected a rational, got " + v.dump());
}

std::vector<Rational> read_vector(const Json& v, std::size_t size, const std::string& origin,
                                  const std::string& path) {
  if (!v.is_array()) fail(origin, path, "expected a coordinate list");
  if (v.size() != size) {
    fail(origin, path, "expected " + std::to_string(size) + " coordinates, got " +
                           std::to_string(v.size()));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_rational(v[i], origin, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ProjPoint read_point(const Json& v, std::size_t size, const std::string& origin,
                     const std::string& path) {
  const auto coords = read_vector(v, size, origin, path);
  auto p = ProjPoint::from_vector(std::span<const Rational>(coords));
  if (!p) fail(origin, path, "zero vector is not a projective point");
  return *p;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json point_json(const ProjPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(integer_json(c));
  return a;
}

const std::set<std::string> kKnownKeys = {"space", "command", "lines", "points", "args",
                                          "seed",  "degree",  "samples", "expect"};

}  // namespace

const NamedLine* InstanceFile::find_line(const std::string& name) const {
  for (const auto& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

const NamedPoints* InstanceFile::find_points(const std::string& name) const {
  for (const auto& p : points) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

InstanceFile parse_instance_text(const std::string& text, const std::string& origin) {
  // Duplicate keys are rejected while parsing; the DOM would silently keep one.
  std::vector<std::set<std::string>> open_keys;
  std::string duplicate;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    if (event == Json::parse_event_t::object_start) {
      open_keys.emplace_back();
    } else if (event == Json::parse_event_t::object_end) {
      open_keys.pop_back();
    } else if (event == Json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!open_keys.back().insert(key).second && duplicate.empty()) duplicate = key;
    }
    return true;
  };
  Json root;
  try {
    root = Json::parse(text, callback);
  } catch (const Json::parse_error& e) {
    fail(origin, "", std::string("malformed JSON: ") + e.what());
  }
  if (!duplicate.empty()) fail(origin, "", "duplicate name '" + duplicate + "'");
  if (!root.is_object()) fail(origin, "", "top level must be an object");
  for (const auto& [key, _] : root.items()) {
    if (!kKnownKeys.count(key)) fail(origin, key, "unknown field");
  }

  InstanceFile inst;
  if (!root.contains("space") || !root["space"].is_number_integer()) {
    fail(origin, "space", "required integer field");
  }
  inst.space = root["space"].get<int>();
  if (inst.space != 2 && inst.space != 3) fail(origin, "space", "must be 2 or 3");
  const std::size_t size = static_cast<std::size_t>(inst.space) + 1;

  if (root.contains("command")) {
    if (!root["command"].is_string()) fail(origin, "command", "expected a string");
    inst.command = root["command"].get<std::string>();
  }
  if (root.contains("lines")) {
    const auto& lines = root["lines"];
    if (!lines.is_object()) fail(origin, "lines", "expected an object of named lines");
    for (const auto& [name, v] : lines.items()) {
      const std::string path = "lines." + name;
      NamedLine nl{name, {}};
      if (!v.is_array() || v.empty()) fail(origin, path, "expected coefficients or a list of planes");
      if (v[0].is_array()) {
        if (v.size() > 2) fail(origin, path, "at most two planes");
        for (std::size_t i = 0; i < v.size(); ++i) {
          nl.planes.emplace_back(read_point(v[i], size, origin, path + "[" + std::to_string(i) + "]"));
        }
      } else {
        nl.planes.emplace_back(read_point(v, size, origin, path));
      }
      if (nl.planes.size() == 2 && nl.planes[0] == nl.planes[1]) {
        fail(origin, path, "the two planes coincide");
      }
      inst.lines.push_back(std::move(nl));
    }
  }
  if (root.contains("points")) {
    const auto& pts = root["points"];
    if (!pts.is_object()) fail(origin, "points", "expected an object of named point sets");
    for (const auto& [name, v] : pts.items()) {
      const std::string path = "points." + name;
      if (inst.find_line(name)) fail(origin, path, "name already used by a line");
      if (!v.is_array()) fail(origin, path, "expected a list of points");
      NamedPoints np{name, {}};
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string ip = path + "[" + std::to_string(i) + "]";
        auto p = read_point(v[i], size, origin, ip);
        for (const auto& q : np.points) {
          if (q == p) fail(origin, ip, "duplicate point " + p.to_string());
        }
        np.points.push_back(std::move(p));
      }
      inst.points.push_back(std::move(np));
    }
  }
  if (root.contains("args")) {
    const auto& args = root["args"];
    if (!args.is_array()) fail(origin, "args", "expected a list of names");
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string path = "args[" + std::to_string(i) + "]";
      if (!args[i].is_string()) fail(origin, path, "expected a name");
      const auto name = args[i].get<std::string>();
      if (!inst.find_line(name) && !inst.find_points(name)) fail(origin, path, "unknown name '" + name + "'");
      inst.args.push_back(name);
    }
  }
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) fail(origin, "seed", "expected a nonnegative integer");
    inst.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("degree")) {
    if (!root["degree"].is_number_integer() || root["degree"].get<long>() < 0) {
      fail(origin, "degree", "expected a nonnegative integer");
    }
    inst.degree = root["degree"].get<int>();
  }
  if (root.contains("samples")) {
    if (!root["samples"].is_number_unsigned()) fail(origin, "samples", "expected a positive integer");
    inst.samples = root["samples"].get<std::size_t>();
  }
  if (root.contains("expect")) {
    if (!root["expect"].is_object()) fail(origin, "expect", "expected an object");
    inst.expect = root["expect"];
  }
  return inst;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path.string());
}

Json emit_instance(const InstanceFile& inst) {
  Json root;
  root["space"] = inst.space;
  if (!inst.command.empty()) root["command"] = inst.command;
  if (!inst.lines.empty()) {
    Json lines = Json::object();
    for (const auto& l : inst.lines) {
      if (l.planes.size() == 1) {
        lines[l.name] = point_json(l.planes[0].dual());
      } else {
        Json planes = Json::array();
        for (const auto& h : l.planes) planes.push_back(point_json(h.dual()));
        lines[l.name] = planes;
      }
    }
    root["lines"] = lines;
  }
  if (!inst.points.empty()) {
    Json pts = Json::object();
    for (const auto& np : inst.points) {
      Json a = Json::array();
      for (const auto& p : np.points) a.push_back(point_json(p));
      pts[np.name] = a;
    }
    root["points"] = pts;
  }
  if (!inst.args.empty()) root["args"] = inst.args;
  if (inst.seed) root["seed"] = *inst.seed;
  if (inst.degree) root["degree"] = *inst.degree;
  if (inst.samples) root["samples"] = *inst.samples;
  if (!inst.expect.is_null()) root["expect"] = inst.expect;
  return root;
}

}  // namespace hada::io
