#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "hada/commands.hpp"
#include "hada/errors.hpp"
#include "hada/fixtures.hpp"
#include "hada/instance.hpp"

using namespace hada;
using namespace hada::io;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({"space": 2, "lines": {"L": [2, -3, -11]},
  "points": {"X": [[1, "1/3", 2]]}})";

std::string parse_error_of(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("hada_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (has_float(v)) return true;
    }
  }
  return false;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HADA_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("instance parsing accepts rationals") {
  const auto inst = parse_instance_text(kMinimal);
  CHECK(inst.space == 2);
  REQUIRE(inst.find_points("X") != nullptr);
  CHECK(inst.find_points("X")->points[0] == ProjPoint{3, 1, 6});
  CHECK(inst.find_line("L")->planes.size() == 1);
  CHECK(inst.find_line("M") == nullptr);
}

TEST_CASE("instance parsing rejects malformed input with a path") {
  CHECK(parse_error_of(R"({"space": 2, "points": {"X": [[1, "0/0", 2]]}})").find("points.X[0][1]") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"space": 2, "points": {"X": [[1, 0.5, 2]]}})").find("points.X[0][1]") !=
        std::string::npos);
  CHECK_FALSE(parse_error_of(R"({"space": 2, "space": 3})").empty());
  CHECK_FALSE(parse_error_of(R"({"space": 2, "points": {"X": [[1,2,3]], "X": [[1,1,1]]}})").empty());
  CHECK_FALSE(parse_error_of(R"({"space": 2, "points": {"X": [[1,2,3], [2,4,6]]}})").empty());
  CHECK_FALSE(parse_error_of(R"({"space": 2, "points": {"X": [[1,2]]}})").empty());
  CHECK_FALSE(parse_error_of(R"({"space": 2, "colour": "red"})").empty());
  CHECK_FALSE(parse_error_of(R"({"space": 2, "args": ["Y"]})").empty());
  CHECK_FALSE(parse_error_of("{not json").empty());
}

TEST_CASE("emit and parse round-trip") {
  for (int space : {2, 3}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto inst = random_instance(space, 3, 4, seed);
      const auto back = parse_instance_text(emit_instance(inst).dump());
      CHECK(back == inst);
    }
  }
}

TEST_CASE("random instances are deterministic and reports carry no floats") {
  const auto a = random_instance(3, 3, 3, 7);
  const auto b = random_instance(3, 3, 3, 7);
  CHECK(emit_instance(a).dump() == emit_instance(b).dump());
  CHECK(emit_instance(random_instance(3, 3, 3, 8)).dump() != emit_instance(a).dump());
  for (const auto& cmd : {"grid", "hilbert", "quadric"}) {
    const auto r1 = run_command(cmd, a);
    const auto r2 = run_command(cmd, b);
    CHECK(r1.json.dump() == r2.json.dump());
    CHECK(r1.ok());
    CHECK_FALSE(has_float(r1.json));
  }
}

TEST_CASE("unknown command") {
  CHECK_THROWS_AS(run_command("frobnicate", parse_instance_text(kMinimal)), ParseError);
  CHECK(std::find(command_names().begin(), command_names().end(), "implicitize") !=
        command_names().end());
}

TEST_CASE("expectation matching") {
  const Json actual = {{"a", 1}, {"b", {{"c", "x"}, {"d", {1, 2}}}}};
  CHECK(match_expectation(Json{{"b", {{"c", "x"}}}}, actual).empty());
  const auto diffs = match_expectation(Json{{"b", {{"d", {1, 3}}}}}, actual);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find("b.d") != std::string::npos);
  CHECK_FALSE(match_expectation(Json{{"z", 1}}, actual).empty());
}

TEST_CASE("fixture replay") {
  const fs::path dir = HADA_TEST_FIXTURES;
  const auto all = replay_fixtures(dir);
  CHECK(all.outcomes.size() >= 10);
  for (const auto& o : all.outcomes) {
    CAPTURE(o.name);
    CAPTURE(o.error);
    CHECK(o.passed);
  }
  CHECK(all.ok());

  const auto empty = scratch_dir("empty");
  const auto none = replay_fixtures(empty);
  CHECK(none.outcomes.empty());
  CHECK_FALSE(none.ok());

  // Perturb one coefficient of one fixture: exactly that fixture fails.
  const auto tampered = scratch_dir("tampered");
  for (const auto& e : fs::directory_iterator(dir)) fs::copy(e.path(), tampered / e.path().filename());
  {
    std::ifstream in(tampered / "five_lines.json");
    Json j = Json::parse(in);
    j["lines"]["L"][2] = -12;
    std::ofstream(tampered / "five_lines.json") << j.dump(2);
  }
  const auto t = replay_fixtures(tampered);
  CHECK(t.failed() == 1);
  for (const auto& o : t.outcomes) CHECK(o.passed == (o.name != "five_lines.json" && o.name != "five_lines"));
}

TEST_CASE("command-line exit codes") {
  const fs::path dir = HADA_TEST_FIXTURES;
  CHECK(run_cli("verify --fixtures " + dir.string()) == 0);
  CHECK(run_cli("hilbert --input " + (dir / "grid_p2_hilbert.json").string()) == 0);
  CHECK(run_cli("verify --fixtures " + scratch_dir("cli_empty").string()) == 2);
  CHECK(run_cli("hilbert --input /nonexistent/file.json") == 2);
  CHECK(run_cli("no-such-command") == 2);
  CHECK(run_cli("random --seed 3 --json") == 0);

  const auto bad = scratch_dir("cli_bad");
  std::ofstream(bad / "bad.json") << R"({"space": 2, "points": {"X": [[1, "1/0", 2]]}})";
  CHECK(run_cli("hilbert --input " + (bad / "bad.json").string()) == 2);

  // A wrong expectation is a mismatch, not an input error.
  std::ifstream in(dir / "grid_p2_hilbert.json");
  Json j = Json::parse(in);
  j["expect"] = {{"hilbert", {{"tau", 99}}}};
  std::ofstream(bad / "wrong.json") << j.dump();
  CHECK(run_cli("hilbert --input " + (bad / "wrong.json").string()) == 1);
}
