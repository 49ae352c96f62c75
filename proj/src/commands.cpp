#include "hada/commands.hpp"

#include <algorithm>
#include <sstream>

#include "hada/errors.hpp"
#include "hada/ideal.hpp"
#include "hada/linalg.hpp"
#include "hada/plane.hpp"
#include "hada/sampling.hpp"
#include "hada/space.hpp"

namespace hada::io {
namespace {

struct Operands {
  std::vector<const NamedPoints*> sets;
  std::vector<const NamedLine*> lines;
};

Operands resolve(const InstanceFile& inst) {
  Operands ops;
  if (inst.args.empty()) {
    for (const auto& p : inst.points) ops.sets.push_back(&p);
    for (const auto& l : inst.lines) ops.lines.push_back(&l);
    return ops;
  }
  for (const auto& name : inst.args) {
    if (const auto* p = inst.find_points(name)) {
      ops.sets.push_back(p);
    } else if (const auto* l = inst.find_line(name)) {
      ops.lines.push_back(l);
    } else {
      throw ParseError("unknown argument '" + name + "'");
    }
  }
  return ops;
}

void require_counts(const std::string& cmd, const Operands& ops, std::size_t sets_min,
                    std::size_t sets_max, std::size_t lines_min, std::size_t lines_max) {
  if (ops.sets.size() < sets_min || ops.sets.size() > sets_max || ops.lines.size() < lines_min ||
      ops.lines.size() > lines_max) {
    throw ParseError(cmd + ": expected " + std::to_string(sets_min) + "-" + std::to_string(sets_max) +
                     " point sets and " + std::to_string(lines_min) + "-" +
                     std::to_string(lines_max) + " lines, got " + std::to_string(ops.sets.size()) +
                     " and " + std::to_string(ops.lines.size()));
  }
}

FinitePointSet to_set(const NamedPoints& np) { return FinitePointSet(np.points); }

Hyperplane plane_line(const NamedLine& l, int space) {
  if (space != 2 || l.planes.size() != 1) {
    throw ParseError("line '" + l.name + "' must be a single coefficient vector of P^2");
  }
  return l.planes[0];
}

space::Line3 space_line(const NamedLine& l, int space) {
  if (space != 3 || l.planes.size() != 2) {
    throw ParseError("line '" + l.name + "' must be a pair of planes of P^3");
  }
  return space::Line3(l.planes[0], l.planes[1]);
}

template <class Range>
Json strings(const Range& r) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(x.to_string());
  return a;
}

Json sizes(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json outcome_json(const plane::PointLineOutcome& o) {
  Json j;
  j["case"] = o.case_tag;
  if (o.is_line()) {
    j["kind"] = "line";
    j["result"] = o.line().to_string();
  } else if (o.is_point()) {
    j["kind"] = "point";
    j["result"] = o.point().to_string();
  } else {
    j["kind"] = "undefined";
    j["result"] = "undefined";
  }
  return j;
}

std::optional<ProjPoint> meet_p2(const Hyperplane& a, const Hyperplane& b) {
  const auto k = kernel_basis(Matrix::from_integer_rows({a.coefficients(), b.coefficients()}, 3));
  if (k.size() != 1) return std::nullopt;
  return ProjPoint(std::span<const Rational>(k[0]));
}

struct Context {
  const InstanceFile& inst;
  const CommandOptions& opts;
  Json results = Json::object();
  Json verdicts = Json::object();

  int space() const { return inst.space; }
  std::uint64_t seed() const { return opts.seed ? *opts.seed : inst.seed.value_or(0); }
  void verdict(const std::string& name, bool ok) { verdicts[name] = ok; }
};

// Outcome of checking a pair of collinear sets against the grid theorems.
struct GridAnalysis {
  bool hypotheses = false;
  FinitePointSet products;  // brute-force pairwise products
  std::optional<plane::GridResult> g2;
  std::optional<space::GridResult3> g3;
  std::size_t n = 0;
  std::size_t m = 0;
  Json json;
};

GridAnalysis analyze_grid(Context& ctx, const NamedPoints& xs, const NamedPoints& xps,
                          const NamedLine& ls, const NamedLine& lps) {
  GridAnalysis g;
  const auto x = to_set(xs);
  const auto xp = to_set(xps);
  g.n = x.size();
  g.m = xp.size();
  g.products = pairwise_product(x, xp);
  Json& j = g.json;
  try {
    if (ctx.space() == 2) {
      g.g2 = plane::grid_product_p2(x, xp, plane_line(ls, 2), plane_line(lps, 2));
    } else {
      const auto l = space::choose_generic_planes(space_line(ls, 3), ctx.seed());
      const auto lp = space::choose_generic_planes(space_line(lps, 3), ctx.seed());
      g.g3 = space::grid_product_p3(x, xp, l, lp);
      j["planes"] = {l.to_string(), lp.to_string()};
    }
    g.hypotheses = true;
    j["hypotheses"] = true;
  } catch (const PreconditionError& e) {
    j["hypotheses"] = false;
    j["violation"] = e.what();
  }
  j["count"] = g.products.size();
  j["expected_count"] = g.n * g.m;
  j["points"] = strings(g.products);

  if (g.g2) {
    const auto& r = *g.g2;
    j["row_lines"] = strings(r.row_lines);
    j["col_lines"] = strings(r.col_lines);
    j["ci_witness"] = {r.ci_witness.first.to_string(), r.ci_witness.second.to_string()};
    bool meets = true;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t k = 0; k < g.m; ++k) {
        const auto p = meet_p2(r.row_lines[i], r.col_lines[k]);
        meets = meets && p && *p == r.table[i][k];
      }
    }
    ctx.verdict("grid_size", r.points.size() == g.n * g.m);
    ctx.verdict("grid_equals_pairwise", r.points == g.products);
    ctx.verdict("grid_intersections", meets);
  }
  if (g.g3) {
    const auto& r = *g.g3;
    j["row_lines"] = strings(r.row_lines);
    j["col_lines"] = strings(r.col_lines);
    bool meets = true;
    bool rank3 = true;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t k = 0; k < g.m; ++k) {
        const auto p = space::intersect(r.row_lines[i], r.col_lines[k]);
        meets = meets && p.point && *p.point == r.table[i][k];
        rank3 = rank3 && r.certificates[i][k].rank == 3;
      }
    }
    ctx.verdict("grid_size", r.points.size() == g.n * g.m);
    ctx.verdict("grid_equals_pairwise", r.points == g.products);
    ctx.verdict("grid_intersections", meets);
    ctx.verdict("rank_exactly_3", rank3);
  }
  return g;
}

Json hilbert_json(const ideal::HilbertProfile& h) {
  Json j;
  j["count"] = h.cardinality;
  j["values"] = sizes(h.values);
  j["tau"] = h.tau;
  j["h_vector"] = h.h_vector;
  return j;
}

Json ci_json(const ideal::CIVerdict& v, const ideal::GeneratorProfile& g) {
  Json j;
  j["verdict"] = v.label();
  j["generators"] = g.total;
  j["new_generators"] = sizes(g.new_generators);
  j["dim_ideal"] = sizes(g.dim_ideal);
  if (v.kind == ideal::CIVerdict::Kind::CI) {
    j["degrees"] = v.degrees;
  } else {
    j["reason"] = v.reason;
  }
  return j;
}

// Point set under study: either a single named set, or the products of two.
struct Subject {
  FinitePointSet points;
  std::optional<GridAnalysis> grid;
};

Subject subject(Context& ctx, const std::string& cmd, const Operands& ops) {
  if (ops.sets.size() == 1 && ops.lines.empty()) return {to_set(*ops.sets[0]), std::nullopt};
  if (ops.sets.size() == 2 && ops.lines.empty()) {
    return {pairwise_product(to_set(*ops.sets[0]), to_set(*ops.sets[1])), std::nullopt};
  }
  if (ops.sets.size() == 2 && ops.lines.size() == 2) {
    auto g = analyze_grid(ctx, *ops.sets[0], *ops.sets[1], *ops.lines[0], *ops.lines[1]);
    ctx.results["grid"] = g.json;
    auto pts = g.products;
    return {std::move(pts), std::move(g)};
  }
  throw ParseError(cmd + ": expected one point set, two point sets, or two sets and their lines");
}

void run_hilbert(Context& ctx, const Operands& ops) {
  auto s = subject(ctx, "hilbert", ops);
  if (s.points.empty()) throw PreconditionError("no defined products");
  const auto h = ideal::hilbert_profile(s.points);
  ctx.results["hilbert"] = hilbert_json(h);
  if (ops.sets.size() == 2) {
    const auto x = to_set(*ops.sets[0]);
    const auto xp = to_set(*ops.sets[1]);
    const auto check = ideal::hf_product_check(x, xp, s.points);
    Json per = Json::array();
    for (const auto& d : check.degrees) per.push_back(d.pass());
    ctx.results["product_check"] = {{"per_degree", per}, {"passed", check.passed()}};
    // The product law is a theorem only for equal sizes in P^3 under the grid hypotheses.
    if (s.grid && s.grid->hypotheses && ctx.space() == 3 && x.size() == xp.size()) {
      const std::size_t m = x.size();
      bool formula = h.tau == static_cast<int>(m) - 1;
      for (std::size_t t = 0; t < h.values.size(); ++t) {
        const std::size_t b = std::min(t + 1, m);
        formula = formula && h.values[t] == b * b;
      }
      ctx.verdict("hf_product", check.passed());
      ctx.verdict("hf_formula", formula);
    }
  }
}

void run_ci(Context& ctx, const Operands& ops) {
  auto s = subject(ctx, "ci", ops);
  if (s.points.empty()) throw PreconditionError("no defined products");
  const auto g = ideal::generator_profile(s.points);
  const auto v = ideal::ci_verdict(s.points);
  ctx.results["ci"] = ci_json(v, g);
  // Forms of the least degree where the ideal is nonzero.
  for (std::size_t t = 0; t < g.dim_ideal.size(); ++t) {
    if (g.dim_ideal[t] > 0) {
      ctx.results["ci"]["initial_degree"] = t;
      ctx.results["ci"]["initial_forms"] = strings(ideal::degree_bounded_ideal(s.points, static_cast<int>(t)));
      break;
    }
  }
  if (s.grid && s.grid->hypotheses) {
    const std::size_t n = s.grid->n;
    const std::size_t m = s.grid->m;
    if (ctx.space() == 2) {
      std::vector<int> expected{static_cast<int>(std::min(n, m)), static_cast<int>(std::max(n, m))};
      ctx.verdict("ci_predicted", v.kind == ideal::CIVerdict::Kind::CI && v.degrees == expected);
    } else if (n == m && m >= 2) {
      const std::size_t total = m == 2 ? 6 : 2 * m + 2;
      ctx.verdict("not_ci_predicted", v.kind == ideal::CIVerdict::Kind::NotCI && g.total == total);
    }
  }
}

void run_quadric(Context& ctx, const Operands& ops) {
  if (ctx.space() != 3) throw ParseError("quadric: needs a P^3 instance");
  auto s = subject(ctx, "quadric", ops);
  const auto fit = space::quadric_through(s.points);
  Json j;
  j["status"] = fit.status == space::QuadricFit::Unique   ? "unique"
                : fit.status == space::QuadricFit::None ? "none"
                                                        : "non-unique";
  j["kernel_dim"] = fit.kernel_dim;
  if (fit.quadric) {
    j["form"] = fit.quadric->form.to_string();
    j["determinant"] = to_string(fit.quadric->determinant());
  }
  if (s.grid && s.grid->g3 && fit.quadric) {
    const auto& r = *s.grid->g3;
    const auto rep = space::ruling_check(*fit.quadric, r.row_lines, r.col_lines);
    Json cross = Json::array();
    bool cross_grid = true;
    for (std::size_t i = 0; i < rep.cross_points.size(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < rep.cross_points[i].size(); ++k) {
        const auto& p = rep.cross_points[i][k];
        row.push_back(p ? p->to_string() : "none");
        cross_grid = cross_grid && p && *p == r.table[i][k];
      }
      cross.push_back(row);
    }
    j["ruling"] = {{"passed", rep.passed()},
                   {"nondegenerate", rep.nondegenerate},
                   {"violations", rep.violations()},
                   {"cross_points", cross}};
    if (s.grid->n >= 3 && s.grid->m >= 3) {
      ctx.verdict("ruling", rep.passed());
      ctx.verdict("cross_points_are_grid", cross_grid);
    }
  }
  if (s.grid && s.grid->hypotheses && s.grid->n >= 3 && s.grid->m >= 3) {
    ctx.verdict("unique_quadric", fit.status == space::QuadricFit::Unique);
  }
  ctx.results["quadric"] = j;
}

void run_grid(Context& ctx, const Operands& ops) {
  require_counts("grid", ops, 2, 2, 2, 2);
  auto g = analyze_grid(ctx, *ops.sets[0], *ops.sets[1], *ops.lines[0], *ops.lines[1]);
  ctx.results["grid"] = g.json;
}

void run_classify(Context& ctx, const Operands& ops) {
  require_counts("classify", ops, 1, 1, 1, 1);
  const auto l = plane_line(*ops.lines[0], ctx.space());
  const auto& pts = ops.sets[0]->points;
  if (pts.size() == 2) {
    const auto r = plane::two_point_line_incidence(pts[0], pts[1], l);
    Json j;
    j["sub_case"] = plane::label(r.sub_case);
    j["swapped"] = r.swapped;
    j["first"] = outcome_json(r.first);
    j["second"] = outcome_json(r.second);
    j["predicted"] = plane::label(r.predicted);
    j["observed"] = plane::label(r.observed);
    ctx.results["incidence"] = j;
    ctx.verdict("incidence_agrees", r.agrees());
    return;
  }
  Json list = Json::array();
  for (const auto& q : pts) {
    Json j = outcome_json(plane::point_line_product_p2(q, l));
    j["point"] = q.to_string();
    list.push_back(j);
  }
  if (pts.size() == 1) {
    ctx.results["classification"] = list[0];
  } else {
    ctx.results["classifications"] = list;
  }
}

void run_product(Context& ctx, const Operands& ops) {
  const int space = ctx.space();
  if (ops.sets.size() == 2 && ops.lines.empty()) {
    const auto& a = ops.sets[0]->points;
    const auto& b = ops.sets[1]->points;
    if (a.size() == 1 && b.size() == 1) {
      ctx.results["product"] = to_string(hadamard_points(a[0], b[0]));
      ctx.results["level"] = product_level(a[0], b[0]);
      return;
    }
    const auto s = pairwise_product(to_set(*ops.sets[0]), to_set(*ops.sets[1]));
    ctx.results["count"] = s.size();
    ctx.results["points"] = strings(s);
    return;
  }
  if (ops.sets.empty() && ops.lines.size() == 2) {
    const auto& h = *ops.lines[0];
    const auto& k = *ops.lines[1];
    if (h.planes.size() != 1 || k.planes.size() != 1) {
      throw UnsupportedShape("product of two lines of P^3 has no closed form; use implicitize");
    }
    ctx.results["product"] = to_string(hyperplane_product(h.planes[0], k.planes[0]));
    return;
  }
  if (ops.sets.size() == 1 && (ops.lines.size() == 1 || ops.lines.size() == 2)) {
    const auto x = to_set(*ops.sets[0]);
    const auto& l = *ops.lines[0];
    if (ops.lines.size() == 2) {
      // X' on L' times L: the line arrangement.
      const auto arr = plane::collinear_set_line_product(x, plane_line(l, space),
                                                         plane_line(*ops.lines[1], space));
      auto lines = arr.lines;
      std::sort(lines.begin(), lines.end());
      Json j;
      j["branch"] = arr.branch;
      j["hypothesis_met"] = arr.hypothesis_met;
      j["lines"] = strings(lines);
      j["isolated_points"] = strings(arr.isolated_points);
      if (arr.collapsed) j["collapsed"] = arr.collapsed->to_string();
      j["matches_expectation"] = arr.matches_expectation;
      ctx.results["arrangement"] = j;
      if (arr.hypothesis_met) ctx.verdict("arrangement_shape", arr.matches_expectation);
      return;
    }
    Json list = Json::array();
    for (const auto& p : x) {
      Json j;
      j["point"] = p.to_string();
      if (space == 2) {
        j.update(outcome_json(plane::point_line_product_p2(p, plane_line(l, 2))));
      } else if (l.planes.size() == 2) {
        j["result"] = space::point_line_product_p3(p, space_line(l, 3)).to_string();
      } else {
        j["result"] = point_hyperplane_product(p, l.planes[0]).to_string();
      }
      list.push_back(j);
    }
    ctx.results["products"] = list;
    return;
  }
  throw ParseError("product: expected two point sets, two hyperplanes, or a point set and lines");
}

void run_implicitize(Context& ctx, const Operands& ops) {
  require_counts("implicitize", ops, 0, 0, 2, 2);
  const auto l = space_line(*ops.lines[0], ctx.space());
  const auto lp = space_line(*ops.lines[1], ctx.space());
  const int degree = ctx.opts.degree ? *ctx.opts.degree : ctx.inst.degree.value_or(2);
  const std::size_t samples = ctx.inst.samples.value_or(space::default_sample_count(degree));
  const auto forms = space::variety_product_interpolate(l, lp, degree, samples, ctx.seed());
  Json j;
  j["degree"] = degree;
  j["samples"] = samples;
  j["dimension"] = forms.size();
  j["forms"] = strings(forms);
  ctx.results["implicitization"] = j;
}

void run_random(Context& ctx) {
  const int space = ctx.opts.space.value_or(3);
  const std::size_t m = ctx.opts.m.value_or(3);
  const std::size_t n = ctx.opts.n.value_or(m);
  const auto inst = random_instance(space, n, m, ctx.seed());
  ctx.results["instance"] = emit_instance(inst);
  Context inner{inst, ctx.opts};
  const auto ops = resolve(inst);
  run_hilbert(inner, ops);
  run_ci(inner, ops);
  if (space == 3) run_quadric(inner, ops);
  for (auto& [k, v] : inner.results.items()) ctx.results[k] = v;
  for (auto& [k, v] : inner.verdicts.items()) ctx.verdicts[k] = v;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"product", "classify",    "grid", "hilbert", "quadric",
                                                 "implicitize", "ci", "verify", "random"};
  return names;
}

Report run_command(const std::string& command, const InstanceFile& instance,
                   const CommandOptions& options) {
  Context ctx{instance, options};
  const auto ops = resolve(instance);
  if (command == "product") {
    run_product(ctx, ops);
  } else if (command == "classify") {
    run_classify(ctx, ops);
  } else if (command == "grid") {
    run_grid(ctx, ops);
  } else if (command == "hilbert") {
    run_hilbert(ctx, ops);
  } else if (command == "quadric") {
    run_quadric(ctx, ops);
  } else if (command == "implicitize") {
    run_implicitize(ctx, ops);
  } else if (command == "ci") {
    run_ci(ctx, ops);
  } else if (command == "random") {
    run_random(ctx);
  } else {
    throw ParseError("unknown command '" + command + "'");
  }
  Report r;
  r.json["command"] = command;
  r.json["space"] = command == "random" ? options.space.value_or(3) : instance.space;
  r.json["results"] = ctx.results;
  r.json["verdicts"] = ctx.verdicts;
  bool ok = true;
  for (const auto& [k, v] : ctx.verdicts.items()) ok = ok && v.get<bool>();
  r.json["ok"] = ok;
  return r;
}

InstanceFile random_instance(int space, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0 || m == 0) throw PreconditionError("point sets must be nonempty");
  InstanceFile inst;
  inst.space = space;
  inst.seed = seed;
  inst.args = {"X", "X'", "L", "L'"};
  if (space == 3) {
    const auto g = space::generic_instance_p3(n, m, seed);
    inst.lines = {{"L", {g.l.h(), g.l.k()}}, {"L'", {g.l_prime.h(), g.l_prime.k()}}};
    inst.points = {{"X", g.x.points()}, {"X'", g.x_prime.points()}};
    return inst;
  }
  if (space != 2) throw PreconditionError("space must be 2 or 3");
  SeededRng rng(seed);
  auto random_line = [&] {
    std::vector<Integer> c(3);
    for (auto& v : c) v = static_cast<long>(rng.nonzero(9));
    return Hyperplane(ProjPoint(std::span<const Integer>(c)));
  };
  const Hyperplane l = random_line();
  Hyperplane lp = random_line();
  while (lp == l) lp = random_line();
  const auto [x, xp] = plane::generic_collinear_sample(l, lp, n, m, rng.next());
  inst.lines = {{"L", {l}}, {"L'", {lp}}};
  inst.points = {{"X", x.points()}, {"X'", xp.points()}};
  return inst;
}

std::vector<std::string> match_expectation(const Json& expected, const Json& actual,
                                           const std::string& path) {
  const std::string here = path.empty() ? "<root>" : path;
  if (expected.is_object()) {
    if (!actual.is_object()) return {here + ": expected an object, got " + actual.dump()};
    std::vector<std::string> diffs;
    for (const auto& [k, v] : expected.items()) {
      const std::string sub = path.empty() ? k : path + "." + k;
      if (!actual.contains(k)) {
        diffs.push_back(sub + ": missing");
        continue;
      }
      auto d = match_expectation(v, actual[k], sub);
      diffs.insert(diffs.end(), d.begin(), d.end());
    }
    return diffs;
  }
  if (expected != actual) return {here + ": expected " + expected.dump() + ", got " + actual.dump()};
  return {};
}

namespace {

bool scalar_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << k << ":\n";
      render(out, v, indent + 2);
    } else if (v.is_array() && scalar_array(v)) {
      out << pad << k << ": (";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << ")\n";
    } else if (v.is_array()) {
      out << pad << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render(out, e, indent + 4);
        } else if (e.is_array()) {
          out << pad << "  - (";
          for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << scalar(e[i]);
          out << ")\n";
        } else {
          out << pad << "  - " << scalar(e) << "\n";
        }
      }
    } else {
      out << pad << k << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << report.json.value("command", std::string()) << " (P^" << report.json.value("space", 0)
      << ")\n";
  render(out, report.json["results"], 2);
  const auto& v = report.json["verdicts"];
  if (!v.empty()) {
    out << "verdicts:\n";
    for (const auto& [k, ok] : v.items()) out << "  " << k << ": " << (ok.get<bool>() ? "pass" : "FAIL") << "\n";
  }
  out << (report.ok() ? "ok" : "MISMATCH") << "\n";
  return out.str();
}

}  // namespace hada::io
