#include "hada/plane.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hada/linalg.hpp"
#include "hada/sampling.hpp"

namespace hada::plane {
namespace {

constexpr std::size_t kPlaneSize = 3;

void require_plane(const ProjPoint& p, const char* what) {
  if (p.size() != kPlaneSize) {
    throw DimensionMismatch(std::string(what) + " " + p.to_string() + " is not in P^2");
  }
}

std::size_t first_zero(const ProjPoint& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) return i;
  }
  return p.size();
}

std::array<std::size_t, 2> others(std::size_t j) {
  std::array<std::size_t, 2> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < kPlaneSize; ++i) {
    if (i != j) out[k++] = i;
  }
  return out;
}

// Which outcome shape a point takes against a line whose dual point lies in
// Delta_1 \ Delta_0.
enum class Kind { Generic, Collapsing, Pointlike };

Kind kind_against(const ProjPoint& q, const ProjPoint& a) {
  if (delta_level(q) == 2) return Kind::Generic;
  return product_level(q, a) <= 0 ? Kind::Collapsing : Kind::Pointlike;
}

}  // namespace

std::string PointLineOutcome::to_string() const {
  std::string shape;
  if (is_line()) {
    shape = "line " + line().to_string();
  } else if (is_point()) {
    shape = "point " + point().to_string();
  } else {
    shape = "undefined";
  }
  return "case " + std::to_string(case_tag) + ": " + shape;
}

PointLineOutcome point_line_product_p2(const ProjPoint& q, const Hyperplane& l) {
  require_plane(q, "point");
  require_plane(l.dual(), "line dual");
  const ProjPoint& a = l.dual();
  switch (delta_level(q)) {
    case 2:
      return {divide_coefficients(l, q), 1};
    case 1: {
      const std::size_t j = first_zero(q);
      if (product_level(q, a) < delta_level(a)) {
        return {Hyperplane::coordinate(2, j), 2};
      }
      const auto [k, m] = others(j);
      std::vector<Integer> c(kPlaneSize);
      c[k] = a[m] * q[k];
      c[m] = -(a[k] * q[m]);
      return {ProjPoint(std::span<const Integer>(c)), 3};
    }
    default:
      if (q == a) return {Undefined{}, 5};
      return {q, 4};
  }
}

std::string_view label(IncidenceCase c) {
  switch (c) {
    case IncidenceCase::k1a: return "1a";
    case IncidenceCase::k1b: return "1b";
    case IncidenceCase::k1c: return "1c";
    case IncidenceCase::k1d: return "1d";
    case IncidenceCase::k1e: return "1e";
    case IncidenceCase::k2a: return "2a";
    case IncidenceCase::k2b: return "2b";
    case IncidenceCase::k3: return "3";
  }
  return "?";
}

std::string_view label(Incidence i) {
  switch (i) {
    case Incidence::DistinctLines: return "distinct lines";
    case Incidence::SameLine: return "same line";
    case Incidence::PointOnLine: return "point on line";
    case Incidence::PointOffLine: return "point off line";
    case Incidence::DistinctPoints: return "distinct points";
    case Incidence::SamePoint: return "same point";
  }
  return "?";
}

Incidence compare_outcomes(const PointLineOutcome& a, const PointLineOutcome& b) {
  if (a.is_undefined() || b.is_undefined()) {
    throw PreconditionError("cannot compare an undefined product");
  }
  if (a.is_line() && b.is_line()) {
    return a.line() == b.line() ? Incidence::SameLine : Incidence::DistinctLines;
  }
  if (a.is_point() && b.is_point()) {
    return a.point() == b.point() ? Incidence::SamePoint : Incidence::DistinctPoints;
  }
  const auto& line = a.is_line() ? a.line() : b.line();
  const auto& point = a.is_point() ? a.point() : b.point();
  return line.contains(point) ? Incidence::PointOnLine : Incidence::PointOffLine;
}

IncidenceReport two_point_line_incidence(const ProjPoint& q, const ProjPoint& q_prime,
                                         const Hyperplane& l) {
  require_plane(q, "point");
  require_plane(q_prime, "point");
  require_plane(l.dual(), "line dual");
  const ProjPoint& a = l.dual();
  if (q == q_prime) throw PreconditionError("the two points coincide: " + q.to_string());
  for (const auto* p : {&a, &q, &q_prime}) {
    if (delta_level(*p) < 1) {
      throw PreconditionError("outside classification: " + p->to_string() +
                              " is a coordinate point");
    }
  }

  IncidenceReport report{IncidenceCase::k1a,
                         false,
                         point_line_product_p2(q, l),
                         point_line_product_p2(q_prime, l),
                         Incidence::DistinctLines,
                         Incidence::DistinctLines};
  report.observed = compare_outcomes(report.first, report.second);

  const bool product_in_delta0 = product_level(q, q_prime) <= 0;
  if (delta_level(a) == 2) {
    if (delta_level(q) == 2 || delta_level(q_prime) == 2) {
      report.sub_case = IncidenceCase::k1a;
      report.predicted = Incidence::DistinctLines;
    } else {
      report.sub_case = IncidenceCase::k1b;
      report.predicted = product_in_delta0 ? Incidence::DistinctLines : Incidence::SameLine;
    }
    return report;
  }

  // A = dual point in H_i with the other two coefficients nonzero.
  const auto [j, k] = others(first_zero(a));
  const Integer det = q[j] * q_prime[k] - q[k] * q_prime[j];
  const Kind kq = kind_against(q, a);
  const Kind kp = kind_against(q_prime, a);
  auto is = [&](Kind x, Kind y) { return (kq == x && kp == y) || (kq == y && kp == x); };

  if (kq == Kind::Generic && kp == Kind::Generic) {
    report.sub_case = IncidenceCase::k1c;
    report.predicted = det != 0 ? Incidence::DistinctLines : Incidence::SameLine;
  } else if (is(Kind::Collapsing, Kind::Generic)) {
    report.sub_case = IncidenceCase::k1d;
    report.swapped = kq == Kind::Generic;
    report.predicted = Incidence::DistinctLines;
  } else if (kq == Kind::Collapsing && kp == Kind::Collapsing) {
    report.sub_case = IncidenceCase::k1e;
    report.predicted = product_in_delta0 ? Incidence::DistinctLines : Incidence::SameLine;
  } else if (is(Kind::Pointlike, Kind::Generic)) {
    report.sub_case = IncidenceCase::k2a;
    report.swapped = kq == Kind::Generic;
    report.predicted = det == 0 ? Incidence::PointOnLine : Incidence::PointOffLine;
  } else if (is(Kind::Pointlike, Kind::Collapsing)) {
    report.sub_case = IncidenceCase::k2b;
    report.swapped = kq == Kind::Collapsing;
    report.predicted = Incidence::PointOffLine;
  } else {
    report.sub_case = IncidenceCase::k3;
    report.predicted = Incidence::DistinctPoints;
  }
  return report;
}

LineArrangement collinear_set_line_product(const FinitePointSet& x_prime, const Hyperplane& l,
                                           const Hyperplane& l_prime) {
  require_plane(l.dual(), "line dual");
  require_plane(l_prime.dual(), "line dual");
  if (delta_level(l_prime.dual()) != 2) {
    throw PreconditionError("the dual point " + l_prime.dual().to_string() +
                            " of the containing line lies in Delta_1");
  }
  for (const auto& p : x_prime) {
    require_plane(p, "point");
    if (!l_prime.contains(p)) {
      throw PreconditionError("point " + p.to_string() + " is not on " + l_prime.to_string());
    }
  }

  LineArrangement out;
  const int la = delta_level(l.dual());
  out.branch = la == 2 ? 1 : (la == 1 ? 2 : 3);
  const std::size_t r = x_prime.size();
  out.hypothesis_met = r >= 2 && (out.branch != 3 || r >= 3);

  std::vector<ProjPoint> points;
  for (const auto& p : x_prime) {
    const auto o = point_line_product_p2(p, l);
    if (o.is_line()) {
      if (std::find(out.lines.begin(), out.lines.end(), o.line()) == out.lines.end()) {
        out.lines.push_back(o.line());
      }
    } else if (o.is_point()) {
      if (std::find(points.begin(), points.end(), o.point()) == points.end()) {
        points.push_back(o.point());
      }
    }
  }
  if (!out.lines.empty() &&
      std::all_of(out.lines.begin(), out.lines.end(), [&](const Hyperplane& h) { return h == l; })) {
    out.collapsed = l;
    out.lines.clear();
  }
  for (const auto& p : points) {
    const bool covered =
        (out.collapsed && out.collapsed->contains(p)) ||
        std::any_of(out.lines.begin(), out.lines.end(), [&](const Hyperplane& h) { return h.contains(p); });
    if (!covered) out.isolated_points.push_back(p);
  }

  const std::size_t nl = out.lines.size();
  const std::size_t np = out.isolated_points.size();
  switch (out.branch) {
    case 1:
      out.matches_expectation = !out.collapsed && nl == r && np == 0;
      break;
    case 2:
      out.matches_expectation = !out.collapsed && ((nl == r && np == 0) || (nl + 1 == r && np == 1));
      break;
    default:
      out.matches_expectation = r < 3 || (out.collapsed && *out.collapsed == l && np == 0);
      break;
  }
  return out;
}

GridConditionFailure::GridConditionFailure(GridCollision c)
    : PreconditionError("grid condition fails: " + c.p.to_string() + " * A = " +
                        c.p_prime.to_string() + " * A' = " + c.image.to_string()),
      collision_(std::move(c)) {}

void check_grid_hypotheses(const FinitePointSet& x, const FinitePointSet& x_prime,
                           const Hyperplane& l, const Hyperplane& l_prime) {
  for (const auto* h : {&l, &l_prime}) {
    require_plane(h->dual(), "line dual");
    if (delta_level(h->dual()) != 2) {
      throw PreconditionError("line " + h->to_string() + " passes through a coordinate point");
    }
  }
  auto check_set = [](const FinitePointSet& s, const Hyperplane& h) {
    for (const auto& p : s) {
      require_plane(p, "point");
      if (!h.contains(p)) {
        throw PreconditionError("point " + p.to_string() + " is not on " + h.to_string());
      }
      if (delta_level(p) != 2) {
        throw PreconditionError("point " + p.to_string() + " lies in Delta_1");
      }
    }
  };
  check_set(x, l);
  check_set(x_prime, l_prime);
  for (const auto& p : x) {
    if (x_prime.contains(p)) throw PreconditionError("point " + p.to_string() + " lies in both sets");
  }
}

std::optional<GridCollision> find_grid_collision(const FinitePointSet& x,
                                                 const FinitePointSet& x_prime,
                                                 const Hyperplane& l, const Hyperplane& l_prime) {
  std::vector<ProjPoint> images;
  images.reserve(x_prime.size());
  for (const auto& q : x_prime) images.push_back(*hadamard(q, l_prime.dual()));
  for (const auto& p : x) {
    const auto image = *hadamard(p, l.dual());
    for (std::size_t j = 0; j < x_prime.size(); ++j) {
      if (images[j] == image) return GridCollision{p, x_prime[j], image};
    }
  }
  return std::nullopt;
}

bool grid_condition(const FinitePointSet& x, const FinitePointSet& x_prime, const Hyperplane& l,
                    const Hyperplane& l_prime) {
  check_grid_hypotheses(x, x_prime, l, l_prime);
  return !find_grid_collision(x, x_prime, l, l_prime).has_value();
}

GridResult grid_product_p2(const FinitePointSet& x, const FinitePointSet& x_prime,
                           const Hyperplane& l, const Hyperplane& l_prime) {
  check_grid_hypotheses(x, x_prime, l, l_prime);
  if (auto c = find_grid_collision(x, x_prime, l, l_prime)) throw GridConditionFailure(*c);

  GridResult out{{}, {}, {}, {}, {HomogeneousForm(3, 0), HomogeneousForm(3, 0)}};
  HomogeneousForm rows(3, 0);
  rows.add_term({0, 0, 0}, 1);
  HomogeneousForm cols = rows;
  for (const auto& p : x) {
    out.row_lines.push_back(point_hyperplane_product(p, l_prime));
    rows = rows * HomogeneousForm::linear(out.row_lines.back());
  }
  for (const auto& q : x_prime) {
    out.col_lines.push_back(point_hyperplane_product(q, l));
    cols = cols * HomogeneousForm::linear(out.col_lines.back());
  }
  std::set<ProjPoint> all;
  for (const auto& p : x) {
    auto& row = out.table.emplace_back();
    for (const auto& q : x_prime) {
      row.push_back(*hadamard(p, q));
      all.insert(row.back());
    }
  }
  out.points = FinitePointSet(std::vector<ProjPoint>(all.begin(), all.end()));
  if (out.points.size() != x.size() * x_prime.size()) {
    throw VerificationError("grid has " + std::to_string(out.points.size()) + " points, expected " +
                            std::to_string(x.size() * x_prime.size()));
  }
  out.ci_witness = {std::move(rows), std::move(cols)};
  return out;
}

std::pair<FinitePointSet, FinitePointSet> generic_collinear_sample(const Hyperplane& l,
                                                                   const Hyperplane& l_prime,
                                                                   std::size_t n, std::size_t m,
                                                                   std::uint64_t seed) {
  constexpr int kAttemptsPerPoint = 1000;
  for (const auto* h : {&l, &l_prime}) {
    require_plane(h->dual(), "line dual");
    if (delta_level(h->dual()) != 2) {
      throw PreconditionError("line " + h->to_string() + " passes through a coordinate point");
    }
  }
  SeededRng rng(seed);
  const auto basis = line_basis(std::span<const Hyperplane>(&l, 1));
  const auto basis_prime = line_basis(std::span<const Hyperplane>(&l_prime, 1));

  std::vector<ProjPoint> xs;
  std::vector<ProjPoint> images;  // P * A for P in X
  for (std::size_t k = 0; k < n; ++k) {
    int attempts = 0;
    while (true) {
      if (++attempts > kAttemptsPerPoint) throw PreconditionError("sampling on L did not converge");
      auto p = random_point_on(basis, rng);
      if (delta_level(p) != 2 || std::find(xs.begin(), xs.end(), p) != xs.end()) continue;
      images.push_back(*hadamard(p, l.dual()));
      xs.push_back(std::move(p));
      break;
    }
  }
  std::vector<ProjPoint> ys;
  for (std::size_t k = 0; k < m; ++k) {
    int attempts = 0;
    while (true) {
      if (++attempts > kAttemptsPerPoint) throw PreconditionError("sampling on L' did not converge");
      auto q = random_point_on(basis_prime, rng);
      if (delta_level(q) != 2 || std::find(ys.begin(), ys.end(), q) != ys.end() ||
          std::find(xs.begin(), xs.end(), q) != xs.end()) {
        continue;
      }
      const auto image = *hadamard(q, l_prime.dual());
      if (std::find(images.begin(), images.end(), image) != images.end()) continue;
      ys.push_back(std::move(q));
      break;
    }
  }
  return {FinitePointSet(std::move(xs)), FinitePointSet(std::move(ys))};
}

CollinearityVerdict product_collinearity_check(const FinitePointSet& x, const FinitePointSet& y,
                                               const Hyperplane& l) {
  require_plane(l.dual(), "line dual");
  for (const auto* s : {&x, &y}) {
    for (const auto& p : *s) {
      require_plane(p, "point");
      if (!l.contains(p)) throw PreconditionError("point " + p.to_string() + " is not on " + l.to_string());
    }
  }
  CollinearityVerdict out{Collinearity::Collinear, pairwise_product(x, y), {}, {}, false, false, true};

  std::vector<std::vector<Integer>> rows;
  for (const auto& p : out.products) rows.push_back(p.coords());
  const Matrix coords = Matrix::from_integer_rows(rows, kPlaneSize);
  const std::size_t r = rank(coords);
  out.verdict = r >= 3 ? Collinearity::NotCollinear : Collinearity::Collinear;
  if (r == 2) {
    const auto k = kernel_basis(coords);
    out.containing_line = Hyperplane(ProjPoint(std::span<const Rational>(k.front())));
  }

  const bool meets_coordinate_point = delta_level(l.dual()) < 2;
  if (meets_coordinate_point) {
    const auto ll = hyperplane_product(l, l);
    if (const auto* h = std::get_if<Hyperplane>(&ll)) {
      out.predicted_line = *h;
      out.on_predicted_line = std::all_of(out.products.begin(), out.products.end(),
                                          [&](const ProjPoint& p) { return h->contains(p); });
    }
  }

  std::set<ProjPoint> joint(x.begin(), x.end());
  joint.insert(y.begin(), y.end());
  out.theorem_applicable = x.size() >= 3 && y.size() >= 3 && joint.size() >= 4;
  if (out.theorem_applicable) {
    const auto predicted = meets_coordinate_point ? Collinearity::Collinear : Collinearity::NotCollinear;
    out.theorem_agrees = predicted == out.verdict;
  }
  return out;
}

}  // namespace hada::plane
