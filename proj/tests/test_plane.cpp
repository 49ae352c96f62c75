#include <doctest.h>

#include <set>

#include "hada/errors.hpp"
#include "hada/plane.hpp"
#include "oracle.hpp"

using namespace hada;
using namespace hada::plane;

namespace {

const Hyperplane kL{2, -3, -11};           // dual point off Delta_1
const Hyperplane kLPrime{2, -3, 132};      // contains the five sample points
const Hyperplane kLAxis{0, 1, -2};         // dual point in Delta_1 \ Delta_0
const FinitePointSet kFive{ProjPoint{27, 238, 5}, ProjPoint{12, 96, 2}, ProjPoint{15, 142, 3},
                           ProjPoint{21, 234, 5}, ProjPoint{33, 242, 5}};

}  // namespace

TEST_CASE("point-line product: every case") {
  SUBCASE("case 1: generic point divides coefficients") {
    const auto o = point_line_product_p2(ProjPoint{12, 96, 2}, kL);
    CHECK(o.case_tag == 1);
    CHECK(o.line() == Hyperplane{16, -3, -528});
  }
  SUBCASE("case 2: level drops, coordinate line") {
    const auto o = point_line_product_p2(ProjPoint{0, 1, 1}, kL);
    CHECK(o.case_tag == 2);
    CHECK(o.line() == Hyperplane::coordinate(2, 0));
    CHECK(o.line().to_string() == "x0");
  }
  SUBCASE("case 3: level kept, a point on x_j = 0") {
    // A = [0:1:-2], Q = [0:3:5]: Q * L is the point [0:-a2 q1 : a1 q2] = [0:6:5].
    const auto o = point_line_product_p2(ProjPoint{0, 3, 5}, kLAxis);
    CHECK(o.case_tag == 3);
    CHECK(o.point() == ProjPoint{0, 6, 5});
  }
  SUBCASE("case 4: coordinate point other than A") {
    const auto o = point_line_product_p2(ProjPoint{0, 0, 1}, kL);
    CHECK(o.case_tag == 4);
    CHECK(o.point() == ProjPoint{0, 0, 1});
  }
  SUBCASE("case 5: Q = A coordinate point") {
    const auto o = point_line_product_p2(ProjPoint{1, 0, 0}, Hyperplane::coordinate(2, 0));
    CHECK(o.case_tag == 5);
    CHECK(o.is_undefined());
  }
}

TEST_CASE("point-line product agrees with sampling on a small exhaustive grid") {
  SeededRng rng(1);
  std::set<int> seen;
  const std::vector<long> vals = {-1, 0, 1, 2};
  std::vector<ProjPoint> pts;
  for (long a : vals) {
    for (long b : vals) {
      for (long c : vals) {
        if (auto p = ProjPoint::from_vector(std::span<const Integer>(std::vector<Integer>{a, b, c}))) {
          if (std::find(pts.begin(), pts.end(), *p) == pts.end()) pts.push_back(*p);
        }
      }
    }
  }
  for (const auto& q : pts) {
    for (const auto& a : pts) {
      const Hyperplane l(a);
      const auto o = point_line_product_p2(q, l);
      seen.insert(o.case_tag);
      CAPTURE(q.to_string());
      CAPTURE(l.to_string());
      CHECK(oracle::same_shape(oracle::point_line_image(q, l, rng), o));
    }
  }
  CHECK(seen == std::set<int>{1, 2, 3, 4, 5});
}

TEST_CASE("two-point incidence agrees with sampled images") {
  SeededRng rng(2);
  std::set<IncidenceCase> seen;
  const std::vector<Hyperplane> lines = {kL, kLAxis, Hyperplane{1, 1, 0}, Hyperplane{2, -1, 5}};
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& l = lines[trial % lines.size()];
    const auto q = oracle::random_with_support(oracle::random_support(rng), rng, 4);
    const auto qp = oracle::random_with_support(oracle::random_support(rng), rng, 4);
    if (q == qp || delta_level(q) == 0 || delta_level(qp) == 0) continue;
    CAPTURE(q.to_string());
    CAPTURE(qp.to_string());
    CAPTURE(l.to_string());
    const auto rep = two_point_line_incidence(q, qp, l);
    seen.insert(rep.sub_case);
    CHECK(rep.agrees());
    const auto a = oracle::point_line_image(q, l, rng);
    const auto b = oracle::point_line_image(qp, l, rng);
    const auto cmp = oracle::compare(a, b);
    REQUIRE(cmp.has_value());
    CHECK(*cmp == rep.predicted);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("two-point incidence: swapped roles are flagged") {
  const auto rep = two_point_line_incidence(ProjPoint{3, 1, 1}, ProjPoint{0, 1, 1}, kLAxis);
  CHECK(rep.sub_case == IncidenceCase::k2a);
  CHECK(rep.swapped);
}

TEST_CASE("two-point incidence outside the classification") {
  CHECK_THROWS_AS(two_point_line_incidence(ProjPoint{1, 0, 0}, ProjPoint{1, 2, 3}, kL),
                  PreconditionError);
  CHECK_THROWS_AS(two_point_line_incidence(ProjPoint{1, 2, 3}, ProjPoint{1, 2, 3}, kL),
                  PreconditionError);
  CHECK_THROWS_AS(two_point_line_incidence(ProjPoint{1, 2, 3}, ProjPoint{1, 1, 1},
                                           Hyperplane::coordinate(2, 1)),
                  PreconditionError);
}

TEST_CASE("five points times a line: five distinct lines") {
  const auto arr = collinear_set_line_product(kFive, kL, kLPrime);
  CHECK(arr.branch == 1);
  CHECK(arr.matches_expectation);
  CHECK(arr.isolated_points.empty());
  const std::set<Hyperplane> expected = {Hyperplane{16, -3, -528}, Hyperplane{284, -45, -7810},
                                         Hyperplane{2380, -405, -70686},
                                         Hyperplane{260, -35, -6006}, Hyperplane{220, -45, -7986}};
  CHECK(std::set<Hyperplane>(arr.lines.begin(), arr.lines.end()) == expected);
}

TEST_CASE("set times line: dual point in Delta_1 gives r - 1 lines and a point") {
  // X' contains L' ∩ Delta_1 = {[0:44:1], [66:0:-1], [3:2:0]} plus two more points.
  const FinitePointSet x{ProjPoint{0, 44, 1}, ProjPoint{66, 0, -1}, ProjPoint{3, 2, 0},
                         ProjPoint{27, 238, 5}, ProjPoint{12, 96, 2}};
  for (const auto& p : x) REQUIRE(kLPrime.contains(p));
  const auto arr = collinear_set_line_product(x, kLAxis, kLPrime);
  CHECK(arr.branch == 2);
  CHECK(arr.hypothesis_met);
  CHECK(arr.lines.size() == 4);
  REQUIRE(arr.isolated_point() != nullptr);
  for (const auto& l : arr.lines) CHECK_FALSE(l.contains(*arr.isolated_point()));
  CHECK(arr.matches_expectation);
}

TEST_CASE("set times line: coordinate line collapses") {
  const FinitePointSet x{ProjPoint{0, 44, 1}, ProjPoint{66, 0, -1}, ProjPoint{3, 2, 0},
                         ProjPoint{27, 238, 5}};
  const auto arr = collinear_set_line_product(x, Hyperplane::coordinate(2, 0), kLPrime);
  CHECK(arr.branch == 3);
  REQUIRE(arr.collapsed.has_value());
  CHECK(*arr.collapsed == Hyperplane::coordinate(2, 0));
}

TEST_CASE("grid in P^2: 3 x 4 example") {
  const Hyperplane l{3, 1, -30};
  const Hyperplane lp{67, -6, -110};
  const FinitePointSet x{ProjPoint{6, 12, 1}, ProjPoint{22, 54, 4}, ProjPoint{29, 63, 5}};
  const FinitePointSet xp{ProjPoint{22, 154, 5}, ProjPoint{28, 221, 5}, ProjPoint{34, 288, 5},
                          ProjPoint{18, 146, 3}};
  CHECK(grid_condition(x, xp, l, lp));
  const auto g = grid_product_p2(x, xp, l, lp);
  CHECK(g.points.size() == 12);
  CHECK(g.points.points() == oracle::brute_products(x, xp));
  CHECK(g.ci_witness.first.degree() == 3);
  CHECK(g.ci_witness.second.degree() == 4);
  for (const auto& p : g.points) {
    CHECK(membership(p, g.ci_witness.first));
    CHECK(membership(p, g.ci_witness.second));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < xp.size(); ++j) {
      CHECK(oracle::cross(g.row_lines[i].dual(), g.col_lines[j].dual()) == g.table[i][j]);
    }
  }
}

TEST_CASE("grid condition failure names the pair") {
  // With A = [1:1:1] and A' = [1:2:3], P' = [6p0:3p1:2p2] lies on L' for every P
  // on L and P * A = P' * A'.
  const Hyperplane a{1, 1, 1};
  const Hyperplane b{1, 2, 3};
  const ProjPoint p{1, 2, -3};
  const ProjPoint pp{1, 1, -1};
  REQUIRE(a.contains(p));
  REQUIRE(b.contains(pp));
  const FinitePointSet x{p};
  const FinitePointSet xp{pp};
  CHECK_FALSE(grid_condition(x, xp, a, b));
  try {
    grid_product_p2(x, xp, a, b);
    FAIL("expected GridConditionFailure");
  } catch (const GridConditionFailure& e) {
    CHECK(e.collision().p == p);
    CHECK(e.collision().p_prime == pp);
  }
}

TEST_CASE("generic collinear samples satisfy the grid hypotheses") {
  const Hyperplane l{3, 1, -30};
  const Hyperplane lp{67, -6, -110};
  const auto [x, xp] = generic_collinear_sample(l, lp, 4, 5, 17);
  const auto [y, yp] = generic_collinear_sample(l, lp, 4, 5, 17);
  CHECK(x == y);
  CHECK(xp == yp);
  CHECK_NOTHROW(check_grid_hypotheses(x, xp, l, lp));
  CHECK(grid_product_p2(x, xp, l, lp).points.size() == 20);
}

TEST_CASE("collinearity of X * Y on a single line") {
  // Generic line: products are not collinear.
  const auto [x, y] = generic_collinear_sample(kL, kL, 3, 3, 5);
  (void)y;
  const FinitePointSet xs{x[0], x[1], x[2]};
  const auto [u, v] = generic_collinear_sample(kL, kL, 4, 4, 8);
  (void)u;
  std::vector<ProjPoint> others;
  for (const auto& p : v) {
    if (!xs.contains(p)) others.push_back(p);
  }
  REQUIRE(others.size() >= 3);
  const FinitePointSet ys{others[0], others[1], others[2]};
  const auto verdict = product_collinearity_check(xs, ys, kL);
  CHECK(verdict.theorem_applicable);
  CHECK(verdict.verdict == Collinearity::NotCollinear);
  CHECK(verdict.theorem_agrees);

  // A line through [1:0:0]: every product stays on L * L.
  const Hyperplane m{0, 1, -1};
  const FinitePointSet a{ProjPoint{1, 1, 1}, ProjPoint{2, 1, 1}, ProjPoint{3, 2, 2}};
  const FinitePointSet b{ProjPoint{5, 1, 1}, ProjPoint{7, 3, 3}, ProjPoint{1, 4, 4}};
  const auto w = product_collinearity_check(a, b, m);
  CHECK(w.verdict == Collinearity::Collinear);
  CHECK(w.theorem_agrees);
}
