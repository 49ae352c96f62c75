#include <doctest.h>

#include "hada/errors.hpp"
#include "hada/space.hpp"
#include "oracle.hpp"

using namespace hada;
using namespace hada::space;

namespace {

// Instance with a unique quadric through the nine products.
Line3 ex_l() { return Line3(Hyperplane{1, -1, 1, 2}, Hyperplane{1, 2, -1, 1}); }
Line3 ex_lp() { return Line3(Hyperplane{1, 2, -2, 1}, Hyperplane{2, 2, 1, -4}); }
FinitePointSet ex_x() {
  return FinitePointSet{ProjPoint{-2, 1, 1, 1}, ProjPoint{-1, -1, -2, 1}, ProjPoint{-3, 3, 4, 1}};
}
FinitePointSet ex_xp() {
  return FinitePointSet{ProjPoint{-1, 2, 2, 1}, ProjPoint{11, -8, -2, 1}, ProjPoint{-7, 7, 4, 1}};
}

// Second instance sharing L' and X'.
Line3 ex2_l() { return Line3(Hyperplane{1, 2, 1, 1}, Hyperplane{1, 1, 1, -3}); }
FinitePointSet ex2_x() {
  return FinitePointSet{ProjPoint{4, -4, 3, 1}, ProjPoint{6, -4, 1, 1}, ProjPoint{5, -4, 2, 1}};
}

HomogeneousForm quadric_form(const std::vector<std::pair<Exponent, long>>& terms) {
  HomogeneousForm f(4, 2);
  for (const auto& [e, c] : terms) f.add_term(e, Rational(c));
  return f;
}

}  // namespace

TEST_CASE("Line3 validation") {
  CHECK_THROWS_AS(Line3(Hyperplane{1, 2, 3}, Hyperplane{1, 1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(Line3(Hyperplane{1, 2, 3, 4}, Hyperplane{2, 4, 6, 8}), PreconditionError);
  const auto l = ex_l();
  for (const auto& b : l.basis()) CHECK(l.contains(b));
  const Line3 same(Hyperplane{2, 1, 0, 3}, Hyperplane{1, 2, -1, 1});  // sum and second plane
  CHECK(l.same_line(same));
  CHECK_FALSE(l.same_line(ex_lp()));
}

TEST_CASE("point times line in P^3") {
  const auto l = ex_l();
  CHECK(point_line_product_p3(ProjPoint{1, 1, 1, 1}, l).same_line(l));
  const auto r = point_line_product_p3(ProjPoint{-2, 1, 1, 1}, ex_lp());
  const Line3 expected(Hyperplane{1, -4, 4, -2}, Hyperplane{1, -2, -1, 4});
  CHECK(r.same_line(expected));
  // Sampled points of P * L' lie on the product line.
  const auto lp = ex_lp();
  const auto& b = lp.basis();
  for (long s = -3; s <= 3; ++s) {
    std::vector<Integer> c(4);
    for (std::size_t i = 0; i < 4; ++i) c[i] = b[0][i] + s * b[1][i];
    const ProjPoint q{std::span<const Integer>(c)};
    if (auto prod = hadamard(ProjPoint{-2, 1, 1, 1}, q)) CHECK(r.contains(*prod));
  }
}

TEST_CASE("line intersections") {
  const auto l = ex_l();
  CHECK(intersect(l, l).relation == LineRelation::Same);
  const Line3 axis01(Hyperplane::coordinate(3, 2), Hyperplane::coordinate(3, 3));
  const Line3 axis23(Hyperplane::coordinate(3, 0), Hyperplane::coordinate(3, 1));
  CHECK(intersect(axis01, axis23).relation == LineRelation::Skew);
  const Line3 axis02(Hyperplane::coordinate(3, 1), Hyperplane::coordinate(3, 3));
  const auto m = intersect(axis01, axis02);
  REQUIRE(m.relation == LineRelation::Meet);
  CHECK(*m.point == ProjPoint{1, 0, 0, 0});
  CHECK(oracle::meet_p3(axis01, axis02) == m.point);
}

TEST_CASE("rank condition holds with rank exactly 3 on both instances") {
  for (const auto& [l, x] : {std::pair{ex_l(), ex_x()}, std::pair{ex2_l(), ex2_x()}}) {
    for (const auto& p : x) {
      for (const auto& pp : ex_xp()) {
        CHECK(rank_condition(l, ex_lp(), p, pp).rank == 3);
      }
    }
  }
  // L = L' and P = P' collapses the rows to rank 2.
  const auto l = ex_l();
  CHECK(rank_condition(l, l, ProjPoint{-2, 1, 1, 1}, ProjPoint{-2, 1, 1, 1}).rank == 2);
}

TEST_CASE("grid of nine points in P^3") {
  const auto g = grid_product_p3(ex_x(), ex_xp(), ex_l(), ex_lp());
  CHECK(g.points.size() == 9);
  CHECK(g.points.points() == oracle::brute_products(ex_x(), ex_xp()));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(oracle::meet_p3(g.row_lines[i], g.col_lines[j]) == g.table[i][j]);
    }
  }
}

TEST_CASE("unique quadric and its ruling") {
  const auto s = grid_product_p3(ex_x(), ex_xp(), ex_l(), ex_lp());
  const auto fit = quadric_through(s.points);
  REQUIRE(fit.status == QuadricFit::Unique);
  CHECK(fit.kernel_dim == 1);
  CHECK(fit.quadric->form.primitive().to_string() ==
        "36x0^2-246x0x1+338x0x2+354x0x3+180x1^2-354x1x2-1690x1x3+126x2^2+861x2x3+630x3^2");
  const Quadric3 q(fit.quadric->form.primitive());
  CHECK(q.determinant() == Rational(Integer("22187592025"), Integer(4)));
  const auto r = ruling_check(q, s.row_lines, s.col_lines);
  CHECK(r.passed());
  CHECK(r.nondegenerate);

  const auto s2 = grid_product_p3(ex2_x(), ex_xp(), ex2_l(), ex_lp());
  const auto fit2 = quadric_through(s2.points);
  REQUIRE(fit2.status == QuadricFit::Unique);
  CHECK(fit2.quadric->form.primitive().to_string() ==
        "10x0x1-120x0x3-21x1^2-30x1x2+154x1x3-140x2x3+1176x3^2");
  CHECK(Quadric3(fit2.quadric->form.primitive()).determinant() == 1562500);
}

TEST_CASE("ruling check reports violations") {
  const auto s = grid_product_p3(ex_x(), ex_xp(), ex_l(), ex_lp());
  const Quadric3 q(*quadric_through(s.points).quadric);
  std::vector<Line3> rows = s.row_lines;
  rows[1] = rows[0];
  const auto r = ruling_check(q, rows, s.col_lines);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.violations().empty());
  CHECK_FALSE(r.meeting_rows.empty());

  const Quadric3 degenerate(quadric_form({{{2, 0, 0, 0}, 1}}));
  CHECK(degenerate.determinant() == 0);
  const auto d = ruling_check(degenerate, s.row_lines, s.col_lines);
  CHECK_FALSE(d.nondegenerate);
  CHECK_FALSE(d.passed());
}

TEST_CASE("quadric fit status") {
  const FinitePointSet three{ProjPoint{1, 0, 0, 0}, ProjPoint{0, 1, 0, 0}, ProjPoint{1, 1, 1, 1}};
  const auto a = quadric_through(three);
  CHECK(a.status == QuadricFit::NonUnique);
  CHECK(a.kernel_dim == 7);
  SeededRng rng(4);
  std::vector<ProjPoint> pts;
  while (pts.size() < 10) {
    std::vector<Integer> c(4);
    for (auto& v : c) v = static_cast<long>(rng.uniform(-30, 30));
    if (auto p = ProjPoint::from_vector(std::span<const Integer>(c))) {
      if (std::find(pts.begin(), pts.end(), *p) == pts.end()) pts.push_back(*p);
    }
  }
  CHECK(quadric_through(FinitePointSet(pts)).status == QuadricFit::None);
}

TEST_CASE("interpolation of L * L'") {
  SUBCASE("coordinate axis line is fixed by full-support points") {
    const Line3 axis(Hyperplane::coordinate(3, 2), Hyperplane::coordinate(3, 3));
    const auto forms = variety_product_interpolate(axis, axis, 1, default_sample_count(1), 3);
    REQUIRE(forms.size() == 2);
    std::vector<std::string> s;
    for (const auto& f : forms) s.push_back(f.primitive().to_string());
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::string>{"x2", "x3"});
  }
  SUBCASE("degree-2 ideal is seed independent") {
    const auto a = variety_product_interpolate(ex2_l(), ex_lp(), 2, default_sample_count(2), 1);
    const auto b = variety_product_interpolate(ex2_l(), ex_lp(), 2, default_sample_count(2), 99);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].primitive().to_string() == "10x0x1-120x0x3-21x1^2-30x1x2+154x1x3-140x2x3+1176x3^2");
    CHECK(a[0].proportional_to(b[0]));
  }
  SUBCASE("too few samples") {
    CHECK_THROWS_AS(variety_product_interpolate(ex2_l(), ex_lp(), 2, 12, 1), PreconditionError);
  }
}

TEST_CASE("generic plane choice") {
  const auto l = ex_l();
  CHECK(choose_generic_planes(l, 1).same_line(l));
  // x0 - x1 = 0, x2 - 3x3 = 0 is cut out by planes with zero coefficients.
  const Line3 m(Hyperplane{1, -1, 0, 0}, Hyperplane{0, 0, 1, -3});
  const auto g = choose_generic_planes(m, 5);
  CHECK(g.same_line(m));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(g.a()[i] != 0);
    CHECK(g.b()[i] != 0);
  }
  CHECK(choose_generic_planes(m, 5).h() == g.h());
  const Line3 through_e0(Hyperplane::coordinate(3, 1), Hyperplane{0, 0, 1, 1});
  CHECK_THROWS_AS(choose_generic_planes(through_e0, 1), PreconditionError);
}

TEST_CASE("generic instances meet every grid hypothesis") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = generic_instance_p3(3, 4, seed);
    CHECK_FALSE(meets_coordinate_line(inst.l));
    CHECK_FALSE(meets_coordinate_line(inst.l_prime));
    const auto g = grid_product_p3(inst.x, inst.x_prime, inst.l, inst.l_prime);
    CHECK(g.points.size() == 12);
    const auto again = generic_instance_p3(3, 4, seed);
    CHECK(again.x == inst.x);
  }
}
