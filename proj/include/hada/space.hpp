#pragma once

// Lines of P^3 as plane pairs, products of collinear point sets in P^3, and
// the quadric swept out by the product of two lines.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hada/errors.hpp"
#include "hada/form.hpp"
#include "hada/linalg.hpp"
#include "hada/projective.hpp"

namespace hada::space {

/// The line H ∩ K of P^3, kept as the ordered plane pair with duals A and B.
class Line3 {
 public:
  /// Throws DimensionMismatch outside P^3 and PreconditionError when the
  /// planes coincide.
  Line3(Hyperplane h, Hyperplane k);

  const Hyperplane& h() const { return h_; }
  const Hyperplane& k() const { return k_; }
  const ProjPoint& a() const { return h_.dual(); }
  const ProjPoint& b() const { return k_.dual(); }
  /// Two integer points spanning the line.
  const std::array<ProjPoint, 2>& basis() const { return basis_; }

  bool contains(const ProjPoint& p) const { return h_.contains(p) && k_.contains(p); }
  /// Same point set, regardless of the planes chosen to cut it out.
  bool same_line(const Line3& other) const;
  std::string to_string() const;  // "{h, k}"

 private:
  Hyperplane h_;
  Hyperplane k_;
  std::array<ProjPoint, 2> basis_;
};

/// The line contains one of the coordinate points.
bool meets_coordinate_point(const Line3& l);
/// The line meets one of the six coordinate lines x_i = x_j = 0.
bool meets_coordinate_line(const Line3& l);

/// Re-expresses a line meeting no coordinate point through two planes whose
/// duals have no zero coordinate. Such planes exist because only finitely many
/// planes of the pencil contain a coordinate point; the search draws seeded
/// pencil members and throws PreconditionError when the line has a
/// coordinate point.
Line3 choose_generic_planes(const Line3& l, std::uint64_t seed);

/// P * L as the intersection of P * H and P * K. P must have no zero
/// coordinate and both planes must avoid the coordinate points.
Line3 point_line_product_p3(const ProjPoint& p, const Line3& l);

enum class LineRelation { Same, Meet, Skew };

struct LineIntersection {
  LineRelation relation;
  std::optional<ProjPoint> point;  // set for Meet
};

LineIntersection intersect(const Line3& l, const Line3& m);

/// The stacked rows A*P, B*P, A'*P', B'*P' and their exact rank.
struct RankCertificate {
  Matrix rows;
  std::size_t rank = 0;
};

RankCertificate rank_condition(const Line3& l, const Line3& l_prime, const ProjPoint& p,
                               const ProjPoint& p_prime);

struct GridResult3 {
  FinitePointSet points;              // sorted lexicographically
  std::vector<Line3> row_lines;       // P * L' for P in X, input order
  std::vector<Line3> col_lines;       // P' * L for P' in X', input order
  std::vector<std::vector<ProjPoint>> table;  // table[i][j] = X[i] * X'[j]
  std::vector<std::vector<RankCertificate>> certificates;
};

/// Throws PreconditionError naming the offending point or pair when a
/// hypothesis of the grid theorem fails.
GridResult3 grid_product_p3(const FinitePointSet& x, const FinitePointSet& x_prime,
                            const Line3& l, const Line3& l_prime);

struct Quadric3 {
  HomogeneousForm form;
  Matrix symmetric;  // diagonal: coefficient of x_i^2; off-diagonal: half the mixed coefficient

  explicit Quadric3(HomogeneousForm f);
  Rational determinant() const;
};

enum class QuadricFit { Unique, None, NonUnique };

struct QuadricFitResult {
  QuadricFit status;
  std::size_t kernel_dim = 0;
  std::optional<Quadric3> quadric;  // set for Unique
};

QuadricFitResult quadric_through(const FinitePointSet& s);

struct RulingReport {
  std::vector<std::size_t> rows_off_quadric;
  std::vector<std::size_t> cols_off_quadric;
  std::vector<std::pair<std::size_t, std::size_t>> meeting_rows;  // same-family pairs that meet
  std::vector<std::pair<std::size_t, std::size_t>> meeting_cols;
  std::vector<std::pair<std::size_t, std::size_t>> cross_failures;  // not exactly one common point
  std::vector<std::vector<std::optional<ProjPoint>>> cross_points;   // [row][col]
  Rational determinant;
  bool nondegenerate = false;

  bool passed() const;
  std::vector<std::string> violations() const;
};

RulingReport ruling_check(const Quadric3& q, std::span<const Line3> rows,
                          std::span<const Line3> cols);

/// 3x the degree-d monomial count in four variables.
std::size_t default_sample_count(int degree);

/// Degree-d forms vanishing on L * L', fitted on seeded products P * P'
/// (P on L, P' on L') and confirmed on a second disjoint batch. `samples`
/// must be at least twice the monomial count; the last monomial-count
/// samples form the verification batch.
std::vector<HomogeneousForm> variety_product_interpolate(const Line3& l, const Line3& l_prime,
                                                         int degree, std::size_t samples,
                                                         std::uint64_t seed);

/// Random lines avoiding the coordinate lines, cut out by planes with no zero
/// coefficient, and point sets meeting every hypothesis of grid_product_p3.
struct GenericInstance3 {
  Line3 l;
  Line3 l_prime;
  FinitePointSet x;
  FinitePointSet x_prime;
};

GenericInstance3 generic_instance_p3(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace hada::space
