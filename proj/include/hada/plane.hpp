#pragma once

// Hadamard products of points, lines and collinear point sets in P^2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hada/errors.hpp"
#include "hada/form.hpp"
#include "hada/projective.hpp"

namespace hada::plane {

/// Result of Q * L. case_tag names which branch of the point-line
/// classification fired:
///   1  Q has no zero coordinate: the line with coefficients a_i / q_i
///   2  Q has one zero coordinate j and level(Q*A) < level(A): the line x_j = 0
///   3  Q has one zero coordinate j otherwise: the point of x_j = 0 on
///      a_k q_l x_k + a_l q_k x_l = 0
///   4  Q is a coordinate point different from A: Q itself
///   5  Q is a coordinate point equal to A: undefined
struct PointLineOutcome {
  std::variant<Hyperplane, ProjPoint, Undefined> geometry;
  int case_tag = 0;

  bool is_line() const { return std::holds_alternative<Hyperplane>(geometry); }
  bool is_point() const { return std::holds_alternative<ProjPoint>(geometry); }
  bool is_undefined() const { return std::holds_alternative<Undefined>(geometry); }
  const Hyperplane& line() const { return std::get<Hyperplane>(geometry); }
  const ProjPoint& point() const { return std::get<ProjPoint>(geometry); }
  std::string to_string() const;
};

PointLineOutcome point_line_product_p2(const ProjPoint& q, const Hyperplane& l);

enum class IncidenceCase { k1a, k1b, k1c, k1d, k1e, k2a, k2b, k3 };
std::string_view label(IncidenceCase c);

enum class Incidence { DistinctLines, SameLine, PointOnLine, PointOffLine, DistinctPoints, SamePoint };
std::string_view label(Incidence i);

struct IncidenceReport {
  IncidenceCase sub_case;
  /// True when Q and Q' were exchanged to match the asymmetric case statement
  /// (cases 1d, 2a, 2b name the point playing each role).
  bool swapped = false;
  PointLineOutcome first;   // Q * L
  PointLineOutcome second;  // Q' * L
  Incidence predicted;      // from the sub-case predicate alone
  Incidence observed;       // from comparing the two outcomes
  bool agrees() const { return predicted == observed; }
};

/// Direct geometric comparison of two outcomes; both must be defined.
Incidence compare_outcomes(const PointLineOutcome& a, const PointLineOutcome& b);

/// Requires Q != Q' and none of A, Q, Q' a coordinate point. Inputs outside
/// that range throw PreconditionError ("outside classification").
IncidenceReport two_point_line_incidence(const ProjPoint& q, const ProjPoint& q_prime,
                                         const Hyperplane& l);

struct LineArrangement {
  std::vector<Hyperplane> lines;  // pairwise distinct, in input order of first appearance
  /// Points of the product lying on none of the lines. Under the theorem's
  /// hypotheses there is at most one; two can only occur for r = 2.
  std::vector<ProjPoint> isolated_points;
  std::optional<Hyperplane> collapsed;  // set when the whole product is L itself
  /// Branch on the dual point A of L: 1 off Delta_1, 2 in Delta_1 \ Delta_0, 3 in Delta_0.
  int branch = 0;
  bool hypothesis_met = true;
  /// Whether the computed shape is one the branch allows.
  bool matches_expectation = true;

  const ProjPoint* isolated_point() const {
    return isolated_points.size() == 1 ? &isolated_points.front() : nullptr;
  }
};

/// X' * L for X' on the line L' whose dual point is off Delta_1.
LineArrangement collinear_set_line_product(const FinitePointSet& x_prime, const Hyperplane& l,
                                           const Hyperplane& l_prime);

/// A pair with P * A == P' * A', which prevents the grid.
struct GridCollision {
  ProjPoint p;
  ProjPoint p_prime;
  ProjPoint image;
};

class GridConditionFailure : public PreconditionError {
 public:
  explicit GridConditionFailure(GridCollision c);
  const GridCollision& collision() const { return collision_; }

 private:
  GridCollision collision_;
};

/// Throws PreconditionError naming the first offending point when X is not on
/// L \ Delta_1, X' is not on L' \ Delta_1, A or A' lies in Delta_1, or X meets X'.
void check_grid_hypotheses(const FinitePointSet& x, const FinitePointSet& x_prime,
                           const Hyperplane& l, const Hyperplane& l_prime);

std::optional<GridCollision> find_grid_collision(const FinitePointSet& x,
                                                 const FinitePointSet& x_prime,
                                                 const Hyperplane& l, const Hyperplane& l_prime);

/// True iff P * A != P' * A' for all P in X, P' in X'.
bool grid_condition(const FinitePointSet& x, const FinitePointSet& x_prime, const Hyperplane& l,
                    const Hyperplane& l_prime);

struct GridResult {
  FinitePointSet points;               // sorted lexicographically
  std::vector<Hyperplane> row_lines;   // P * L' for P in X, in input order
  std::vector<Hyperplane> col_lines;   // P' * L for P' in X', in input order
  std::vector<std::vector<ProjPoint>> table;  // table[i][j] = X[i] * X'[j]
  std::pair<HomogeneousForm, HomogeneousForm> ci_witness;  // degrees |X| and |X'|
};

/// Throws GridConditionFailure carrying the colliding pair.
GridResult grid_product_p2(const FinitePointSet& x, const FinitePointSet& x_prime,
                           const Hyperplane& l, const Hyperplane& l_prime);

/// Seeded generic point sets X on L and X' on L' that satisfy every grid
/// hypothesis. Deterministic in the seed.
std::pair<FinitePointSet, FinitePointSet> generic_collinear_sample(const Hyperplane& l,
                                                                   const Hyperplane& l_prime,
                                                                   std::size_t n, std::size_t m,
                                                                   std::uint64_t seed);

enum class Collinearity { Collinear, NotCollinear };

struct CollinearityVerdict {
  Collinearity verdict;
  FinitePointSet products;
  std::optional<Hyperplane> containing_line;  // the line through the products, when unique
  std::optional<Hyperplane> predicted_line;   // L * L, when L meets a coordinate point
  bool on_predicted_line = false;
  bool theorem_applicable = false;  // |X|, |Y| >= 3 and |X u Y| >= 4
  bool theorem_agrees = true;       // only meaningful when applicable
};

/// Collinearity of X * Y for X, Y on L, decided by exact rank and then
/// compared against the prediction "not collinear iff L meets no coordinate point".
CollinearityVerdict product_collinearity_check(const FinitePointSet& x, const FinitePointSet& y,
                                               const Hyperplane& l);

}  // namespace hada::plane
