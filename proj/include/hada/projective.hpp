#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hada/rational.hpp"

namespace hada {

/// Level of the coordinate stratification: a point with k nonzero coordinates
/// has level k - 1, i.e. it lies in Delta_{k-1} and in no smaller stratum.
/// Level -1 is reserved for the all-zero vector (an undefined product).
inline constexpr int kUndefinedLevel = -1;

/// A point of P^n in canonical homogeneous coordinates: coprime integers whose
/// first nonzero entry is positive. Equality is equality of canonical forms.
class ProjPoint {
 public:
  /// Throws PreconditionError on the zero vector or fewer than two coordinates.
  explicit ProjPoint(std::span<const Rational> coords);
  explicit ProjPoint(std::span<const Integer> coords);
  ProjPoint(std::initializer_list<long> coords);

  /// Canonicalizes a vector that may be zero.
  static std::optional<ProjPoint> from_vector(std::span<const Integer> coords);
  static std::optional<ProjPoint> from_vector(std::span<const Rational> coords);

  std::size_t ambient_dim() const { return coords_.size() - 1; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::vector<Rational> rational_coords() const;

  std::size_t nonzero_count() const;
  bool is_zero_at(std::size_t i) const { return coords_[i] == 0; }

  std::string to_string() const;  // "[1:2:3]"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  /// Lexicographic on canonical coordinates; the deterministic output order.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  ProjPoint() = default;
  std::vector<Integer> coords_;
};

/// The hyperplane sum a_i x_i = 0, stored through its dual point A = [a_0:...:a_n].
class Hyperplane {
 public:
  explicit Hyperplane(ProjPoint dual) : dual_(std::move(dual)) {}
  Hyperplane(std::initializer_list<long> coefficients) : dual_(coefficients) {}

  /// The coordinate hyperplane x_i = 0 of P^n.
  static Hyperplane coordinate(std::size_t n, std::size_t i);

  const ProjPoint& dual() const { return dual_; }
  const std::vector<Integer>& coefficients() const { return dual_.coords(); }
  std::size_t ambient_dim() const { return dual_.ambient_dim(); }

  Integer evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return evaluate(p) == 0; }

  std::string to_string() const;  // "2x0-3x1-11x2"

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.dual_ == b.dual_; }
  friend bool operator!=(const Hyperplane& a, const Hyperplane& b) { return !(a == b); }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) { return a.dual_ < b.dual_; }

 private:
  ProjPoint dual_;
};

/// Intersection of the listed hyperplanes.
struct LinearSubspace {
  std::vector<Hyperplane> equations;
  std::size_t codim() const { return equations.size(); }
  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;
};

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};

using ProductOutcome = std::variant<ProjPoint, Hyperplane, LinearSubspace, Undefined>;

std::string to_string(const ProductOutcome& outcome);

int delta_level(const ProjPoint& p);

/// Level of the coordinatewise product, kUndefinedLevel when it vanishes.
int product_level(const ProjPoint& p, const ProjPoint& q);

/// Coordinatewise product, nullopt when every product vanishes.
std::optional<ProjPoint> hadamard(const ProjPoint& p, const ProjPoint& q);

ProductOutcome hadamard_points(const ProjPoint& p, const ProjPoint& q);

/// P * H for P with no zero coordinate and H meeting no coordinate point:
/// the hyperplane with coefficients a_i / p_i.
Hyperplane point_hyperplane_product(const ProjPoint& p, const Hyperplane& h);

/// Same formula without the stratum checks on H. Requires every p_i != 0.
Hyperplane divide_coefficients(const Hyperplane& h, const ProjPoint& p);

/// Product of two hyperplanes when each is a coordinate hyperplane, or both
/// are binomials a_i x_i + a_j x_j on a shared support {i, j}. Other shapes
/// throw UnsupportedShape; use variety_product_interpolate for them.
ProductOutcome hyperplane_product(const Hyperplane& h, const Hyperplane& k);

void require_same_dimension(const ProjPoint& a, const ProjPoint& b);

/// Duplicate-free sequence of points of a common P^n.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  /// Throws PreconditionError on duplicates, DimensionMismatch on mixed dimensions.
  explicit FinitePointSet(std::vector<ProjPoint> points);
  FinitePointSet(std::initializer_list<ProjPoint> points)
      : FinitePointSet(std::vector<ProjPoint>(points)) {}

  /// Drops repeated points, keeping first occurrences.
  static FinitePointSet deduplicated(std::vector<ProjPoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t ambient_dim() const;
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::vector<ProjPoint>& points() const { return points_; }

  bool contains(const ProjPoint& p) const;
  FinitePointSet sorted() const;
  bool disjoint_from(const FinitePointSet& other) const;

  friend bool operator==(const FinitePointSet& a, const FinitePointSet& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<ProjPoint> points_;
};

/// All defined pairwise products, deduplicated and sorted lexicographically.
FinitePointSet pairwise_product(const FinitePointSet& x, const FinitePointSet& y);

}  // namespace hada
