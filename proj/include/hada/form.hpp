#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hada/linalg.hpp"
#include "hada/projective.hpp"
#include "hada/rational.hpp"

namespace hada {

using Exponent = std::vector<int>;

/// Degree-d monomials in nvars variables, lexicographically descending:
/// x0^d first, x_{n}^d last. This order fixes every coefficient vector.
std::vector<Exponent> monomials(std::size_t nvars, int degree);

/// binom(degree + nvars - 1, nvars - 1)
std::size_t monomial_count(std::size_t nvars, int degree);

/// A homogeneous polynomial of fixed degree with rational coefficients.
class HomogeneousForm {
 public:
  HomogeneousForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}
  /// Coefficients listed in the order of monomials(nvars, degree).
  static HomogeneousForm from_coefficients(std::size_t nvars, int degree,
                                           std::span<const Rational> coefficients);
  static HomogeneousForm linear(const Hyperplane& h);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;
  std::vector<Rational> coefficient_vector() const;

  Rational evaluate(std::span<const Rational> point) const;
  Integer evaluate(const ProjPoint& p) const;

  /// Rescaled to coprime integer coefficients, first coefficient (in monomial
  /// order) positive.
  HomogeneousForm primitive() const;
  /// True when the two forms agree up to a nonzero scalar.
  bool proportional_to(const HomogeneousForm& other) const;

  HomogeneousForm operator*(const HomogeneousForm& other) const;

  /// e.g. "1/5x0x1-21/50x1^2+588/25x3^2"
  std::string to_string() const;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  std::size_t nvars_;
  int degree_;
  std::map<Exponent, Rational> terms_;  // nonzero coefficients only
};

/// Exact evaluation of F at P is zero.
bool membership(const ProjPoint& p, const HomogeneousForm& f);

/// Rows: points in canonical coordinates. Columns: degree-t monomials.
Matrix evaluation_matrix(const FinitePointSet& points, int degree);
Matrix evaluation_matrix(std::span<const ProjPoint> points, int degree);

/// Basis of degree-t forms vanishing on every point, read from the canonical
/// kernel of the evaluation matrix and rescaled to primitive integers.
std::vector<HomogeneousForm> vanishing_forms(std::span<const ProjPoint> points, std::size_t nvars,
                                             int degree);

}  // namespace hada
