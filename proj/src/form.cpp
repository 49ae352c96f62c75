#include "hada/form.hpp"

#include <algorithm>

#include "hada/errors.hpp"

namespace hada {
namespace {

void fill_monomials(std::size_t var, int remaining, Exponent& current, std::vector<Exponent>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fill_monomials(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials(std::size_t nvars, int degree) {
  if (nvars == 0 || degree < 0) throw PreconditionError("monomials need nvars > 0 and degree >= 0");
  std::vector<Exponent> out;
  Exponent current(nvars, 0);
  fill_monomials(0, degree, current, out);
  return out;
}

std::size_t monomial_count(std::size_t nvars, int degree) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(degree) + nvars - 1, nvars - 1);
  return b.get_ui();
}

HomogeneousForm HomogeneousForm::from_coefficients(std::size_t nvars, int degree,
                                                   std::span<const Rational> coefficients) {
  const auto monos = monomials(nvars, degree);
  if (monos.size() != coefficients.size()) {
    throw DimensionMismatch("coefficient vector does not match the monomial count");
  }
  HomogeneousForm f(nvars, degree);
  for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], coefficients[i]);
  return f;
}

HomogeneousForm HomogeneousForm::linear(const Hyperplane& h) {
  const auto& a = h.coefficients();
  HomogeneousForm f(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Exponent e(a.size(), 0);
    e[i] = 1;
    f.add_term(e, Rational(a[i]));
  }
  return f;
}

void HomogeneousForm::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent has the wrong number of variables");
  int sum = 0;
  for (int k : e) sum += k;
  if (sum != degree_) throw PreconditionError("term degree differs from the form degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogeneousForm::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> HomogeneousForm::coefficient_vector() const {
  const auto monos = monomials(nvars_, degree_);
  std::vector<Rational> out;
  out.reserve(monos.size());
  for (const auto& e : monos) out.push_back(coefficient(e));
  return out;
}

Rational HomogeneousForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("point and form live in different spaces");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Integer HomogeneousForm::evaluate(const ProjPoint& p) const {
  const auto coords = p.rational_coords();
  // Scale to an integer so callers only ever test the sign or zero-ness.
  Rational v = evaluate(std::span<const Rational>(coords));
  Integer den = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  v *= den;
  return v.get_num();
}

HomogeneousForm HomogeneousForm::primitive() const {
  const auto coeffs = coefficient_vector();
  const auto ints = primitive_integer_vector(std::span<const Rational>(coeffs));
  std::vector<Rational> rs(ints.begin(), ints.end());
  return from_coefficients(nvars_, degree_, rs);
}

bool HomogeneousForm::proportional_to(const HomogeneousForm& other) const {
  if (nvars_ != other.nvars_ || degree_ != other.degree_) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return primitive() == other.primitive();
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("forms in different variable counts");
  HomogeneousForm out(nvars_, degree_ + other.degree_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string HomogeneousForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // std::map orders exponents ascending; print in monomial (descending) order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = degree_ == 0;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational mag = abs(c);
    if (mag != 1 || constant) out += hada::to_string(mag);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out += "x" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

bool membership(const ProjPoint& p, const HomogeneousForm& f) {
  if (p.size() != f.nvars()) throw DimensionMismatch("point and form live in different spaces");
  return f.evaluate(p) == 0;
}

Matrix evaluation_matrix(std::span<const ProjPoint> points, int degree) {
  if (points.empty()) return Matrix(0, 0);
  const std::size_t nvars = points.front().size();
  const auto monos = monomials(nvars, degree);
  Matrix m(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& p = points[r];
    if (p.size() != nvars) throw DimensionMismatch("points of mixed dimension");
    // Powers p_i^k for k <= degree, shared across monomials.
    std::vector<std::vector<Integer>> powers(nvars, std::vector<Integer>(degree + 1));
    for (std::size_t i = 0; i < nvars; ++i) {
      powers[i][0] = 1;
      for (int k = 1; k <= degree; ++k) powers[i][k] = powers[i][k - 1] * p[i];
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Integer v = 1;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (monos[c][i]) v *= powers[i][monos[c][i]];
      }
      m(r, c) = v;
    }
  }
  return m;
}

Matrix evaluation_matrix(const FinitePointSet& points, int degree) {
  return evaluation_matrix(std::span<const ProjPoint>(points.points()), degree);
}

std::vector<HomogeneousForm> vanishing_forms(std::span<const ProjPoint> points, std::size_t nvars,
                                             int degree) {
  std::vector<HomogeneousForm> out;
  if (points.empty()) {
    // Every form vanishes on the empty set.
    const auto count = monomial_count(nvars, degree);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Rational> c(count);
      c[i] = 1;
      out.push_back(HomogeneousForm::from_coefficients(nvars, degree, c));
    }
    return out;
  }
  for (const auto& v : kernel_basis(evaluation_matrix(points, degree))) {
    out.push_back(HomogeneousForm::from_coefficients(nvars, degree, v).primitive());
  }
  return out;
}

}  // namespace hada
