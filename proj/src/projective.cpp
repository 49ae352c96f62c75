#include "hada/projective.hpp"

#include <algorithm>
#include <set>

#include "hada/errors.hpp"

namespace hada {
namespace {

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Integer& x, const Integer& y) { return x < y; });
}

std::string render_linear(const std::vector<Integer>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Integer& c = coefficients[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Integer mag = abs(c);
    if (mag != 1) out += mag.get_str();
    out += "x" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ProjPoint::ProjPoint(std::span<const Integer> coords) {
  if (coords.size() < 2) throw PreconditionError("a projective point needs at least two coordinates");
  auto canonical = primitive_integer_vector(coords);
  if (std::all_of(canonical.begin(), canonical.end(), [](const Integer& c) { return c == 0; })) {
    throw PreconditionError("the zero vector is not a projective point");
  }
  coords_ = std::move(canonical);
}

ProjPoint::ProjPoint(std::span<const Rational> coords)
    : ProjPoint(std::span<const Integer>(primitive_integer_vector(coords))) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords) {
  std::vector<Integer> ints;
  ints.reserve(coords.size());
  for (long c : coords) ints.emplace_back(c);
  *this = ProjPoint(std::span<const Integer>(ints));
}

std::optional<ProjPoint> ProjPoint::from_vector(std::span<const Integer> coords) {
  if (std::all_of(coords.begin(), coords.end(), [](const Integer& c) { return c == 0; })) {
    return std::nullopt;
  }
  return ProjPoint(coords);
}

std::optional<ProjPoint> ProjPoint::from_vector(std::span<const Rational> coords) {
  if (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; })) {
    return std::nullopt;
  }
  return ProjPoint(coords);
}

std::vector<Rational> ProjPoint::rational_coords() const {
  return {coords_.begin(), coords_.end()};
}

std::size_t ProjPoint::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; }));
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + "]";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  return lex_less(a.coords_, b.coords_);
}

Hyperplane Hyperplane::coordinate(std::size_t n, std::size_t i) {
  std::vector<Integer> c(n + 1);
  c.at(i) = 1;
  return Hyperplane(ProjPoint(std::span<const Integer>(c)));
}

Integer Hyperplane::evaluate(const ProjPoint& p) const {
  if (p.size() != dual_.size()) throw DimensionMismatch("point and hyperplane live in different spaces");
  Integer sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += dual_[i] * p[i];
  return sum;
}

std::string Hyperplane::to_string() const { return render_linear(dual_.coords()); }

std::string to_string(const ProductOutcome& outcome) {
  struct Visitor {
    std::string operator()(const ProjPoint& p) const { return "point " + p.to_string(); }
    std::string operator()(const Hyperplane& h) const { return "hyperplane " + h.to_string(); }
    std::string operator()(const LinearSubspace& s) const {
      std::string out = "subspace {";
      for (std::size_t i = 0; i < s.equations.size(); ++i) {
        if (i) out += ", ";
        out += s.equations[i].to_string();
      }
      return out + "}";
    }
    std::string operator()(Undefined) const { return "undefined"; }
  };
  return std::visit(Visitor{}, outcome);
}

int delta_level(const ProjPoint& p) { return static_cast<int>(p.nonzero_count()) - 1; }

void require_same_dimension(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("points " + a.to_string() + " and " + b.to_string() +
                            " live in different projective spaces");
  }
}

int product_level(const ProjPoint& p, const ProjPoint& q) {
  require_same_dimension(p, q);
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0 && q[i] != 0) ++k;
  }
  return k - 1;
}

std::optional<ProjPoint> hadamard(const ProjPoint& p, const ProjPoint& q) {
  require_same_dimension(p, q);
  std::vector<Integer> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i] * q[i];
  return ProjPoint::from_vector(std::span<const Integer>(c));
}

ProductOutcome hadamard_points(const ProjPoint& p, const ProjPoint& q) {
  if (auto r = hadamard(p, q)) return *r;
  return Undefined{};
}

Hyperplane divide_coefficients(const Hyperplane& h, const ProjPoint& p) {
  require_same_dimension(h.dual(), p);
  std::vector<Rational> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw PreconditionError("point " + p.to_string() + " has a zero coordinate");
    c[i] = Rational(h.coefficients()[i], p[i]);
    c[i].canonicalize();
  }
  return Hyperplane(ProjPoint(std::span<const Rational>(c)));
}

Hyperplane point_hyperplane_product(const ProjPoint& p, const Hyperplane& h) {
  require_same_dimension(h.dual(), p);
  const int n = static_cast<int>(p.ambient_dim());
  if (delta_level(p) != n) {
    throw PreconditionError("point " + p.to_string() + " lies on a coordinate hyperplane (in Delta_" +
                            std::to_string(n - 1) + "); use the classification operations");
  }
  if (delta_level(h.dual()) != n) {
    throw PreconditionError("hyperplane " + h.to_string() +
                            " contains a coordinate point (its dual point lies in Delta_" +
                            std::to_string(n - 1) + ")");
  }
  return divide_coefficients(h, p);
}

ProductOutcome hyperplane_product(const Hyperplane& h, const Hyperplane& k) {
  require_same_dimension(h.dual(), k.dual());
  const std::size_t n = h.ambient_dim();
  auto support = [](const Hyperplane& x) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
      if (x.coefficients()[i] != 0) s.push_back(i);
    }
    return s;
  };
  const auto sh = support(h);
  const auto sk = support(k);

  if (sh.size() == 1 && sk.size() == 1) {
    if (sh[0] == sk[0]) return Hyperplane::coordinate(n, sh[0]);
    return LinearSubspace{{Hyperplane::coordinate(n, std::min(sh[0], sk[0])),
                           Hyperplane::coordinate(n, std::max(sh[0], sk[0]))}};
  }

  std::set<std::size_t> joint(sh.begin(), sh.end());
  joint.insert(sk.begin(), sk.end());
  if (sh.size() > 2 || sk.size() > 2 || joint.size() != 2) {
    throw UnsupportedShape("no closed form for " + h.to_string() + " * " + k.to_string() +
                           "; use variety_product_interpolate");
  }
  const std::size_t i = *joint.begin();
  const std::size_t j = *joint.rbegin();
  const auto& a = h.coefficients();
  const auto& b = k.coefficients();
  // Shared support with a_i a_j != 0 or b_i b_j != 0 holds here: one of the
  // two has support of size 2 since the joint support has two elements.
  std::vector<Integer> c(n + 1);
  c[i] = a[i] * b[i];
  c[j] = -(a[j] * b[j]);
  return Hyperplane(ProjPoint(std::span<const Integer>(c)));
}

FinitePointSet::FinitePointSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  std::set<ProjPoint> seen;
  for (const auto& p : points_) {
    if (p.size() != points_.front().size()) {
      throw DimensionMismatch("point set mixes ambient dimensions");
    }
    if (!seen.insert(p).second) throw PreconditionError("duplicate point " + p.to_string());
  }
}

FinitePointSet FinitePointSet::deduplicated(std::vector<ProjPoint> points) {
  std::set<ProjPoint> seen;
  std::vector<ProjPoint> unique;
  for (auto& p : points) {
    if (seen.insert(p).second) unique.push_back(std::move(p));
  }
  return FinitePointSet(std::move(unique));
}

std::size_t FinitePointSet::ambient_dim() const {
  if (points_.empty()) throw PreconditionError("empty point set has no ambient dimension");
  return points_.front().ambient_dim();
}

bool FinitePointSet::contains(const ProjPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

FinitePointSet FinitePointSet::sorted() const {
  auto copy = points_;
  std::sort(copy.begin(), copy.end());
  return FinitePointSet(std::move(copy));
}

bool FinitePointSet::disjoint_from(const FinitePointSet& other) const {
  return std::none_of(points_.begin(), points_.end(),
                      [&](const ProjPoint& p) { return other.contains(p); });
}

FinitePointSet pairwise_product(const FinitePointSet& x, const FinitePointSet& y) {
  std::set<ProjPoint> out;
  for (const auto& p : x) {
    for (const auto& q : y) {
      if (auto r = hadamard(p, q)) out.insert(std::move(*r));
    }
  }
  return FinitePointSet(std::vector<ProjPoint>(out.begin(), out.end()));
}

}  // namespace hada
