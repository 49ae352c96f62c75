#pragma once

// Brute-force references used only by tests: they sample and multiply points
// directly and never call the closed-form classification code.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "hada/plane.hpp"
#include "hada/projective.hpp"
#include "hada/sampling.hpp"
#include "hada/space.hpp"

namespace oracle {

using hada::Hyperplane;
using hada::Integer;
using hada::ProjPoint;

inline std::optional<ProjPoint> cross(const ProjPoint& p, const ProjPoint& q) {
  std::vector<Integer> c = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                            p[0] * q[1] - p[1] * q[0]};
  return ProjPoint::from_vector(std::span<const Integer>(c));
}

/// Image of L under Q * (.), read from sampled products.
struct Shape {
  enum class Kind { Line, Point, Undefined, Inconsistent } kind = Kind::Undefined;
  std::optional<Hyperplane> line;
  std::optional<ProjPoint> point;
};

/// Points of the line a.x = 0 in P^2, found by crossing A with random vectors.
inline std::vector<ProjPoint> sample_line_p2(const Hyperplane& l, hada::SeededRng& rng, int count) {
  std::vector<ProjPoint> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Integer> r(3);
    for (auto& v : r) v = static_cast<long>(rng.uniform(-50, 50));
    auto rv = ProjPoint::from_vector(std::span<const Integer>(r));
    if (!rv) continue;
    if (auto p = cross(l.dual(), *rv)) out.push_back(*p);
  }
  return out;
}

inline Shape point_line_image(const ProjPoint& q, const Hyperplane& l, hada::SeededRng& rng,
                              int samples = 16) {
  std::vector<ProjPoint> image;
  for (const auto& p : sample_line_p2(l, rng, samples)) {
    if (auto r = hada::hadamard(q, p)) {
      if (std::find(image.begin(), image.end(), *r) == image.end()) image.push_back(*r);
    }
  }
  Shape s;
  if (image.empty()) return s;
  if (image.size() == 1) {
    s.kind = Shape::Kind::Point;
    s.point = image[0];
    return s;
  }
  const auto through = cross(image[0], image[1]);
  const Hyperplane h(*through);
  for (const auto& p : image) {
    if (!h.contains(p)) {
      s.kind = Shape::Kind::Inconsistent;
      return s;
    }
  }
  s.kind = Shape::Kind::Line;
  s.line = h;
  return s;
}

inline bool same_shape(const Shape& s, const hada::plane::PointLineOutcome& o) {
  switch (s.kind) {
    case Shape::Kind::Line:
      return o.is_line() && o.line() == *s.line;
    case Shape::Kind::Point:
      return o.is_point() && o.point() == *s.point;
    case Shape::Kind::Undefined:
      return o.is_undefined();
    case Shape::Kind::Inconsistent:
      break;
  }
  return false;
}

inline std::optional<hada::plane::Incidence> compare(const Shape& a, const Shape& b) {
  using hada::plane::Incidence;
  using K = Shape::Kind;
  if (a.kind == K::Line && b.kind == K::Line) {
    return *a.line == *b.line ? Incidence::SameLine : Incidence::DistinctLines;
  }
  if (a.kind == K::Point && b.kind == K::Point) {
    return *a.point == *b.point ? Incidence::SamePoint : Incidence::DistinctPoints;
  }
  if (a.kind == K::Line && b.kind == K::Point) {
    return a.line->contains(*b.point) ? Incidence::PointOnLine : Incidence::PointOffLine;
  }
  if (a.kind == K::Point && b.kind == K::Line) {
    return b.line->contains(*a.point) ? Incidence::PointOnLine : Incidence::PointOffLine;
  }
  return std::nullopt;
}

/// Meeting point of two lines of P^3 by parameter elimination on the first line.
inline std::optional<ProjPoint> meet_p3(const hada::space::Line3& l, const hada::space::Line3& m) {
  const auto& b = l.basis();
  for (const auto* h : {&m.h(), &m.k()}) {
    const Integer u = h->evaluate(b[0]);
    const Integer v = h->evaluate(b[1]);
    if (u == 0 && v == 0) continue;
    // v * b0 - u * b1 is the unique point of l on h.
    std::vector<Integer> c(4);
    for (std::size_t i = 0; i < 4; ++i) c[i] = v * b[0][i] - u * b[1][i];
    auto p = ProjPoint::from_vector(std::span<const Integer>(c));
    if (p && m.contains(*p)) return p;
    return std::nullopt;
  }
  return std::nullopt;  // l lies in both planes: same line
}

/// Pairwise products without any structure, sorted.
inline std::vector<ProjPoint> brute_products(const hada::FinitePointSet& x,
                                             const hada::FinitePointSet& y) {
  std::vector<ProjPoint> out;
  for (const auto& p : x) {
    for (const auto& q : y) {
      std::vector<Integer> c(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i] * q[i];
      if (auto r = ProjPoint::from_vector(std::span<const Integer>(c))) out.push_back(*r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Random point of P^n whose zero pattern is given by `support` (true = nonzero).
inline ProjPoint random_with_support(const std::vector<bool>& support, hada::SeededRng& rng,
                                     long bound) {
  std::vector<Integer> c(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i]) c[i] = static_cast<long>(rng.nonzero(bound));
  }
  return ProjPoint(std::span<const Integer>(c));
}

/// Nonempty support pattern of length 3 with 1, 2 or 3 nonzero entries.
inline std::vector<bool> random_support(hada::SeededRng& rng) {
  while (true) {
    std::vector<bool> s(3);
    for (std::size_t i = 0; i < 3; ++i) s[i] = rng.uniform(0, 2) != 0;  // bias toward nonzero
    if (rng.uniform(0, 3) == 0) s[rng.uniform(0, 2)] = false;
    if (std::count(s.begin(), s.end(), true) > 0) return s;
  }
}

}  // namespace oracle
