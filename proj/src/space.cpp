#include "hada/space.hpp"

#include <algorithm>

#include "hada/sampling.hpp"

namespace hada::space {
namespace {

std::array<ProjPoint, 2> basis_of(const Hyperplane& h, const Hyperplane& k) {
  const std::array<Hyperplane, 2> eq{h, k};
  return line_basis(eq);
}

Matrix stacked(std::initializer_list<const ProjPoint*> rows) {
  std::vector<std::vector<Integer>> r;
  for (const auto* p : rows) r.push_back(p->coords());
  return Matrix::from_integer_rows(r, 4);
}

Hyperplane pencil_member(const Line3& l, long lambda, long mu) {
  std::vector<Integer> c(4);
  for (std::size_t i = 0; i < 4; ++i) c[i] = lambda * l.a()[i] + mu * l.b()[i];
  return Hyperplane(ProjPoint(std::span<const Integer>(c)));
}

}  // namespace

Line3::Line3(Hyperplane h, Hyperplane k)
    : h_(std::move(h)), k_(std::move(k)), basis_{ProjPoint{1, 0, 0, 0}, ProjPoint{0, 1, 0, 0}} {
  if (h_.ambient_dim() != 3 || k_.ambient_dim() != 3) {
    throw DimensionMismatch("a line of P^3 needs two planes of P^3");
  }
  if (h_ == k_) throw PreconditionError("planes " + h_.to_string() + " coincide");
  basis_ = basis_of(h_, k_);
}

bool Line3::same_line(const Line3& other) const {
  return rank(stacked({&a(), &b(), &other.a(), &other.b()})) == 2;
}

std::string Line3::to_string() const { return "{" + h_.to_string() + ", " + k_.to_string() + "}"; }

bool meets_coordinate_point(const Line3& l) {
  // e_i lies on L iff a_i = b_i = 0.
  for (std::size_t i = 0; i < 4; ++i) {
    if (l.a()[i] == 0 && l.b()[i] == 0) return true;
  }
  return false;
}

bool meets_coordinate_line(const Line3& l) {
  // x_i = x_j = 0 meets L iff the 2x2 minor of [A; B] on the other two columns vanishes.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (l.a()[i] * l.b()[j] - l.a()[j] * l.b()[i] == 0) return true;
    }
  }
  return false;
}

Line3 choose_generic_planes(const Line3& l, std::uint64_t seed) {
  if (meets_coordinate_point(l)) {
    throw PreconditionError("line " + l.to_string() + " contains a coordinate point");
  }
  auto generic = [](const Hyperplane& h) { return h.dual().nonzero_count() == 4; };
  if (generic(l.h()) && generic(l.k())) return l;
  SeededRng rng(seed);
  std::optional<Hyperplane> first;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const long lambda = static_cast<long>(rng.nonzero(kParameterBound));
    const long mu = static_cast<long>(rng.nonzero(kParameterBound));
    Hyperplane h = pencil_member(l, lambda, mu);
    if (!generic(h)) continue;
    if (!first) {
      first = h;
    } else if (h != *first) {
      return Line3(*first, h);
    }
  }
  throw VerificationError("no generic plane pair found for " + l.to_string());
}

Line3 point_line_product_p3(const ProjPoint& p, const Line3& l) {
  if (p.ambient_dim() != 3) throw DimensionMismatch("point is not in P^3");
  return Line3(point_hyperplane_product(p, l.h()), point_hyperplane_product(p, l.k()));
}

LineIntersection intersect(const Line3& l, const Line3& m) {
  const auto kernel = kernel_basis(stacked({&l.a(), &l.b(), &m.a(), &m.b()}));
  if (kernel.size() == 2) return {LineRelation::Same, std::nullopt};
  if (kernel.size() == 1) {
    return {LineRelation::Meet, ProjPoint(std::span<const Rational>(kernel[0]))};
  }
  return {LineRelation::Skew, std::nullopt};
}

RankCertificate rank_condition(const Line3& l, const Line3& l_prime, const ProjPoint& p,
                               const ProjPoint& p_prime) {
  const auto ap = hadamard(l.a(), p);
  const auto bp = hadamard(l.b(), p);
  const auto aq = hadamard(l_prime.a(), p_prime);
  const auto bq = hadamard(l_prime.b(), p_prime);
  if (!ap || !bp || !aq || !bq) throw PreconditionError("rank condition needs defined products");
  RankCertificate cert{stacked({&*ap, &*bp, &*aq, &*bq}), 0};
  cert.rank = rank(cert.rows);
  return cert;
}

namespace {

void require_off_delta2(const ProjPoint& p, const std::string& role) {
  if (p.ambient_dim() != 3) throw DimensionMismatch(role + " " + p.to_string() + " is not in P^3");
  if (p.nonzero_count() != 4) {
    throw PreconditionError(role + " " + p.to_string() + " has a zero coordinate");
  }
}

}  // namespace

GridResult3 grid_product_p3(const FinitePointSet& x, const FinitePointSet& x_prime,
                            const Line3& l, const Line3& l_prime) {
  require_off_delta2(l.a(), "plane dual");
  require_off_delta2(l.b(), "plane dual");
  require_off_delta2(l_prime.a(), "plane dual");
  require_off_delta2(l_prime.b(), "plane dual");
  for (const auto& p : x) {
    require_off_delta2(p, "point");
    if (!l.contains(p)) throw PreconditionError("point " + p.to_string() + " is not on L");
  }
  for (const auto& p : x_prime) {
    require_off_delta2(p, "point");
    if (!l_prime.contains(p)) throw PreconditionError("point " + p.to_string() + " is not on L'");
  }
  if (!x.disjoint_from(x_prime)) throw PreconditionError("X and X' share a point");

  GridResult3 out{FinitePointSet{}, {}, {}, {}, {}};
  std::vector<ProjPoint> all;
  for (const auto& p : x) {
    out.certificates.emplace_back();
    for (const auto& q : x_prime) {
      auto cert = rank_condition(l, l_prime, p, q);
      if (cert.rank <= 2) {
        throw PreconditionError("rank condition fails for the pair " + p.to_string() + ", " +
                                q.to_string());
      }
      out.certificates.back().push_back(std::move(cert));
    }
  }
  for (const auto& p : x) out.row_lines.push_back(point_line_product_p3(p, l_prime));
  for (const auto& q : x_prime) out.col_lines.push_back(point_line_product_p3(q, l));
  for (const auto& p : x) {
    out.table.emplace_back();
    for (const auto& q : x_prime) {
      auto r = hadamard(p, q);  // defined: both have full support
      out.table.back().push_back(*r);
      all.push_back(*r);
    }
  }
  out.points = FinitePointSet::deduplicated(std::move(all)).sorted();
  if (out.points.size() != x.size() * x_prime.size()) {
    throw VerificationError("grid has " + std::to_string(out.points.size()) + " points, expected " +
                            std::to_string(x.size() * x_prime.size()));
  }
  return out;
}

Quadric3::Quadric3(HomogeneousForm f) : form(std::move(f)), symmetric(4, 4) {
  if (form.nvars() != 4 || form.degree() != 2) {
    throw PreconditionError("a quadric of P^3 is a degree-2 form in four variables");
  }
  for (const auto& [e, c] : form.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i) {
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      symmetric(idx[0], idx[0]) = c;
    } else {
      symmetric(idx[0], idx[1]) = c / 2;
      symmetric(idx[1], idx[0]) = c / 2;
    }
  }
}

Rational Quadric3::determinant() const { return hada::determinant(symmetric); }

QuadricFitResult quadric_through(const FinitePointSet& s) {
  if (!s.empty() && s.ambient_dim() != 3) throw DimensionMismatch("quadric fit needs points of P^3");
  auto forms = vanishing_forms(s.points(), 4, 2);
  QuadricFitResult r{QuadricFit::None, forms.size(), std::nullopt};
  if (forms.size() == 1) {
    r.status = QuadricFit::Unique;
    r.quadric.emplace(forms.front());
  } else if (forms.size() > 1) {
    r.status = QuadricFit::NonUnique;
  }
  return r;
}

bool RulingReport::passed() const {
  return rows_off_quadric.empty() && cols_off_quadric.empty() && meeting_rows.empty() &&
         meeting_cols.empty() && cross_failures.empty() && nondegenerate;
}

std::vector<std::string> RulingReport::violations() const {
  std::vector<std::string> v;
  for (auto i : rows_off_quadric) v.push_back("row line " + std::to_string(i) + " not on quadric");
  for (auto i : cols_off_quadric) v.push_back("column line " + std::to_string(i) + " not on quadric");
  for (auto [i, j] : meeting_rows) {
    v.push_back("row lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");
  }
  for (auto [i, j] : meeting_cols) {
    v.push_back("column lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");
  }
  for (auto [i, j] : cross_failures) {
    v.push_back("row line " + std::to_string(i) + " and column line " + std::to_string(j) +
                " do not meet in one point");
  }
  if (!nondegenerate) v.push_back("quadric is degenerate");
  return v;
}

RulingReport ruling_check(const Quadric3& q, std::span<const Line3> rows,
                          std::span<const Line3> cols) {
  RulingReport rep;
  auto on_quadric = [&](const Line3& l) {
    const auto& b = l.basis();
    auto mid = combine(b, 1, 1);
    return membership(b[0], q.form) && membership(b[1], q.form) && membership(*mid, q.form);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!on_quadric(rows[i])) rep.rows_off_quadric.push_back(i);
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (!on_quadric(cols[i])) rep.cols_off_quadric.push_back(i);
  }
  auto same_family = [](std::span<const Line3> ls, auto& bad) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (intersect(ls[i], ls[j]).relation != LineRelation::Skew) bad.emplace_back(i, j);
      }
    }
  };
  same_family(rows, rep.meeting_rows);
  same_family(cols, rep.meeting_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.cross_points.emplace_back();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto m = intersect(rows[i], cols[j]);
      if (m.relation != LineRelation::Meet) rep.cross_failures.emplace_back(i, j);
      rep.cross_points.back().push_back(m.point);
    }
  }
  rep.determinant = q.determinant();
  rep.nondegenerate = rep.determinant != 0;
  return rep;
}

std::size_t default_sample_count(int degree) { return 3 * monomial_count(4, degree); }

std::vector<HomogeneousForm> variety_product_interpolate(const Line3& l, const Line3& l_prime,
                                                         int degree, std::size_t samples,
                                                         std::uint64_t seed) {
  if (degree < 1) throw PreconditionError("interpolation degree must be positive");
  const std::size_t n = monomial_count(4, degree);
  if (samples < 2 * n) {
    throw PreconditionError("need at least " + std::to_string(2 * n) + " samples for degree " +
                            std::to_string(degree));
  }
  SeededRng rng(seed);
  std::vector<ProjPoint> batch;
  batch.reserve(samples);
  std::size_t draws = 0;
  while (batch.size() < samples) {
    if (++draws > 100 * samples) throw VerificationError("too many undefined products");
    const auto p = random_point_on(l.basis(), rng);
    const auto q = random_point_on(l_prime.basis(), rng);
    if (auto r = hadamard(p, q)) batch.push_back(*r);
  }
  const std::span<const ProjPoint> all(batch);
  const auto fit = all.first(samples - n);
  const auto check = all.subspan(samples - n);
  auto forms = vanishing_forms(fit, 4, degree);
  for (const auto& f : forms) {
    for (const auto& p : check) {
      if (!membership(p, f)) throw VerificationError("sample-dependent kernel; increase samples");
    }
  }
  return forms;
}

namespace {

Hyperplane random_plane(SeededRng& rng) {
  std::vector<Integer> c(4);
  for (auto& v : c) v = static_cast<long>(rng.nonzero(9));
  return Hyperplane(ProjPoint(std::span<const Integer>(c)));
}

Line3 random_generic_line(SeededRng& rng) {
  while (true) {
    Hyperplane h = random_plane(rng);
    Hyperplane k = random_plane(rng);
    if (h == k) continue;
    Line3 l(h, k);
    if (!meets_coordinate_line(l)) return l;
  }
}

}  // namespace

GenericInstance3 generic_instance_p3(std::size_t n, std::size_t m, std::uint64_t seed) {
  SeededRng rng(seed);
  Line3 l = random_generic_line(rng);
  Line3 l_prime = random_generic_line(rng);
  std::vector<ProjPoint> x;
  std::vector<ProjPoint> xp;
  auto fresh = [&](const ProjPoint& p) {
    return p.nonzero_count() == 4 && std::find(x.begin(), x.end(), p) == x.end() &&
           std::find(xp.begin(), xp.end(), p) == xp.end();
  };
  while (x.size() < n) {
    auto p = random_point_on(l.basis(), rng);
    if (fresh(p)) x.push_back(p);
  }
  while (xp.size() < m) {
    auto q = random_point_on(l_prime.basis(), rng);
    if (!fresh(q)) continue;
    const bool ok = std::all_of(x.begin(), x.end(), [&](const ProjPoint& p) {
      return rank_condition(l, l_prime, p, q).rank > 2;
    });
    if (ok) xp.push_back(q);
  }
  return {l, l_prime, FinitePointSet(std::move(x)), FinitePointSet(std::move(xp))};
}

}  // namespace hada::space
