#include "hada/ideal.hpp"

#include <map>

#include "hada/errors.hpp"
#include "hada/linalg.hpp"

namespace hada::ideal {
namespace {

std::size_t nvars_of(const FinitePointSet& x) { return x.ambient_dim() + 1; }

void require_nonempty(const FinitePointSet& x) {
  if (x.empty()) throw PreconditionError("point set is empty");
}

}  // namespace

std::size_t hilbert_function(const FinitePointSet& x, int t) {
  if (t < 0) throw PreconditionError("degree must be nonnegative");
  if (x.empty()) return 0;
  return rank(evaluation_matrix(x, t));
}

HilbertProfile hilbert_profile(const FinitePointSet& x) {
  require_nonempty(x);
  HilbertProfile p;
  p.cardinality = x.size();
  for (int t = 0;; ++t) {
    p.values.push_back(hilbert_function(x, t));
    if (p.values.back() == x.size()) {
      p.tau = t;
      break;
    }
  }
  p.values.push_back(x.size());  // HF is constant from tau on
  long prev = 0;
  for (int t = 0; t <= p.tau; ++t) {
    p.h_vector.push_back(static_cast<long>(p.values[t]) - prev);
    prev = static_cast<long>(p.values[t]);
  }
  return p;
}

bool HfProductReport::passed() const {
  for (const auto& d : degrees) {
    if (!d.pass()) return false;
  }
  return !expected_tau || *expected_tau == tau;
}

HfProductReport hf_product_check(const FinitePointSet& x, const FinitePointSet& x_prime,
                                 const FinitePointSet& s) {
  require_nonempty(s);
  const auto profile = hilbert_profile(s);
  HfProductReport r;
  r.tau = profile.tau;
  for (int t = 0; t <= profile.tau + 1; ++t) {
    r.degrees.push_back({t, profile.values[t], hilbert_function(x, t), hilbert_function(x_prime, t)});
  }
  if (x.size() == x_prime.size()) r.expected_tau = static_cast<int>(x.size()) - 1;
  return r;
}

std::size_t ideal_dimension(const FinitePointSet& x, int t) {
  if (t < 0) throw PreconditionError("degree must be nonnegative");
  const std::size_t n = x.empty() ? 0 : nvars_of(x);
  if (x.empty()) throw PreconditionError("point set is empty");
  return monomial_count(n, t) - hilbert_function(x, t);
}

std::vector<HomogeneousForm> degree_bounded_ideal(const FinitePointSet& x, int t) {
  require_nonempty(x);
  if (t < 0) throw PreconditionError("degree must be nonnegative");
  return vanishing_forms(x.points(), nvars_of(x), t);
}

std::vector<int> GeneratorProfile::generator_degrees() const {
  std::vector<int> out;
  for (std::size_t t = 0; t < new_generators.size(); ++t) {
    out.insert(out.end(), new_generators[t], static_cast<int>(t));
  }
  return out;
}

GeneratorProfile generator_profile(const FinitePointSet& x, std::optional<int> max_degree) {
  require_nonempty(x);
  const std::size_t n = nvars_of(x);
  const int d = max_degree ? *max_degree : hilbert_profile(x).tau + 1;
  if (d < 0) throw PreconditionError("degree bound must be nonnegative");

  GeneratorProfile g;
  std::vector<HomogeneousForm> previous;  // basis of I_{t-1}
  for (int t = 0; t <= d; ++t) {
    const std::size_t dim = ideal_dimension(x, t);
    g.dim_ideal.push_back(dim);
    std::size_t spanned = 0;
    if (dim > 0 && !previous.empty()) {
      const auto monos = monomials(n, t);
      std::map<Exponent, std::size_t> index;
      for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
      IntegerRowSpace span(monos.size());
      for (const auto& f : previous) {
        for (std::size_t v = 0; v < n && span.rank() < dim; ++v) {
          std::vector<Integer> row(monos.size());
          for (const auto& [e, c] : f.terms()) {
            Exponent shifted = e;
            ++shifted[v];
            row[index.at(shifted)] = c.get_num();  // primitive forms have integer coefficients
          }
          span.insert(std::move(row));
        }
        if (span.rank() == dim) break;
      }
      spanned = span.rank();
    }
    g.new_generators.push_back(dim - spanned);
    g.total += dim - spanned;
    // The next degree only needs a basis when it has a nonzero ideal part.
    previous = dim > 0 && t < d ? degree_bounded_ideal(x, t) : std::vector<HomogeneousForm>{};
  }
  return g;
}

std::string CIVerdict::label() const {
  switch (kind) {
    case Kind::CI:
      return "CI";
    case Kind::NotCI:
      return "NotCI";
    case Kind::Unknown:
      break;
  }
  return "Unknown";
}

CIVerdict ci_verdict(const FinitePointSet& x) {
  require_nonempty(x);
  const auto g = generator_profile(x);
  const std::size_t codim = x.ambient_dim();
  CIVerdict v;
  v.generators = g.total;
  if (g.total == codim) {
    v.kind = CIVerdict::Kind::CI;
    v.degrees = g.generator_degrees();
  } else if (g.total > codim) {
    v.kind = CIVerdict::Kind::NotCI;
    v.reason = std::to_string(g.total) + " minimal generators exceed codimension " +
               std::to_string(codim) + " by " + std::to_string(g.total - codim);
  } else {
    v.reason = "only " + std::to_string(g.total) + " generators found up to degree " +
               std::to_string(g.max_degree());
  }
  return v;
}

}  // namespace hada::ideal
