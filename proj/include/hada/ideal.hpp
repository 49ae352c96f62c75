#pragma once

// Hilbert functions, degree-wise ideals and minimal generator counts of
// finite point sets, all read off evaluation matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hada/form.hpp"
#include "hada/projective.hpp"

namespace hada::ideal {

/// Rank of the evaluation matrix of X in degree t.
std::size_t hilbert_function(const FinitePointSet& x, int t);

struct HilbertProfile {
  std::vector<std::size_t> values;  // HF(0) .. HF(tau + 1)
  int tau = 0;                      // least t with HF(t) = |X|
  std::vector<long> h_vector;       // HF(0), HF(1) - HF(0), ..., up to tau
  std::size_t cardinality = 0;
};

HilbertProfile hilbert_profile(const FinitePointSet& x);

struct DegreeCheck {
  int t = 0;
  std::size_t hf_product = 0;  // HF_S(t)
  std::size_t hf_x = 0;
  std::size_t hf_x_prime = 0;
  bool pass() const { return hf_product == hf_x * hf_x_prime; }
};

struct HfProductReport {
  std::vector<DegreeCheck> degrees;  // 0 .. tau_S + 1
  int tau = 0;
  /// m - 1, only when |X| = |X'| = m. Unequal sizes are reported but not asserted.
  std::optional<int> expected_tau;
  bool passed() const;
};

HfProductReport hf_product_check(const FinitePointSet& x, const FinitePointSet& x_prime,
                                 const FinitePointSet& s);

/// binom(t + n, n) - HF(t).
std::size_t ideal_dimension(const FinitePointSet& x, int t);

/// Primitive integer basis of the degree-t forms vanishing on X.
std::vector<HomogeneousForm> degree_bounded_ideal(const FinitePointSet& x, int t);

struct GeneratorProfile {
  std::vector<std::size_t> dim_ideal;       // indexed by degree 0 .. max_degree
  std::vector<std::size_t> new_generators;  // same indexing
  std::size_t total = 0;

  int max_degree() const { return static_cast<int>(dim_ideal.size()) - 1; }
  /// Degrees of the minimal generators, ascending, with multiplicity.
  std::vector<int> generator_degrees() const;
};

/// Counts minimal generators degree by degree up to max_degree (default tau + 1).
GeneratorProfile generator_profile(const FinitePointSet& x,
                                   std::optional<int> max_degree = std::nullopt);

struct CIVerdict {
  enum class Kind { CI, NotCI, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<int> degrees;  // generator degrees for CI
  std::string reason;        // for NotCI and Unknown
  std::size_t generators = 0;

  std::string label() const;  // "CI", "NotCI", "Unknown"
};

CIVerdict ci_verdict(const FinitePointSet& x);

}  // namespace hada::ideal
