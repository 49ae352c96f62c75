#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hada/projective.hpp"

namespace hada {

/// Largest absolute value of a sampled line parameter.
inline constexpr std::int64_t kParameterBound = 10000;

/// Seeded 64-bit generator. The mapping to integer ranges uses plain modular
/// reduction so sequences are identical across standard library vendors.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Integer in [-bound, bound] \ {0}.
  std::int64_t nonzero(std::int64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Two integer points spanning the linear space cut out by the equations
/// (a line: one equation in P^2, two in P^3). Throws PreconditionError when the
/// equations do not define a line.
std::array<ProjPoint, 2> line_basis(std::span<const Hyperplane> equations);

/// lambda * b0 + mu * b1, or nullopt for lambda = mu = 0.
std::optional<ProjPoint> combine(const std::array<ProjPoint, 2>& basis, std::int64_t lambda,
                                 std::int64_t mu);

/// A point lambda * b0 + mu * b1 with parameters drawn in [-kParameterBound, kParameterBound].
ProjPoint random_point_on(const std::array<ProjPoint, 2>& basis, SeededRng& rng);

}  // namespace hada
