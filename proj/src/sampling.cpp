#include "hada/sampling.hpp"

#include "hada/errors.hpp"
#include "hada/linalg.hpp"

namespace hada {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

std::int64_t SeededRng::nonzero(std::int64_t bound) {
  const std::int64_t v = uniform(1, bound);
  return (engine_() & 1) ? v : -v;
}

std::array<ProjPoint, 2> line_basis(std::span<const Hyperplane> equations) {
  if (equations.empty()) throw PreconditionError("a line needs at least one equation");
  const std::size_t cols = equations.front().coefficients().size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& h : equations) {
    if (h.coefficients().size() != cols) throw DimensionMismatch("equations of mixed dimension");
    rows.push_back(h.coefficients());
  }
  const auto kernel = kernel_basis(Matrix::from_integer_rows(rows, cols));
  if (kernel.size() != 2) {
    throw PreconditionError("equations cut out a space of projective dimension " +
                            std::to_string(static_cast<long>(kernel.size()) - 1) + ", not a line");
  }
  return {ProjPoint(std::span<const Rational>(kernel[0])),
          ProjPoint(std::span<const Rational>(kernel[1]))};
}

std::optional<ProjPoint> combine(const std::array<ProjPoint, 2>& basis, std::int64_t lambda,
                                 std::int64_t mu) {
  const std::size_t n = basis[0].size();
  std::vector<Integer> c(n);
  const Integer l(static_cast<long>(lambda));
  const Integer m(static_cast<long>(mu));
  for (std::size_t i = 0; i < n; ++i) c[i] = l * basis[0][i] + m * basis[1][i];
  return ProjPoint::from_vector(std::span<const Integer>(c));
}

ProjPoint random_point_on(const std::array<ProjPoint, 2>& basis, SeededRng& rng) {
  while (true) {
    const auto lambda = rng.uniform(-kParameterBound, kParameterBound);
    const auto mu = rng.uniform(-kParameterBound, kParameterBound);
    if (auto p = combine(basis, lambda, mu)) return *p;
  }
}

}  // namespace hada
