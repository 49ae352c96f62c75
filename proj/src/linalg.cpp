#include "hada/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "hada/errors.hpp"

namespace hada {

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("matrix row has wrong length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows,
                                 std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Echelon reduced_row_echelon(Matrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // Integer elimination is markedly faster than mpq arithmetic here.
  IntegerRowSpace space(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    space.insert(primitive_integer_vector(m.row(r)));
    if (space.rank() == m.cols()) break;
  }
  return space.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

bool IntegerRowSpace::insert(std::vector<Integer> v) {
  assert(v.size() == cols_);
  Integer a, b;
  for (const Row& row : rows_) {
    const Integer& vp = v[row.pivot];
    if (vp == 0) continue;
    // v <- row[p] * v - v[p] * row, which zeroes column p.
    a = row.values[row.pivot];
    b = vp;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c < row.pivot) {
        if (v[c] != 0) v[c] *= a;
        continue;
      }
      v[c] *= a;
      if (row.values[c] != 0) v[c] -= b * row.values[c];
    }
    v = content_free(v);
  }
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (lead == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - v.begin());
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{pivot, std::move(v)});
  return true;
}

}  // namespace hada
