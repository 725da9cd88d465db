#include "homnambu/linalg.hpp"

#include "homnambu/error.hpp"

namespace homnambu {

namespace {

// Rows scaled by the lcm of their denominators become integer rows; the
// product of the scale factors is returned so det can undo it.
std::vector<std::vector<mpz_class>> integerize(const Matrix& m, mpz_class& scale) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    scale *= l;
  }
  return rows;
}

struct BareissResult {
  std::size_t rank = 0;
  mpz_class last_pivot = 1;
  int sign = 1;
};

BareissResult bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

EchelonForm reduced_row_echelon(Matrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const auto ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis, m.cols());
}

std::size_t rank(const Matrix& m) {
  mpz_class scale;
  auto a = integerize(m, scale);
  return bareiss(a, m.cols()).rank;
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw Error("not square");
  if (m.rows() == 0) return 1;
  mpz_class scale;
  auto a = integerize(m, scale);
  const auto res = bareiss(a, m.cols());
  if (res.rank < m.rows()) return 0;
  Scalar d(res.last_pivot * res.sign, scale);
  d.canonicalize();
  return d;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (m.rows() != b.size()) throw Error("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ef = reduced_row_echelon(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error("not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto ef = reduced_row_echelon(std::move(aug));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& spanning, std::size_t dim) {
  if (spanning.empty()) return {};
  const auto ef = reduced_row_echelon(Matrix::from_row_vectors(spanning, dim));
  std::vector<Vector> out;
  out.reserve(ef.pivots.size());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) out.push_back(ef.reduced.row(i));
  return out;
}

std::optional<std::vector<Scalar>> coordinates(const std::vector<Vector>& canonical, const Vector& v) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(canonical.size());
  Vector rebuilt(v.size());
  for (const auto& b : canonical) {
    std::size_t pivot = 0;
    while (pivot < b.size() && sgn(b[pivot]) == 0) ++pivot;
    if (pivot == b.size()) throw Error("zero vector in canonical basis");
    coeffs.push_back(v[pivot]);
    rebuilt += v[pivot] * b;
  }
  if (!(rebuilt == v)) return std::nullopt;
  return coeffs;
}

}  // namespace homnambu
