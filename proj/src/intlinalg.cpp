#include "lefsec/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lefsec {

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

IntVector operator+(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  IntVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

IntVector operator-(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  IntVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

IntVector operator*(const Integer& s, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntVector y = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Row/column operations applied to the working matrix and mirrored on the
// accumulated transforms.
struct SnfState {
  IntMatrix D, U, V;

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(i, j), D(k, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(i, j), U(k, j));
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, k));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, k));
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) += q * D(k, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) += q * U(k, j);
  }
  // col_i += q * col_k
  void add_col(std::size_t i, std::size_t k, const Integer& q) {
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) += q * D(r, k);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += q * V(r, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) = -D(i, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SnfState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool empty_block = false;
    for (;;) {
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& x = s.D(i, j);
          if (x == 0) continue;
          Integer ax = abs(x);
          if (pi == m || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        empty_block = true;
        break;
      }
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool dirty = false;
      const Integer pivot = s.D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = s.D(i, t) / pivot;
        if (q != 0) s.add_row(i, t, -q);
        if (s.D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = s.D(t, j) / pivot;
        if (q != 0) s.add_col(j, t, -q);
        if (s.D(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.D(i, j) % pivot != 0) {
            s.add_row(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (empty_block) break;
    if (s.D(t, t) < 0) s.negate_row(t);
  }
  return {std::move(s.U), std::move(s.D), std::move(s.V)};
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

Integer SmithDecomposition::diagonal(std::size_t i) const {
  if (i < std::min(D.rows(), D.cols())) return D(i, i);
  return 0;
}

std::optional<IntVector> in_image(const SmithDecomposition& snf, const IntVector& b) {
  if (b.size() != snf.U.cols()) throw std::invalid_argument("right-hand side length mismatch");
  const IntVector c = snf.U * b;
  const std::size_t r = snf.rank();
  IntVector y = zero_vector(snf.V.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      const Integer& d = snf.D(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

std::optional<IntVector> in_image(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  return in_image(smith_normal_form(a), b);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  SmithDecomposition snf = smith_normal_form(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (snf.D(i, i) != 1) throw std::invalid_argument("matrix is not invertible over Z");
  // U A V = I  =>  A^{-1} = V U
  return snf.V * snf.U;
}

CokernelPresentation cokernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  CokernelPresentation ck;
  ck.ambient = a.rows();
  ck.rank = a.rows() - r;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.D(i, i) > 1) {
      ck.torsion.push_back(snf.D(i, i));
      torsion_rows.push_back(i);
    }
  ck.projection = IntMatrix(ck.rank + ck.torsion.size(), a.rows());
  std::size_t out = 0;
  auto copy_row = [&](std::size_t src) {
    for (std::size_t j = 0; j < a.rows(); ++j) ck.projection(out, j) = snf.U(src, j);
    ++out;
  };
  for (std::size_t i = r; i < a.rows(); ++i) copy_row(i);
  for (std::size_t i : torsion_rows) copy_row(i);
  return ck;
}

IntVector CokernelPresentation::coordinates(const IntVector& v) const {
  if (v.size() != ambient) throw std::invalid_argument("vector length does not match cokernel ambient");
  IntVector c = projection * v;
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    Integer& x = c[rank + t];
    x %= torsion[t];
    if (x < 0) x += torsion[t];
  }
  return c;
}

bool classes_equal(const CokernelPresentation& ck, const IntVector& u, const IntVector& v) {
  if (u.size() != ck.ambient || v.size() != ck.ambient)
    throw std::invalid_argument("vector length does not match cokernel ambient");
  return is_zero(ck.coordinates(u - v));
}

}  // namespace lefsec
