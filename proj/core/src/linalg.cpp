#include "canonrep/linalg.hpp"

#include <sstream>

namespace canonrep {

Matrix::Matrix(const QuadraticField* field, int rows, int cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows * cols), field->zero()) {}

Matrix Matrix::identity(const QuadraticField* field, int n) {
  Matrix m(field, n, n);
  for (int k = 0; k < n; ++k) m(k, k) = field->one();
  return m;
}

Matrix Matrix::from_columns(const QuadraticField* field, int rows,
                            const std::vector<Vec>& columns) {
  Matrix m(field, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols_; ++c) {
    const Vec& col = columns[static_cast<std::size_t>(c)];
    if (static_cast<int>(col.size()) != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (int r = 0; r < rows; ++r) m(r, c) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

Vec Matrix::column(int c) const {
  Vec out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::block(int r0, int c0, int rows, int cols) const {
  Matrix out(field_, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  for (int r = 0; r < m.rows_; ++r) {
    for (int c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Fq& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != static_cast<int>(v.size())) {
    throw std::invalid_argument("matrix-vector shape mismatch");
  }
  Vec out(static_cast<std::size_t>(a.rows_), a.field_->zero());
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) out[static_cast<std::size_t>(i)] += a(i, k) * v[static_cast<std::size_t>(k)];
  }
  return out;
}

Matrix operator*(const Fq& s, const Matrix& a) {
  Matrix out = a;
  for (Fq& x : out.data_) x = s * x;
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = rows_;
  Matrix aug(field_, n, 2 * n);
  aug.set_block(0, 0, *this);
  aug.set_block(0, n, identity(field_, n));
  const std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n) {
    throw SingularMatrix();
  }
  return aug.block(0, n, n, n);
}

Matrix Matrix::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(rref(copy).size());
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const Fq& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const Fq& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) os << "; ";
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) os << " ";
      os << (*this)(r, c);
    }
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int found = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    }
    const Fq inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Fq factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  const std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()), m.field()->zero());
    v[static_cast<std::size_t>(free)] = m.field()->one();
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[static_cast<std::size_t>(pivots[k])] = -r(static_cast<int>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[static_cast<std::size_t>(r)];
  const std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(static_cast<std::size_t>(m.cols()), m.field()->zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[static_cast<std::size_t>(pivots[k])] = aug(static_cast<int>(k), m.cols());
  }
  return x;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

Vec scale(const Fq& s, const Vec& v) {
  Vec out = v;
  for (Fq& x : out) x = s * x;
  return out;
}

bool is_zero(const Vec& v) {
  for (const Fq& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec unit_vector(const QuadraticField* field, int n, int k) {
  Vec v(static_cast<std::size_t>(n), field->zero());
  v[static_cast<std::size_t>(k)] = field->one();
  return v;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fq c = v[static_cast<std::size_t>(pivots_[k])];
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] -= c * rows_[k][static_cast<std::size_t>(j)];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < n_; ++j) {
    if (!r[static_cast<std::size_t>(j)].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  r = scale(r[static_cast<std::size_t>(pivot)].inverse(), r);
  for (Vec& row : rows_) {
    const Fq c = row[static_cast<std::size_t>(pivot)];
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] -= c * r[static_cast<std::size_t>(j)];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace canonrep
