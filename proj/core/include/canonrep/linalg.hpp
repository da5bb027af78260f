#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonrep/finite_field.hpp"

namespace canonrep {

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

using Vec = std::vector<Fq>;

// Dense row-major matrix over F_{p^2}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const QuadraticField* field, int rows, int cols);

  static Matrix identity(const QuadraticField* field, int n);
  static Matrix from_columns(const QuadraticField* field, int rows,
                             const std::vector<Vec>& columns);

  const QuadraticField* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fq& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Fq& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  Vec column(int c) const;
  Vec row(int r) const;
  Matrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const Matrix& m);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend Matrix operator*(const Fq& s, const Matrix& a);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const;
  // Throws SingularMatrix.
  Matrix inverse() const;
  Matrix pow(long long e) const;
  int rank() const;
  bool is_identity() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  const QuadraticField* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fq> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);

// Basis of {v : m v = 0}.
std::vector<Vec> nullspace(const Matrix& m);

// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Vec add(const Vec& a, const Vec& b);
Vec scale(const Fq& s, const Vec& v);
bool is_zero(const Vec& v);
Vec unit_vector(const QuadraticField* field, int n, int k);

// Subspace of F^n kept as a reduced echelon basis.
class Subspace {
 public:
  Subspace(const QuadraticField* field, int ambient) : field_(field), n_(ambient) {}

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }

  // Adds v; returns true when the dimension grew.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  // v minus its projection onto the pivot coordinates.
  Vec reduce(Vec v) const;

 private:
  const QuadraticField* field_;
  int n_;
  std::vector<Vec> rows_;  // rows_[k] has a 1 at pivots_[k], zero at other pivots
  std::vector<int> pivots_;
};

}  // namespace canonrep
