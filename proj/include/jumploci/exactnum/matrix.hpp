#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jumploci {

/// Dense row-major matrix over an exact scalar domain.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n, const T& zero = T(0), const T& one = T(1)) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, rows_ * cols_ ? data_[0] : T{});
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    const T zero = a.zero_like();
    Matrix p(a.rows_, b.cols_, zero);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<T> out(rows_, zero_like());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    const T zero = zero_like();
    for (const auto& x : data_)
      if (!(x == zero)) return false;
    return true;
  }

  const std::vector<T>& data() const { return data_; }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
    return m;
  }

 private:
  // Zero in the same "context" as the stored entries (relevant for
  // polynomial entries that carry a variable list).
  T zero_like() const { return data_.empty() ? T{} : data_[0] - data_[0]; }

  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Row-compressed sparse matrix; used for the differentials of exterior
/// algebras, where each basis monomial maps to few monomials.
template <class T>
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    T value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_entries_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Adds value into (r, c); zero results are dropped.
  void add(std::size_t r, std::size_t c, const T& value) {
    auto& entries = row_entries_.at(r);
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      if (it->col == c) {
        it->value += value;
        if (it->value == T(0)) entries.erase(it);
        return;
      }
    }
    if (!(value == T(0))) entries.push_back({c, value});
  }

  const std::vector<Entry>& row_entries(std::size_t r) const { return row_entries_.at(r); }

  /// Column view: entries (row, value) with column c.
  std::vector<std::pair<std::size_t, T>> column(std::size_t c) const {
    std::vector<std::pair<std::size_t, T>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& e : row_entries_[r])
        if (e.col == c) out.emplace_back(r, e.value);
    return out;
  }

  Matrix<T> to_dense() const {
    Matrix<T> m(rows_, cols_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& e : row_entries_[r]) m(r, e.col) = e.value;
    return m;
  }

  static SparseMatrix from_dense(const Matrix<T>& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!(m(r, c) == T(0))) s.row_entries_[r].push_back({c, m(r, c)});
    return s;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : row_entries_) n += r.size();
    return n;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> row_entries_;
};

}  // namespace jumploci
