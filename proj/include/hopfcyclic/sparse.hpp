#pragma once

// Sparse vectors and column-stored sparse matrices over an exact scalar type.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hopfcyclic {

template <class F>
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, F>;

  SparseVec() = default;

  /// Builds from unordered terms; repeated indices are summed and zeros dropped.
  static SparseVec from_terms(std::vector<Entry> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& t : terms) {
      if (!v.e_.empty() && v.e_.back().first == t.first) {
        v.e_.back().second += t.second;
      } else {
        if (!v.e_.empty() && v.e_.back().second.is_zero()) v.e_.pop_back();
        v.e_.push_back(std::move(t));
      }
    }
    if (!v.e_.empty() && v.e_.back().second.is_zero()) v.e_.pop_back();
    return v;
  }

  static SparseVec from_dense(const std::vector<F>& d) {
    SparseVec v;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!d[i].is_zero()) v.e_.emplace_back(i, d[i]);
    return v;
  }

  static SparseVec unit(std::size_t i, F one = F(1)) {
    SparseVec v;
    v.e_.emplace_back(i, std::move(one));
    return v;
  }

  std::vector<F> to_dense(std::size_t n, const F& zero = F(0)) const {
    std::vector<F> d(n, zero);
    for (const auto& [i, c] : e_) {
      if (i >= n) throw Error(ErrorCode::shape_mismatch, "sparse index out of range");
      d[i] = c;
    }
    return d;
  }

  bool empty() const noexcept { return e_.empty(); }
  bool is_zero() const noexcept { return e_.empty(); }
  std::size_t nnz() const noexcept { return e_.size(); }
  const std::vector<Entry>& entries() const noexcept { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::size_t lead() const { return e_.front().first; }
  const F& lead_coeff() const { return e_.front().second; }

  /// Coefficient at index i (zero when absent).
  F at(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, std::size_t k) { return a.first < k; });
    if (it != e_.end() && it->first == i) return it->second;
    return F(0);
  }

  SparseVec& scale(const F& s) {
    if (s.is_zero()) {
      e_.clear();
      return *this;
    }
    for (auto& x : e_) x.second *= s;
    return *this;
  }

  /// this += s * other
  SparseVec& axpy(const F& s, const SparseVec& other) {
    if (s.is_zero() || other.e_.empty()) return *this;
    std::vector<Entry> out;
    out.reserve(e_.size() + other.e_.size());
    auto a = e_.begin();
    auto b = other.e_.begin();
    while (a != e_.end() || b != other.e_.end()) {
      if (b == other.e_.end() || (a != e_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == e_.end() || b->first < a->first) {
        out.emplace_back(b->first, s * b->second);
        ++b;
      } else {
        F c = a->second + s * b->second;
        if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    e_ = std::move(out);
    return *this;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a.axpy(F(1), b); }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a.axpy(F(-1), b); }
  friend SparseVec operator*(const F& s, SparseVec a) { return a.scale(s); }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  /// Renumbers indices by a monotone map; entries mapped to npos are dropped.
  template <class Map>
  SparseVec remap(Map&& m) const {
    std::vector<Entry> t;
    t.reserve(e_.size());
    for (const auto& [i, c] : e_) {
      std::size_t j = m(i);
      if (j != static_cast<std::size_t>(-1)) t.emplace_back(j, c);
    }
    return from_terms(std::move(t));
  }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, c] : e_) {
      if (!first) os << ", ";
      first = false;
      os << i << ": " << c.str();
    }
    os << "}";
    return os.str();
  }

 private:
  std::vector<Entry> e_;
};

template <class F>
F dot(const SparseVec<F>& a, const SparseVec<F>& b) {
  F s(0);
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (x->first < y->first) ++x;
    else if (y->first < x->first) ++y;
    else {
      s += x->second * y->second;
      ++x;
      ++y;
    }
  }
  return s;
}

/// rows x cols matrix stored by columns; column j is the image of the j-th basis vector.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), c_(cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.c_[i] = SparseVec<F>::unit(i);
    return m;
  }
  static Matrix from_columns(std::size_t rows, std::vector<SparseVec<F>> cols) {
    Matrix m(rows, cols.size());
    for (auto& c : cols)
      if (!c.empty() && c.entries().back().first >= rows) throw Error(ErrorCode::shape_mismatch, "column entry outside row range");
    m.c_ = std::move(cols);
    return m;
  }
  /// Dense row-major input.
  static Matrix from_dense(const std::vector<std::vector<F>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    std::vector<std::vector<typename SparseVec<F>::Entry>> t(c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::shape_mismatch, "ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j)
        if (!rows[i][j].is_zero()) t[j].emplace_back(i, rows[i][j]);
    }
    for (std::size_t j = 0; j < c; ++j) m.c_[j] = SparseVec<F>::from_terms(std::move(t[j]));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVec<F>& col(std::size_t j) const { return c_.at(j); }
  void set_col(std::size_t j, SparseVec<F> v) {
    if (!v.empty() && v.entries().back().first >= rows_) throw Error(ErrorCode::shape_mismatch, "column entry outside row range");
    c_.at(j) = std::move(v);
  }
  F at(std::size_t i, std::size_t j) const { return c_.at(j).at(i); }

  SparseVec<F> apply(const SparseVec<F>& v) const {
    std::vector<typename SparseVec<F>::Entry> t;
    for (const auto& [j, s] : v) {
      if (j >= cols_) throw Error(ErrorCode::shape_mismatch, "vector longer than matrix domain");
      for (const auto& [i, a] : c_[j]) t.emplace_back(i, s * a);
    }
    return SparseVec<F>::from_terms(std::move(t));
  }

  std::vector<F> apply_dense(const std::vector<F>& v) const {
    return apply(SparseVec<F>::from_dense(v)).to_dense(rows_);
  }

  Matrix transpose() const {
    std::vector<std::vector<typename SparseVec<F>::Entry>> t(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, a] : c_[j]) t[i].emplace_back(j, a);
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) m.c_[i] = SparseVec<F>::from_terms(std::move(t[i]));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::shape_mismatch, "matrix product dimensions");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) m.c_[j] = a.apply(b.c_[j]);
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, F(1), b); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, F(-1), b); }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& c : a.c_) c.scale(s);
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const SparseVec<F>& c) { return c.empty(); });
  }

  /// First column (then row) where the two matrices differ, as {row, col}.
  friend std::pair<std::size_t, std::size_t> first_difference(const Matrix& a, const Matrix& b) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.c_[j] == b.c_[j]) continue;
      SparseVec<F> d = a.c_[j] - b.c_[j];
      return {d.lead(), j};
    }
    return {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)};
  }

  std::vector<std::vector<F>> to_dense() const {
    std::vector<std::vector<F>> d(rows_, std::vector<F>(cols_, F(0)));
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, a] : c_[j]) d[i][j] = a;
    return d;
  }

  /// Matrix power for square matrices.
  Matrix pow(unsigned k) const {
    Matrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = *this * r;
    return r;
  }

 private:
  static Matrix combine(const Matrix& a, const F& s, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::shape_mismatch, "matrix sum dimensions");
    Matrix m = a;
    for (std::size_t j = 0; j < a.cols_; ++j) m.c_[j].axpy(s, b.c_[j]);
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec<F>> c_;
};

/// Stacks matrices with equal column counts on top of each other.
template <class F>
Matrix<F> vstack(const std::vector<const Matrix<F>*>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = parts[0]->cols();
  std::size_t rows = 0;
  for (auto* p : parts) {
    if (p->cols() != cols) throw Error(ErrorCode::shape_mismatch, "vstack column counts differ");
    rows += p->rows();
  }
  std::vector<SparseVec<F>> out(cols);
  std::size_t off = 0;
  for (auto* p : parts) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<typename SparseVec<F>::Entry> t(out[j].begin(), out[j].end());
      for (const auto& [i, a] : p->col(j)) t.emplace_back(i + off, a);
      out[j] = SparseVec<F>::from_terms(std::move(t));
    }
    off += p->rows();
  }
  return Matrix<F>::from_columns(rows, std::move(out));
}

}  // namespace hopfcyclic
