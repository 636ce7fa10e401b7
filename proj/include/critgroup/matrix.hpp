#pragma once

#include "critgroup/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

/// Dense row-major matrix of arbitrary-precision integers, at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_shape();
  }

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_shape();
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("entries length " + std::to_string(entries_.size()) +
                                  " does not match " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged row in matrix literal");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const BigInt> entries() const noexcept { return entries_; }
  std::span<const BigInt> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    IntMatrix s(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i)
      for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(row_ids[i], col_ids[j]);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& v) { return sgn(v) == 0; });
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  IntMatrix& operator-=(const IntMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  IntMatrix& operator*=(const BigInt& s) {
    for (auto& v : entries_) v *= s;
    return *this;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }
  friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("cannot multiply " + a.shape() + " by " + b.shape());
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_shape() const {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be at least 1x1");
  }

  void require_same_shape(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << (i + 1 == m.rows() ? "]]" : "]\n");
  }
  return os;
}

/// Accumulates a block-diagonal (direct sum) matrix. Empty runs such as
/// I_0 are allowed and contribute nothing.
class BlockDiagonal {
 public:
  BlockDiagonal& scalars(const BigInt& value, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) blocks_.push_back(IntMatrix(1, 1, {value}));
    return *this;
  }

  BlockDiagonal& block(IntMatrix m) {
    blocks_.push_back(std::move(m));
    return *this;
  }

  std::size_t rows() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.rows();
    return n;
  }

  IntMatrix build() const {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks_) {
      r += b.rows();
      c += b.cols();
    }
    IntMatrix m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks_) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
      r0 += b.rows();
      c0 += b.cols();
    }
    return m;
  }

 private:
  std::vector<IntMatrix> blocks_;
};

inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  return BlockDiagonal{}.block(a).block(b).build();
}

}  // namespace critgroup
