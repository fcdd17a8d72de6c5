#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jordan/rat.hpp"

namespace jordan {

using QVec = std::vector<Rat>;

// Dense exact matrix, row-major.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);
  QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat zero(std::size_t rows, std::size_t cols) { return QMat(rows, cols); }
  static QMat identity(std::size_t n);
  /// Nilpotent Jordan block: ones on the first superdiagonal.
  static QMat jordan_block(std::size_t n);
  static QMat diagonal(std::span<const Rat> values);
  static QMat from_columns(const std::vector<QVec>& columns, std::size_t rows);
  /// Inverse of flatten().
  static QMat unflatten(std::span<const Rat> values, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rat> flatten() const { return data_; }
  QVec column(std::size_t j) const;
  QVec row(std::size_t i) const;

  bool is_zero() const;
  bool is_upper_triangular() const;
  Rat trace() const;
  QMat transpose() const;
  QMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMat& b);

  QMat operator-() const;
  QMat& operator+=(const QMat& o);
  QMat& operator-=(const QMat& o);
  QMat& operator*=(const Rat& c);

  friend QMat operator+(QMat a, const QMat& b) { return a += b; }
  friend QMat operator-(QMat a, const QMat& b) { return a -= b; }
  friend QMat operator*(QMat a, const Rat& c) { return a *= c; }
  friend QMat operator*(const Rat& c, QMat a) { return a *= c; }
  friend QMat operator*(const QMat& a, const QMat& b);
  friend QVec operator*(const QMat& a, const QVec& v);
  friend bool operator==(const QMat&, const QMat&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMat direct_sum(const QMat& a, const QMat& b);
/// Repeated squaring.
QMat power(const QMat& m, std::uint64_t exponent);
/// x*y - y*x
QMat commutator(const QMat& x, const QMat& y);
/// trace(a*b) without forming the product.
Rat trace_of_product(const QMat& a, const QMat& b);

bool is_zero_vector(const QVec& v);

}  // namespace jordan
