#include "jordan/qmat.hpp"

#include <sstream>

#include "jordan/error.hpp"

namespace jordan {

namespace {

void require_same_shape(const QMat& a, const QMat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMat::QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
}

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::jordan_block(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return m;
}

QMat QMat::diagonal(std::span<const Rat> values) {
  QMat m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& columns, std::size_t rows) {
  QMat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QMat QMat::unflatten(std::span<const Rat> values, std::size_t rows, std::size_t cols) {
  return QMat(rows, cols, std::vector<Rat>(values.begin(), values.end()));
}

QVec QMat::column(std::size_t j) const {
  QVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool QMat::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool QMat::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i && j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Rat QMat::trace() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of non-square matrix");
  Rat t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMat QMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  QMat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void QMat::set_block(std::size_t r0, std::size_t c0, const QMat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

QMat QMat::operator-() const {
  QMat m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

QMat& QMat::operator+=(const QMat& o) {
  require_same_shape(*this, o, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMat& QMat::operator-=(const QMat& o) {
  require_same_shape(*this, o, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMat& QMat::operator*=(const Rat& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  QMat c(a.rows_, b.cols_);
  mpq_class acc;
  mpq_class tmp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k).raw();
        if (sgn(x) == 0) continue;
        const auto& y = b(k, j).raw();
        if (sgn(y) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc += tmp;
      }
      c(i, j) = Rat(acc);
    }
  }
  return c;
}

QVec operator*(const QMat& a, const QVec& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  QVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::string QMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

QMat direct_sum(const QMat& a, const QMat& b) {
  QMat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

QMat power(const QMat& m, std::uint64_t exponent) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  QMat result = QMat::identity(m.rows());
  QMat base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

QMat commutator(const QMat& x, const QMat& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator needs equal square matrices");
  }
  return x * y - y * x;
}

Rat trace_of_product(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "trace of product");
  }
  mpq_class acc;
  mpq_class tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k).raw();
      if (sgn(x) == 0) continue;
      const auto& y = b(k, i).raw();
      if (sgn(y) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      acc += tmp;
    }
  }
  return Rat(acc);
}

bool is_zero_vector(const QVec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace jordan
