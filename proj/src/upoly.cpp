#include "jordan/upoly.hpp"

#include <algorithm>

#include "jordan/error.hpp"
#include "jordan/qmat.hpp"

namespace jordan {

UPoly::UPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_factor(const Rat& root) { return UPoly({-root, Rat(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat UPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UPoly::operator()(const Rat& t) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QMat UPoly::operator()(const QMat& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
  QMat acc(m.rows(), m.cols());
  const QMat id = QMat::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rat lead = leading();
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c /= lead;
  return UPoly(std::move(v));
}

UPoly UPoly::scaled_argument(const Rat& c) const {
  std::vector<Rat> v = coeffs_;
  Rat scale(1);
  for (auto& x : v) {
    x *= scale;
    scale *= c;
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Rat> v = coeffs_;
  for (auto& x : v) x = -x;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rat& c, const UPoly& p) { return UPoly::constant(c) * p; }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  if (rem.size() <= db) return {UPoly{}, a};
  std::vector<Rat> quot(rem.size() - db);
  const Rat lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rat q = rem[k] / lead;
    quot[k - db] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rat(1)) out += mag.str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace jordan
