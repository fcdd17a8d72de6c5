#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jordan/rat.hpp"

namespace jordan {

class QMat;

// Dense univariate polynomial over the rationals, coefficients stored low degree first
// with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coefficients);
  UPoly(std::initializer_list<Rat> coefficients) : UPoly(std::vector<Rat>(coefficients)) {}

  static UPoly constant(const Rat& c);
  static UPoly monomial(const Rat& c, std::size_t degree);
  /// t - root
  static UPoly linear_factor(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i (zero beyond the degree).
  Rat coeff(std::size_t i) const;
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rat(1); }

  Rat operator()(const Rat& t) const;
  QMat operator()(const QMat& m) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// p(c t)
  UPoly scaled_argument(const Rat& c) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& c, const UPoly& p);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Euclidean division; throws Singular on a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace jordan
