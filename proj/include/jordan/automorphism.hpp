#pragma once

#include <string>

#include "jordan/freealg.hpp"
#include "jordan/upoly.hpp"

namespace jordan {

// The automorphism x -> c x + p(y), y -> c y of R. Any p in k[y] is allowed, including a
// nonzero constant term, so the shifts x -> x + lambda are elements of this group too.
class Automorphism {
 public:
  /// Identity (p = 0, c = 1).
  Automorphism() = default;
  /// Throws ZeroParameter when c = 0.
  Automorphism(UPoly p, Rat c);

  static Automorphism shift(const Rat& lambda) { return {UPoly::constant(lambda), Rat(1)}; }

  const UPoly& p() const { return p_; }
  const Rat& c() const { return c_; }
  bool is_identity() const { return p_.is_zero() && c_ == Rat(1); }

  /// Images of the generators as normal polynomials.
  NormalPoly image_of_x() const;
  NormalPoly image_of_y() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

  std::string str() const;

 private:
  UPoly p_;
  Rat c_{1};
};

/// f o g as maps of R: g is applied first. In pair notation
///   (p1, c1) o (p2, c2) = (c2 p1(y) + p2(c1 y), c1 c2).
Automorphism aut_compose(const Automorphism& f, const Automorphism& g);
/// (p, c)^-1 = (-p(y/c)/c, 1/c).
Automorphism aut_inverse(const Automorphism& f);

/// f(p): substitute x -> c x + p(y), y -> c y and reduce. apply(f o g, p) = apply(f, apply(g, p)).
NormalPoly apply_automorphism(const NCPoly& p, const Automorphism& f);
NormalPoly apply_automorphism(const NormalPoly& p, const Automorphism& f);

/// Substitution x -> x + lambda, y -> y; the same as applying Automorphism::shift(lambda).
NormalPoly shift_x(const NCPoly& p, const Rat& lambda);

}  // namespace jordan
