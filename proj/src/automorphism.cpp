#include "jordan/automorphism.hpp"

#include "jordan/error.hpp"

namespace jordan {

Automorphism::Automorphism(UPoly p, Rat c) : p_(std::move(p)), c_(std::move(c)) {
  if (c_.is_zero()) throw Error(ErrorCode::ZeroParameter, "automorphism scalar must be nonzero");
}

NormalPoly Automorphism::image_of_x() const {
  NormalPoly img = NormalPoly::in_y(p_.coefficients());
  img.add_term({0, 1}, c_);
  return img;
}

NormalPoly Automorphism::image_of_y() const { return NormalPoly::monomial(1, 0, c_); }

std::string Automorphism::str() const { return "(" + p_.str('y') + ", " + c_.str() + ")"; }

Automorphism aut_compose(const Automorphism& f, const Automorphism& g) {
  return {g.c() * f.p() + g.p().scaled_argument(f.c()), f.c() * g.c()};
}

Automorphism aut_inverse(const Automorphism& f) {
  const Rat inv = Rat(1) / f.c();
  return {(-inv) * f.p().scaled_argument(inv), inv};
}

NormalPoly apply_automorphism(const NCPoly& p, const Automorphism& f) {
  const NormalPoly x_img = f.image_of_x();
  const NormalPoly y_img = f.image_of_y();
  NormalPoly out;
  for (const auto& [w, c] : p.terms()) {
    NormalPoly term = NormalPoly::constant(c);
    for (const auto l : w) term = multiply_normal(term, l == Letter::X ? x_img : y_img);
    out += term;
  }
  return out;
}

NormalPoly apply_automorphism(const NormalPoly& p, const Automorphism& f) {
  const NormalPoly x_img = f.image_of_x();
  NormalPoly out;
  for (const auto& [m, c] : p.terms()) {
    // (c y)^k = c^k y^k
    NormalPoly term = NormalPoly::monomial(m.k, 0, c * pow(f.c(), m.k));
    term = multiply_normal(term, power_normal(x_img, m.l));
    out += term;
  }
  return out;
}

NormalPoly shift_x(const NCPoly& p, const Rat& lambda) { return apply_automorphism(p, Automorphism::shift(lambda)); }

}  // namespace jordan
