#pragma once

// Free algebra k<x,y>, reduction modulo xy - yx - y^2, and normal-form arithmetic.
//
// The ordering is deglex with x > y; the single relation xy -> yx + y^2 is its own
// Groebner basis, so normal monomials are exactly the words y^k x^l.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan/rat.hpp"

namespace jordan {

enum class Letter : std::uint8_t { X, Y };

using Word = std::vector<Letter>;

/// Parses a word over {x, y}, e.g. "xyx"; empty string is the unit.
Word make_word(std::string_view letters);
std::string word_str(const Word& w);
/// Degree-lexicographic comparison with x > y.
bool deglex_less(const Word& a, const Word& b);

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

// Element of the free algebra; zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Rat, DeglexLess>;

  NCPoly() = default;
  static NCPoly constant(const Rat& c);
  static NCPoly word(const Word& w, const Rat& c = Rat(1));
  static NCPoly letter(Letter l) { return word(Word{l}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Word& w) const;
  void add_term(const Word& w, const Rat& c);
  std::size_t degree() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rat& c, const NCPoly& p);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// Exponent pair of the normal monomial y^k x^l.
struct Monomial {
  std::uint32_t k = 0;  // power of y
  std::uint32_t l = 0;  // power of x
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Serialization order: by total degree, then by the y-exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.k + a.l;
    const auto db = b.k + b.l;
    return da != db ? da < db : a.k < b.k;
  }
};

// Element of R written in the basis y^k x^l.
class NormalPoly {
 public:
  using Terms = std::map<Monomial, Rat, MonomialOrder>;

  NormalPoly() = default;
  static NormalPoly constant(const Rat& c);
  static NormalPoly monomial(std::uint32_t k, std::uint32_t l, const Rat& c = Rat(1));
  /// Univariate polynomial in y, coefficients low degree first.
  static NormalPoly in_y(const std::vector<Rat>& coefficients);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(std::uint32_t k, std::uint32_t l) const;
  void add_term(const Monomial& m, const Rat& c);
  /// Total degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const;

  /// The same element viewed in the free algebra (words y^k x^l).
  NCPoly to_ncpoly() const;

  NormalPoly operator-() const;
  NormalPoly& operator+=(const NormalPoly& o);
  NormalPoly& operator-=(const NormalPoly& o);
  NormalPoly& operator*=(const Rat& c);
  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(const Rat& c, NormalPoly p) { return p *= c; }
  friend bool operator==(const NormalPoly&, const NormalPoly&) = default;

  /// Canonical text, e.g. "y*x^2 + 2*y^2*x + 2*y^3"; "0" for zero.
  std::string str() const;

 private:
  Terms terms_;
};

/// Parses the polynomial grammar
///   expr := term (('+'|'-') term)* ; term := [coef '*'] factor ('*' factor)* | coef
///   factor := ('x'|'y') ['^' uint] ; coef := int ['/' uint]
/// with insignificant whitespace and an optional leading '-'. Throws ParseError with the
/// byte offset of the failure.
NCPoly parse_ncpoly(std::string_view text);

enum class RewriteStrategy { Leftmost, Rightmost, Random };

/// Rewrites every occurrence of xy to yx + y^2 until no word contains xy. The result does
/// not depend on the strategy; Random exists to test exactly that.
NormalPoly normal_form(const NCPoly& p, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                       std::uint64_t seed = 0);

/// (a_{1,n}, ..., a_{n+1,n}) with a_{k,n} = n!/(n-k+1)!, the coefficients of y^k x^{n-k+1}
/// in the normal form of x^n y.
std::vector<Rat> alpha_coeffs(std::size_t n);

/// Normal form of x^b y^c by the closed formula
///   x^b y^c = sum_j C(b,j) c(c+1)...(c+j-1) y^{c+j} x^{b-j}.
NormalPoly commute_x_power_past_y_power(std::uint32_t b, std::uint32_t c);

/// Product in R computed from the closed commutation formula, never by generic rewriting.
NormalPoly multiply_normal(const NormalPoly& a, const NormalPoly& b);

NormalPoly power_normal(const NormalPoly& a, std::uint32_t exponent);

}  // namespace jordan
