#include "jordan/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "jordan/error.hpp"

namespace jordan {

Word make_word(std::string_view letters) {
  Word w;
  w.reserve(letters.size());
  for (const char c : letters) {
    if (c == 'x') {
      w.push_back(Letter::X);
    } else if (c == 'y') {
      w.push_back(Letter::Y);
    } else {
      throw Error(ErrorCode::ParseError, "word letters must be x or y");
    }
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (const auto l : w) s += l == Letter::X ? 'x' : 'y';
  return s;
}

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] == Letter::Y;  // y < x
  }
  return false;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::constant(const Rat& c) { return word(Word{}, c); }

NCPoly NCPoly::word(const Word& w, const Rat& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

Rat NCPoly::coeff(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly operator*(const Rat& c, const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, v] : p.terms_) r.add_term(w, c * v);
  return r;
}

namespace {

std::string monomial_text(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += w[i] == Letter::X ? "x" : "y";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Shared by both polynomial printers: terms arrive in output order.
template <typename Range, typename MonoText>
std::string join_terms(const Range& terms, MonoText mono_text) {
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool neg = c.sign() < 0;
    const Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = mono_text(m);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rat(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string NCPoly::str() const {
  std::vector<std::pair<Word, Rat>> ordered(terms_.begin(), terms_.end());
  return join_terms(ordered, monomial_text);
}

// ---------------------------------------------------------------------------
// NormalPoly

NormalPoly NormalPoly::constant(const Rat& c) { return monomial(0, 0, c); }

NormalPoly NormalPoly::monomial(std::uint32_t k, std::uint32_t l, const Rat& c) {
  NormalPoly p;
  p.add_term({k, l}, c);
  return p;
}

NormalPoly NormalPoly::in_y(const std::vector<Rat>& coefficients) {
  NormalPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    p.add_term({static_cast<std::uint32_t>(i), 0}, coefficients[i]);
  }
  return p;
}

Rat NormalPoly::coeff(std::uint32_t k, std::uint32_t l) const {
  const auto it = terms_.find({k, l});
  return it == terms_.end() ? Rat(0) : it->second;
}

void NormalPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t NormalPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.k + terms_.rbegin()->first.l;
}

NCPoly NormalPoly::to_ncpoly() const {
  NCPoly p;
  for (const auto& [m, c] : terms_) {
    Word w(m.k, Letter::Y);
    w.insert(w.end(), m.l, Letter::X);
    p.add_term(w, c);
  }
  return p;
}

NormalPoly NormalPoly::operator-() const {
  NormalPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NormalPoly& NormalPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string NormalPoly::str() const {
  return join_terms(terms_, [](const Monomial& m) {
    Word w(m.k, Letter::Y);
    w.insert(w.end(), m.l, Letter::X);
    return monomial_text(w);
  });
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NCPoly parse() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    NCPoly result = term();
    if (negate) result = -result;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      NCPoly t = term();
      if (c == '+') {
        result += t;
      } else {
        result -= t;
      }
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<std::string> digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rat coefficient(const std::string& num) {
    skip_ws();
    if (peek() != '/') return Rat(mpq_class(mpz_class(num, 10)));
    ++pos_;
    const auto den = digits();
    if (!den) fail("expected denominator");
    const mpz_class d(*den, 10);
    if (d == 0) fail("zero denominator");
    return Rat(mpz_class(num, 10), d);
  }

  Word factor() {
    skip_ws();
    const char c = peek();
    if (c != 'x' && c != 'y') fail("expected 'x' or 'y'");
    ++pos_;
    std::size_t exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const auto e = digits();
      if (!e) fail("expected exponent");
      if (e->size() > 6) fail("exponent too large");
      exponent = std::stoul(*e);
    }
    return Word(exponent, c == 'x' ? Letter::X : Letter::Y);
  }

  NCPoly term() {
    skip_ws();
    Rat coef(1);
    Word w;
    bool need_factor = true;
    if (const auto num = digits()) {
      coef = coefficient(*num);
      skip_ws();
      if (peek() != '*') return NCPoly::constant(coef);
      ++pos_;
    }
    while (need_factor) {
      const Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return NCPoly::word(w, coef);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Rewriting

namespace {

std::optional<std::size_t> find_site(const Word& w, RewriteStrategy strategy, std::mt19937_64& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == Letter::X && w[i + 1] == Letter::Y) {
      if (strategy == RewriteStrategy::Leftmost) return i;
      sites.push_back(i);
    }
  }
  if (sites.empty()) return std::nullopt;
  if (strategy == RewriteStrategy::Rightmost) return sites.back();
  std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
  return sites[pick(rng)];
}

Monomial as_normal_monomial(const Word& w) {
  Monomial m;
  for (const auto l : w) {
    if (l == Letter::Y) {
      ++m.k;
    } else {
      ++m.l;
    }
  }
  return m;
}

}  // namespace

NormalPoly normal_form(const NCPoly& p, RewriteStrategy strategy, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NCPoly pending = p;
  NormalPoly out;
  while (!pending.is_zero()) {
    // Leftmost/Rightmost take the deglex-largest word so that like terms merge before
    // being rewritten again; Random also picks the word at random.
    auto it = std::prev(pending.terms().end());
    if (strategy == RewriteStrategy::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.terms().size() - 1);
      it = std::next(pending.terms().begin(), static_cast<std::ptrdiff_t>(pick(rng)));
    }
    const Word w = it->first;
    const Rat c = it->second;
    pending.add_term(w, -c);
    const auto site = find_site(w, strategy, rng);
    if (!site) {
      out.add_term(as_normal_monomial(w), c);
      continue;
    }
    Word yx = w;
    yx[*site] = Letter::Y;
    yx[*site + 1] = Letter::X;
    Word yy = w;
    yy[*site] = Letter::Y;
    pending.add_term(yx, c);
    pending.add_term(yy, c);
  }
  return out;
}

std::vector<Rat> alpha_coeffs(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvariantViolation, "alpha_coeffs needs n >= 1");
  // a_{k,n} = n!/(n-k+1)! = n (n-1) ... (n-k+2), a falling factorial with k-1 factors
  std::vector<Rat> out;
  Rat value(1);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (k > 1) value *= Rat(static_cast<long>(n - k + 2));
    out.push_back(value);
  }
  return out;
}

NormalPoly commute_x_power_past_y_power(std::uint32_t b, std::uint32_t c) {
  NormalPoly out;
  Rat binom(1);   // C(b, j)
  Rat rising(1);  // c (c+1) ... (c+j-1)
  for (std::uint32_t j = 0; j <= b; ++j) {
    if (j > 0) {
      binom = binom * Rat(static_cast<long>(b - j + 1)) / Rat(static_cast<long>(j));
      rising *= Rat(static_cast<long>(c + j - 1));
    }
    out.add_term({c + j, b - j}, binom * rising);
    if (c == 0) break;  // x^b y^0 = x^b
  }
  return out;
}

NormalPoly multiply_normal(const NormalPoly& a, const NormalPoly& b) {
  NormalPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // y^{ka} (x^{la} y^{kb}) x^{lb}
      const Rat c = ca * cb;
      const NormalPoly moved = commute_x_power_past_y_power(ma.l, mb.k);
      for (const auto& [m, v] : moved.terms()) {
        out.add_term({ma.k + m.k, m.l + mb.l}, c * v);
      }
    }
  }
  return out;
}

NormalPoly power_normal(const NormalPoly& a, std::uint32_t exponent) {
  NormalPoly result = NormalPoly::constant(1);
  NormalPoly base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply_normal(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = multiply_normal(base, base);
  }
  return result;
}

}  // namespace jordan
