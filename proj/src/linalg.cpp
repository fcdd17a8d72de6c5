#include "jordan/linalg.hpp"

#include <algorithm>
#include <map>

#include "jordan/error.hpp"

namespace jordan {

RowEchelon row_echelon(QMat m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    }
    const Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMat& m) { return row_echelon(m).pivots.size(); }

std::vector<QVec> nullspace_basis(const QMat& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto p : ech.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat inverse(const QMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = g.rows();
  QMat aug(n, 2 * n);
  aug.set_block(0, 0, g);
  aug.set_block(0, n, QMat::identity(n));
  const auto ech = row_echelon(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  }
  return ech.reduced.block(0, n, n, n);
}

QMat conjugate(const QMat& m, const QMat& g) { return g * m * inverse(g); }

QVec solve(const QMat& a, const QVec& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  QMat aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  const auto ech = row_echelon(std::move(aug));
  QVec x(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) throw Error(ErrorCode::Singular, "inconsistent linear system");
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

bool is_nilpotent(const QMat& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of non-square matrix");
  QMat p = m;
  for (std::size_t reach = 1; reach < m.rows(); reach *= 2) p = p * p;
  return p.is_zero();
}

std::size_t nilpotency_index(const QMat& m) {
  if (!is_nilpotent(m)) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
  if (m.rows() == 0) return 0;
  std::size_t k = 1;
  QMat p = m;
  while (!p.is_zero()) {
    p = p * m;
    ++k;
  }
  return k;
}

Partition nilpotent_partition(const QMat& m) {
  if (!is_nilpotent(m)) throw Error(ErrorCode::NotNilpotent, "partition requested for non-nilpotent matrix");
  const std::size_t n = m.rows();
  // ranks[s] = rank(m^s)
  std::vector<std::size_t> ranks{n};
  QMat p = QMat::identity(n);
  while (ranks.back() > 0) {
    p = p * m;
    ranks.push_back(rank(p));
  }
  // at_least[s] = #blocks of size >= s = rank(m^{s-1}) - rank(m^s)
  std::vector<std::size_t> parts;
  for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
    const std::size_t at_least = ranks[s - 1] - ranks[s];
    const std::size_t at_least_next = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    parts.insert(parts.end(), at_least - at_least_next, s);
  }
  return Partition(std::move(parts));
}

UPoly char_poly(const QMat& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  QMat mk(n, n);
  const QMat id = QMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id * c[n - k + 1];
    c[n - k] = -trace_of_product(a, mk) / Rat(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

namespace {

using Factorization = std::map<mpz_class, unsigned>;

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long seed = 1;; ++seed) {
    mpz_class y = seed + 1;
    const mpz_class c = seed;
    mpz_class g = 1;
    mpz_class q = 1;
    mpz_class x;
    mpz_class ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(mpz_class(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, Factorization& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 2000; ++p) {
    if (n == 1) return;
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  Factorization f;
  factor_into(abs(n), f);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

Spectrum rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  Spectrum out;
  std::size_t found = 0;

  // zero roots first; they would otherwise break divisor enumeration
  std::size_t zeros = 0;
  while (p.coeff(zeros).is_zero()) ++zeros;
  const UPoly tail(std::vector<Rat>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                    p.coefficients().end()));

  std::vector<Rat> candidates_found;
  if (tail.degree() > 0) {
    const UPoly sqfree = UPoly::divmod(tail, UPoly::gcd(tail, tail.derivative())).first;
    // primitive integer form
    mpz_class lcm = 1;
    for (const auto& c : sqfree.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : sqfree.coefficients()) ints.push_back(mpz_class(c.numerator() * (lcm / c.denominator())));
    mpz_class content = 0;
    for (const auto& v : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : ints) v /= content;

    const auto num_divs = divisors(ints.front());
    const auto den_divs = divisors(ints.back());
    for (const auto& q : den_divs) {
      for (const auto& a : num_divs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (const int s : {1, -1}) {
          const Rat cand(mpz_class(s * a), q);
          if (sqfree(cand).is_zero()) candidates_found.push_back(cand);
        }
      }
    }
  }

  if (zeros > 0) {
    out.roots.push_back({Rat(0), zeros});
    found += zeros;
  }
  for (const auto& r : candidates_found) {
    std::size_t mult = 0;
    UPoly rest = tail;
    const UPoly factor = UPoly::linear_factor(r);
    while (true) {
      auto [q, rem] = UPoly::divmod(rest, factor);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(q);
    }
    out.roots.push_back({r, mult});
    found += mult;
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  out.split = found == static_cast<std::size_t>(p.degree());
  return out;
}

Spectrum rational_eigenvalues(const QMat& m) {
  if (m.rows() == 0) return Spectrum{{}, true};
  return rational_roots(char_poly(m));
}

std::vector<QVec> span_basis(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t len = vectors.front().size();
  const QMat m = QMat::from_columns(vectors, len);
  const auto ech = row_echelon(m);
  std::vector<QVec> out;
  for (const auto p : ech.pivots) out.push_back(vectors[p]);
  return out;
}

}  // namespace jordan
