#include "jordan/structure.hpp"

#include <algorithm>
#include <random>

#include "jordan/error.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

namespace {

Spectrum split_spectrum(const QMat& x) {
  Spectrum s = rational_eigenvalues(x);
  if (!s.split) throw Error(ErrorCode::EigenvaluesNotRational, "characteristic polynomial of X does not split");
  return s;
}

// Matrix of the restriction of m to the invariant subspace spanned by the columns of b.
QMat restrict_to(const QMat& m, const QMat& b) {
  QMat out(b.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const QVec coords = solve(b, m * b.column(j));
    for (std::size_t i = 0; i < b.cols(); ++i) out(i, j) = coords[i];
  }
  return out;
}

// v followed by the standard vectors that keep the columns independent.
QMat extend_to_basis(const QVec& v) {
  const std::size_t n = v.size();
  std::vector<QVec> cols{v};
  for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
    QVec e(n);
    e[j] = 1;
    cols.push_back(e);
    if (rank(QMat::from_columns(cols, n)) < cols.size()) cols.pop_back();
  }
  return QMat::from_columns(cols, n);
}

bool blocks_vanish_off_diagonal(const QMat& m, const std::vector<std::size_t>& sizes) {
  std::size_t r0 = 0;
  for (const auto rs : sizes) {
    std::size_t c0 = 0;
    for (const auto cs : sizes) {
      if (r0 != c0 && !m.block(r0, c0, rs, cs).is_zero()) return false;
      c0 += cs;
    }
    r0 += rs;
  }
  return true;
}

}  // namespace

std::vector<EigenSpace> generalized_eigenspaces(const QMat& x) {
  const std::size_t n = x.rows();
  std::vector<EigenSpace> out;
  for (const auto& e : split_spectrum(x).roots) {
    const QMat shifted = x - e.value * QMat::identity(n);
    out.push_back({e.value, nullspace_basis(power(shifted, e.multiplicity))});
  }
  return out;
}

Decomposition decompose(const Rep& r) {
  const std::size_t n = r.n();
  const auto spaces = generalized_eigenspaces(r.X());
  std::vector<QVec> cols;
  std::vector<std::size_t> sizes;
  for (const auto& s : spaces) {
    cols.insert(cols.end(), s.basis.begin(), s.basis.end());
    sizes.push_back(s.basis.size());
  }
  const QMat p = QMat::from_columns(cols, n);
  const QMat pi = inverse(p);
  const QMat xb = pi * r.X() * p;
  const QMat yb = pi * r.Y() * p;
  if (!blocks_vanish_off_diagonal(yb, sizes) || !blocks_vanish_off_diagonal(xb, sizes)) {
    throw Error(ErrorCode::InvarianceFailure, "a generalized eigenspace of X is not Y-invariant");
  }
  Decomposition d{{}, p};
  std::size_t off = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const std::size_t m = sizes[i];
    d.summands.push_back({spaces[i].eigenvalue, spaces[i].basis,
                          validate_rep(xb.block(off, off, m, m), yb.block(off, off, m, m))});
    off += m;
  }
  return d;
}

std::vector<QMat> intertwiners(const Rep& r1, const Rep& r2) {
  const std::size_t n1 = r1.n();
  const std::size_t n2 = r2.n();
  // unknown g is n2 x n1, column index a * n1 + b for g(a, b); rows list entries of
  // g X1 - X2 g and then g Y1 - Y2 g
  QMat sys(2 * n2 * n1, n2 * n1);
  for (std::size_t pass = 0; pass < 2; ++pass) {
    const QMat& m1 = pass == 0 ? r1.X() : r1.Y();
    const QMat& m2 = pass == 0 ? r2.X() : r2.Y();
    const std::size_t base = pass * n2 * n1;
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t b = 0; b < n1; ++b) {
        const std::size_t col = a * n1 + b;
        // (E_ab m1)(a, j) = m1(b, j)
        for (std::size_t j = 0; j < n1; ++j) sys(base + a * n1 + j, col) += m1(b, j);
        // (m2 E_ab)(i, b) = m2(i, a)
        for (std::size_t i = 0; i < n2; ++i) sys(base + i * n1 + b, col) -= m2(i, a);
      }
    }
  }
  std::vector<QMat> out;
  for (const auto& v : nullspace_basis(sys)) out.push_back(QMat::unflatten(v, n2, n1));
  return out;
}

MatSpan endomorphism_algebra(const Rep& r) { return MatSpan::from_generators(r.n(), intertwiners(r, r)); }

bool is_indecomposable(const Rep& r) {
  split_spectrum(r.X());
  const MatSpan end = endomorphism_algebra(r);
  return end.dim() - radical_basis(end).dim() == 1;
}

bool is_irreducible(const Rep& r) {
  split_spectrum(r.X());
  return r.n() == 1;
}

QVec common_eigenvector(const Rep& r) {
  const auto kernel = nullspace_basis(r.Y());
  const QMat k = QMat::from_columns(kernel, r.n());
  const QMat xk = restrict_to(r.X(), k);
  const Spectrum s = split_spectrum(xk);
  const Rat lambda = s.roots.front().value;
  const auto u = nullspace_basis(xk - lambda * QMat::identity(xk.rows()));
  return k * u.front();
}

QMat simultaneous_triangularize(const Rep& r) {
  const std::size_t n = r.n();
  if (n <= 1) return QMat::identity(n);
  const QMat p = extend_to_basis(common_eigenvector(r));
  const QMat pi = inverse(p);
  const QMat xp = pi * r.X() * p;
  const QMat yp = pi * r.Y() * p;
  const Rep quotient = validate_rep(xp.block(1, 1, n - 1, n - 1), yp.block(1, 1, n - 1, n - 1));
  const QMat gq = simultaneous_triangularize(quotient);
  QMat lift = QMat::identity(n);
  lift.set_block(1, 1, gq);
  const QMat g = lift * pi;
  const QMat gi = inverse(g);
  if (!(g * r.X() * gi).is_upper_triangular() || !(g * r.Y() * gi).is_upper_triangular()) {
    throw Error(ErrorCode::InvariantViolation, "triangularization failed");
  }
  return g;
}

Rep canonical_representative(std::size_t n, const Rat& lambda, const Rat& mu) {
  FullBlockParams params = FullBlockParams::zero(n);
  params.lambda = lambda;
  if (n >= 2) params.c[0] = mu;
  return build_full_block(n, params);
}

CanonicalPair canonical_full_block(const Rep& r) {
  const std::size_t n = r.n();
  if (n == 0 || rank(r.Y()) + 1 != n) throw Error(ErrorCode::NotFullBlock, "rank Y must be n - 1");
  if (n == 1) return {r.X()(0, 0), Rat(0), QMat::identity(1)};

  // Jordan basis Y^{n-1} v, ..., Y v, v for some v outside ker Y^{n-1}
  const QMat top = power(r.Y(), n - 1);
  std::size_t pick = n;
  for (std::size_t j = n; j-- > 0;) {
    if (!is_zero_vector(top.column(j))) {
      pick = j;
      break;
    }
  }
  std::vector<QVec> chain(n);
  QVec v(n);
  v[pick] = 1;
  for (std::size_t k = n; k-- > 0;) {
    chain[k] = v;
    v = r.Y() * v;
  }
  const QMat p = QMat::from_columns(chain, n);
  QMat g = inverse(p);
  QMat x = g * r.X() * p;

  // X = lambda I + eps + sum c_i J^i; C = I + alpha J^i shifts c_{i+1} by -i alpha
  const QMat j = QMat::jordan_block(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Rat alpha = x(0, i + 1) / Rat(static_cast<long>(i));
    if (alpha.is_zero()) continue;
    const QMat c = QMat::identity(n) + alpha * power(j, i);
    const QMat ci = inverse(c);
    x = c * x * ci;
    g = c * g;
  }
  CanonicalPair out{x(0, 0), x(0, 1), g};
  if (!(x == canonical_representative(n, out.lambda, out.mu).X()) || !(g * r.Y() * inverse(g) == j)) {
    throw Error(ErrorCode::InvariantViolation, "full-block normalization failed");
  }
  return out;
}

std::size_t jacobian_rank(std::size_t n, const FullBlockParams& params, const QMat& c) {
  const QMat x = build_full_block(n, params).X();
  const QMat xt = inverse(c) * x;
  const QMat j = QMat::jordan_block(n);
  std::vector<QVec> cols;
  QMat jk = j;
  for (std::size_t k = 1; k < n; ++k) {
    const QMat img = commutator(xt, jk);
    cols.emplace_back(img.flatten().begin(), img.flatten().end());
    jk = jk * j;
  }
  return span_basis(cols).size();
}

std::size_t jacobian_rank(std::size_t n, const FullBlockParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  long c0 = 0;
  while (c0 == 0) c0 = dist(rng);
  QMat c = Rat(c0) * QMat::identity(n);
  const QMat j = QMat::jordan_block(n);
  QMat jk = j;
  for (std::size_t k = 1; k < n; ++k) {
    c += Rat(dist(rng)) * jk;
    jk = jk * j;
  }
  return jacobian_rank(n, params, c);
}

IsoResult are_isomorphic(const Rep& r1, const Rep& r2, std::uint64_t seed, std::size_t trials) {
  if (r1.n() != r2.n()) return {false, std::nullopt, "dimensions differ"};
  if (!(r1.partition() == r2.partition())) return {false, std::nullopt, "Jordan types of Y differ"};
  if (!(char_poly(r1.X()) == char_poly(r2.X()))) return {false, std::nullopt, "characteristic polynomials of X differ"};
  const auto hom12 = intertwiners(r1, r2);
  if (hom12.empty()) return {false, std::nullopt, "no nonzero homomorphism"};
  const auto end1 = intertwiners(r1, r1).size();
  const auto end2 = intertwiners(r2, r2).size();
  if (end1 != end2) return {false, std::nullopt, "endomorphism algebras differ in dimension"};
  if (hom12.size() != end1 || intertwiners(r2, r1).size() != end1) {
    return {false, std::nullopt, "Hom and End dimensions disagree"};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  const std::size_t n = r1.n();
  for (std::size_t t = 0; t < trials; ++t) {
    QMat g(n, n);
    for (const auto& h : hom12) g += Rat(dist(rng)) * h;
    if (rank(g) == n) {
      const QMat gi = inverse(g);
      if (!(g * r1.X() * gi == r2.X()) || !(g * r1.Y() * gi == r2.Y())) {
        throw Error(ErrorCode::InvariantViolation, "intertwiner does not conjugate");
      }
      return {true, g, "invertible intertwiner found"};
    }
  }
  throw Error(ErrorCode::Inconclusive, "no invertible intertwiner in " + std::to_string(trials) + " trials");
}

AutoEquivalence auto_equivalent_full_block(const Rep& r1, const Rep& r2) {
  if (r1.n() != r2.n()) throw Error(ErrorCode::DimensionMismatch, "representations differ in dimension");
  const CanonicalPair c1 = canonical_full_block(r1);
  const CanonicalPair c2 = canonical_full_block(r2);
  // g1 (X1 + p(Y1)) g1^-1 = (lambda1 + dl) I + eps + (mu1 + dm) J = g2 X2 g2^-1
  const Automorphism f(UPoly({c2.lambda - c1.lambda, c2.mu - c1.mu}), Rat(1));
  AutoEquivalence out{true, f, inverse(c2.conjugator) * c1.conjugator};
  if (!(conjugate_rep(twist(r1, f), out.g) == r2)) {
    throw Error(ErrorCode::InvariantViolation, "auto-equivalence witness does not verify");
  }
  return out;
}

Rep hook_family(std::size_t n, const Rat& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroParameter, "hook parameter must be nonzero");
  if (n < 3) throw Error(ErrorCode::InvariantViolation, "hook family needs n >= 3");
  const Partition p{n - 1, 1};
  PartitionParams params = PartitionParams::zero(p);
  params.coupling[{1, 0}] = {alpha};
  params.coupling[{0, 1}] = {Rat(1) / alpha};
  return build_from_partition(p, params);
}

}  // namespace jordan
