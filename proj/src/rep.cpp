#include "jordan/rep.hpp"

#include <algorithm>
#include <string>

#include "jordan/error.hpp"

namespace jordan {

namespace {

QMat epsilon_x(std::size_t n) {
  QMat x(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) x(j, j + 1) = Rat(-static_cast<long>(j));
  return x;
}

// lambda I + eps_m(x) + sum c_i J^i
QMat full_block_x(std::size_t m, const Rat& lambda, const std::vector<Rat>& c) {
  if (c.size() + 1 != m) {
    throw Error(ErrorCode::ParamCountMismatch, "block of size " + std::to_string(m) + " needs " +
                                                   std::to_string(m - 1) + " Toeplitz coefficients, got " +
                                                   std::to_string(c.size()));
  }
  QMat x = epsilon_x(m);
  for (std::size_t j = 0; j < m; ++j) x(j, j) = lambda;
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j + i < m; ++j) x(j, j + i) += c[i - 1];
  }
  return x;
}

}  // namespace

Rep validate_rep(QMat x, QMat y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "X and Y must be square of equal size");
  }
  const QMat lhs = commutator(x, y);
  const QMat rhs = y * y;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) != rhs(i, j)) {
        throw Error(ErrorCode::RelationFails, "XY - YX differs from Y^2 at entry (" + std::to_string(i) + "," +
                                                  std::to_string(j) + "): " + lhs(i, j).str() + " vs " +
                                                  rhs(i, j).str());
      }
    }
  }
  if (!is_nilpotent(y)) throw Error(ErrorCode::YNotNilpotent, "Y is not nilpotent");
  Partition p = nilpotent_partition(y);
  return Rep(std::move(x), std::move(y), std::move(p));
}

Rep build_epsilon(std::size_t n) { return validate_rep(epsilon_x(n), QMat::jordan_block(n)); }

FullBlockParams FullBlockParams::zero(std::size_t n) { return {Rat(0), std::vector<Rat>(n == 0 ? 0 : n - 1)}; }

Rep build_full_block(std::size_t n, const FullBlockParams& params) {
  return validate_rep(full_block_x(n, params.lambda, params.c), QMat::jordan_block(n));
}

PartitionParams PartitionParams::zero(const Partition& p) {
  PartitionParams out;
  out.lambda.assign(p.size(), Rat(0));
  for (const auto m : p.parts()) out.diag.emplace_back(m - 1);
  return out;
}

std::size_t param_count(const Partition& p) {
  std::size_t count = p.total();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j) count += std::min(p[i], p[j]);
    }
  }
  return count;
}

QMat coupling_block(std::size_t ni, std::size_t nj, const std::vector<Rat>& values) {
  if (values.size() != std::min(ni, nj)) {
    throw Error(ErrorCode::ParamCountMismatch, "coupling block " + std::to_string(ni) + "x" + std::to_string(nj) +
                                                   " needs " + std::to_string(std::min(ni, nj)) +
                                                   " coefficients, got " + std::to_string(values.size()));
  }
  QMat a(ni, nj);
  const std::size_t d0 = nj > ni ? nj - ni : 0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    const std::size_t d = d0 + t;
    for (std::size_t r = 0; r + d < nj && r < ni; ++r) a(r, r + d) = values[t];
  }
  return a;
}

Rep build_from_partition(const Partition& p, const PartitionParams& params) {
  const std::size_t blocks = p.size();
  if (params.lambda.size() != blocks || params.diag.size() != blocks) {
    throw Error(ErrorCode::ParamCountMismatch, "expected one eigenvalue and one Toeplitz list per block (" +
                                                   std::to_string(blocks) + " blocks)");
  }
  const auto offsets = p.offsets();
  const std::size_t n = p.total();
  QMat x(n, n);
  QMat y(n, n);
  for (std::size_t i = 0; i < blocks; ++i) {
    x.set_block(offsets[i], offsets[i], full_block_x(p[i], params.lambda[i], params.diag[i]));
    y.set_block(offsets[i], offsets[i], QMat::jordan_block(p[i]));
  }
  for (const auto& [key, values] : params.coupling) {
    const auto [i, j] = key;
    if (i >= blocks || j >= blocks || i == j) {
      throw Error(ErrorCode::ParamCountMismatch,
                  "coupling key (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    x.set_block(offsets[i], offsets[j], coupling_block(p[i], p[j], values));
  }
  return validate_rep(std::move(x), std::move(y));
}

QMat evaluate(const NormalPoly& p, const Rep& r) {
  const std::size_t n = r.n();
  QMat out(n, n);
  if (p.is_zero()) return out;
  std::uint32_t max_k = 0;
  std::uint32_t max_l = 0;
  for (const auto& [m, c] : p.terms()) {
    max_k = std::max(max_k, m.k);
    max_l = std::max(max_l, m.l);
  }
  std::vector<QMat> ypow{QMat::identity(n)};
  std::vector<QMat> xpow{QMat::identity(n)};
  for (std::uint32_t k = 1; k <= max_k; ++k) ypow.push_back(ypow.back() * r.Y());
  for (std::uint32_t l = 1; l <= max_l; ++l) xpow.push_back(xpow.back() * r.X());
  for (const auto& [m, c] : p.terms()) out += c * (ypow[m.k] * xpow[m.l]);
  return out;
}

QMat evaluate_free(const NCPoly& p, const Rep& r) {
  const std::size_t n = r.n();
  QMat out(n, n);
  for (const auto& [w, c] : p.terms()) {
    QMat term = QMat::identity(n);
    for (const auto l : w) term = term * (l == Letter::X ? r.X() : r.Y());
    out += c * term;
  }
  return out;
}

QMat epsilon_monomial(std::size_t n, std::size_t k, std::size_t m) {
  QMat out(n, n);
  const std::size_t d = k + m;
  for (std::size_t j = 0; j + d < n; ++j) {
    Rat v(1);
    for (std::size_t i = 0; i < m; ++i) v *= Rat(static_cast<long>(k + j + i));
    out(j, j + d) = m % 2 == 0 ? v : -v;
  }
  return out;
}

FaithfulnessWitness faithfulness_witness(const NormalPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "faithfulness witness needs f != 0");
  FaithfulnessWitness w;
  w.n0 = std::max<std::size_t>(1, 2 * f.degree());
  w.nonzero = !evaluate(f, build_epsilon(w.n0)).is_zero();
  return w;
}

Rep twist(const Rep& r, const Automorphism& f) {
  return validate_rep(f.c() * r.X() + f.p()(r.Y()), f.c() * r.Y());
}

bool is_standard_shape(const Rep& r) {
  QMat y(r.n(), r.n());
  const auto offsets = r.partition().offsets();
  for (std::size_t i = 0; i < r.partition().size(); ++i) {
    y.set_block(offsets[i], offsets[i], QMat::jordan_block(r.partition()[i]));
  }
  return y == r.Y();
}

std::vector<Eigenvalue> eigenvalues_of_X(const Rep& r) {
  const Partition& p = r.partition();
  if (p.pairwise_distinct() && is_standard_shape(r)) {
    std::map<Rat, std::size_t> mult;
    const auto offsets = p.offsets();
    for (std::size_t i = 0; i < p.size(); ++i) mult[r.X()(offsets[i], offsets[i])] += p[i];
    std::vector<Eigenvalue> out;
    for (const auto& [v, m] : mult) out.push_back({v, m});
    return out;
  }
  Spectrum s = rational_eigenvalues(r.X());
  if (!s.split) throw Error(ErrorCode::EigenvaluesNotRational, "characteristic polynomial of X does not split");
  return s.roots;
}

Rep rep_direct_sum(const Rep& a, const Rep& b) {
  return validate_rep(direct_sum(a.X(), b.X()), direct_sum(a.Y(), b.Y()));
}

Rep conjugate_rep(const Rep& r, const QMat& g) {
  const QMat gi = inverse(g);
  return validate_rep(g * r.X() * gi, g * r.Y() * gi);
}

}  // namespace jordan
