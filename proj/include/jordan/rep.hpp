#pragma once

// Finite-dimensional representations of R: pairs (X, Y) with XY - YX = Y^2.
//
// Base convention: eps_n(y) = J_n and eps_n(x) has superdiagonal (0, -1, ..., -(n-2)).
// Every closed form in this header is stated for that orientation.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jordan/automorphism.hpp"
#include "jordan/freealg.hpp"
#include "jordan/linalg.hpp"
#include "jordan/partition.hpp"
#include "jordan/qmat.hpp"

namespace jordan {

// A validated representation. Only validate_rep and the builders create one.
class Rep {
 public:
  std::size_t n() const { return x_.rows(); }
  const QMat& X() const { return x_; }
  const QMat& Y() const { return y_; }
  /// Jordan type of Y.
  const Partition& partition() const { return partition_; }

  friend bool operator==(const Rep& a, const Rep& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  friend Rep validate_rep(QMat x, QMat y);
  Rep(QMat x, QMat y, Partition p) : x_(std::move(x)), y_(std::move(y)), partition_(std::move(p)) {}

  QMat x_;
  QMat y_;
  Partition partition_;
};

/// Accepts (X, Y) iff XY - YX = Y^2 exactly and Y is nilpotent.
/// Throws DimensionMismatch, RelationFails (naming the first bad entry) or YNotNilpotent.
Rep validate_rep(QMat x, QMat y);

Rep build_epsilon(std::size_t n);

struct FullBlockParams {
  Rat lambda;
  /// c_1, ..., c_{n-1}: coefficients of Y, ..., Y^{n-1}.
  std::vector<Rat> c;

  static FullBlockParams zero(std::size_t n);
};

/// X = lambda I + eps_n(x) + sum c_i J^i, Y = J_n. Throws ParamCountMismatch unless c has n-1 entries.
Rep build_full_block(std::size_t n, const FullBlockParams& params);

// Parameters for build_from_partition. Blocks are indexed in partition order.
//
// Block i of size m gets lambda[i] and m - 1 Toeplitz coefficients diag[i] (as in
// FullBlockParams::c). The coupling block (i, j), i != j, is the n_i x n_j intertwiner
// A J_{n_j} = J_{n_i} A. It is an upper Toeplitz matrix supported on the diagonals
// col - row = d0, ..., n_j - 1 with d0 = max(0, n_j - n_i); coupling[{i, j}][t] is the
// value on diagonal d0 + t. Missing couplings are zero.
struct PartitionParams {
  std::vector<Rat> lambda;
  std::vector<std::vector<Rat>> diag;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rat>> coupling;

  static PartitionParams zero(const Partition& p);
};

/// sum_i n_i + sum_{i != j} min(n_i, n_j).
std::size_t param_count(const Partition& p);

/// The n_i x n_j coupling block with the given diagonal values.
QMat coupling_block(std::size_t ni, std::size_t nj, const std::vector<Rat>& values);

/// Throws ParamCountMismatch when any parameter list has the wrong length or a coupling
/// key is out of range.
Rep build_from_partition(const Partition& p, const PartitionParams& params);

/// sum coeff(k, l) Y^k X^l.
QMat evaluate(const NormalPoly& p, const Rep& r);
/// Letterwise product of a free-algebra element; agrees with evaluate(normal_form(p), r).
QMat evaluate_free(const NCPoly& p, const Rep& r);

/// eps_n(y^k x^m): supported on diagonal k + m, row j holding (-1)^m (k+j)(k+j+1)...(k+j+m-1).
QMat epsilon_monomial(std::size_t n, std::size_t k, std::size_t m);

struct FaithfulnessWitness {
  std::size_t n0 = 0;
  bool nonzero = false;
};

/// n0 = 2 deg f (at least 1 for constants); nonzero = eps_{n0}(f) != 0. Throws ZeroPolynomial.
FaithfulnessWitness faithfulness_witness(const NormalPoly& f);

/// X' = c X + p(Y), Y' = c Y for f = (p, c). twist(twist(r, f), g) = twist(r, f o g).
Rep twist(const Rep& r, const Automorphism& f);

/// Eigenvalues of X with multiplicities, ascending. Reads block diagonals when Y is
/// literally a direct sum of Jordan blocks of pairwise distinct sizes; otherwise uses the
/// characteristic polynomial. Throws EigenvaluesNotRational.
std::vector<Eigenvalue> eigenvalues_of_X(const Rep& r);

/// True when Y equals the direct sum of J_{n_i} in partition order.
bool is_standard_shape(const Rep& r);

/// Block-diagonal direct sum of two representations.
Rep rep_direct_sum(const Rep& a, const Rep& b);
/// (g X g^-1, g Y g^-1).
Rep conjugate_rep(const Rep& r, const QMat& g);

}  // namespace jordan
