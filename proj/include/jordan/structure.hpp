#pragma once

// Module structure of representations: decomposition, endomorphisms, isomorphism, and the
// canonical form on the full-block stratum rank Y = n - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordan/imagealg.hpp"
#include "jordan/rep.hpp"

namespace jordan {

struct EigenSpace {
  Rat eigenvalue;
  std::vector<QVec> basis;
};

/// Bases of ker (X - lambda I)^n, ascending in lambda. Throws EigenvaluesNotRational.
std::vector<EigenSpace> generalized_eigenspaces(const QMat& x);

struct Summand {
  Rat eigenvalue;
  std::vector<QVec> basis;
  Rep rep;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Columns are the summand bases in order; P^-1 X P and P^-1 Y P are block diagonal.
  QMat change_of_basis;
};

/// One summand per distinct eigenvalue of X. Throws EigenvaluesNotRational, and
/// InvarianceFailure if an eigenspace is not Y-invariant.
Decomposition decompose(const Rep& r);

/// Basis of {g : g X1 = X2 g, g Y1 = Y2 g}.
std::vector<QMat> intertwiners(const Rep& r1, const Rep& r2);
MatSpan endomorphism_algebra(const Rep& r);
/// End(r) is local. Throws EigenvaluesNotRational.
bool is_indecomposable(const Rep& r);

/// n == 1. Throws EigenvaluesNotRational.
bool is_irreducible(const Rep& r);
/// v != 0 with Y v = 0 and X v = lambda v, taken inside ker Y for the smallest such lambda.
QVec common_eigenvector(const Rep& r);
/// g with g X g^-1 and g Y g^-1 upper triangular.
QMat simultaneous_triangularize(const Rep& r);

struct CanonicalPair {
  Rat lambda;
  Rat mu;
  /// g with g X g^-1 = canonical_full_block_matrix(n, lambda, mu) and g Y g^-1 = J_n.
  QMat conjugator;
};

/// lambda I + eps_n(x) + mu J_n.
Rep canonical_representative(std::size_t n, const Rat& lambda, const Rat& mu);
/// Throws NotFullBlock unless rank Y = n - 1.
CanonicalPair canonical_full_block(const Rep& r);

/// Rank of Delta -> [C^-1 X, Delta] on span{J^k : 1 <= k < n} with X from the full-block
/// parameters and C a nonsingular element of the centralizer of J_n.
std::size_t jacobian_rank(std::size_t n, const FullBlockParams& params, const QMat& c);
/// The same with a seeded random centralizer point.
std::size_t jacobian_rank(std::size_t n, const FullBlockParams& params, std::uint64_t seed);

struct IsoResult {
  bool isomorphic = false;
  std::optional<QMat> witness;  // g with g X1 g^-1 = X2 and g Y1 g^-1 = Y2
  std::string reason;
};

/// Exact certificates first (dimensions, spectra, Hom and End dimensions); otherwise a seeded
/// search for an invertible intertwiner among random combinations. Throws Inconclusive when
/// the trial budget runs out.
IsoResult are_isomorphic(const Rep& r1, const Rep& r2, std::uint64_t seed = 0, std::size_t trials = 200);

struct AutoEquivalence {
  bool equivalent = false;
  Automorphism f;
  /// g twist(r1, f) g^-1 = r2.
  QMat g;
};

/// Always succeeds on the full-block stratum; the witness is verified exactly.
/// Throws NotFullBlock.
AutoEquivalence auto_equivalent_full_block(const Rep& r1, const Rep& r2);

/// Partition (n-1, 1), zero eigenvalues and Toeplitz data, coupling alpha in block (1, 0)
/// and 1/alpha in block (0, 1). Throws ZeroParameter.
Rep hook_family(std::size_t n, const Rat& alpha);

}  // namespace jordan
