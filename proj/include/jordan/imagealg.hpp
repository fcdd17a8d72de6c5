#pragma once

// The image algebra A = rho(R) inside M_n: spans, radical, idempotents, quiver, ideals.

#include <cstddef>
#include <vector>

#include "jordan/qmat.hpp"
#include "jordan/rep.hpp"

namespace jordan {

// Subspace of n x n matrices. The basis is kept in fully reduced row echelon form over
// the flattening, so two spans are equal iff their bases are equal.
class MatSpan {
 public:
  explicit MatSpan(std::size_t n = 0) : n_(n) {}
  static MatSpan from_generators(std::size_t n, const std::vector<QMat>& gens);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  std::vector<QMat> basis() const;

  /// Adds m to the span; returns whether the dimension grew.
  bool insert(const QMat& m);
  bool contains(const QMat& m) const;
  bool contains(const MatSpan& other) const;
  /// Coordinates of m in basis(); throws InvariantViolation if m is not in the span.
  QVec coordinates(const QMat& m) const;

  friend bool operator==(const MatSpan&, const MatSpan&) = default;

 private:
  QVec reduce(QVec v) const;

  std::size_t n_ = 0;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// span{a b : a in A, b in B}.
MatSpan span_product(const MatSpan& a, const MatSpan& b);
/// span{l m r : m in basis(s)} for fixed l, r.
MatSpan sandwich(const QMat& l, const MatSpan& s, const QMat& r);

/// span{Y^k X^l : k < nilpotency index of Y, l < n}, which contains I.
MatSpan image_algebra_basis(const Rep& r);
/// Same span formed from the wider range l < 2n; used to confirm the truncation.
MatSpan image_algebra_basis_wide(const Rep& r);

/// n(n+2)/4 for even n, (n+1)^2/4 for odd n.
std::size_t dimension_bound(std::size_t n);

/// Throws NotAnAlgebra unless a is closed under products.
void require_algebra(const MatSpan& a);

/// Kernel of the trace form restricted to a. Throws NotAnAlgebra, and InvariantViolation if a
/// radical element fails to be nilpotent.
MatSpan radical_basis(const MatSpan& a);
/// J, J^2, ... up to and excluding the zero power.
std::vector<MatSpan> radical_powers(const MatSpan& j);

/// Orthogonal idempotents summing to I, one per distinct eigenvalue of X (ascending), each a
/// polynomial in X. Throws EigenvaluesNotRational.
std::vector<QMat> idempotents(const Rep& r);

struct QuiverDesc {
  std::vector<Rat> vertices;
  /// arrows[i][j] = dim e_i (J / J^2) e_j.
  std::vector<std::vector<std::size_t>> arrows;
};

QuiverDesc quiver(const Rep& r);

/// Number of distinct eigenvalues of X. Throws EigenvaluesNotRational.
std::size_t semisimple_rank(const Rep& r);

/// Smallest two-sided ideal of a containing gens. Throws GensNotInAlgebra.
MatSpan ideal_closure(const MatSpan& a, const std::vector<QMat>& gens);
std::size_t codimension(const MatSpan& a, const MatSpan& ideal);

/// {v in a : j v = v j = 0}. For a local algebra the one-dimensional ideals are exactly the
/// lines inside this space.
MatSpan two_sided_annihilator(const MatSpan& a, const MatSpan& j);

/// The image algebra of eps_n.
MatSpan full_block_image_canonical(std::size_t n);

/// Entry d is the dimension of the projection of the span onto superdiagonal d (d = 0..n-1).
std::vector<std::size_t> diagonal_dimensions(const MatSpan& s);

struct AlgebraDesc {
  std::size_t dim = 0;
  std::vector<std::size_t> radical_dims;
  std::size_t semisimple_rank = 0;
  QuiverDesc quiver;
};

/// Dimension and radical data always; the quiver only when X has rational eigenvalues.
AlgebraDesc describe_image(const Rep& r);

}  // namespace jordan
