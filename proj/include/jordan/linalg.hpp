#pragma once

#include <cstddef>
#include <vector>

#include "jordan/partition.hpp"
#include "jordan/qmat.hpp"
#include "jordan/upoly.hpp"

namespace jordan {

struct RowEchelon {
  QMat reduced;                      // fully reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the rationals; entries are never rounded.
RowEchelon row_echelon(QMat m);

std::size_t rank(const QMat& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<QVec> nullspace_basis(const QMat& m);
/// Throws Singular.
QMat inverse(const QMat& g);
/// g m g^-1
QMat conjugate(const QMat& m, const QMat& g);
/// Some x with a x = b, or Singular if the system is inconsistent.
QVec solve(const QMat& a, const QVec& b);

/// Checks m^n = 0 using at most ceil(log2 n) squarings.
bool is_nilpotent(const QMat& m);
/// Jordan type from rank drops; throws NotNilpotent.
Partition nilpotent_partition(const QMat& m);
/// Smallest k with m^k = 0; throws NotNilpotent.
std::size_t nilpotency_index(const QMat& m);

/// Faddeev-LeVerrier; monic of degree rows(m).
UPoly char_poly(const QMat& m);

struct Eigenvalue {
  Rat value;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

struct Spectrum {
  std::vector<Eigenvalue> roots;  // ascending by value
  bool split = false;             // multiplicities sum to the degree
};

/// All rational roots of p with multiplicities.
Spectrum rational_roots(const UPoly& p);
Spectrum rational_eigenvalues(const QMat& m);

/// Largest set of linearly independent columns among `vectors`, as a column basis of their span.
std::vector<QVec> span_basis(const std::vector<QVec>& vectors);

}  // namespace jordan
