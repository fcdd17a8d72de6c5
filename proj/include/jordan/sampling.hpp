#pragma once

// Seeded random generators for representations, used by the property suites and the CLI.

#include <cstddef>
#include <cstdint>
#include <random>

#include "jordan/rep.hpp"

namespace jordan {

using Rng = std::mt19937_64;

Rat random_small_int(Rng& rng, long lo, long hi);
/// Nonzero integer in [-bound, bound].
Rat random_nonzero_int(Rng& rng, long bound);

/// Uniformly chosen composition of n, sorted into a partition.
Partition random_partition(Rng& rng, std::size_t n);

FullBlockParams random_full_block_params(Rng& rng, std::size_t n, long bound = 3);

/// Small-integer parameters for every slot. With rational_spectrum set, the main-diagonal
/// coupling between equal-size blocks is kept only above the block diagonal, so X has the
/// spectrum {lambda_i} with multiplicities n_i.
PartitionParams random_partition_params(Rng& rng, const Partition& p, bool rational_spectrum = true,
                                        long bound = 3);

/// Unit lower times unit upper triangular with small integer entries; determinant 1 and an
/// integral inverse.
QMat random_unimodular(Rng& rng, std::size_t n, long bound = 1);
/// Dense small-integer matrix, redrawn until invertible.
QMat random_invertible(Rng& rng, std::size_t n, long bound = 2);

struct SampleOptions {
  bool rational_spectrum = true;
  bool conjugate = true;
  /// Use a dense conjugator (rational inverse) instead of a unimodular one this often, in percent.
  int dense_percent = 25;
};

/// A random valid representation of dimension n: random partition, random parameters, and
/// optionally a random change of basis.
Rep random_rep(Rng& rng, std::size_t n, const SampleOptions& options = {});
Rep random_rep_with_partition(Rng& rng, const Partition& p, const SampleOptions& options = {});

/// Random polynomial with small-integer coefficients and total degree at most max_degree.
NormalPoly random_normal_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms = 6);

}  // namespace jordan
