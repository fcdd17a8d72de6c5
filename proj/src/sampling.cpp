#include "jordan/sampling.hpp"

#include <algorithm>

namespace jordan {

Rat random_small_int(Rng& rng, long lo, long hi) { return Rat(std::uniform_int_distribution<long>(lo, hi)(rng)); }

Rat random_nonzero_int(Rng& rng, long bound) {
  long v = std::uniform_int_distribution<long>(1, bound)(rng);
  return Rat(rng() % 2 == 0 ? v : -v);
}

Partition random_partition(Rng& rng, std::size_t n) {
  // cut points of a random composition
  std::vector<std::size_t> parts;
  std::size_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (rng() % 2 == 0) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Partition::from_unsorted(std::move(parts));
}

FullBlockParams random_full_block_params(Rng& rng, std::size_t n, long bound) {
  FullBlockParams params = FullBlockParams::zero(n);
  params.lambda = random_small_int(rng, -bound, bound);
  for (auto& c : params.c) c = random_small_int(rng, -bound, bound);
  return params;
}

PartitionParams random_partition_params(Rng& rng, const Partition& p, bool rational_spectrum, long bound) {
  PartitionParams params = PartitionParams::zero(p);
  for (auto& l : params.lambda) l = random_small_int(rng, -bound, bound);
  for (auto& d : params.diag) {
    for (auto& c : d) c = random_small_int(rng, -bound, bound);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      std::vector<Rat> values(std::min(p[i], p[j]));
      for (auto& v : values) v = random_small_int(rng, -bound, bound);
      if (rational_spectrum && p[i] == p[j] && i > j) values[0] = Rat(0);
      params.coupling[{i, j}] = std::move(values);
    }
  }
  return params;
}

QMat random_unimodular(Rng& rng, std::size_t n, long bound) {
  QMat lower = QMat::identity(n);
  QMat upper = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_small_int(rng, -bound, bound);
      upper(j, i) = random_small_int(rng, -bound, bound);
    }
  }
  return lower * upper;
}

QMat random_invertible(Rng& rng, std::size_t n, long bound) {
  while (true) {
    QMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_small_int(rng, -bound, bound);
    }
    if (rank(g) == n) return g;
  }
}

Rep random_rep_with_partition(Rng& rng, const Partition& p, const SampleOptions& options) {
  const Rep base = build_from_partition(p, random_partition_params(rng, p, options.rational_spectrum));
  if (!options.conjugate) return base;
  const bool dense = std::uniform_int_distribution<int>(0, 99)(rng) < options.dense_percent;
  const QMat g = dense ? random_invertible(rng, p.total()) : random_unimodular(rng, p.total());
  return conjugate_rep(base, g);
}

Rep random_rep(Rng& rng, std::size_t n, const SampleOptions& options) {
  return random_rep_with_partition(rng, random_partition(rng, n), options);
}

NormalPoly random_normal_poly(Rng& rng, std::uint32_t max_degree, std::size_t max_terms) {
  NormalPoly p;
  while (p.is_zero()) {
    const auto terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      const auto d = std::uniform_int_distribution<std::uint32_t>(0, max_degree)(rng);
      const auto k = std::uniform_int_distribution<std::uint32_t>(0, d)(rng);
      p.add_term({k, d - k}, random_small_int(rng, -5, 5));
    }
  }
  return p;
}

}  // namespace jordan
