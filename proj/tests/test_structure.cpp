#include "doctest.h"
#include "jordan/error.hpp"
#include "jordan/sampling.hpp"
#include "jordan/structure.hpp"

using namespace jordan;

namespace {

Rep diag_rep(const std::vector<Rat>& d) { return validate_rep(QMat::diagonal(d), QMat(d.size(), d.size())); }

// Derivative of C -> C^-1 X C at C along Delta, written out directly.
std::size_t differential_rank_oracle(const QMat& x, const QMat& c) {
  const std::size_t n = x.rows();
  const QMat ci = inverse(c);
  const QMat j = QMat::jordan_block(n);
  std::vector<QVec> cols;
  QMat delta = j;
  for (std::size_t k = 1; k < n; ++k) {
    const QMat d = -(ci * delta * ci * x * c) + ci * x * delta;
    cols.emplace_back(d.flatten().begin(), d.flatten().end());
    delta = delta * j;
  }
  return span_basis(cols).size();
}

}  // namespace

TEST_CASE("generalized eigenspaces") {
  const auto s = generalized_eigenspaces(QMat::diagonal(std::vector<Rat>{1, 1, 2}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].basis.size() == 2);
  CHECK(s[1].basis.size() == 1);
  const auto j = generalized_eigenspaces(QMat::jordan_block(3));
  REQUIRE(j.size() == 1);
  CHECK(j[0].eigenvalue == Rat(0));
  CHECK(j[0].basis.size() == 3);

  const Rep sum = rep_direct_sum(canonical_representative(3, Rat(0), Rat(2)), canonical_representative(2, Rat(1), Rat(0)));
  const auto b = generalized_eigenspaces(sum.X());
  REQUIRE(b.size() == 2);
  CHECK(b[0].basis.size() == 3);
  CHECK(b[1].basis.size() == 2);
  for (const auto& v : b[0].basis) CHECK((v[3].is_zero() && v[4].is_zero()));

  const QMat companion{{0, 2}, {1, 0}};
  CHECK_THROWS_AS(generalized_eigenspaces(companion), Error);
}

TEST_CASE("decompose") {
  const Decomposition d = decompose(diag_rep({1, 2, 3}));
  CHECK(d.summands.size() == 3);

  const Rep sum = rep_direct_sum(build_full_block(3, {Rat(0), {Rat(1), Rat(2)}}), build_full_block(2, {Rat(1), {Rat(5)}}));
  Rng rng(1);
  const Rep c = conjugate_rep(sum, random_invertible(rng, 5));
  const Decomposition dc = decompose(c);
  REQUIRE(dc.summands.size() == 2);
  CHECK(dc.summands[0].rep.n() == 3);
  CHECK(dc.summands[1].rep.n() == 2);
  CHECK(decompose(build_epsilon(5)).summands.size() == 1);

  for (int trial = 0; trial < 40; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 7);
    const Decomposition dr = decompose(r);
    std::size_t total = 0;
    for (const auto& s : dr.summands) total += s.rep.n();
    CHECK(total == r.n());
    CHECK(dr.summands.size() == semisimple_rank(r));
    const QMat pi = inverse(dr.change_of_basis);
    QMat bx(0, 0);
    QMat by(0, 0);
    for (const auto& s : dr.summands) {
      bx = direct_sum(bx, s.rep.X());
      by = direct_sum(by, s.rep.Y());
    }
    CHECK(pi * r.X() * dr.change_of_basis == bx);
    CHECK(pi * r.Y() * dr.change_of_basis == by);
    for (const auto& s : dr.summands) {
      const auto only = generalized_eigenspaces(s.rep.X());
      CHECK(only.size() == 1);
    }
  }
}

TEST_CASE("endomorphisms and indecomposability") {
  const Rep one = validate_rep(QMat{{Rat(7, 2)}}, QMat(1, 1));
  CHECK(is_indecomposable(one));
  CHECK(endomorphism_algebra(one).dim() == 1);
  CHECK(is_irreducible(one));

  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(is_indecomposable(build_epsilon(n)));
    CHECK(is_irreducible(build_epsilon(n)) == (n == 1));
  }
  CHECK_FALSE(is_indecomposable(rep_direct_sum(build_epsilon(2), build_epsilon(2))));
  CHECK_FALSE(is_indecomposable(rep_direct_sum(build_epsilon(3), build_epsilon(1))));
  CHECK_FALSE(is_indecomposable(diag_rep({1, 2})));

  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6);
    const MatSpan end = endomorphism_algebra(r);
    for (const auto& g : end.basis()) {
      CHECK(commutator(g, r.X()).is_zero());
      CHECK(commutator(g, r.Y()).is_zero());
    }
    CHECK(end.contains(QMat::identity(r.n())));
    // more than one eigenvalue forces a splitting
    if (semisimple_rank(r) >= 2) {
      CHECK_FALSE(is_indecomposable(r));
      CHECK(decompose(r).summands.size() >= 2);
    }
    if (is_indecomposable(r)) CHECK(semisimple_rank(r) == 1);
  }
  // full-block reps are indecomposable
  for (std::size_t n = 1; n <= 6; ++n) {
    const Rep r = conjugate_rep(build_full_block(n, random_full_block_params(rng, n)), random_unimodular(rng, n));
    CHECK(is_indecomposable(r));
  }
  const QMat companion{{0, 2}, {1, 0}};
  CHECK_THROWS_AS(is_indecomposable(validate_rep(companion, QMat(2, 2))), Error);
}

TEST_CASE("common eigenvectors and triangular forms") {
  const QVec v = common_eigenvector(build_epsilon(4));
  CHECK(v == QVec{1, 0, 0, 0});
  CHECK(common_eigenvector(validate_rep(QMat{{5}}, QMat(1, 1))) == QVec{1});

  CHECK(simultaneous_triangularize(build_epsilon(4)).is_upper_triangular());
  const Rep d = diag_rep({3, 1, 2});
  const QMat gd = simultaneous_triangularize(d);
  CHECK((gd * d.X() * inverse(gd)).is_upper_triangular());

  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 7, {.dense_percent = 50});
    const QVec w = common_eigenvector(r);
    CHECK_FALSE(is_zero_vector(w));
    CHECK(is_zero_vector(r.Y() * w));
    const QVec xw = r.X() * w;
    std::size_t k = 0;
    while (w[k].is_zero()) ++k;
    const Rat lambda = xw[k] / w[k];
    CHECK(xw == (QMat::identity(r.n()) * lambda) * w);

    const QMat g = simultaneous_triangularize(r);
    const QMat gi = inverse(g);
    CHECK((g * r.X() * gi).is_upper_triangular());
    CHECK((g * r.Y() * gi).is_upper_triangular());
  }
}

TEST_CASE("canonical full-block pairs") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const CanonicalPair c = canonical_full_block(build_epsilon(n));
    CHECK(c.lambda == Rat(0));
    CHECK(c.mu == Rat(0));
  }
  Rng rng(7);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const FullBlockParams params = random_full_block_params(rng, n);
      const Rep base = build_full_block(n, params);
      const Rep r = conjugate_rep(base, trial % 2 == 0 ? random_invertible(rng, n) : random_unimodular(rng, n));
      const CanonicalPair c = canonical_full_block(r);
      CHECK(c.lambda == params.lambda);
      CHECK(c.mu == params.c[0]);
      const Rep canon = canonical_representative(n, c.lambda, c.mu);
      CHECK(conjugate_rep(r, c.conjugator) == canon);
      const CanonicalPair again = canonical_full_block(canon);
      CHECK(again.lambda == c.lambda);
      CHECK(again.mu == c.mu);
      CHECK(conjugate_rep(canon, again.conjugator) == canon);
    }
  }
  CHECK_THROWS_AS(canonical_full_block(rep_direct_sum(build_epsilon(2), build_epsilon(1))), Error);
}

TEST_CASE("jacobian rank") {
  Rng rng(11);
  CHECK(jacobian_rank(3, FullBlockParams::zero(3), std::uint64_t{1}) == 1);
  CHECK(jacobian_rank(6, FullBlockParams::zero(6), std::uint64_t{1}) == 4);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const FullBlockParams params = random_full_block_params(rng, n);
      CHECK(jacobian_rank(n, params, rng()) == n - 2);
      QMat c = Rat(1 + trial) * QMat::identity(n) + Rat(trial - 2) * QMat::jordan_block(n);
      CHECK(jacobian_rank(n, params, c) == n - 2);
      CHECK(differential_rank_oracle(build_full_block(n, params).X(), c) == n - 2);
    }
  }
}

TEST_CASE("isomorphism") {
  const Rep p00 = canonical_representative(4, Rat(0), Rat(0));
  Rng rng(13);
  const QMat g = random_invertible(rng, 4);
  const IsoResult same = are_isomorphic(p00, conjugate_rep(p00, g), 1);
  CHECK(same.isomorphic);
  REQUIRE(same.witness.has_value());
  CHECK(conjugate_rep(p00, *same.witness) == conjugate_rep(p00, g));

  CHECK_FALSE(are_isomorphic(p00, canonical_representative(4, Rat(1), Rat(0))).isomorphic);
  CHECK_FALSE(are_isomorphic(p00, canonical_representative(4, Rat(0), Rat(1))).isomorphic);
  CHECK_FALSE(are_isomorphic(p00, build_epsilon(3)).isomorphic);
  CHECK_FALSE(are_isomorphic(rep_direct_sum(build_epsilon(2), build_epsilon(2)), build_epsilon(4)).isomorphic);

  // canonical pairs separate orbits
  const std::vector<Rat> values{Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(2)};
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& l1 : values) {
      for (const auto& m1 : values) {
        const Rep a = canonical_representative(n, l1, m1);
        for (const auto& l2 : values) {
          for (const auto& m2 : values) {
            if (l1 == l2 && m1 == m2) continue;
            CHECK_FALSE(are_isomorphic(a, canonical_representative(n, l2, m2)).isomorphic);
          }
        }
      }
    }
  }
  // random conjugates are recognized
  for (int trial = 0; trial < 20; ++trial) {
    const Rep r = random_rep(rng, 2 + trial % 5);
    const IsoResult res = are_isomorphic(r, conjugate_rep(r, random_invertible(rng, r.n())), rng());
    CHECK(res.isomorphic);
  }
}

TEST_CASE("extensions of distinct simples split") {
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      if (a == b) continue;
      for (long s = -2; s <= 2; ++s) {
        const Rep r = validate_rep(QMat{{a, s}, {0, b}}, QMat(2, 2));
        CHECK(decompose(r).summands.size() == 2);
        CHECK(are_isomorphic(r, diag_rep({a, b})).isomorphic);
      }
      // the relation forbids a nonzero Y here
      CHECK_THROWS_AS(validate_rep(QMat{{a, 0}, {0, b}}, QMat{{0, 1}, {0, 0}}), Error);
    }
  }
}

TEST_CASE("auto-equivalence") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const AutoEquivalence e = auto_equivalent_full_block(build_epsilon(n), build_epsilon(n));
    CHECK(e.equivalent);
    CHECK(e.f.is_identity());
    CHECK(e.g == QMat::identity(n));
  }
  Rng rng(17);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const FullBlockParams params = random_full_block_params(rng, n);
      const Rep r = build_full_block(n, params);
      const AutoEquivalence e = auto_equivalent_full_block(r, build_epsilon(n));
      CHECK(e.equivalent);
      CHECK(e.f.p().coeff(0) == -params.lambda);
      CHECK(e.f.p().coeff(1) == -params.c[0]);
      CHECK(conjugate_rep(twist(r, e.f), e.g) == build_epsilon(n));

      std::vector<Rat> coeffs{-params.lambda};
      for (const auto& c : params.c) coeffs.push_back(-c);
      CHECK(twist(r, Automorphism(UPoly(coeffs), Rat(1))) == build_epsilon(n));

      const Rep r2 = conjugate_rep(build_full_block(n, random_full_block_params(rng, n)), random_invertible(rng, n));
      const Rep r1 = conjugate_rep(r, random_unimodular(rng, n));
      const AutoEquivalence e2 = auto_equivalent_full_block(r1, r2);
      CHECK(conjugate_rep(twist(r1, e2.f), e2.g) == r2);
    }
  }
  CHECK_THROWS_AS(auto_equivalent_full_block(diag_rep({1, 2}), diag_rep({1, 2})), Error);
}

TEST_CASE("hook family") {
  const Rep h = hook_family(4, Rat(1));
  CHECK(h.partition() == Partition{3, 1});
  CHECK(h.X()(3, 2) == Rat(1));
  CHECK(h.X()(0, 3) == Rat(1));
  const Rep h2 = hook_family(5, Rat(3));
  CHECK(h2.X()(4, 3) == Rat(3));
  CHECK(h2.X()(0, 4) == Rat(1, 3));
  CHECK(decompose(h2).summands.size() == 1);
  CHECK(is_indecomposable(h2));
  CHECK_THROWS_AS(hook_family(4, Rat(0)), Error);

  // diag(1, ..., 1, beta / alpha) carries hook(alpha) to hook(beta)
  for (std::size_t n = 3; n <= 6; ++n) {
    const Rat alpha(2);
    const Rat beta(-1, 3);
    std::vector<Rat> d(n, Rat(1));
    d.back() = beta / alpha;
    CHECK(conjugate_rep(hook_family(n, alpha), QMat::diagonal(d)) == hook_family(n, beta));
  }
}

TEST_CASE("coupling product separates the hook stratum") {
  // with the couplings (alpha, 1) instead, distinct products give distinct orbits
  auto hook = [](std::size_t n, const Rat& s) {
    const Partition p{n - 1, 1};
    PartitionParams params = PartitionParams::zero(p);
    params.coupling[{1, 0}] = {s};
    params.coupling[{0, 1}] = {Rat(1)};
    return build_from_partition(p, params);
  };
  const std::vector<Rat> values{Rat(1), Rat(2), Rat(-1), Rat(1, 2), Rat(3)};
  for (std::size_t n = 4; n <= 5; ++n) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        CHECK_FALSE(are_isomorphic(hook(n, values[i]), hook(n, values[j])).isomorphic);
      }
    }
  }
}
