#include "doctest.h"
#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/sampling.hpp"

using namespace jordan;

namespace {

// Unital algebra generated by X and Y, grown breadth-first by right multiplication.
MatSpan generated_algebra_oracle(const Rep& r) {
  MatSpan s(r.n());
  std::vector<QMat> frontier{QMat::identity(r.n())};
  s.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<QMat> next;
    for (const auto& m : frontier) {
      for (const QMat* g : {&r.X(), &r.Y()}) {
        QMat p = m * *g;
        if (s.insert(p)) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

std::size_t eps_dim_formula(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t d = 0; d < n; ++d) total += std::min(d + 1, n - d);
  return total;
}

}  // namespace

TEST_CASE("mat span basics") {
  MatSpan s(2);
  CHECK(s.insert(QMat{{1, 2}, {0, 0}}));
  CHECK(s.insert(QMat{{0, 0}, {0, 1}}));
  CHECK_FALSE(s.insert(QMat{{2, 4}, {0, 3}}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(QMat{{-1, -2}, {0, 5}}));
  CHECK_FALSE(s.contains(QMat{{1, 0}, {0, 0}}));
  const QVec coords = s.coordinates(QMat{{3, 6}, {0, -1}});
  const auto b = s.basis();
  CHECK(coords[0] * b[0] + coords[1] * b[1] == QMat{{3, 6}, {0, -1}});

  MatSpan t(2);
  t.insert(QMat{{0, 0}, {0, 7}});
  t.insert(QMat{{Rat(1, 2), 1}, {0, 1}});
  CHECK(s == t);
}

TEST_CASE("image algebra dimensions") {
  const std::vector<std::size_t> expected{1, 2, 4, 6, 9, 12, 16, 20, 25, 30};
  for (std::size_t n = 1; n <= 10; ++n) {
    const MatSpan a = image_algebra_basis(build_epsilon(n));
    CHECK(a.dim() == expected[n - 1]);
    CHECK(a.dim() == dimension_bound(n));
    CHECK(a.dim() == eps_dim_formula(n));
    CHECK(a.contains(QMat::identity(n)));
    auto profile = diagonal_dimensions(a);
    for (std::size_t d = 0; d < n; ++d) CHECK(profile[d] == std::min(d + 1, n - d));
  }
  CHECK(dimension_bound(4) == 6);
  CHECK(dimension_bound(5) == 9);
  CHECK(dimension_bound(1) == 1);

  const std::vector<Rat> d{1, 2};
  CHECK(image_algebra_basis(validate_rep(QMat::diagonal(d), QMat(2, 2))).dim() == 2);
}

TEST_CASE("image algebra agrees with the generated algebra") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6);
    const MatSpan a = image_algebra_basis(r);
    CHECK(a == generated_algebra_oracle(r));
    CHECK(a == image_algebra_basis_wide(r));
    CHECK(a.dim() <= dimension_bound(r.n()));
  }
}

TEST_CASE("radical") {
  const MatSpan a3 = image_algebra_basis(build_epsilon(3));
  CHECK(radical_basis(a3).dim() == 3);

  const std::vector<Rat> d{1, 2};
  const MatSpan semi = image_algebra_basis(validate_rep(QMat::diagonal(d), QMat(2, 2)));
  CHECK(radical_basis(semi).dim() == 0);

  MatSpan not_closed(2);
  not_closed.insert(QMat{{0, 1}, {0, 0}});
  not_closed.insert(QMat{{0, 0}, {1, 0}});
  CHECK_THROWS_AS(radical_basis(not_closed), Error);

  Rng rng(5);
  for (std::size_t n = 1; n <= 7; ++n) {
    // nilpotent X: the radical is spanned by the non-constant monomials
    FullBlockParams params = random_full_block_params(rng, n);
    params.lambda = 0;
    const Rep r = build_full_block(n, params);
    const MatSpan a = image_algebra_basis(r);
    const MatSpan j = radical_basis(a);
    MatSpan nonconstant(n);
    for (const auto& b : a.basis()) nonconstant.insert(b - b(0, 0) * QMat::identity(n));
    CHECK(j == nonconstant);
    CHECK(j.contains(r.Y()));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 7);
    const MatSpan a = image_algebra_basis(r);
    const MatSpan j = radical_basis(a);
    CHECK(j.contains(r.Y()));
    for (const auto& b : j.basis()) CHECK(is_nilpotent(b));
    CHECK(a.dim() == semisimple_rank(r) + j.dim());
    const auto powers = radical_powers(j);
    for (std::size_t k = 1; k < powers.size(); ++k) CHECK(powers[k].dim() < powers[k - 1].dim());
  }
}

TEST_CASE("idempotents") {
  const std::vector<Rat> d{1, 1, 2};
  const auto es = idempotents(validate_rep(QMat::diagonal(d), QMat(3, 3)));
  REQUIRE(es.size() == 2);
  const std::vector<Rat> d1{1, 1, 0};
  const std::vector<Rat> d2{0, 0, 1};
  CHECK(es[0] == QMat::diagonal(d1));
  CHECK(es[1] == QMat::diagonal(d2));

  const auto single = idempotents(build_full_block(4, {Rat(3), {Rat(1), Rat(2), Rat(0)}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == QMat::identity(4));

  const QMat companion{{0, 2}, {1, 0}};
  CHECK_THROWS_AS(idempotents(validate_rep(companion, QMat(2, 2))), Error);

  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6);
    const auto e = idempotents(r);
    const MatSpan a = image_algebra_basis(r);
    QMat sum(r.n(), r.n());
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(e[i] * e[i] == e[i]);
      CHECK(a.contains(e[i]));
      CHECK(commutator(e[i], r.X()).is_zero());
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (i != j) CHECK((e[i] * e[j]).is_zero());
      }
      sum += e[i];
    }
    CHECK(sum == QMat::identity(r.n()));
    CHECK(e.size() == semisimple_rank(r));
  }
}

TEST_CASE("quivers") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const QuiverDesc q = quiver(build_epsilon(n));
    CHECK(q.vertices.size() == 1);
    CHECK(q.arrows[0][0] == 2);
  }
  const QuiverDesc q2 = quiver(build_epsilon(2));
  CHECK(q2.arrows[0][0] == 1);
  const QuiverDesc q1 = quiver(build_epsilon(1));
  CHECK(q1.arrows[0][0] == 0);

  const std::vector<Rat> d{1, 2};
  const QuiverDesc qd = quiver(validate_rep(QMat::diagonal(d), QMat(2, 2)));
  CHECK(qd.vertices == std::vector<Rat>{1, 2});
  CHECK(qd.arrows == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 0}});

  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    // single eigenvalue: at most two loops
    Partition p = random_partition(rng, 2 + trial % 5);
    PartitionParams pp = random_partition_params(rng, p);
    for (auto& l : pp.lambda) l = Rat(1);
    const Rep r = build_from_partition(p, pp);
    const QuiverDesc q = quiver(r);
    REQUIRE(q.vertices.size() == 1);
    CHECK(q.arrows[0][0] <= 2);
  }
}

TEST_CASE("semisimple rank") {
  CHECK(semisimple_rank(build_epsilon(5)) == 1);
  const std::vector<Rat> d{1, 2, 3};
  CHECK(semisimple_rank(validate_rep(QMat::diagonal(d), QMat(3, 3))) == 3);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    PartitionParams pp = random_partition_params(rng, Partition{2, 1});
    pp.lambda = {Rat(0), Rat(1 + trial)};
    CHECK(semisimple_rank(build_from_partition(Partition{2, 1}, pp)) == 2);
  }
}

TEST_CASE("ideals") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const MatSpan a = image_algebra_basis(build_epsilon(n));
    const MatSpan whole = ideal_closure(a, {QMat::identity(n)});
    CHECK(whole == a);
    CHECK(codimension(a, whole) == 0);
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    const Rep e = build_epsilon(n);
    const MatSpan a = image_algebra_basis(e);
    const QMat& x = e.X();
    const QMat& y = e.Y();
    const MatSpan i = ideal_closure(a, {y * y, x * x * y, x * x * x});
    CHECK(codimension(a, i) == 5);
  }
  const MatSpan a4 = image_algebra_basis(build_epsilon(4));
  QMat corner(4, 4);
  corner(0, 3) = 1;
  const MatSpan i4 = ideal_closure(a4, {corner});
  CHECK(i4.dim() == 1);
  CHECK(codimension(a4, i4) == 5);
  CHECK(two_sided_annihilator(a4, radical_basis(a4)).dim() == 1);
  CHECK(two_sided_annihilator(a4, radical_basis(a4)).contains(corner));

  CHECK_THROWS_AS(ideal_closure(a4, {QMat(4, 4) + power(QMat::jordan_block(4), 1).transpose()}), Error);
}

TEST_CASE("full-block images do not depend on parameters") {
  Rng rng(13);
  for (std::size_t n = 3; n <= 6; ++n) {
    const MatSpan canon = full_block_image_canonical(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Rep r = build_full_block(n, random_full_block_params(rng, n));
      CHECK(image_algebra_basis(r) == canon);
      const Rep c = conjugate_rep(r, random_invertible(rng, n));
      CHECK(image_algebra_basis(c).dim() == canon.dim());
    }
  }
  CHECK(full_block_image_canonical(3).dim() == 4);
  CHECK(full_block_image_canonical(5).dim() == 9);
}

TEST_CASE("algebra description") {
  const AlgebraDesc d = describe_image(build_epsilon(5));
  CHECK(d.dim == 9);
  CHECK(d.semisimple_rank == 1);
  CHECK(d.radical_dims.front() == 8);
  CHECK(d.quiver.arrows == std::vector<std::vector<std::size_t>>{{2}});
}
