#include <random>

#include "doctest.h"
#include "jordan/error.hpp"
#include "jordan/json_io.hpp"
#include "jordan/rep.hpp"
#include "jordan/sampling.hpp"

using namespace jordan;

namespace {

// Flattened solution space of X Y - Y X = 0 for a fixed Y, via the n^2 x n^2 linear system.
std::vector<QVec> commutant_oracle(const QMat& y) {
  const std::size_t n = y.rows();
  QMat sys(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // X e_a e_b^T contributes to row (i, j) of XY - YX
      QMat e(n, n);
      e(a, b) = 1;
      const QMat img = commutator(e, y);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sys(i * n + j, a * n + b) = img(i, j);
      }
    }
  }
  return nullspace_basis(sys);
}

QVec flat(const QMat& m) { return QVec(m.flatten().begin(), m.flatten().end()); }

std::size_t span_rank(const std::vector<QVec>& vs) { return span_basis(vs).size(); }

// Every builder slot set to one, others zero; returns X - X_base per slot.
std::vector<QVec> builder_directions(const Partition& p) {
  const QMat base = build_from_partition(p, PartitionParams::zero(p)).X();
  std::vector<QVec> out;
  auto push = [&](const PartitionParams& pp) { out.push_back(flat(build_from_partition(p, pp).X() - base)); };
  for (std::size_t i = 0; i < p.size(); ++i) {
    PartitionParams pp = PartitionParams::zero(p);
    pp.lambda[i] = 1;
    push(pp);
    for (std::size_t c = 0; c + 1 < p[i]; ++c) {
      pp = PartitionParams::zero(p);
      pp.diag[i][c] = 1;
      push(pp);
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      for (std::size_t t = 0; t < std::min(p[i], p[j]); ++t) {
        pp = PartitionParams::zero(p);
        pp.coupling[{i, j}] = std::vector<Rat>(std::min(p[i], p[j]));
        pp.coupling[{i, j}][t] = 1;
        push(pp);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validate_rep") {
  QMat x(3, 3);
  x(0, 1) = 5;
  x(2, 0) = Rat(-1, 2);
  const Rep r = validate_rep(x, QMat(3, 3));
  CHECK(r.partition() == Partition{1, 1, 1});

  try {
    validate_rep(QMat::identity(3), QMat::jordan_block(3));
    FAIL("relation should fail");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationFails);
    CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_rep(QMat(2, 2), QMat(3, 3)), Error);
  CHECK_THROWS_AS(validate_rep(QMat(2, 3), QMat(2, 3)), Error);
}

TEST_CASE("epsilon representations") {
  const Rep e2 = build_epsilon(2);
  CHECK(e2.X().is_zero());
  CHECK(e2.Y() == QMat::jordan_block(2));

  const Rep e3 = build_epsilon(3);
  CHECK(e3.X()(0, 1) == Rat(0));
  CHECK(e3.X()(1, 2) == Rat(-1));
  CHECK(commutator(e3.X(), e3.Y())(0, 2) == Rat(1));

  for (std::size_t n = 1; n <= 12; ++n) {
    const Rep e = build_epsilon(n);
    CHECK(e.partition() == Partition{n});
    CHECK(commutator(e.X(), e.Y()) == e.Y() * e.Y());
  }
}

TEST_CASE("full-block builder") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(build_full_block(n, FullBlockParams::zero(n)) == build_epsilon(n));

  const Rep r = build_full_block(3, {Rat(1), {Rat(1), Rat(0)}});
  const QMat expected{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(r.X() == expected);

  Rng rng(3);
  for (std::size_t n = 1; n <= 10; ++n) {
    const Rep q = build_full_block(n, random_full_block_params(rng, n));
    CHECK(q.partition() == Partition{n});
  }
  CHECK_THROWS_AS(build_full_block(3, {Rat(0), {Rat(1)}}), Error);
}

TEST_CASE("coupling blocks solve the intertwining equations") {
  for (std::size_t ni = 1; ni <= 5; ++ni) {
    for (std::size_t nj = 1; nj <= 5; ++nj) {
      const QMat ji = QMat::jordan_block(ni);
      const QMat jj = QMat::jordan_block(nj);
      // entrywise system A J_j - J_i A = 0 in the n_i n_j unknowns
      QMat sys(ni * nj, ni * nj);
      for (std::size_t a = 0; a < ni; ++a) {
        for (std::size_t b = 0; b < nj; ++b) {
          QMat e(ni, nj);
          e(a, b) = 1;
          const QMat img = e * jj - ji * e;
          for (std::size_t r = 0; r < ni; ++r) {
            for (std::size_t c = 0; c < nj; ++c) sys(r * nj + c, a * nj + b) = img(r, c);
          }
        }
      }
      const auto solutions = nullspace_basis(sys);
      const std::size_t m = std::min(ni, nj);
      CHECK(solutions.size() == m);
      std::vector<QVec> ours;
      for (std::size_t t = 0; t < m; ++t) {
        std::vector<Rat> v(m);
        v[t] = 1;
        const QMat a = coupling_block(ni, nj, v);
        CHECK((a * jj - ji * a).is_zero());
        ours.push_back(flat(a));
      }
      CHECK(span_rank(ours) == m);
      auto both = ours;
      both.insert(both.end(), solutions.begin(), solutions.end());
      CHECK(span_rank(both) == m);
    }
  }
}

TEST_CASE("partition builder parametrizes the whole stratum") {
  for (const Partition& p : {Partition{1}, Partition{2, 1}, Partition{3, 1}, Partition{2, 2}, Partition{3, 2, 1},
                             Partition{2, 2, 1}, Partition{1, 1, 1}, Partition{4, 2}}) {
    CAPTURE(p.str());
    const Rep base = build_from_partition(p, PartitionParams::zero(p));
    CHECK(base.partition() == p);
    const auto oracle = commutant_oracle(base.Y());
    CHECK(oracle.size() == param_count(p));
    const auto dirs = builder_directions(p);
    CHECK(dirs.size() == param_count(p));
    CHECK(span_rank(dirs) == param_count(p));
    auto both = dirs;
    both.insert(both.end(), oracle.begin(), oracle.end());
    CHECK(span_rank(both) == param_count(p));
  }
}

TEST_CASE("partition builder examples") {
  const Partition p{2, 1};
  PartitionParams pp = PartitionParams::zero(p);
  pp.lambda = {Rat(2), Rat(-1)};
  pp.diag[0] = {Rat(7)};
  pp.coupling[{0, 1}] = {Rat(3)};
  pp.coupling[{1, 0}] = {Rat(5)};
  const Rep r = build_from_partition(p, pp);
  const QMat expected{{2, 7, 3}, {0, 2, 0}, {0, 5, -1}};
  CHECK(r.X() == expected);
  CHECK(r.Y() == direct_sum(QMat::jordan_block(2), QMat(1, 1)));

  CHECK(build_from_partition(Partition{4}, PartitionParams::zero(Partition{4})) == build_epsilon(4));

  const Partition ones = Partition::trivial(3);
  PartitionParams po = PartitionParams::zero(ones);
  po.lambda = {Rat(1), Rat(2), Rat(3)};
  po.coupling[{2, 0}] = {Rat(4)};
  const Rep s = build_from_partition(ones, po);
  CHECK(s.Y().is_zero());
  CHECK(s.X()(2, 0) == Rat(4));

  PartitionParams wrong = PartitionParams::zero(p);
  wrong.coupling[{0, 1}] = {Rat(1), Rat(2)};
  CHECK_THROWS_AS(build_from_partition(p, wrong), Error);
  wrong = PartitionParams::zero(p);
  wrong.lambda.pop_back();
  CHECK_THROWS_AS(build_from_partition(p, wrong), Error);
  CHECK(param_count(Partition{2, 1}) == 5);
  CHECK(param_count(Partition{3, 3, 1}) == 3 + 3 + 1 + 2 * (3 + 1 + 1));
}

TEST_CASE("evaluate") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Rep e = build_epsilon(n);
    CHECK(evaluate(NormalPoly::monomial(1, 0), e) == QMat::jordan_block(n));
  }
  const NCPoly rel = parse_ncpoly("x*y - y*x - y^2");
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6);
    CHECK(evaluate(normal_form(rel), r).is_zero());
    CHECK(evaluate_free(rel, r).is_zero());
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Rep r = random_rep(rng, 2 + trial % 5);
    Word w;
    const auto len = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
    for (std::size_t i = 0; i < len; ++i) w.push_back(rng() % 2 == 0 ? Letter::X : Letter::Y);
    QMat direct = QMat::identity(r.n());
    for (const auto l : w) direct = direct * (l == Letter::X ? r.X() : r.Y());
    CHECK(evaluate(normal_form(NCPoly::word(w)), r) == direct);
  }
}

TEST_CASE("epsilon closed form") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const Rep e = build_epsilon(n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(epsilon_monomial(n, k, 0) == power(QMat::jordan_block(n), k));
      for (std::size_t m = 0; k + m < n; ++m) {
        CHECK(epsilon_monomial(n, k, m) ==
              evaluate(NormalPoly::monomial(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m)), e));
      }
    }
    CHECK(epsilon_monomial(n, n, 1).is_zero());
    CHECK(epsilon_monomial(n, 0, n).is_zero());
  }
  const QMat m = epsilon_monomial(5, 1, 2);
  CHECK(m(0, 3) == Rat(2));
  CHECK(m(1, 4) == Rat(6));
  QMat rest = m;
  rest(0, 3) = 0;
  rest(1, 4) = 0;
  CHECK(rest.is_zero());
  CHECK(rank(m) == 2);
}

TEST_CASE("faithfulness witness") {
  const auto w = faithfulness_witness(NormalPoly::monomial(1, 0));
  CHECK(w.n0 == 2);
  CHECK(w.nonzero);
  const auto w2 = faithfulness_witness(normal_form(parse_ncpoly("x*y - 2*y^2")));
  CHECK(w2.n0 == 4);
  CHECK(w2.nonzero);
  CHECK_THROWS_AS(faithfulness_witness(NormalPoly()), Error);
  CHECK(faithfulness_witness(NormalPoly::constant(Rat(3))).nonzero);

  // x itself vanishes on eps_2, so 2 deg f is not always enough
  CHECK_FALSE(faithfulness_witness(NormalPoly::monomial(0, 1)).nonzero);
  // eps_n for n >= 2 deg f + 1 separates every nonzero f
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalPoly f = random_normal_poly(rng, 5);
    const std::size_t n = 2 * f.degree() + 1;
    CHECK_FALSE(evaluate(f, build_epsilon(n)).is_zero());
  }
  // a degree-2 element killed by eps_4: y^2 + y x + x^2 / 2 lies on diagonal 2 only
  NormalPoly g;
  g.add_term({2, 0}, Rat(1));
  g.add_term({1, 1}, Rat(1));
  g.add_term({0, 2}, Rat(1, 2));
  CHECK(evaluate(g, build_epsilon(4)).is_zero());
  CHECK_FALSE(faithfulness_witness(g).nonzero);
  CHECK_FALSE(evaluate(g, build_epsilon(5)).is_zero());
}

TEST_CASE("twists") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6);
    CHECK(twist(r, Automorphism()) == r);
    const Automorphism f(UPoly({random_small_int(rng, -2, 2), random_small_int(rng, -2, 2)}), random_nonzero_int(rng, 3));
    const Automorphism g(UPoly({Rat(0), Rat(0), random_small_int(rng, -2, 2)}), random_nonzero_int(rng, 2));
    CHECK(twist(twist(r, f), aut_inverse(f)) == r);
    CHECK(twist(twist(r, f), g) == twist(r, aut_compose(f, g)));
    // the twisted action is evaluation of f(p)
    const NormalPoly p = random_normal_poly(rng, 3);
    CHECK(evaluate(p, twist(r, f)) == evaluate(apply_automorphism(p, f), r));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const FullBlockParams params = random_full_block_params(rng, n);
    std::vector<Rat> coeffs{params.lambda};
    coeffs.insert(coeffs.end(), params.c.begin(), params.c.end());
    CHECK(twist(build_epsilon(n), Automorphism(UPoly(coeffs), Rat(1))) == build_full_block(n, params));
  }
}

TEST_CASE("eigenvalues of X") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ev = eigenvalues_of_X(build_epsilon(n));
    REQUIRE(ev.size() == 1);
    CHECK(ev[0] == Eigenvalue{Rat(0), n});
  }
  PartitionParams pp = PartitionParams::zero(Partition{2, 1});
  pp.lambda = {Rat(1), Rat(3)};
  pp.diag[0] = {Rat(2)};
  pp.coupling[{0, 1}] = {Rat(-1)};
  pp.coupling[{1, 0}] = {Rat(4)};
  const auto ev = eigenvalues_of_X(build_from_partition(Partition{2, 1}, pp));
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == Eigenvalue{Rat(1), 2});
  CHECK(ev[1] == Eigenvalue{Rat(3), 1});

  const QMat companion{{0, 2}, {1, 0}};
  CHECK_THROWS_AS(eigenvalues_of_X(validate_rep(companion, QMat(2, 2))), Error);

  // distinct parts: read-off agrees with the characteristic polynomial, with or without conjugation
  Rng rng(13);
  for (const Partition& p : {Partition{3, 1}, Partition{4, 2, 1}, Partition{3, 2}, Partition{5, 1}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Rep r = random_rep_with_partition(rng, p, {.rational_spectrum = true, .conjugate = false});
      REQUIRE(is_standard_shape(r));
      const Spectrum s = rational_eigenvalues(r.X());
      REQUIRE(s.split);
      CHECK(eigenvalues_of_X(r) == s.roots);
      CHECK(eigenvalues_of_X(conjugate_rep(r, random_unimodular(rng, r.n()))) == s.roots);
    }
  }
}

TEST_CASE("random representations") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Rep r = random_rep(rng, n);
    CHECK(r.n() == n);
    CHECK(is_nilpotent(r.Y()));
    CHECK(rational_eigenvalues(r.X()).split);
  }
}

TEST_CASE("json round trips") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Rep r = random_rep(rng, 1 + trial % 6, {.dense_percent = 100});
    const Json j = rep_to_json(r);
    CHECK(rep_from_json(parse_json(j.dump())) == r);
    CHECK(rep_to_json(rep_from_json(j)).dump() == j.dump());

    const Partition p = random_partition(rng, 5);
    const PartitionParams pp = random_partition_params(rng, p);
    const Json pj = params_to_json(pp);
    const PartitionParams back = params_from_json(parse_json(pj.dump()), p);
    CHECK(build_from_partition(p, back) == build_from_partition(p, pp));
    CHECK(params_to_json(back).dump() == pj.dump());
  }

  const Json m = parse_json(R"({"rows":1,"cols":2,"entries":[["2/4","1"]]})");
  CHECK_THROWS_AS(qmat_from_json(m), Error);
  CHECK_THROWS_AS(parse_json("{"), Error);
  const Json bad_count = parse_json(R"({"lambda":["0"],"toeplitz":{"0":["1"]}})");
  try {
    params_from_json(bad_count, Partition{3});
    FAIL("expected a count mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamCountMismatch);
  }
  const Json missing = parse_json(R"({"toeplitz":{"0,1":["5"]}})");
  const PartitionParams mp = params_from_json(missing, Partition{1, 1});
  CHECK(build_from_partition(Partition{1, 1}, mp).X()(0, 1) == Rat(5));

  Json wrong_partition = rep_to_json(build_epsilon(3));
  wrong_partition["partition"] = Json::array({2, 1});
  CHECK_THROWS_AS(rep_from_json(wrong_partition), Error);

  const Automorphism f(UPoly({Rat(1, 2), Rat(0), Rat(-3)}), Rat(2, 3));
  CHECK(automorphism_from_json(automorphism_to_json(f)) == f);
}
