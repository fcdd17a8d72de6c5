#include "jordan/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/sampling.hpp"
#include "jordan/structure.hpp"

namespace jordan {

namespace {

// Counts checks and remembers the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failed_ == 0; }
  std::size_t total() const { return total_; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    return std::to_string(failed_) + " of " + std::to_string(total_) + " checks failed; first: " + first_;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::size_t upper(const CheckOptions& o, std::size_t fallback) { return o.max_n == 0 ? fallback : o.max_n; }

std::string n_str(std::size_t n) { return "n=" + std::to_string(n); }

Json rats_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

void normal_form_alpha(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 8);
  for (std::uint32_t n = 1; n <= hi; ++n) {
    NCPoly w = NCPoly::word(Word(n, Letter::X)) * NCPoly::letter(Letter::Y);
    const NormalPoly brute = normal_form(w, RewriteStrategy::Leftmost);
    const NormalPoly other = normal_form(w, RewriteStrategy::Random, o.seed + n);
    const auto alpha = alpha_coeffs(n);
    NormalPoly expected;
    Rat fact(1);
    for (std::uint32_t k = 1; k <= n; ++k) fact *= Rat(k);
    for (std::uint32_t k = 1; k <= n + 1; ++k) {
      // n! / (n - k + 1)!
      Rat denom(1);
      for (std::uint32_t i = 2; i <= n - k + 1; ++i) denom *= Rat(i);
      t.expect(alpha[k - 1] == fact / denom, "alpha formula at " + n_str(n));
      expected.add_term({k, n - k + 1}, alpha[k - 1]);
    }
    t.expect(brute == expected, "normal form of x^n y at " + n_str(n));
    t.expect(other == expected, "random-site rewriting at " + n_str(n));
    t.expect(multiply_normal(NormalPoly::monomial(0, n), NormalPoly::monomial(1, 0)) == expected,
             "closed-form product at " + n_str(n));
    res.data["n" + std::to_string(n)] = rats_json(alpha);
  }
  res.passed = t.ok();
  res.detail = t.summary("x^n y matches the alpha expansion for n = 1.." + std::to_string(hi));
}

void epsilon_closed_form(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 10);
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= hi; ++n) {
    const Rep e = build_epsilon(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = 0; k + m < n; ++m) {
        const NormalPoly mono = NormalPoly::monomial(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m));
        t.expect(epsilon_monomial(n, k, m) == evaluate(mono, e),
                 "eps_" + std::to_string(n) + "(y^" + std::to_string(k) + " x^" + std::to_string(m) + ")");
        ++cases;
      }
    }
  }
  res.data["cases"] = cases;
  res.passed = t.ok();
  res.detail = t.summary(std::to_string(cases) + " monomials agree with evaluation");
}

void dimension_sequence(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 10);
  const std::vector<std::size_t> expected{1, 2, 4, 6, 9, 12, 16, 20, 25, 30};
  Json dims = Json::array();
  for (std::size_t n = 1; n <= hi; ++n) {
    const MatSpan a = image_algebra_basis(build_epsilon(n));
    dims.push_back(a.dim());
    const std::size_t closed = n % 2 == 1 ? (n + 1) * (n + 1) / 4 : n * (n + 2) / 4;
    t.expect(a.dim() == closed, "closed form at " + n_str(n));
    if (n <= expected.size()) t.expect(a.dim() == expected[n - 1], "listed value at " + n_str(n));
    const auto profile = diagonal_dimensions(a);
    for (std::size_t d = 0; d < n; ++d) t.expect(profile[d] == std::min(d + 1, n - d), "diagonal profile at " + n_str(n));
  }
  res.data["dims"] = dims;
  res.passed = t.ok();
  res.detail = t.summary("dims " + dims.dump());
}

void dimension_bound_check(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 8);
  Rng rng(o.seed);
  std::size_t samples = 0;
  std::size_t full = 0;
  std::size_t other_at_bound = 0;
  Json per_n = Json::object();
  for (std::size_t n = 2; n <= hi; ++n) {
    std::size_t max_other = 0;
    for (int i = 0; i < 100; ++i) {
      // every fourth sample is forced into the full-block stratum
      const Partition p = i % 4 == 0 ? Partition{n} : random_partition(rng, n);
      SampleOptions so;
      so.rational_spectrum = i % 2 == 0;
      const Rep r = random_rep_with_partition(rng, p, so);
      const std::size_t dim = image_algebra_basis(r).dim();
      const bool is_full = p.size() == 1;
      ++samples;
      t.expect(dim <= dimension_bound(n), "bound at " + n_str(n) + " partition " + p.str());
      if (is_full) {
        ++full;
        t.expect(dim == dimension_bound(n), "full-block equality at " + n_str(n));
      } else {
        max_other = std::max(max_other, dim);
        if (dim == dimension_bound(n)) ++other_at_bound;
      }
    }
    per_n[std::to_string(n)] = Json{{"bound", dimension_bound(n)}, {"max_non_full", max_other}};
  }
  res.data["samples"] = samples;
  res.data["full_block_samples"] = full;
  res.data["non_full_at_bound"] = other_at_bound;
  res.data["per_n"] = per_n;
  res.passed = t.ok();
  res.detail = t.summary(std::to_string(samples) + " samples within the bound, " + std::to_string(full) +
                         " full-block samples at equality, " + std::to_string(other_at_bound) +
                         " other samples also at equality");
}

void faithfulness(const CheckOptions& o, CheckResult& res) {
  Tally t;
  Rng rng(o.seed);
  std::size_t witnessed = 0;
  for (int i = 0; i < 50; ++i) {
    const NormalPoly f = random_normal_poly(rng, 5);
    const FaithfulnessWitness w = faithfulness_witness(f);
    t.expect(w.nonzero, "eps_" + std::to_string(w.n0) + " kills " + f.str());
    witnessed += w.nonzero ? 1 : 0;
  }
  res.data["nonzero"] = witnessed;
  res.passed = t.ok();
  res.detail = t.summary("50 random polynomials survive eps_{2 deg f}");
}

void structure_theory(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 7);
  Rng rng(o.seed);
  std::size_t samples = 0;
  for (std::size_t n = 1; n <= hi; ++n) {
    for (int i = 0; i < 20; ++i) {
      const Rep r = random_rep(rng, n);
      const Spectrum s = rational_eigenvalues(r.X());
      if (!s.split) continue;
      ++samples;
      const std::string at = n_str(n) + " sample " + std::to_string(i);
      t.expect(is_nilpotent(r.Y()), "Y nilpotent, " + at);
      t.expect(is_nilpotent(commutator(r.X(), r.Y())), "[X,Y] nilpotent, " + at);
      const MatSpan a = image_algebra_basis(r);
      const MatSpan j = radical_basis(a);
      for (const auto& b : j.basis()) t.expect(is_nilpotent(b), "radical element nilpotent, " + at);
      t.expect(j.contains(r.Y()), "Y in radical, " + at);
      UPoly sp = UPoly::constant(Rat(1));
      for (const auto& e : s.roots) sp = sp * UPoly::linear_factor(e.value);
      const QMat sx = sp(r.X());
      t.expect(is_nilpotent(sx) && j.contains(sx), "S(X) nilpotent and radical, " + at);
      // nilpotent elements of A lie in J
      for (int k = 0; k < 3; ++k) {
        QMat m(n, n);
        for (const auto& b : a.basis()) m += random_small_int(rng, -2, 2) * b;
        if (k == 0) m = m * m * sx;
        t.expect(is_nilpotent(m) == j.contains(m), "nilpotent iff radical, " + at);
      }
      t.expect(a.dim() == s.roots.size() + j.dim(), "dim A = r + dim J, " + at);
      const auto es = idempotents(r);
      QMat sum(n, n);
      for (std::size_t p = 0; p < es.size(); ++p) {
        t.expect(es[p] * es[p] == es[p], "idempotent, " + at);
        for (std::size_t q = 0; q < es.size(); ++q) {
          if (p != q) t.expect((es[p] * es[q]).is_zero(), "orthogonal, " + at);
        }
        sum += es[p];
      }
      t.expect(sum == QMat::identity(n), "complete, " + at);
    }
  }
  res.data["samples"] = samples;
  res.passed = t.ok();
  res.detail = t.summary(std::to_string(samples) + " samples satisfy the structure theorems");
}

void quivers(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 8);
  Json loops = Json::object();
  for (std::size_t n = 2; n <= hi; ++n) {
    const QuiverDesc q = quiver(build_epsilon(n));
    const std::size_t want = n >= 3 ? 2 : 1;
    t.expect(q.vertices.size() == 1 && q.arrows[0][0] == want, "eps_" + std::to_string(n) + " loops");
    loops[std::to_string(n)] = q.arrows[0][0];
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(Rat(static_cast<long>(i)));
    const QuiverDesc q = quiver(validate_rep(QMat::diagonal(d), QMat(n, n)));
    std::size_t arrows = 0;
    for (const auto& row : q.arrows) {
      for (const auto a : row) arrows += a;
    }
    t.expect(q.vertices.size() == n && arrows == 0, "diagonal semisimple " + n_str(n));
  }
  res.data["epsilon_loops"] = loops;
  res.passed = t.ok();
  res.detail = t.summary("one vertex with two loops for n >= 3, one loop at n = 2, no arrows when semisimple");
}

void decomposition(const CheckOptions& o, CheckResult& res) {
  Tally t;
  Rng rng(o.seed);
  for (int i = 0; i < 30; ++i) {
    const std::size_t k = 2 + static_cast<std::size_t>(i % 3);
    Rep sum = build_epsilon(1);
    std::vector<Rat> lambdas;
    for (std::size_t b = 0; b < k; ++b) lambdas.push_back(Rat(static_cast<long>(b)) * Rat(3) + random_small_int(rng, 0, 2));
    std::size_t n = 0;
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t m = 1 + rng() % 3;
      Partition p = random_partition(rng, m);
      PartitionParams pp = random_partition_params(rng, p);
      for (auto& l : pp.lambda) l = lambdas[b];
      const Rep piece = build_from_partition(p, pp);
      sum = b == 0 ? piece : rep_direct_sum(sum, piece);
      n += m;
    }
    const Rep r = conjugate_rep(sum, random_unimodular(rng, n));
    t.expect(decompose(r).summands.size() == k, "summand count for sample " + std::to_string(i));
  }
  // extension candidates of S_a by S_b at n = 2
  std::size_t candidates = 0;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      if (a == b) continue;
      // unknowns (s, t): X = [[a, s], [0, b]], Y = [[0, t], [0, 0]]; XY - YX - Y^2 is linear in t
      QMat sys(4, 2);
      const QMat x0{{a, 0}, {0, b}};
      const QMat xs{{0, 1}, {0, 0}};
      const QMat yt{{0, 1}, {0, 0}};
      const QMat rel = commutator(x0, yt);
      for (std::size_t e = 0; e < 4; ++e) sys(e, 1) = rel.flatten()[e];
      const auto space = nullspace_basis(sys);
      std::vector<QVec> points = space;
      for (int k = 0; k < 4; ++k) {
        QVec p(2);
        for (const auto& v : space) {
          const Rat c = random_small_int(rng, -3, 3);
          p[0] += c * v[0];
          p[1] += c * v[1];
        }
        points.push_back(p);
      }
      for (const auto& p : points) {
        const Rep r = validate_rep(x0 + p[0] * xs, p[1] * yt);
        ++candidates;
        const bool splits = decompose(r).summands.size() == 2;
        const std::vector<Rat> d{Rat(a), Rat(b)};
        const bool iso = are_isomorphic(r, validate_rep(QMat::diagonal(d), QMat(2, 2)), o.seed).isomorphic;
        t.expect(splits && iso, "extension of S_" + std::to_string(a) + " by S_" + std::to_string(b));
      }
    }
  }
  res.data["extension_candidates"] = candidates;
  res.passed = t.ok();
  res.detail = t.summary("30 block sums split as expected; " + std::to_string(candidates) +
                         " extension candidates all split");
}

void canonical_pairs(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 8);
  Rng rng(o.seed);
  std::size_t iso_checks = 0;
  for (std::size_t n = 3; n <= hi; ++n) {
    std::vector<std::pair<Rat, Rat>> pairs;
    std::vector<Rep> reps;
    for (int i = 0; i < 50; ++i) {
      const Rat lambda = random_small_int(rng, -3, 3) / random_nonzero_int(rng, 2);
      const Rat mu = random_small_int(rng, -3, 3) / random_nonzero_int(rng, 2);
      const QMat g = i % 2 == 0 ? random_invertible(rng, n) : random_unimodular(rng, n);
      const Rep r = conjugate_rep(canonical_representative(n, lambda, mu), g);
      const CanonicalPair c = canonical_full_block(r);
      t.expect(c.lambda == lambda && c.mu == mu, "recovery at " + n_str(n));
      t.expect(conjugate_rep(r, c.conjugator) == canonical_representative(n, lambda, mu), "conjugator at " + n_str(n));
      pairs.emplace_back(lambda, mu);
      reps.push_back(r);
    }
    for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
      const bool same = pairs[i] == pairs[i + 1];
      const IsoResult iso = are_isomorphic(reps[i], reps[i + 1], o.seed + i);
      ++iso_checks;
      t.expect(iso.isomorphic == same, "iso verdict at " + n_str(n));
    }
  }
  res.data["isomorphism_checks"] = iso_checks;
  res.passed = t.ok();
  res.detail = t.summary("(lambda, mu) recovered for all samples; " + std::to_string(iso_checks) +
                         " isomorphism verdicts match the pairs");
}

void jacobian(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 10);
  Rng rng(o.seed);
  Json ranks = Json::object();
  for (std::size_t n = 3; n <= hi; ++n) {
    std::size_t rk = 0;
    for (int i = 0; i < 20; ++i) {
      rk = jacobian_rank(n, random_full_block_params(rng, n), rng());
      t.expect(rk == n - 2, "rank at " + n_str(n));
    }
    ranks[std::to_string(n)] = rk;
  }
  res.data["ranks"] = ranks;
  res.passed = t.ok();
  res.detail = t.summary("rank n - 2 for n = 3.." + std::to_string(hi));
}

void ringel(const CheckOptions& o, CheckResult& res) {
  Tally t;
  const std::size_t hi = upper(o, 8);
  Json codims = Json::object();
  for (std::size_t n = 5; n <= hi; ++n) {
    const Rep e = build_epsilon(n);
    const MatSpan a = image_algebra_basis(e);
    const QMat& x = e.X();
    const QMat& y = e.Y();
    const std::size_t c = codimension(a, ideal_closure(a, {y * y, x * x * y, x * x * x}));
    codims[std::to_string(n)] = c;
    t.expect(c == 5, "codimension at " + n_str(n));
  }
  const Rep e4 = build_epsilon(4);
  const MatSpan a4 = image_algebra_basis(e4);
  const MatSpan ann = two_sided_annihilator(a4, radical_basis(a4));
  t.expect(ann.dim() == 1, "one-dimensional ideals of A_4 form a single line");
  const MatSpan i4 = ideal_closure(a4, ann.basis());
  t.expect(i4.dim() == 1 && codimension(a4, i4) == 5, "quotient by the one-dimensional ideal");
  t.expect(a4.dim() == 6, "dim A_4");
  t.expect(image_algebra_basis(build_epsilon(3)).dim() == 4, "dim A_3");

  // x^2 = -2xy under both orientations of the base matrix
  const QMat& x = e4.X();
  const QMat& y = e4.Y();
  const QMat xp = -x;
  res.data["x2_plus_2xy_zero"] = Json{{"this_convention", (x * x + Rat(2) * x * y).is_zero()},
                                      {"flipped_convention", (xp * xp + Rat(2) * xp * y).is_zero()}};
  res.data["x3_zero"] = power(x, 3).is_zero();
  res.data["codimensions"] = codims;
  res.passed = t.ok();
  res.detail = t.summary("codimension 5 for n = 5.." + std::to_string(hi) +
                         "; A_4 has a unique one-dimensional ideal with 5-dimensional quotient; dim A_3 = 4");
}

void auto_equivalence(const CheckOptions& o, CheckResult& res) {
  Tally witnesses;
  Rng rng(o.seed);
  const std::size_t hi = upper(o, 8);
  for (std::size_t n = 1; n <= hi; ++n) {
    for (int i = 0; i < 10; ++i) {
      const Rep r = conjugate_rep(build_full_block(n, random_full_block_params(rng, n)), random_invertible(rng, n));
      const AutoEquivalence e = auto_equivalent_full_block(r, build_epsilon(n));
      witnesses.expect(e.equivalent && conjugate_rep(twist(r, e.f), e.g) == build_epsilon(n),
                       "auto-equivalence witness at " + n_str(n));
    }
  }
  Tally hooks;
  Json verdicts = Json::array();
  for (std::size_t n = 4; n <= 5; ++n) {
    for (int i = 0; i < 10; ++i) {
      Rat alpha = random_nonzero_int(rng, 5) / random_nonzero_int(rng, 3);
      Rat beta = alpha;
      while (beta == alpha) beta = random_nonzero_int(rng, 5) / random_nonzero_int(rng, 3);
      const IsoResult iso = are_isomorphic(hook_family(n, alpha), hook_family(n, beta), o.seed + i);
      hooks.expect(!iso.isomorphic, "hook_family(" + std::to_string(n) + ", " + alpha.str() + ") ~ hook_family(" +
                                        std::to_string(n) + ", " + beta.str() + ")");
      verdicts.push_back(Json{{"n", n}, {"alpha", alpha.str()}, {"beta", beta.str()}, {"isomorphic", iso.isomorphic}});
    }
  }
  res.data["hook_pairs"] = verdicts;
  res.passed = witnesses.ok() && hooks.ok();
  std::ostringstream d;
  d << (witnesses.ok() ? "full-block witnesses verified" : witnesses.summary(""));
  d << "; " << (hooks.ok() ? "hook pairs non-isomorphic" : "hook pairs: " + hooks.summary(""));
  res.detail = d.str();
}

using Suite = std::function<void(const CheckOptions&, CheckResult&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"normal-form-alpha", normal_form_alpha}, {"epsilon-closed-form", epsilon_closed_form},
      {"dimension-sequence", dimension_sequence}, {"dimension-bound", dimension_bound_check},
      {"faithfulness", faithfulness},           {"structure-theory", structure_theory},
      {"quivers", quivers},                     {"decomposition", decomposition},
      {"canonical-pairs", canonical_pairs},     {"jacobian", jacobian},
      {"ringel", ringel},                       {"auto-equivalence", auto_equivalence},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  CheckResult res;
  res.name = name;
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.first == name; });
  if (it == all.end()) throw Error(ErrorCode::InvariantViolation, "unknown check \"" + name + "\"");
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(options, res);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Json check_result_to_json(const CheckResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace jordan
