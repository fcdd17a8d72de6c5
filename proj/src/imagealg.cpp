#include "jordan/imagealg.hpp"

#include <algorithm>
#include <string>

#include "jordan/error.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

namespace {

QVec flat(const QMat& m) { return QVec(m.flatten().begin(), m.flatten().end()); }

}  // namespace

MatSpan MatSpan::from_generators(std::size_t n, const std::vector<QMat>& gens) {
  MatSpan s(n);
  for (const auto& g : gens) s.insert(g);
  return s;
}

std::vector<QMat> MatSpan::basis() const {
  std::vector<QMat> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(QMat::unflatten(r, n_, n_));
  return out;
}

QVec MatSpan::reduce(QVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < v.size(); ++c) {
      if (!rows_[i][c].is_zero()) v[c] -= f * rows_[i][c];
    }
  }
  return v;
}

bool MatSpan::insert(const QMat& m) {
  if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix size differs from span");
  QVec v = reduce(flat(m));
  const auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const Rat inv = Rat(1) / v[p];
  for (std::size_t c = p; c < v.size(); ++c) v[c] *= inv;
  for (auto& row : rows_) {
    const Rat f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t c = p; c < v.size(); ++c) {
      if (!v[c].is_zero()) row[c] -= f * v[c];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool MatSpan::contains(const QMat& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return is_zero_vector(reduce(flat(m)));
}

bool MatSpan::contains(const MatSpan& other) const {
  if (other.n_ != n_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const QVec& r) { return is_zero_vector(reduce(r)); });
}

QVec MatSpan::coordinates(const QMat& m) const {
  if (!contains(m)) throw Error(ErrorCode::InvariantViolation, "matrix is not in the span");
  const auto f = m.flatten();
  QVec out;
  for (const auto p : pivots_) out.push_back(f[p]);
  return out;
}

MatSpan span_product(const MatSpan& a, const MatSpan& b) {
  MatSpan out(a.ambient());
  const auto ba = a.basis();
  const auto bb = b.basis();
  for (const auto& x : ba) {
    for (const auto& y : bb) out.insert(x * y);
  }
  return out;
}

MatSpan sandwich(const QMat& l, const MatSpan& s, const QMat& r) {
  MatSpan out(s.ambient());
  for (const auto& m : s.basis()) out.insert(l * m * r);
  return out;
}

namespace {

MatSpan image_span(const Rep& r, std::size_t x_powers) {
  const std::size_t n = r.n();
  MatSpan a(n);
  const std::size_t ky = nilpotency_index(r.Y());
  QMat yk = QMat::identity(n);
  for (std::size_t k = 0; k < std::max<std::size_t>(ky, 1); ++k) {
    QMat m = yk;
    for (std::size_t l = 0; l < x_powers; ++l) {
      a.insert(m);
      m = m * r.X();
    }
    yk = yk * r.Y();
  }
  return a;
}

}  // namespace

MatSpan image_algebra_basis(const Rep& r) { return image_span(r, std::max<std::size_t>(r.n(), 1)); }

MatSpan image_algebra_basis_wide(const Rep& r) { return image_span(r, 2 * std::max<std::size_t>(r.n(), 1)); }

std::size_t dimension_bound(std::size_t n) { return n % 2 == 0 ? n * (n + 2) / 4 : (n + 1) * (n + 1) / 4; }

void require_algebra(const MatSpan& a) {
  const auto basis = a.basis();
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!a.contains(x * y)) throw Error(ErrorCode::NotAnAlgebra, "span is not closed under multiplication");
    }
  }
}

MatSpan radical_basis(const MatSpan& a) {
  require_algebra(a);
  const auto basis = a.basis();
  const std::size_t d = basis.size();
  QMat gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      gram(i, j) = trace_of_product(basis[i], basis[j]);
      gram(j, i) = gram(i, j);
    }
  }
  MatSpan out(a.ambient());
  for (const auto& coeffs : nullspace_basis(gram)) {
    QMat m(a.ambient(), a.ambient());
    for (std::size_t i = 0; i < d; ++i) {
      if (!coeffs[i].is_zero()) m += coeffs[i] * basis[i];
    }
    if (!is_nilpotent(m)) throw Error(ErrorCode::InvariantViolation, "trace-form kernel element is not nilpotent");
    out.insert(m);
  }
  return out;
}

std::vector<MatSpan> radical_powers(const MatSpan& j) {
  std::vector<MatSpan> out;
  MatSpan cur = j;
  while (cur.dim() > 0) {
    if (out.size() > j.ambient() * j.ambient()) throw Error(ErrorCode::InvariantViolation, "radical is not nilpotent");
    out.push_back(cur);
    cur = span_product(cur, j);
  }
  return out;
}

std::vector<QMat> idempotents(const Rep& r) {
  const std::size_t n = r.n();
  const Spectrum s = rational_eigenvalues(r.X());
  if (!s.split) throw Error(ErrorCode::EigenvaluesNotRational, "characteristic polynomial of X does not split");
  std::vector<QMat> out;
  if (s.roots.size() <= 1) {
    out.push_back(QMat::identity(n));
    return out;
  }
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    UPoly p = UPoly::constant(Rat(1));
    for (std::size_t j = 0; j < s.roots.size(); ++j) {
      if (j != i) p = p * UPoly::linear_factor(s.roots[j].value);
    }
    QMat e = (Rat(1) / p(s.roots[i].value)) * p(r.X());
    // e^2 - e is nilpotent; each step doubles its order
    for (std::size_t step = 0; !(e * e == e); ++step) {
      if (step > 64) throw Error(ErrorCode::InvariantViolation, "idempotent lifting did not converge");
      const QMat e2 = e * e;
      e = Rat(3) * e2 - Rat(2) * (e2 * e);
    }
    out.push_back(std::move(e));
  }
  QMat sum(n, n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    sum += out[i];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && !(out[i] * out[j]).is_zero()) {
        throw Error(ErrorCode::InvariantViolation, "idempotents are not orthogonal");
      }
    }
  }
  if (!(sum == QMat::identity(n))) throw Error(ErrorCode::InvariantViolation, "idempotents do not sum to I");
  return out;
}

QuiverDesc quiver(const Rep& r) {
  const auto es = idempotents(r);
  const Spectrum s = rational_eigenvalues(r.X());
  const MatSpan a = image_algebra_basis(r);
  const MatSpan j = radical_basis(a);
  const MatSpan j2 = span_product(j, j);
  QuiverDesc q;
  for (const auto& e : s.roots) q.vertices.push_back(e.value);
  q.arrows.assign(es.size(), std::vector<std::size_t>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t k = 0; k < es.size(); ++k) {
      q.arrows[i][k] = sandwich(es[i], j, es[k]).dim() - sandwich(es[i], j2, es[k]).dim();
    }
  }
  return q;
}

std::size_t semisimple_rank(const Rep& r) {
  const Spectrum s = rational_eigenvalues(r.X());
  if (!s.split) throw Error(ErrorCode::EigenvaluesNotRational, "characteristic polynomial of X does not split");
  return s.roots.size();
}

MatSpan ideal_closure(const MatSpan& a, const std::vector<QMat>& gens) {
  MatSpan ideal(a.ambient());
  for (const auto& g : gens) {
    if (!a.contains(g)) throw Error(ErrorCode::GensNotInAlgebra, "generator is not in the algebra");
    ideal.insert(g);
  }
  const auto basis = a.basis();
  const std::size_t cap = a.ambient() * a.ambient() + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > cap) throw Error(ErrorCode::InvariantViolation, "ideal closure did not stabilize");
    bool grew = false;
    for (const auto& v : ideal.basis()) {
      for (const auto& b : basis) {
        grew = ideal.insert(b * v) || grew;
        grew = ideal.insert(v * b) || grew;
      }
    }
    if (!grew) return ideal;
  }
}

std::size_t codimension(const MatSpan& a, const MatSpan& ideal) {
  if (!a.contains(ideal)) throw Error(ErrorCode::GensNotInAlgebra, "ideal is not contained in the algebra");
  return a.dim() - ideal.dim();
}

MatSpan two_sided_annihilator(const MatSpan& a, const MatSpan& j) {
  const auto basis = a.basis();
  const auto jb = j.basis();
  const std::size_t n = a.ambient();
  // unknown coefficients of v in a's basis; equations from j_t v = 0 and v j_t = 0
  QMat sys(2 * jb.size() * n * n, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::size_t row = 0;
    for (const auto& t : jb) {
      for (const QMat& img : {t * basis[c], basis[c] * t}) {
        for (const auto& e : img.flatten()) sys(row++, c) = e;
      }
    }
  }
  MatSpan out(n);
  for (const auto& coeffs : nullspace_basis(sys)) {
    QMat v(n, n);
    for (std::size_t c = 0; c < basis.size(); ++c) v += coeffs[c] * basis[c];
    out.insert(v);
  }
  return out;
}

MatSpan full_block_image_canonical(std::size_t n) { return image_algebra_basis(build_epsilon(n)); }

std::vector<std::size_t> diagonal_dimensions(const MatSpan& s) {
  const std::size_t n = s.ambient();
  const auto basis = s.basis();
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<QVec> proj;
    for (const auto& b : basis) {
      QVec v;
      for (std::size_t j = 0; j + d < n; ++j) v.push_back(b(j, j + d));
      proj.push_back(std::move(v));
    }
    out.push_back(span_basis(proj).size());
  }
  return out;
}

AlgebraDesc describe_image(const Rep& r) {
  AlgebraDesc desc;
  const MatSpan a = image_algebra_basis(r);
  const MatSpan j = radical_basis(a);
  desc.dim = a.dim();
  for (const auto& p : radical_powers(j)) desc.radical_dims.push_back(p.dim());
  desc.semisimple_rank = a.dim() - j.dim();
  if (rational_eigenvalues(r.X()).split) desc.quiver = quiver(r);
  return desc;
}

}  // namespace jordan
