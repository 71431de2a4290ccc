#include "ternalg/operators.hpp"

#include "ternalg/constructions.hpp"
#include "ternalg/structures.hpp"

namespace ternalg {

namespace {

using Args = std::span<const Vec>;

void require_shape(const InterMap& T, const RepBundle& r) {
  r.validate();
  if (T.rows() != r.algebra.dim || T.cols() != r.module_dim())
    throw Error(Errc::DimensionMismatch, "operator is " + std::to_string(T.rows()) + "x" +
                                             std::to_string(T.cols()) + ", expected " +
                                             std::to_string(r.algebra.dim) + "x" +
                                             std::to_string(r.module_dim()));
}

void require_square(const InterMap& N, const AlgebraBundle& a) {
  if (N.rows() != a.dim || N.cols() != a.dim)
    throw Error(Errc::DimensionMismatch, "operator must be " + std::to_string(a.dim) + "x" +
                                             std::to_string(a.dim));
}

// Pre-structure on A from an invertible T: x⋄y = T μ(x) T⁻¹ y, {x,y,z} = T ρ(x,y) T⁻¹ z.
AlgebraBundle conjugated_pre(const InterMap& T, const Matrix& Tinv, const RepBundle& r, std::string name) {
  const std::size_t n = r.algebra.dim;
  AlgebraBundle out = make_bundle(n, std::move(name));
  out.basis_labels = r.algebra.basis_labels;
  Tensor3 zin(n);
  Tensor4 pre(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = Vec::basis(n, i);
    const Matrix mi = T * r.m().at(ei) * Tinv;
    for (std::size_t j = 0; j < n; ++j) {
      zin.set_entry(i, j, mi.column(j));
      const Matrix rij = T * r.r().at(ei, Vec::basis(n, j)) * Tinv;
      for (std::size_t k = 0; k < n; ++k) pre.set_entry(i, j, k, rij.column(k));
    }
  }
  out.product = std::move(zin);
  out.bracket = std::move(pre);
  return out;
}

}  // namespace

std::vector<Condition> relative_rb_comm_conditions(const InterMap& T, const RepBundle& r) {
  require_shape(T, r);
  (void)r.m();
  (void)r.algebra.prod();
  const std::size_t m = r.module_dim();
  return {{"rb-comm", {m, m}, [&T, &r](Args a) {
             const Vec tu = T * a[0], tv = T * a[1];
             return mul(r.algebra, tu, tv) - T * (r.m().apply(tu, a[1]) + r.m().apply(tv, a[0]));
           }}};
}

std::vector<Condition> relative_rb_3lie_conditions(const InterMap& T, const RepBundle& r) {
  require_shape(T, r);
  (void)r.r();
  (void)r.algebra.br();
  const std::size_t m = r.module_dim();
  return {{"rb-3lie", {m, m, m}, [&T, &r](Args a) {
             const Vec tu = T * a[0], tv = T * a[1], tw = T * a[2];
             const BiRep& rho = r.r();
             return br3(r.algebra, tu, tv, tw) -
                    T * (rho.apply(tu, tv, a[2]) + rho.apply(tv, tw, a[0]) + rho.apply(tw, tu, a[1]));
           }}};
}

std::vector<Condition> relative_rb_conditions(const InterMap& T, const RepBundle& r) {
  auto out = relative_rb_comm_conditions(T, r);
  auto more = relative_rb_3lie_conditions(T, r);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return out;
}

CheckReport check_relative_rb_comm(const InterMap& T, const RepBundle& r, const CheckOptions& options) {
  return run_conditions("relative-rb-comm", relative_rb_comm_conditions(T, r), options);
}

CheckReport check_relative_rb_3lie(const InterMap& T, const RepBundle& r, const CheckOptions& options) {
  return run_conditions("relative-rb-3lie", relative_rb_3lie_conditions(T, r), options);
}

CheckReport check_relative_rb(const InterMap& T, const RepBundle& r, const CheckOptions& options) {
  return run_conditions("relative-rb", relative_rb_conditions(T, r), options);
}

AlgebraBundle induced_zinbiel(const InterMap& T, const RepBundle& r) {
  require_pass(check_relative_rb_comm(T, r), Errc::NotRelativeRB, "T fails the product identity");
  const std::size_t m = r.module_dim();
  AlgebraBundle out = make_bundle(m, r.algebra.name + "[zinbiel]");
  Tensor3 c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix a = r.m().at(T.column(i));
    for (std::size_t j = 0; j < m; ++j) c.set_entry(i, j, a.column(j));
  }
  out.product = std::move(c);
  return out;
}

AlgebraBundle induced_3prelie(const InterMap& T, const RepBundle& r) {
  require_pass(check_relative_rb_3lie(T, r), Errc::NotRelativeRB, "T fails the bracket identity");
  const std::size_t m = r.module_dim();
  AlgebraBundle out = make_bundle(m, r.algebra.name + "[3-pre-lie]");
  Tensor4 f(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix a = r.r().at(T.column(i), T.column(j));
      for (std::size_t k = 0; k < m; ++k) f.set_entry(i, j, k, a.column(k));
    }
  out.bracket = std::move(f);
  return out;
}

AlgebraBundle induced_pre_fmanifold(const InterMap& T, const RepBundle& r) {
  require_pass(check_relative_rb(T, r), Errc::NotRelativeRB, "T is not a relative Rota-Baxter operator");
  AlgebraBundle out = induced_zinbiel(T, r);
  out.bracket = induced_3prelie(T, r).bracket;
  out.name = r.algebra.name + "[pre]";
  return out;
}

AlgebraBundle rb_induced_pre(const InterMap& R, const AlgebraBundle& a) {
  require_square(R, a);
  const RepBundle ad = adjoint_rep(a);
  require_pass(check_relative_rb(R, ad), Errc::NotRotaBaxter, "R is not a Rota-Baxter operator");
  AlgebraBundle out = induced_pre_fmanifold(R, ad);
  out.basis_labels = a.basis_labels;
  return out;
}

AlgebraBundle invertible_rb_to_pre(const InterMap& T, const RepBundle& r) {
  require_shape(T, r);
  const Matrix Tinv = invert(T);
  require_pass(check_relative_rb(T, r), Errc::NotRelativeRB, "T is not a relative Rota-Baxter operator");
  return conjugated_pre(T, Tinv, r, r.algebra.name + "[pre]");
}

void require_skew(const BilinearForm& B) {
  if (!B.is_square() || B + B.transpose() != Matrix(B.rows(), B.cols()))
    throw Error(Errc::NotSkew, "bilinear form is not skew-symmetric");
}

namespace {

Rational form(const BilinearForm& B, const Vec& x, const Vec& y) { return dot(x, B * y); }

void require_form_shape(const BilinearForm& B, const AlgebraBundle& a) {
  if (B.rows() != a.dim || B.cols() != a.dim) throw Error(Errc::DimensionMismatch, "form size differs from bundle dim");
  require_skew(B);
}

}  // namespace

std::vector<Condition> cyclic_2cocycle_conditions(const BilinearForm& B, const AlgebraBundle& a) {
  require_form_shape(B, a);
  (void)a.prod();
  const std::size_t n = a.dim;
  return {{"cocycle", {n, n, n}, [&B, &a](Args v) {
             const Vec &x = v[0], &y = v[1], &z = v[2];
             return Vec{form(B, mul(a, x, y), z) + form(B, mul(a, y, z), x) + form(B, mul(a, z, x), y)};
           }}};
}

std::vector<Condition> symplectic_conditions(const BilinearForm& B, const AlgebraBundle& a) {
  require_form_shape(B, a);
  (void)a.br();
  const std::size_t n = a.dim;
  return {{"symplectic", {n, n, n, n}, [&B, &a](Args v) {
             const Vec &x = v[0], &y = v[1], &z = v[2], &u = v[3];
             return Vec{form(B, br3(a, x, y, z), u) - form(B, br3(a, x, y, u), z) +
                        form(B, br3(a, x, z, u), y) - form(B, br3(a, y, z, u), x)};
           }}};
}

CheckReport check_cyclic_2cocycle(const BilinearForm& B, const AlgebraBundle& a, const CheckOptions& options) {
  return run_conditions("cyclic-2-cocycle", cyclic_2cocycle_conditions(B, a), options);
}

CheckReport check_symplectic(const BilinearForm& B, const AlgebraBundle& a, const CheckOptions& options) {
  return run_conditions("symplectic", symplectic_conditions(B, a), options);
}

Matrix musical(const BilinearForm& B) { return B.transpose(); }

AlgebraBundle symplectic_induced_pre(const BilinearForm& B, const AlgebraBundle& a) {
  require_pass(check_coherence(a), Errc::NotCoherent, "algebra is not a coherence ternary F-manifold algebra");
  require_form_shape(B, a);
  require_pass(check_cyclic_2cocycle(B, a), Errc::NotSymplectic, "form is not a cyclic 2-cocycle");
  require_pass(check_symplectic(B, a), Errc::NotSymplectic, "form is not symplectic on the bracket");
  const Matrix sharp = musical(B);
  const Matrix T = invert(sharp);
  AlgebraBundle out = conjugated_pre(T, sharp, coadjoint_rep(a), a.name + "[symplectic-pre]");
  return out;
}

std::vector<Condition> nijenhuis_conditions(const InterMap& N, const AlgebraBundle& a) {
  require_square(N, a);
  if (!a.product && !a.bracket) throw Error(Errc::MissingTensor, "bundle has neither product nor bracket");
  const std::size_t n = a.dim;
  std::vector<Condition> out;
  if (a.product)
    out.push_back({"nij-comm", {n, n}, [&N, &a](Args v) {
                     const Vec nx = N * v[0], ny = N * v[1];
                     return mul(a, nx, ny) - N * (mul(a, nx, v[1]) + mul(a, v[0], ny) - N * mul(a, v[0], v[1]));
                   }});
  if (a.bracket)
    out.push_back({"nij-3lie", {n, n, n}, [&N, &a](Args v) {
                     const Vec &x = v[0], &y = v[1], &z = v[2];
                     const Vec nx = N * x, ny = N * y, nz = N * z;
                     const Vec deformed = br3(a, nx, ny, z) + br3(a, nx, y, nz) + br3(a, x, ny, nz) -
                                          N * (br3(a, nx, y, z) + br3(a, x, ny, z) + br3(a, x, y, nz)) +
                                          N * (N * br3(a, x, y, z));
                     return br3(a, nx, ny, nz) - N * deformed;
                   }});
  return out;
}

CheckReport check_nijenhuis(const InterMap& N, const AlgebraBundle& a, const CheckOptions& options) {
  return run_conditions("nijenhuis", nijenhuis_conditions(N, a), options);
}

AlgebraBundle deform_unchecked(const InterMap& N, const AlgebraBundle& a) {
  require_square(N, a);
  const std::size_t n = a.dim;
  AlgebraBundle out = a;
  out.name = a.name + "[N]";
  out.unit.reset();
  out.binary_bracket.reset();
  std::vector<Vec> e, ne;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(Vec::basis(n, i));
    ne.push_back(N.column(i));
  }
  if (a.product) {
    Tensor3 c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c.set_entry(i, j, mul(a, ne[i], e[j]) + mul(a, e[i], ne[j]) - N * mul(a, e[i], e[j]));
    out.product = std::move(c);
  }
  if (a.bracket) {
    Tensor4 f(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec &x = e[i], &y = e[j], &z = e[k], &nx = ne[i], &ny = ne[j], &nz = ne[k];
          f.set_entry(i, j, k,
                      br3(a, nx, ny, z) + br3(a, nx, y, nz) + br3(a, x, ny, nz) -
                          N * (br3(a, nx, y, z) + br3(a, x, ny, z) + br3(a, x, y, nz)) +
                          N * (N * br3(a, x, y, z)));
        }
    out.bracket = std::move(f);
  }
  return out;
}

AlgebraBundle deform(const InterMap& N, const AlgebraBundle& a) {
  require_pass(check_nijenhuis(N, a), Errc::NotNijenhuis, "operator is not Nijenhuis");
  return deform_unchecked(N, a);
}

InterMap lift_nijenhuis(const InterMap& T, const RepBundle& r) {
  require_shape(T, r);
  const std::size_t n = r.algebra.dim, m = r.module_dim();
  Matrix out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, n + j) = T(i, j);
  return out;
}

RepBundle induced_rep_on_A(const InterMap& T, const RepBundle& r) {
  const AlgebraBundle pre = induced_pre_fmanifold(T, r);
  const AlgebraBundle& a = r.algebra;
  const BiRep& rho = r.r();
  const LinRep& mu = r.m();
  const std::size_t n = a.dim, m = r.module_dim();

  RepBundle out;
  out.algebra = subadjacent_ternary_fmanifold(pre);
  LinRep mu_t{n, {}};
  BiRep rho_t{n, std::vector<std::vector<Matrix>>(m)};
  for (std::size_t u = 0; u < m; ++u) {
    const Vec eu = Vec::basis(m, u);
    const Vec tu = T.column(u);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec x = Vec::basis(n, j);
      cols.push_back(mul(a, tu, x) - T * mu.apply(x, eu));
    }
    mu_t.mats.push_back(Matrix::from_columns(n, cols));
    for (std::size_t v = 0; v < m; ++v) {
      const Vec ev = Vec::basis(m, v);
      const Vec tv = T.column(v);
      std::vector<Vec> rcols;
      for (std::size_t j = 0; j < n; ++j) {
        const Vec x = Vec::basis(n, j);
        rcols.push_back(br3(a, tu, tv, x) - T * (rho.apply(tv, x, eu) + rho.apply(x, tu, ev)));
      }
      rho_t.mats[u].push_back(Matrix::from_columns(n, rcols));
    }
  }
  out.mu = std::move(mu_t);
  out.rho = std::move(rho_t);
  return out;
}

}  // namespace ternalg
