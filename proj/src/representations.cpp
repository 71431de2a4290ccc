#include "ternalg/representations.hpp"

#include "ternalg/constructions.hpp"
#include "ternalg/structures.hpp"

namespace ternalg {

Matrix LinRep::at(const Vec& x) const {
  if (x.size() != mats.size()) throw Error(Errc::DimensionMismatch, "LinRep argument length");
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * mats[i];
  return out;
}

Vec LinRep::apply(const Vec& x, const Vec& u) const {
  if (x.size() != mats.size()) throw Error(Errc::DimensionMismatch, "LinRep argument length");
  Vec out(module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.axpy(x[i], mats[i] * u);
  return out;
}

Matrix BiRep::at(const Vec& x, const Vec& y) const {
  if (x.size() != mats.size() || y.size() != mats.size())
    throw Error(Errc::DimensionMismatch, "BiRep argument length");
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out += (x[i] * y[j]) * mats[i][j];
  }
  return out;
}

Vec BiRep::apply(const Vec& x, const Vec& y, const Vec& u) const {
  if (x.size() != mats.size() || y.size() != mats.size())
    throw Error(Errc::DimensionMismatch, "BiRep argument length");
  Vec out(module_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out.axpy(x[i] * y[j], mats[i][j] * u);
  }
  return out;
}

std::size_t RepBundle::module_dim() const {
  if (rho) return rho->module_dim;
  if (mu) return mu->module_dim;
  if (lie_rho) return lie_rho->module_dim;
  return 0;
}

const BiRep& RepBundle::r() const {
  if (!rho) throw Error(Errc::MissingRep, "representation has no ternary action");
  return *rho;
}

const LinRep& RepBundle::m() const {
  if (!mu) throw Error(Errc::MissingRep, "representation has no product action");
  return *mu;
}

const LinRep& RepBundle::lr() const {
  if (!lie_rho) throw Error(Errc::MissingRep, "representation has no binary bracket action");
  return *lie_rho;
}

void RepBundle::validate() const {
  algebra.validate();
  const std::size_t n = algebra.dim, m = module_dim();
  if (m > dimension_cap()) throw Error(Errc::DimensionCap, "module dimension exceeds cap");
  auto check_lin = [&](const LinRep& l, const char* what) {
    if (l.module_dim != m || l.mats.size() != n)
      throw Error(Errc::InvalidBundle, std::string(what) + " has the wrong shape");
    for (const auto& a : l.mats)
      if (a.rows() != m || a.cols() != m) throw Error(Errc::InvalidBundle, std::string(what) + " matrix size");
  };
  if (mu) check_lin(*mu, "mu");
  if (lie_rho) check_lin(*lie_rho, "lie_rho");
  if (rho) {
    if (rho->module_dim != m || rho->mats.size() != n) throw Error(Errc::InvalidBundle, "rho has the wrong shape");
    for (const auto& row : rho->mats) {
      if (row.size() != n) throw Error(Errc::InvalidBundle, "rho has the wrong shape");
      for (const auto& a : row)
        if (a.rows() != m || a.cols() != m) throw Error(Errc::InvalidBundle, "rho matrix size");
    }
  }
}

LinRep zero_linrep(std::size_t n, std::size_t m) { return {m, std::vector<Matrix>(n, Matrix(m, m))}; }

BiRep zero_birep(std::size_t n, std::size_t m) {
  return {m, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n, Matrix(m, m)))};
}

namespace {

struct RepKindEntry {
  RepKind kind;
  std::string_view name;
};

constexpr RepKindEntry kRepKinds[] = {
    {RepKind::CommAssoc, "comm-assoc-rep"},
    {RepKind::ThreeLie, "three-lie-rep"},
    {RepKind::Lie, "lie-rep"},
    {RepKind::FManifold, "fmanifold-rep"},
    {RepKind::TernaryFManifold, "ternary-fmanifold-rep"},
    {RepKind::DualConditions, "dual-conditions"},
};

using Args = std::span<const Vec>;

// Binary F-manifold module maps.
Vec bl1(const RepBundle& r, const Vec& x, const Vec& y, const Vec& u) {
  const auto &rho = r.lr(), &mu = r.m();
  return rho.apply(x, mu.apply(y, u)) - mu.apply(y, rho.apply(x, u)) - mu.apply(br2(r.algebra, x, y), u);
}

Vec bl2(const RepBundle& r, const Vec& x, const Vec& y, const Vec& u) {
  const auto &rho = r.lr(), &mu = r.m();
  return mu.apply(x, rho.apply(y, u)) + mu.apply(y, rho.apply(x, u)) - rho.apply(mul(r.algebra, x, y), u);
}

void add_mu_hom(std::vector<Condition>& out, const RepBundle& r, std::size_t n, std::size_t m) {
  (void)r.m();
  (void)r.algebra.prod();
  out.push_back({"mu-hom", {n, n, m}, [&r](Args a) {
                   const auto& mu = r.m();
                   return mu.apply(mul(r.algebra, a[0], a[1]), a[2]) - mu.apply(a[0], mu.apply(a[1], a[2]));
                 }});
}

void add_three_lie(std::vector<Condition>& out, const RepBundle& r, std::size_t n, std::size_t m) {
  (void)r.r();
  (void)r.algebra.br();
  out.push_back({"rho-skew", {n, n, m}, [&r](Args a) {
                   return r.r().apply(a[0], a[1], a[2]) + r.r().apply(a[1], a[0], a[2]);
                 }});
  out.push_back({"rho-i", {n, n, n, n, m}, [&r](Args a) {
                   const auto& rho = r.r();
                   const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &u = a[4];
                   return rho.apply(x1, x2, rho.apply(x3, x4, u)) - rho.apply(x3, x4, rho.apply(x1, x2, u)) -
                          rho.apply(br3(r.algebra, x1, x2, x3), x4, u) +
                          rho.apply(br3(r.algebra, x1, x2, x4), x3, u);
                 }});
  out.push_back({"rho-ii", {n, n, n, n, m}, [&r](Args a) {
                   const auto& rho = r.r();
                   const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &u = a[4];
                   return rho.apply(br3(r.algebra, x1, x2, x3), x4, u) - rho.apply(x1, x2, rho.apply(x3, x4, u)) -
                          rho.apply(x2, x3, rho.apply(x1, x4, u)) - rho.apply(x3, x1, rho.apply(x2, x4, u));
                 }});
}

void add_lie(std::vector<Condition>& out, const RepBundle& r, std::size_t n, std::size_t m) {
  (void)r.lr();
  (void)r.algebra.br2();
  out.push_back({"lie-rep", {n, n, m}, [&r](Args a) {
                   const auto& rho = r.lr();
                   return rho.apply(br2(r.algebra, a[0], a[1]), a[2]) - rho.apply(a[0], rho.apply(a[1], a[2])) +
                          rho.apply(a[1], rho.apply(a[0], a[2]));
                 }});
}

}  // namespace

std::string_view rep_kind_name(RepKind kind) {
  for (const auto& e : kRepKinds)
    if (e.kind == kind) return e.name;
  throw Error(Errc::UnknownName, "unknown representation kind");
}

RepKind parse_rep_kind(std::string_view name) {
  for (const auto& e : kRepKinds)
    if (e.name == name) return e.kind;
  throw Error(Errc::UnknownName, "unknown representation kind '" + std::string(name) + "'");
}

Vec l1(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  const BiRep& rho = r.r();
  const LinRep& mu = r.m();
  return rho.apply(x, y, mu.apply(z, u)) - mu.apply(z, rho.apply(x, y, u)) -
         mu.apply(br3(r.algebra, x, y, z), u);
}

Vec l2(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  const BiRep& rho = r.r();
  const LinRep& mu = r.m();
  return mu.apply(z, rho.apply(x, y, u)) + mu.apply(y, rho.apply(x, z, u)) -
         rho.apply(x, mul(r.algebra, y, z), u);
}

Vec l3(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  const BiRep& rho = r.r();
  const LinRep& mu = r.m();
  return rho.apply(x, y, mu.apply(z, u)) + rho.apply(x, z, mu.apply(y, u)) -
         rho.apply(x, mul(r.algebra, y, z), u);
}

std::vector<Condition> rep_conditions(RepKind kind, const RepBundle& r) {
  r.validate();
  const std::size_t n = r.algebra.dim, m = r.module_dim();
  std::vector<Condition> out;
  const std::vector<std::size_t> four{n, n, n, n, m};
  switch (kind) {
    case RepKind::CommAssoc:
      add_mu_hom(out, r, n, m);
      break;
    case RepKind::ThreeLie:
      add_three_lie(out, r, n, m);
      break;
    case RepKind::Lie:
      add_lie(out, r, n, m);
      break;
    case RepKind::FManifold:
      add_mu_hom(out, r, n, m);
      add_lie(out, r, n, m);
      out.push_back({"brep1", {n, n, n, m}, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x = a[0], &y = a[1], &z = a[2], &u = a[3];
                       return bl1(r, mul(r.algebra, x, y), z, u) - mu.apply(x, bl1(r, y, z, u)) -
                              mu.apply(y, bl1(r, x, z, u));
                     }});
      out.push_back({"brep2", {n, n, n, m}, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x = a[0], &y = a[1], &z = a[2], &u = a[3];
                       return mu.apply(leibnizator2(r.algebra, x, y, z), u) - bl2(r, y, z, mu.apply(x, u)) +
                              mu.apply(x, bl2(r, y, z, u));
                     }});
      break;
    case RepKind::TernaryFManifold:
      add_mu_hom(out, r, n, m);
      add_three_lie(out, r, n, m);
      out.push_back({"rep1", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &u = a[4];
                       return l1(r, mul(r.algebra, x1, x2), x3, x4, u) - mu.apply(x1, l1(r, x2, x3, x4, u)) -
                              mu.apply(x2, l1(r, x1, x3, x4, u));
                     }});
      out.push_back({"rep3", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &u = a[4];
                       return l2(r, mul(r.algebra, x1, x2), x3, x4, u) - mu.apply(x1, l2(r, x2, x3, x4, u)) -
                              mu.apply(x2, l2(r, x1, x3, x4, u));
                     }});
      out.push_back({"rep2", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &u = a[4];
                       return mu.apply(leibnizator3(r.algebra, x1, x2, x3, x4), u) -
                              mu.apply(x1, l2(r, x2, x3, x4, u)) + l2(r, x2, x3, x4, mu.apply(x1, u));
                     }});
      break;
    case RepKind::DualConditions:
      (void)r.r();
      (void)r.m();
      out.push_back({"corep1", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x = a[0], &y = a[1], &z = a[2], &t = a[3], &u = a[4];
                       return l1(r, mul(r.algebra, x, y), z, t, u) - l1(r, y, z, t, mu.apply(x, u)) -
                              l1(r, x, z, t, mu.apply(y, u));
                     }});
      out.push_back({"corep2", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x = a[0], &y = a[1], &z = a[2], &t = a[3], &u = a[4];
                       return l3(r, mul(r.algebra, x, y), z, t, u) - l3(r, y, z, t, mu.apply(x, u)) -
                              l3(r, x, z, t, mu.apply(y, u));
                     }});
      out.push_back({"corep3", four, [&r](Args a) {
                       const auto& mu = r.m();
                       const Vec &x = a[0], &y = a[1], &z = a[2], &t = a[3], &u = a[4];
                       return mu.apply(leibnizator3(r.algebra, x, y, z, t), u) - mu.apply(x, l3(r, y, z, t, u)) +
                              l3(r, y, z, t, mu.apply(x, u));
                     }});
      break;
  }
  return out;
}

CheckReport check_representation(RepKind kind, const RepBundle& r, const CheckOptions& options) {
  return run_conditions(std::string(rep_kind_name(kind)), rep_conditions(kind, r), options);
}

RepBundle adjoint_rep(const AlgebraBundle& a) {
  const Tensor3& p = a.prod();
  const Tensor4& f = a.br();
  const std::size_t n = a.dim;
  RepBundle r;
  r.algebra = a;
  LinRep mu{n, {}};
  BiRep rho{n, std::vector<std::vector<Matrix>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = Vec::basis(n, i);
    mu.mats.push_back(left_mult_matrix(p, ei));
    for (std::size_t j = 0; j < n; ++j) rho.mats[i].push_back(bracket_matrix(f, ei, Vec::basis(n, j)));
  }
  r.mu = std::move(mu);
  r.rho = std::move(rho);
  return r;
}

RepBundle dual_rep(const RepBundle& r) {
  RepBundle d;
  d.algebra = r.algebra;
  if (r.rho) {
    BiRep rho = *r.rho;
    for (auto& row : rho.mats)
      for (auto& a : row) a = -a.transpose();
    d.rho = std::move(rho);
  }
  if (r.mu) {
    LinRep mu = *r.mu;
    for (auto& a : mu.mats) a = a.transpose();
    d.mu = std::move(mu);
  }
  if (r.lie_rho) {
    LinRep lr = *r.lie_rho;
    for (auto& a : lr.mats) a = -a.transpose();
    d.lie_rho = std::move(lr);
  }
  return d;
}

RepBundle coadjoint_rep(const AlgebraBundle& a) { return dual_rep(adjoint_rep(a)); }

std::vector<Condition> coherence_conditions(const AlgebraBundle& a) {
  std::vector<Condition> out = axiom_conditions(StructureKind::TernaryFManifold, a);
  const std::vector<std::size_t> five(5, a.dim);
  out.push_back({"coh1", five, [&a](Args v) {
                   const Vec &x = v[0], &y = v[1], &z = v[2], &t = v[3], &u = v[4];
                   return leibnizator3(a, mul(a, x, y), z, t, u) - leibnizator3(a, y, z, t, mul(a, x, u)) -
                          leibnizator3(a, x, z, t, mul(a, y, u));
                 }});
  out.push_back({"coh2", five, [&a](Args v) {
                   const Vec &x = v[0], &y = v[1], &z = v[2], &t = v[3], &u = v[4];
                   return k_op(a, mul(a, x, y), z, t, u) - k_op(a, y, z, t, mul(a, x, u)) -
                          k_op(a, x, z, t, mul(a, y, u));
                 }});
  out.push_back({"coh3", five, [&a](Args v) {
                   const Vec &x = v[0], &y = v[1], &z = v[2], &t = v[3], &u = v[4];
                   return mul(a, leibnizator3(a, x, y, z, t), u) - mul(a, x, k_op(a, y, z, t, u)) +
                          k_op(a, y, z, t, mul(a, x, u));
                 }});
  return out;
}

CheckReport check_coherence(const AlgebraBundle& a, const CheckOptions& options) {
  return run_conditions("coherence", coherence_conditions(a), options);
}

AlgebraBundle semidirect(const RepBundle& r) {
  r.validate();
  const AlgebraBundle& a = r.algebra;
  const BiRep& rho = r.r();
  const LinRep& mu = r.m();
  const Tensor3& p = a.prod();
  const Tensor4& f = a.br();
  const std::size_t n = a.dim, m = r.module_dim(), d = n + m;

  AlgebraBundle out = make_bundle(d, a.name + "+V");
  out.basis_labels = a.basis_labels;
  for (std::size_t k = 0; k < m; ++k) out.basis_labels.push_back("v" + std::to_string(k + 1));

  Tensor3 c(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = p(i, j, k);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) {
        // e_i · v_k = v_k · e_i = μ(e_i) v_k
        c(i, n + k, n + l) = mu.mats[i](l, k);
        c(n + k, i, n + l) = mu.mats[i](l, k);
      }
  }

  Tensor4 t(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t(i, j, k, l) = f(i, j, k, l);
      const Matrix& a_ij = rho.mats[i][j];
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const Rational& v = a_ij(l, k);
          if (v.is_zero()) continue;
          t(i, j, n + k, n + l) += v;   // [x1,x2,v3] = ρ(x1,x2)v3
          t(i, n + k, j, n + l) -= v;   // [x1,v2,x3] = -ρ(x1,x3)v2
          t(n + k, i, j, n + l) += v;   // [v1,x2,x3] = ρ(x2,x3)v1
        }
    }
  out.product = std::move(c);
  out.bracket = std::move(t);
  return out;
}

RepBundle fix_slot_rep(const RepBundle& r, const Vec& anchor) {
  const BiRep& rho = r.r();
  RepBundle out;
  out.algebra = fix_slot_bracket(r.algebra, anchor);
  out.mu = r.mu;
  LinRep lr{rho.module_dim, {}};
  for (std::size_t i = 0; i < r.algebra.dim; ++i) lr.mats.push_back(rho.at(Vec::basis(r.algebra.dim, i), anchor));
  out.lie_rho = std::move(lr);
  return out;
}

RepBundle rep_of_subadjacent(const AlgebraBundle& p) {
  const Tensor3& zin = p.prod();
  const Tensor4& pre = p.br();
  const std::size_t n = p.dim;
  RepBundle r;
  r.algebra = subadjacent_ternary_fmanifold(p);
  LinRep mu{n, {}};
  BiRep rho{n, std::vector<std::vector<Matrix>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = Vec::basis(n, i);
    mu.mats.push_back(left_mult_matrix(zin, ei));
    for (std::size_t j = 0; j < n; ++j) rho.mats[i].push_back(bracket_matrix(pre, ei, Vec::basis(n, j)));
  }
  r.mu = std::move(mu);
  r.rho = std::move(rho);
  return r;
}

}  // namespace ternalg
