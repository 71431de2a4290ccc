#include "ternalg/constructions.hpp"

#include "ternalg/structures.hpp"

namespace ternalg {

namespace {

std::vector<std::string> concat_labels(const AlgebraBundle& a, const AlgebraBundle& b) {
  std::vector<std::string> out = a.basis_labels;
  out.insert(out.end(), b.basis_labels.begin(), b.basis_labels.end());
  return out;
}

}  // namespace

AlgebraBundle direct_sum(const AlgebraBundle& a, const AlgebraBundle& b) {
  const Tensor3& pa = a.prod();
  const Tensor3& pb = b.prod();
  const Tensor4& ba = a.br();
  const Tensor4& bb = b.br();
  const std::size_t n = a.dim, m = b.dim, d = n + m;

  AlgebraBundle out = make_bundle(d, a.name + "+" + b.name);
  out.basis_labels = concat_labels(a, b);
  Tensor3 p(d);
  Tensor4 t(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        p(i, j, k) = pa(i, j, k);
        for (std::size_t l = 0; l < n; ++l) t(i, j, k, l) = ba(i, j, k, l);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        p(n + i, n + j, n + k) = pb(i, j, k);
        for (std::size_t l = 0; l < m; ++l) t(n + i, n + j, n + k, n + l) = bb(i, j, k, l);
      }
  out.product = std::move(p);
  out.bracket = std::move(t);
  if (a.unit && b.unit) out.unit = concat(*a.unit, *b.unit);
  return out;
}

AlgebraBundle tensor_with_comm_assoc(const AlgebraBundle& a, const AlgebraBundle& b) {
  const Tensor3& pa = a.prod();
  const Tensor4& ba = a.br();
  const Tensor3& pb = b.prod();
  const std::size_t n = a.dim, m = b.dim, d = n * m;
  auto ix = [m](std::size_t i, std::size_t j) { return i * m + j; };

  AlgebraBundle out = make_bundle(d, a.name + "(x)" + b.name);
  out.basis_labels.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.basis_labels.push_back(a.basis_labels[i] + "⊗" + b.basis_labels[j]);

  // y1·y2·y3 structure constants of b
  std::vector<Vec> triple(m * m * m);
  for (std::size_t j1 = 0; j1 < m; ++j1)
    for (std::size_t j2 = 0; j2 < m; ++j2) {
      const Vec y12 = pb.entry(j1, j2);
      for (std::size_t j3 = 0; j3 < m; ++j3)
        triple[(j1 * m + j2) * m + j3] = apply_bilinear(pb, y12, Vec::basis(m, j3));
    }

  Tensor3 p(d);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          for (std::size_t i3 = 0; i3 < n; ++i3) {
            if (pa(i1, i2, i3).is_zero()) continue;
            for (std::size_t j3 = 0; j3 < m; ++j3)
              p(ix(i1, j1), ix(i2, j2), ix(i3, j3)) = pa(i1, i2, i3) * pb(j1, j2, j3);
          }

  Tensor4 t(d);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i3 = 0; i3 < n; ++i3)
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          const Rational& f = ba(i1, i2, i3, i4);
          if (f.is_zero()) continue;
          for (std::size_t j1 = 0; j1 < m; ++j1)
            for (std::size_t j2 = 0; j2 < m; ++j2)
              for (std::size_t j3 = 0; j3 < m; ++j3) {
                const Vec& y = triple[(j1 * m + j2) * m + j3];
                for (std::size_t j4 = 0; j4 < m; ++j4)
                  if (!y[j4].is_zero()) t(ix(i1, j1), ix(i2, j2), ix(i3, j3), ix(i4, j4)) = f * y[j4];
              }
        }
  out.product = std::move(p);
  out.bracket = std::move(t);
  if (a.unit && b.unit) {
    Vec u(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) u[ix(i, j)] = (*a.unit)[i] * (*b.unit)[j];
    out.unit = std::move(u);
  }
  return out;
}

AlgebraBundle fix_slot_bracket(const AlgebraBundle& a, const Vec& anchor) {
  const Tensor4& f = a.br();
  if (anchor.size() != a.dim) throw Error(Errc::DimensionMismatch, "anchor length differs from bundle dim");
  AlgebraBundle out = a;
  out.name = a.name + "[anchored]";
  out.bracket.reset();
  (void)a.prod();
  Tensor3 c(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      c.set_entry(i, j, apply_trilinear(f, Vec::basis(a.dim, i), anchor, Vec::basis(a.dim, j)));
  out.binary_bracket = std::move(c);
  return out;
}

std::vector<Condition> trace_conditions(const AlgebraBundle& a, const TraceFunctional& tau) {
  (void)a.br2();
  if (tau.row.size() != a.dim) throw Error(Errc::DimensionMismatch, "trace length differs from bundle dim");
  return {{"trace", {a.dim, a.dim}, [&a, &tau](std::span<const Vec> x) {
             return Vec{tau(br2(a, x[0], x[1]))};
           }}};
}

CheckReport check_trace(const AlgebraBundle& a, const TraceFunctional& tau, const CheckOptions& options) {
  return run_conditions("trace", trace_conditions(a, tau), options);
}

AlgebraBundle trace_induced(const AlgebraBundle& a, const TraceFunctional& tau) {
  require_pass(check_trace(a, tau), Errc::NotATrace, "functional does not vanish on brackets");
  const std::size_t n = a.dim;
  AlgebraBundle out = a;
  out.name = a.name + "[trace]";
  out.binary_bracket.reset();
  Tensor4 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec v(n);
        v.axpy(tau.row[i], a.br2().entry(j, k));
        v.axpy(-tau.row[j], a.br2().entry(i, k));
        v.axpy(tau.row[k], a.br2().entry(i, j));
        t.set_entry(i, j, k, v);
      }
  out.bracket = std::move(t);
  return out;
}

std::vector<Condition> induced_conditions(const AlgebraBundle& a, const TraceFunctional& tau) {
  (void)a.prod();
  (void)a.br2();
  if (tau.row.size() != a.dim) throw Error(Errc::DimensionMismatch, "trace length differs from bundle dim");
  const std::size_t n = a.dim;
  return {{"induced", {n, n, n, n, n}, [&a, &tau](std::span<const Vec> x) {
             const Vec lz = leibnizator2(a, x[2], x[3], x[4]);
             return tau(mul(a, x[0], x[1])) * lz - tau(x[1]) * mul(a, x[0], lz) -
                    tau(x[0]) * mul(a, x[1], lz);
           }}};
}

CheckReport check_induced_condition(const AlgebraBundle& a, const TraceFunctional& tau,
                                    const CheckOptions& options) {
  return run_conditions("induced-condition", induced_conditions(a, tau), options);
}

AlgebraBundle symmetrize_zinbiel(const AlgebraBundle& d) {
  const Tensor3& c = d.prod();
  AlgebraBundle out = d;
  out.name = d.name + "[sym]";
  Tensor3 s(d.dim);
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      for (std::size_t k = 0; k < d.dim; ++k) s(i, j, k) = c(i, j, k) + c(j, i, k);
  out.product = std::move(s);
  out.bracket.reset();
  out.unit.reset();
  return out;
}

AlgebraBundle subadjacent_commutator(const AlgebraBundle& s) {
  const Tensor4& f = s.br();
  const std::size_t n = s.dim;
  AlgebraBundle out = s;
  out.name = s.name + "[C]";
  out.product.reset();
  out.unit.reset();
  Tensor4 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t(i, j, k, l) = f(i, j, k, l) + f(j, k, i, l) + f(k, i, j, l);
  out.bracket = std::move(t);
  return out;
}

AlgebraBundle subadjacent_ternary_fmanifold(const AlgebraBundle& p) {
  (void)p.prod();
  AlgebraBundle out = subadjacent_commutator(p);
  out.product = symmetrize_zinbiel(p).product;
  out.name = p.name + "[c]";
  return out;
}

}  // namespace ternalg
