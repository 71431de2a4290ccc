#include "ternalg/catalog.hpp"

#include <algorithm>
#include <array>

namespace ternalg {

namespace {

int perm_sign(std::array<std::size_t, 3> p) {
  int s = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Sets [x_a,x_b,x_c] = value·e_d for every ordering of (a,b,c), with the alternating sign.
void set_alternating(Tensor4& t, std::array<std::size_t, 3> abc, std::size_t d, const Rational& value) {
  std::sort(abc.begin(), abc.end());
  do {
    t(abc[0], abc[1], abc[2], d) = perm_sign(abc) * value;
  } while (std::next_permutation(abc.begin(), abc.end()));
}

Matrix form_e1e2(std::size_t n) {
  Matrix b(n, n);
  b(0, 1) = Rational(1);
  b(1, 0) = Rational(-1);
  return b;
}

Document algebra_doc(AlgebraBundle a) { return Document{std::move(a), {}, {}, {}, {}}; }

Document rb_doc(std::size_t n) {
  Document d = algebra_doc(trunc(n));
  d.algebra.name = "r_int" + std::to_string(n);
  d.rep = adjoint_rep(d.algebra);
  d.maps.push_back({"R", r_int(n)});
  return d;
}

}  // namespace

AlgebraBundle fil4() {
  AlgebraBundle a = make_bundle(4, "fil4");
  Tensor4 t(4);
  set_alternating(t, {0, 1, 2}, 3, Rational(1));
  set_alternating(t, {0, 1, 3}, 2, Rational(1));
  set_alternating(t, {0, 2, 3}, 1, Rational(1));
  set_alternating(t, {1, 2, 3}, 0, Rational(1));
  a.bracket = std::move(t);
  a.product = Tensor3(4);
  return a;
}

AlgebraBundle trunc(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidBundle, "trunc needs n >= 1");
  AlgebraBundle a = make_bundle(n, "trunc" + std::to_string(n));
  a.basis_labels.clear();
  for (std::size_t k = 0; k < n; ++k)
    a.basis_labels.push_back(k == 0 ? "1" : k == 1 ? "t" : "t^" + std::to_string(k));
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c(i, j, i + j) = Rational(1);
  a.product = std::move(c);
  a.bracket = Tensor4(n);
  a.unit = Vec::basis(n, 0);
  return a;
}

InterMap r_int(std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidBundle, "r_int needs n >= 2");
  Matrix r(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) r(k + 1, k) = Rational(1, static_cast<std::int64_t>(k + 1));
  return r;
}

InterMap mult_by_t(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = Rational(1);
  return m;
}

Document heisenberg_trace() {
  Document d = algebra_doc(make_bundle(3, "heisenberg_trace"));
  Tensor3 c(3);
  c(0, 1, 2) = Rational(1);
  c(1, 0, 2) = Rational(-1);
  d.algebra.binary_bracket = std::move(c);
  d.algebra.product = Tensor3(3);
  d.trace = TraceFunctional{Vec::basis(3, 0)};
  return d;
}

Document gl2_trace() {
  Document d = algebra_doc(make_bundle(4, "gl2_trace"));
  d.algebra.basis_labels = {"h", "e", "f", "z"};
  Tensor3 c(4);
  auto set = [&c](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    c(i, j, k) = Rational(v);
    c(j, i, k) = Rational(-v);
  };
  set(0, 1, 1, 2);   // [h,e] = 2e
  set(0, 2, 2, -2);  // [h,f] = -2f
  set(1, 2, 0, 1);   // [e,f] = h
  d.algebra.binary_bracket = std::move(c);
  d.algebra.product = Tensor3(4);
  d.trace = TraceFunctional{Vec::basis(4, 3)};
  return d;
}

RepBundle fil4_adjoint() { return adjoint_rep(fil4()); }

InterMap fil4_rb() {
  Matrix t(4, 4);
  t(0, 2) = Rational(1);
  t(1, 3) = Rational(1);
  return t;
}

Document symplectic2() {
  AlgebraBundle a = make_bundle(2, "symplectic2");
  a.product = Tensor3(2);
  a.bracket = Tensor4(2);
  Document d = algebra_doc(std::move(a));
  d.form = form_e1e2(2);
  return d;
}

Document trunc2_cocycle() {
  Document d = algebra_doc(trunc(2));
  d.algebra.name = "trunc2_cocycle";
  d.form = form_e1e2(2);
  return d;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back({"fil4", "4-dim 3-Lie algebra with zero product", [] { return algebra_doc(fil4()); },
                   {{"3-lie"}, {"comm-assoc"}, {"ternary-f-manifold"}, {"coherence"}}});
    for (std::size_t n = 1; n <= 4; ++n)
      out.push_back({"trunc" + std::to_string(n), "truncated polynomials k[t]/(t^" + std::to_string(n) + ")",
                     [n] { return algebra_doc(trunc(n)); },
                     {{"comm-assoc"}, {"ternary-f-manifold"}}});
    for (std::size_t n = 3; n <= 5; ++n)
      out.push_back({"r_int" + std::to_string(n),
                     "integration Rota-Baxter operator R on trunc" + std::to_string(n) + " with its adjoint module",
                     [n] { return rb_doc(n); },
                     {{"relative-rb"}, {"ternary-fmanifold-rep", true}}});
    out.push_back({"heisenberg_trace", "Heisenberg Lie algebra with trace e1*", heisenberg_trace,
                   {{"lie"}, {"trace"}}});
    out.push_back({"gl2_trace", "gl(2) with trace dual to the central element", gl2_trace, {{"lie"}, {"trace"}}});
    out.push_back({"fil4_adjoint", "fil4 with its adjoint module",
                   [] {
                     Document d = algebra_doc(fil4());
                     d.algebra.name = "fil4_adjoint";
                     d.rep = adjoint_rep(d.algebra);
                     return d;
                   },
                   {{"ternary-fmanifold-rep", true}}});
    out.push_back({"fil4_coadjoint", "fil4 with its coadjoint module",
                   [] {
                     Document d = algebra_doc(fil4());
                     d.algebra.name = "fil4_coadjoint";
                     d.rep = coadjoint_rep(d.algebra);
                     return d;
                   },
                   {{"ternary-fmanifold-rep", true}, {"dual-conditions", true}}});
    out.push_back({"fil4_rb", "relative Rota-Baxter operator T on the adjoint module of fil4",
                   [] {
                     Document d = algebra_doc(fil4());
                     d.algebra.name = "fil4_rb";
                     d.rep = adjoint_rep(d.algebra);
                     d.maps.push_back({"T", fil4_rb()});
                     return d;
                   },
                   {{"relative-rb"}}});
    out.push_back({"nijenhuis_t3", "multiplication by t on trunc3", [] {
                     Document d = algebra_doc(trunc(3));
                     d.algebra.name = "nijenhuis_t3";
                     d.maps.push_back({"N", mult_by_t(3)});
                     return d;
                   },
                   {{"nijenhuis"}}});
    out.push_back({"trunc3_non_nijenhuis", "trunc3 with N(1) = t, not a Nijenhuis operator", [] {
                     Document d = algebra_doc(trunc(3));
                     d.algebra.name = "trunc3_non_nijenhuis";
                     Matrix n(3, 3);
                     n(1, 0) = Rational(1);
                     d.maps.push_back({"N", n});
                     return d;
                   },
                   {{"nijenhuis", false, false}}});
    out.push_back({"symplectic2", "2-dim zero algebra with the standard symplectic form", symplectic2,
                   {{"cocycle"}, {"symplectic"}, {"coherence"}}});
    out.push_back({"trunc2_cocycle", "trunc2 with B(e1,e2) = 1, failing the cyclic cocycle identity",
                   trunc2_cocycle, {{"cocycle", false, false}}});
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(Errc::UnknownName, "no catalog entry named '" + name + "'");
}

}  // namespace ternalg
