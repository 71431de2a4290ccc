#include <doctest.h>

#include "support.hpp"

using namespace ternalg;
using namespace testsupport;

namespace {

AlgebraBundle zero_algebra(std::size_t n) {
  AlgebraBundle a = make_bundle(n);
  a.product = Tensor3(n);
  a.bracket = Tensor4(n);
  return a;
}

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

// Relative RB instances used across cases.
std::vector<std::pair<Matrix, RepBundle>> rb_instances() {
  return {{r_int(3), adjoint_rep(ternalg::trunc(3))},
          {r_int(4), adjoint_rep(ternalg::trunc(4))},
          {r_int(5), adjoint_rep(ternalg::trunc(5))},
          {fil4_rb(), fil4_adjoint()}};
}

}  // namespace

TEST_CASE("check_relative_rb_comm") {
  const RepBundle r = adjoint_rep(ternalg::trunc(3));
  CHECK(check_relative_rb_comm(Matrix(3, 3), r).pass);
  CHECK(check_relative_rb_comm(r_int(3), r).pass);
  const Matrix R = r_int(3);
  CHECK(mul(ternalg::trunc(3), R * e(3, 0), R * e(3, 0)) == e(3, 2));
  CHECK(R * (Rational(2) * e(3, 1)) == e(3, 2));
  CHECK(check_relative_rb_comm(r_int(4), adjoint_rep(ternalg::trunc(4))).pass);

  const CheckReport id = check_relative_rb_comm(Matrix::identity(3), r);
  REQUIRE_FALSE(id.pass);
  CHECK(id.counterexamples[0].indices == std::vector<std::size_t>{0, 0});
  CHECK(id.counterexamples[0].residual == -e(3, 0));  // 1·1 - (1 + 1)
  CHECK(error_code([&] { (void)check_relative_rb_comm(Matrix(2, 3), r); }) == Errc::DimensionMismatch);
}

TEST_CASE("check_relative_rb_3lie") {
  CHECK(check_relative_rb_3lie(Matrix(4, 4), fil4_adjoint()).pass);
  for (const AlgebraBundle& p : {induced_pre_fmanifold(fil4_rb(), fil4_adjoint()),
                                 induced_pre_fmanifold(r_int(4), adjoint_rep(ternalg::trunc(4)))}) {
    const RepBundle r = rep_of_subadjacent(p);
    CHECK(check_relative_rb_3lie(Matrix::identity(p.dim), r).pass);
    CHECK(check_relative_rb(Matrix::identity(p.dim), r).pass);
  }
  std::mt19937_64 rng(53);
  const CheckReport bad = check_relative_rb_3lie(random_matrix(rng, 4, 4), fil4_adjoint());
  REQUIRE_FALSE(bad.pass);
  CHECK(bad.counterexamples[0].indices.size() == 3);
}

TEST_CASE("check_relative_rb conjunction") {
  CHECK(check_relative_rb(Matrix(4, 4), fil4_adjoint()).pass);
  for (const auto& [T, r] : rb_instances()) CHECK(check_relative_rb(T, r).pass);
  // Identity on trunc3's adjoint passes the (zero) bracket part but fails the product part.
  const RepBundle r = adjoint_rep(ternalg::trunc(3));
  CHECK(check_relative_rb_3lie(Matrix::identity(3), r).pass);
  CHECK_FALSE(check_relative_rb_comm(Matrix::identity(3), r).pass);
  CHECK_FALSE(check_relative_rb(Matrix::identity(3), r).pass);
}

TEST_CASE("induced Zinbiel, 3-pre-Lie and pre-F-manifold") {
  const RepBundle t3 = adjoint_rep(ternalg::trunc(3));
  CHECK(induced_zinbiel(Matrix(3, 3), t3).prod().is_zero());
  CHECK(induced_3prelie(Matrix(4, 4), fil4_adjoint()).br().is_zero());
  const AlgebraBundle z = induced_zinbiel(r_int(3), t3);
  CHECK(mul(z, e(3, 0), e(3, 0)) == e(3, 1));
  CHECK(check_axioms(StructureKind::Zinbiel, z).pass);

  const AlgebraBundle pre_zero = induced_pre_fmanifold(Matrix(3, 3), t3);
  CHECK(check_axioms(StructureKind::TernaryPreFManifold, pre_zero).pass);

  const AlgebraBundle p3 = induced_pre_fmanifold(r_int(3), t3);
  CHECK(p3.br().is_zero());
  CHECK(p3.product == z.product);
  CHECK(check_axioms(StructureKind::TernaryPreFManifold, p3).pass);

  for (const auto& [T, r] : rb_instances()) {
    const AlgebraBundle zin = induced_zinbiel(T, r);
    const AlgebraBundle pl = induced_3prelie(T, r);
    const AlgebraBundle p = induced_pre_fmanifold(T, r);
    CHECK(check_axioms(StructureKind::Zinbiel, zin).pass);
    CHECK(check_axioms(StructureKind::ThreePreLie, pl).pass);
    CHECK(check_axioms(StructureKind::TernaryPreFManifold, p).pass);
    CHECK(subadjacent_commutator(pl).bracket == subadjacent_ternary_fmanifold(p).bracket);
    const AlgebraBundle sub = subadjacent_ternary_fmanifold(p);
    CHECK(check_axioms(StructureKind::TernaryFManifold, sub).pass);
    CHECK(check_homomorphism(T, sub, r.algebra).pass);

    // Homomorphism law and image closure on basis tuples.
    const std::size_t m = r.module_dim();
    const Matrix& TT = T;
    for (const auto& t : basis_tuples({m, m, m})) {
      const Vec u = e(m, t[0]), v = e(m, t[1]), w = e(m, t[2]);
      CHECK(TT * br3(sub, u, v, w) == br3(r.algebra, TT * u, TT * v, TT * w));
      CHECK(in_column_span(TT, br3(r.algebra, TT * u, TT * v, TT * w)));
    }
    for (const auto& t : basis_tuples({m, m})) {
      CHECK(TT * mul(sub, e(m, t[0]), e(m, t[1])) == mul(r.algebra, TT * e(m, t[0]), TT * e(m, t[1])));
      CHECK(in_column_span(TT, mul(r.algebra, TT * e(m, t[0]), TT * e(m, t[1]))));
    }
  }

  // Identity on (A^c; L, L⋄) recovers the pre-structure.
  const AlgebraBundle p = induced_pre_fmanifold(fil4_rb(), fil4_adjoint());
  const AlgebraBundle back = induced_pre_fmanifold(Matrix::identity(4), rep_of_subadjacent(p));
  CHECK(back.product == p.product);
  CHECK(back.bracket == p.bracket);
  CHECK(induced_3prelie(Matrix::identity(4), rep_of_subadjacent(p)).bracket == p.bracket);

  try {
    (void)induced_pre_fmanifold(Matrix::identity(3), t3);
    FAIL("expected NotRelativeRB");
  } catch (const PreconditionError& err) {
    CHECK(err.code() == Errc::NotRelativeRB);
    CHECK_FALSE(err.report().pass);
  }
}

TEST_CASE("rb_induced_pre") {
  CHECK(rb_induced_pre(Matrix(3, 3), ternalg::trunc(3)).prod().is_zero());
  const AlgebraBundle p = rb_induced_pre(r_int(3), ternalg::trunc(3));
  CHECK(mul(p, e(3, 0), e(3, 0)) == e(3, 1));
  const AlgebraBundle sub = subadjacent_ternary_fmanifold(p);
  CHECK(check_axioms(StructureKind::TernaryFManifold, sub).pass);
  CHECK(check_homomorphism(r_int(3), sub, ternalg::trunc(3)).pass);
  CHECK(error_code([] { (void)rb_induced_pre(Matrix::identity(3), ternalg::trunc(3)); }) == Errc::NotRotaBaxter);
}

TEST_CASE("invertible_rb_to_pre") {
  for (const AlgebraBundle& p : {induced_pre_fmanifold(fil4_rb(), fil4_adjoint()),
                                 induced_pre_fmanifold(r_int(4), adjoint_rep(ternalg::trunc(4)))}) {
    const RepBundle r = rep_of_subadjacent(p);
    const AlgebraBundle q = invertible_rb_to_pre(Matrix::identity(p.dim), r);
    CHECK(q.product == p.product);
    CHECK(q.bracket == p.bracket);
    const AlgebraBundle sub = subadjacent_ternary_fmanifold(q);
    CHECK(sub.product == r.algebra.product);
    CHECK(sub.bracket == r.algebra.bracket);
  }
  const RepBundle zero = adjoint_rep(zero_algebra(3));
  Matrix diag(3, 3);
  diag(0, 0) = Rational(2);
  diag(1, 1) = Rational(-1);
  diag(2, 2) = Rational(1, 3);
  const AlgebraBundle q = invertible_rb_to_pre(diag, zero);
  CHECK(q.prod().is_zero());
  CHECK(q.br().is_zero());
  CHECK(error_code([] { (void)invertible_rb_to_pre(r_int(3), adjoint_rep(ternalg::trunc(3))); }) == Errc::SingularMatrix);
  CHECK(error_code([] { (void)invertible_rb_to_pre(Matrix::identity(3), adjoint_rep(ternalg::trunc(3))); }) ==
        Errc::NotRelativeRB);
}

TEST_CASE("cyclic 2-cocycle and symplectic checks") {
  const Matrix B{{0, 1}, {-1, 0}};
  const AlgebraBundle z = zero_algebra(2);
  CHECK(check_cyclic_2cocycle(B, z).pass);
  CHECK(check_symplectic(B, z).pass);
  CHECK(check_cyclic_2cocycle(Matrix(3, 3), ternalg::trunc(3)).pass);
  CHECK(check_symplectic(Matrix(4, 4), fil4()).pass);

  const CheckReport r = check_cyclic_2cocycle(B, ternalg::trunc(2));
  REQUIRE_FALSE(r.pass);
  const std::vector<Vec> at{e(2, 0), e(2, 1), e(2, 0)};  // (1, t, 1)
  const AlgebraBundle t2 = ternalg::trunc(2);
  const auto cond = cyclic_2cocycle_conditions(B, t2);
  CHECK(cond[0].eval(at) == Vec{-1});
  CHECK(error_code([&] { (void)check_cyclic_2cocycle(Matrix{{1, 0}, {0, 0}}, z); }) == Errc::NotSkew);
  CHECK(error_code([&] { (void)check_symplectic(Matrix{{0, 1}, {1, 0}}, z); }) == Errc::NotSkew);
}

TEST_CASE("symplectic_induced_pre") {
  const Document s = symplectic2();
  const AlgebraBundle p = symplectic_induced_pre(*s.form, s.algebra);
  CHECK(p.prod().is_zero());
  CHECK(p.br().is_zero());
  CHECK(check_axioms(StructureKind::TernaryPreFManifold, p).pass);
  const AlgebraBundle p3 = symplectic_induced_pre(Rational(3) * *s.form, s.algebra);
  CHECK(p3 == p);

  const Matrix Tinv = invert(musical(*s.form));
  CHECK(check_relative_rb(Tinv, coadjoint_rep(s.algebra)).pass);
  const AlgebraBundle sub = subadjacent_ternary_fmanifold(p);
  CHECK(sub.product == s.algebra.product);
  CHECK(sub.bracket == s.algebra.bracket);

  // Defining relations B(x⋄y,z) = B(y,x·z), B({x,y,z},u) = -B(z,[x,y,u]) on a 4-dim instance.
  AlgebraBundle z4 = make_bundle(4);
  z4.product = Tensor3(4);
  z4.bracket = Tensor4(4);
  Matrix B4(4, 4);
  B4(0, 1) = Rational(1);
  B4(1, 0) = Rational(-1);
  B4(2, 3) = Rational(2);
  B4(3, 2) = Rational(-2);
  const AlgebraBundle p4 = symplectic_induced_pre(B4, z4);
  CHECK(check_axioms(StructureKind::TernaryPreFManifold, p4).pass);

  CHECK(error_code([&] { (void)symplectic_induced_pre(Matrix(2, 2), s.algebra); }) == Errc::SingularMatrix);
  CHECK(error_code([&] { (void)symplectic_induced_pre(Matrix{{0, 1}, {-1, 0}}, ternalg::trunc(2)); }) == Errc::NotSymplectic);
  CHECK(error_code([&] { (void)symplectic_induced_pre(Matrix{{1, 1}, {-1, 0}}, s.algebra); }) == Errc::NotSkew);
  AlgebraBundle incoherent = tensor_with_comm_assoc(fil4(), ternalg::trunc(2));
  if (!check_coherence(incoherent).pass)
    CHECK(error_code([&] { (void)symplectic_induced_pre(Matrix(8, 8), incoherent); }) == Errc::NotCoherent);
}

TEST_CASE("check_nijenhuis") {
  const AlgebraBundle t3 = ternalg::trunc(3);
  const AlgebraBundle f = fil4();
  for (const Rational& lambda : {Rational(0), Rational(1), Rational(2), Rational(-1, 3)}) {
    CHECK(check_nijenhuis(lambda * Matrix::identity(3), t3).pass);
    CHECK(check_nijenhuis(lambda * Matrix::identity(4), f).pass);
  }
  CHECK(check_nijenhuis(mult_by_t(3), t3).pass);
  const auto instances = rb_instances();
  const auto& [T, r] = instances.back();
  CHECK(check_nijenhuis(lift_nijenhuis(T, r), semidirect(r)).pass);
  AlgebraBundle bare = make_bundle(2);
  CHECK(error_code([&] { (void)check_nijenhuis(Matrix::identity(2), bare); }) == Errc::MissingTensor);
  const CheckReport bad = check_nijenhuis(catalog_entry("trunc3_non_nijenhuis").build().map(), t3);
  REQUIRE_FALSE(bad.pass);
  CHECK(bad.counterexamples[0].indices == std::vector<std::size_t>{0, 0});
  CHECK(bad.counterexamples[0].residual == e(3, 2));
}

TEST_CASE("deform") {
  const AlgebraBundle t3 = ternalg::trunc(3);
  const AlgebraBundle id = deform(Matrix::identity(3), t3);
  CHECK(id.product == t3.product);
  CHECK(id.bracket == t3.bracket);
  const AlgebraBundle fid = deform(Matrix::identity(4), fil4());
  CHECK(fid.bracket == fil4().bracket);
  const AlgebraBundle zero = deform(Matrix(4, 4), fil4());
  CHECK(zero.prod().is_zero());
  CHECK(zero.br().is_zero());
  const AlgebraBundle dt = deform(mult_by_t(3), t3);
  CHECK(mul(dt, e(3, 0), e(3, 0)) == e(3, 1));
  CHECK(check_axioms(StructureKind::TernaryFManifold, dt).pass);
  CHECK(check_axioms(StructureKind::TernaryFManifold, deform(Rational(2) * Matrix::identity(4), fil4())).pass);
  CHECK(error_code([] { (void)deform(catalog_entry("trunc3_non_nijenhuis").build().map(), ternalg::trunc(3)); }) ==
        Errc::NotNijenhuis);
}

TEST_CASE("lift_nijenhuis") {
  for (const auto& [T, r] : rb_instances()) {
    const Matrix N = lift_nijenhuis(T, r);
    const std::size_t d = r.algebra.dim + r.module_dim();
    CHECK(N * N == Matrix(d, d));
    CHECK(check_nijenhuis(N, semidirect(r)).pass);
  }
  CHECK(lift_nijenhuis(Matrix(4, 4), fil4_adjoint()).is_zero());
  std::mt19937_64 rng(59);
  const Matrix T = random_matrix(rng, 4, 4);
  const Matrix N = lift_nijenhuis(T, fil4_adjoint());
  CHECK((N * N).is_zero());
  // A random T is not relative RB, and neither is its lift Nijenhuis.
  CHECK_FALSE(check_relative_rb(T, fil4_adjoint()).pass);
  CHECK_FALSE(check_nijenhuis(N, semidirect(fil4_adjoint())).pass);
  const RepBundle t3 = adjoint_rep(ternalg::trunc(3));
  const Matrix T3 = random_matrix(rng, 3, 3);
  CHECK_FALSE(check_relative_rb(T3, t3).pass);
  CHECK_FALSE(check_nijenhuis(lift_nijenhuis(T3, t3), semidirect(t3)).pass);
}

TEST_CASE("induced_rep_on_A") {
  const RepBundle z = induced_rep_on_A(Matrix(4, 4), fil4_adjoint());
  for (const auto& mtx : z.mu->mats) CHECK(mtx.is_zero());
  for (const auto& row : z.rho->mats)
    for (const auto& mtx : row) CHECK(mtx.is_zero());

  const RepBundle t3 = induced_rep_on_A(r_int(3), adjoint_rep(ternalg::trunc(3)));
  CHECK((t3.mu->mats[0] * e(3, 0)).is_zero());

  for (const auto& [T, r] : rb_instances()) {
    const RepBundle ir = induced_rep_on_A(T, r);
    CHECK(check_representation(RepKind::TernaryFManifold, ir).pass);
  }
}

TEST_CASE("deformation by the lift matches the induced structures block by block") {
  for (const auto& [T, r] : rb_instances()) {
    const std::size_t n = r.algebra.dim, m = r.module_dim();
    // semidirect over A ⊕ V, deformed by N_T.
    const AlgebraBundle def = deform(lift_nijenhuis(T, r), semidirect(r));
    // semidirect of the induced rep over V ⊕ A.
    const AlgebraBundle expect = semidirect(induced_rep_on_A(T, r));
    // Index map: position in V ⊕ A → position in A ⊕ V.
    auto pos = [n, m](std::size_t i) { return i < m ? n + i : i - m; };
    bool ok = true;
    const std::size_t d = n + m;
    for (const auto& t : basis_tuples({d, d, d})) {
      ok = ok && def.prod()(pos(t[0]), pos(t[1]), pos(t[2])) == expect.prod()(t[0], t[1], t[2]);
    }
    for (const auto& t : basis_tuples({d, d, d, d}))
      ok = ok && def.br()(pos(t[0]), pos(t[1]), pos(t[2]), pos(t[3])) == expect.br()(t[0], t[1], t[2], t[3]);
    CHECK(ok);
  }
}
