#include <doctest.h>

#include "support.hpp"

using namespace ternalg;
using namespace testsupport;

namespace {

// Seeded random perturbation of one matrix entry of rho or mu.
RepBundle perturb(const RepBundle& r, std::mt19937_64& rng) {
  RepBundle out = r;
  const std::size_t n = r.algebra.dim, m = r.module_dim();
  std::uniform_int_distribution<std::size_t> pick_n(0, n - 1), pick_m(0, m - 1);
  std::uniform_int_distribution<int> which(0, 1), delta(1, 3);
  Matrix& target = which(rng) == 0 ? out.rho->mats[pick_n(rng)][pick_n(rng)] : out.mu->mats[pick_n(rng)];
  target(pick_m(rng), pick_m(rng)) += Rational(delta(rng));
  return out;
}

AlgebraBundle zero_algebra(std::size_t n) {
  AlgebraBundle a = make_bundle(n);
  a.product = Tensor3(n);
  a.bracket = Tensor4(n);
  return a;
}

}  // namespace

TEST_CASE("check_representation examples") {
  const RepBundle ad = fil4_adjoint();
  CHECK(check_representation(RepKind::ThreeLie, ad).pass);
  CHECK(check_representation(RepKind::TernaryFManifold, ad).pass);

  RepBundle zero_mu{ternalg::trunc(3), std::nullopt, zero_linrep(3, 2), std::nullopt};
  CHECK(check_representation(RepKind::CommAssoc, zero_mu).pass);

  RepBundle broken = ad;
  broken.rho->mats[0][1](3, 2) += Rational(1);
  CHECK_FALSE(check_representation(RepKind::ThreeLie, broken).pass);

  CHECK_THROWS_AS(check_representation(RepKind::ThreeLie, zero_mu), Error);
  const CheckReport full = check_representation(RepKind::TernaryFManifold, ad);
  CHECK(full.checked_identities ==
        std::vector<std::string>{"mu-hom", "rho-skew", "rho-i", "rho-ii", "rep1", "rep3", "rep2"});
}

TEST_CASE("l1 l2 l3") {
  std::mt19937_64 rng(31);
  const AlgebraBundle a = tensor_with_comm_assoc(fil4(), ternalg::trunc(2));
  RepBundle no_rho = adjoint_rep(a);
  no_rho.rho = zero_birep(a.dim, a.dim);
  RepBundle no_mu = adjoint_rep(a);
  no_mu.mu = zero_linrep(a.dim, a.dim);
  RepBundle both_zero = adjoint_rep(fil4());
  both_zero.mu = zero_linrep(4, 4);
  for (int i = 0; i < 10; ++i) {
    const Vec x = random_vec(rng, 8), y = random_vec(rng, 8), z = random_vec(rng, 8), u = random_vec(rng, 8);
    CHECK(l1(no_rho, x, y, z, u) == -(left_mult_matrix(a.prod(), br3(a, x, y, z)) * u));
    CHECK(l2(no_mu, x, y, z, u) == -(bracket_matrix(a.br(), x, mul(a, y, z)) * u));
    const Vec p = random_vec(rng, 4), q = random_vec(rng, 4), s = random_vec(rng, 4), w = random_vec(rng, 4);
    CHECK(l2(both_zero, p, q, s, w).is_zero());
  }
}

TEST_CASE("adjoint l1 and l2 reduce to the Leibnizator") {
  for (const AlgebraBundle& a : {fil4(), tensor_with_comm_assoc(fil4(), ternalg::trunc(2))}) {
    const RepBundle ad = adjoint_rep(a);
    const std::size_t n = a.dim;
    bool ok1 = true, ok2 = true;
    for (const auto& t : basis_tuples({n, n, n, n})) {
      const Vec x = e(n, t[0]), y = e(n, t[1]), z = e(n, t[2]), u = e(n, t[3]);
      ok1 = ok1 && l1(ad, x, y, z, u) == leibnizator3(a, x, y, z, u);
      ok2 = ok2 && l2(ad, x, y, z, u) == leibnizator3(a, x, u, y, z);
    }
    CHECK(ok1);
    CHECK(ok2);
  }
}

TEST_CASE("adjoint_rep") {
  const RepBundle ad = fil4_adjoint();
  const Matrix& ad12 = ad.rho->mats[0][1];
  CHECK(ad12 * e(4, 2) == e(4, 3));
  CHECK(ad12 * e(4, 3) == e(4, 2));
  CHECK((ad12 * e(4, 0)).is_zero());
  CHECK((ad12 * e(4, 1)).is_zero());
  const RepBundle z = adjoint_rep(zero_algebra(3));
  for (const auto& row : z.rho->mats)
    for (const auto& mtx : row) CHECK(mtx.is_zero());
  for (const auto& mtx : z.mu->mats) CHECK(mtx.is_zero());
}

TEST_CASE("dual_rep") {
  RepBundle r{ternalg::trunc(1), std::nullopt, LinRep{2, {Matrix{{0, 1}, {0, 0}}}}, std::nullopt};
  CHECK(dual_rep(r).mu->mats[0] == Matrix{{0, 0}, {1, 0}});

  std::mt19937_64 rng(37);
  RepBundle random_rep = fil4_adjoint();
  for (auto& row : random_rep.rho->mats)
    for (auto& mtx : row) mtx = random_matrix(rng, 4, 4);
  for (auto& mtx : random_rep.mu->mats) mtx = random_matrix(rng, 4, 4);
  random_rep.lie_rho = LinRep{4, {random_matrix(rng, 4, 4), random_matrix(rng, 4, 4), random_matrix(rng, 4, 4),
                                  random_matrix(rng, 4, 4)}};
  CHECK(dual_rep(dual_rep(random_rep)) == random_rep);
  CHECK(dual_rep(random_rep).rho->mats[1][2] == -random_rep.rho->mats[1][2].transpose());
  CHECK(dual_rep(random_rep).lie_rho->mats[3] == -random_rep.lie_rho->mats[3].transpose());

  CHECK(check_representation(RepKind::TernaryFManifold, dual_rep(fil4_adjoint())).pass);
}

TEST_CASE("dual pairing identities on basis tuples") {
  // ⟨l1 on the dual (ξ), u⟩ = ⟨ξ, l1(u)⟩ and ⟨l2 on the dual (ξ), u⟩ = -⟨ξ, l3(u)⟩.
  for (const AlgebraBundle& a : {fil4(), tensor_with_comm_assoc(fil4(), ternalg::trunc(2))}) {
    const RepBundle r = adjoint_rep(a);
    const RepBundle d = dual_rep(r);
    const std::size_t n = a.dim;
    bool ok = true;
    for (const auto& t : basis_tuples({n, n, n, n, n})) {
      const Vec x = e(n, t[0]), y = e(n, t[1]), z = e(n, t[2]), xi = e(n, t[3]), u = e(n, t[4]);
      ok = ok && dot(l1(d, x, y, z, xi), u) == dot(xi, l1(r, x, y, z, u));
      ok = ok && dot(l2(d, x, y, z, xi), u) == -dot(xi, l3(r, x, y, z, u));
    }
    CHECK(ok);
  }
}

TEST_CASE("check_coherence") {
  CHECK(check_coherence(fil4()).pass);
  CHECK(check_coherence(ternalg::trunc(4)).pass);
  CHECK(check_representation(RepKind::TernaryFManifold, coadjoint_rep(fil4())).pass);
  CHECK(check_representation(RepKind::DualConditions, adjoint_rep(fil4())).pass);
  const CheckReport r = check_coherence(fil4());
  CHECK(r.checked_identities.back() == "coh3");
  CHECK(r.kind == "coherence");

  // Coherence makes the coadjoint a representation on every instance where it passes.
  for (const AlgebraBundle& a : {direct_sum(fil4(), ternalg::trunc(2)), tensor_with_comm_assoc(fil4(), ternalg::trunc(2))}) {
    const bool coherent = check_coherence(a).pass;
    if (coherent) CHECK(check_representation(RepKind::TernaryFManifold, coadjoint_rep(a)).pass);
    CHECK(check_representation(RepKind::DualConditions, adjoint_rep(a)).pass == coherent);
  }
}

TEST_CASE("semidirect") {
  const AlgebraBundle sd = semidirect(fil4_adjoint());
  CHECK(sd.dim == 8);
  CHECK(check_axioms(StructureKind::TernaryFManifold, sd).pass);

  RepBundle zero{fil4(), zero_birep(4, 2), zero_linrep(4, 2), std::nullopt};
  AlgebraBundle z2 = zero_algebra(2);
  const AlgebraBundle s0 = semidirect(zero);
  const AlgebraBundle ds = direct_sum(fil4(), z2);
  CHECK(s0.product == ds.product);
  CHECK(s0.bracket == ds.bracket);

  // Both directions of the equivalence on seeded perturbations.
  std::mt19937_64 rng(41);
  for (const RepBundle& base : {fil4_adjoint(), adjoint_rep(ternalg::trunc(3)), adjoint_rep(direct_sum(fil4(), ternalg::trunc(2)))}) {
    CHECK(check_representation(RepKind::TernaryFManifold, base).pass ==
          check_axioms(StructureKind::TernaryFManifold, semidirect(base)).pass);
    for (int trial = 0; trial < 4; ++trial) {
      const RepBundle p = perturb(base, rng);
      CHECK(check_representation(RepKind::TernaryFManifold, p).pass ==
            check_axioms(StructureKind::TernaryFManifold, semidirect(p)).pass);
    }
  }
}

TEST_CASE("fix_slot_rep") {
  const RepBundle zero = fix_slot_rep(fil4_adjoint(), Vec(4));
  for (const auto& mtx : zero.lie_rho->mats) CHECK(mtx.is_zero());

  const RepBundle r = fix_slot_rep(fil4_adjoint(), e(4, 3));
  CHECK(r.lie_rho->mats[0] * e(4, 1) == -e(4, 2));
  CHECK(check_representation(RepKind::FManifold, r).pass);

  for (std::size_t i = 0; i < 8; ++i) {
    const RepBundle t = fix_slot_rep(adjoint_rep(tensor_with_comm_assoc(fil4(), ternalg::trunc(2))), e(8, i));
    CHECK(check_representation(RepKind::FManifold, t).pass);
  }
}

TEST_CASE("rep_of_subadjacent") {
  AlgebraBundle zero = make_bundle(2);
  zero.product = Tensor3(2);
  zero.bracket = Tensor4(2);
  const RepBundle z = rep_of_subadjacent(zero);
  CHECK(z.algebra.prod().is_zero());
  for (const auto& mtx : z.mu->mats) CHECK(mtx.is_zero());

  for (const AlgebraBundle& p : {induced_pre_fmanifold(fil4_rb(), fil4_adjoint()),
                                 induced_pre_fmanifold(r_int(4), adjoint_rep(ternalg::trunc(4)))}) {
    const RepBundle r = rep_of_subadjacent(p);
    CHECK(check_representation(RepKind::TernaryFManifold, r).pass);
    const std::size_t n = p.dim;
    for (const auto& t : basis_tuples({n, n, n}))
      CHECK(r.rho->mats[t[0]][t[1]].column(t[2]) == br3(p, e(n, t[0]), e(n, t[1]), e(n, t[2])));
  }
}

TEST_CASE("rep kind names round trip") {
  for (auto k : {RepKind::CommAssoc, RepKind::ThreeLie, RepKind::Lie, RepKind::FManifold, RepKind::TernaryFManifold,
                 RepKind::DualConditions})
    CHECK(parse_rep_kind(rep_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_rep_kind("nope"), Error);
}
