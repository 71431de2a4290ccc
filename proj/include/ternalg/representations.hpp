#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ternalg/bundle.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

/// mats[i] is the action of e_i on an m-dimensional module.
struct LinRep {
  std::size_t module_dim = 0;
  std::vector<Matrix> mats;

  /// Σ_i x_i mats[i]
  [[nodiscard]] Matrix at(const Vec& x) const;
  [[nodiscard]] Vec apply(const Vec& x, const Vec& u) const;

  friend bool operator==(const LinRep&, const LinRep&) = default;
};

/// mats[i][j] is the action of the pair (e_i, e_j).
struct BiRep {
  std::size_t module_dim = 0;
  std::vector<std::vector<Matrix>> mats;

  [[nodiscard]] Matrix at(const Vec& x, const Vec& y) const;
  [[nodiscard]] Vec apply(const Vec& x, const Vec& y, const Vec& u) const;

  friend bool operator==(const BiRep&, const BiRep&) = default;
};

/// A module over `algebra`: rho for the ternary bracket, mu for the product,
/// lie_rho for a binary bracket.
struct RepBundle {
  AlgebraBundle algebra;
  std::optional<BiRep> rho;
  std::optional<LinRep> mu;
  std::optional<LinRep> lie_rho;

  [[nodiscard]] std::size_t module_dim() const;
  const BiRep& r() const;
  const LinRep& m() const;
  const LinRep& lr() const;
  /// Throws InvalidBundle on shape mismatches.
  void validate() const;

  friend bool operator==(const RepBundle&, const RepBundle&) = default;
};

LinRep zero_linrep(std::size_t n, std::size_t m);
BiRep zero_birep(std::size_t n, std::size_t m);

enum class RepKind { CommAssoc, ThreeLie, Lie, FManifold, TernaryFManifold, DualConditions };

std::string_view rep_kind_name(RepKind kind);
RepKind parse_rep_kind(std::string_view name);

std::vector<Condition> rep_conditions(RepKind kind, const RepBundle& r);
CheckReport check_representation(RepKind kind, const RepBundle& r, const CheckOptions& options = {});

// ρ(x,y)μ(z)u - μ(z)ρ(x,y)u - μ([x,y,z])u
Vec l1(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u);
// μ(z)ρ(x,y)u + μ(y)ρ(x,z)u - ρ(x,y·z)u
Vec l2(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u);
// ρ(x,y)μ(z)u + ρ(x,z)μ(y)u - ρ(x,y·z)u
Vec l3(const RepBundle& r, const Vec& x, const Vec& y, const Vec& z, const Vec& u);

/// ρ(e_i,e_j) = [e_i,e_j,·], μ(e_i) = e_i·(·)
RepBundle adjoint_rep(const AlgebraBundle& a);
/// ρ ↦ -ρᵀ, μ ↦ +μᵀ, binary ρ ↦ -ρᵀ
RepBundle dual_rep(const RepBundle& r);
/// dual_rep(adjoint_rep(a))
RepBundle coadjoint_rep(const AlgebraBundle& a);

/// Ternary F-manifold axioms followed by the three coherence identities.
std::vector<Condition> coherence_conditions(const AlgebraBundle& a);
CheckReport check_coherence(const AlgebraBundle& a, const CheckOptions& options = {});

/// Algebra on A ⊕ V: A indices first, then module indices.
AlgebraBundle semidirect(const RepBundle& r);

/// Binary representation x ↦ ρ(x, anchor) over fix_slot_bracket(algebra, anchor).
RepBundle fix_slot_rep(const RepBundle& r, const Vec& anchor);

/// (A; 𝕃, L⋄) over the sub-adjacent algebra of a pre-structure.
RepBundle rep_of_subadjacent(const AlgebraBundle& p);

}  // namespace ternalg
