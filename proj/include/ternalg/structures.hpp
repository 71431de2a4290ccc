#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/bundle.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

enum class StructureKind {
  CommAssoc,
  Zinbiel,
  Lie,
  ThreeLie,
  ThreePreLie,
  FManifold,
  TernaryFManifold,
  TernaryNambuPoisson,
  TernaryPreFManifold,
  TernaryPreNambuPoisson,
};

/// CLI spelling, e.g. "3-lie", "ternary-f-manifold".
std::string_view kind_name(StructureKind kind);
StructureKind parse_kind(std::string_view name);
const std::vector<StructureKind>& all_kinds();

/// Identity ids checked for a kind, in evaluation order.
const std::vector<std::string>& kind_identities(StructureKind kind);

/// All identity ids understood by eval_defect.
const std::vector<std::string>& identity_ids();
std::size_t identity_arity(std::string_view id);

/// LHS - RHS of the named identity at `args`. Throws MissingTensor / ArityMismatch / UnknownName.
Vec eval_defect(std::string_view id, const AlgebraBundle& b, std::span<const Vec> args);

std::vector<Condition> axiom_conditions(StructureKind kind, const AlgebraBundle& b);
CheckReport check_axioms(StructureKind kind, const AlgebraBundle& b, const CheckOptions& options = {});

/// [x1,x2,x3·x4] - x3·[x1,x2,x4] - [x1,x2,x3]·x4
Vec leibnizator3(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4);
/// [x,y·z] - [x,y]·z - y·[x,z]
Vec leibnizator2(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z);

// Pre-structure evaluators: b.product is the Zinbiel product, b.bracket the
// 3-pre-Lie bracket; the symmetrized product and cyclic bracket are formed here.
Vec pre_sym_product(const AlgebraBundle& b, const Vec& x, const Vec& y);
Vec pre_cyclic_bracket(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z);
/// Leibnizator of the sub-adjacent operations.
Vec pre_leibnizator(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4);
Vec f1(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4);
Vec f2(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4);

/// [x,y,z·u] + [x,z,u·y] + [x,u,y·z]
Vec k_op(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z, const Vec& u);

/// f(x·y) = f(x)·f(y) and f[x,y,z] = [fx,fy,fz] for every tensor src carries.
std::vector<Condition> homomorphism_conditions(const Matrix& f, const AlgebraBundle& src,
                                               const AlgebraBundle& dst);
CheckReport check_homomorphism(const Matrix& f, const AlgebraBundle& src, const AlgebraBundle& dst,
                               const CheckOptions& options = {});

}  // namespace ternalg
