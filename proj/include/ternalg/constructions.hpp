#pragma once

#include "ternalg/bundle.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

/// Linear functional given by its values on the basis.
struct TraceFunctional {
  Vec row;

  [[nodiscard]] Rational operator()(const Vec& x) const { return dot(row, x); }

  friend bool operator==(const TraceFunctional&, const TraceFunctional&) = default;
};

/// Componentwise product and bracket on a ⊕ b; mixed constants are zero.
AlgebraBundle direct_sum(const AlgebraBundle& a, const AlgebraBundle& b);

/// (x1⊗y1)·(x2⊗y2) = (x1·x2)⊗(y1·y2), [x1⊗y1, x2⊗y2, x3⊗y3] = [x1,x2,x3]⊗(y1·y2·y3).
/// Basis index of x_i⊗y_j is i·dim(b) + j.
AlgebraBundle tensor_with_comm_assoc(const AlgebraBundle& a, const AlgebraBundle& b);

/// Keeps the product and adds the binary bracket [x,y] = [x, anchor, y].
AlgebraBundle fix_slot_bracket(const AlgebraBundle& a, const Vec& anchor);

/// τ([e_i,e_j]) = 0 for all basis pairs.
std::vector<Condition> trace_conditions(const AlgebraBundle& a, const TraceFunctional& tau);
CheckReport check_trace(const AlgebraBundle& a, const TraceFunctional& tau, const CheckOptions& options = {});

/// [x1,x2,x3] = τ(x1)[x2,x3] - τ(x2)[x1,x3] + τ(x3)[x1,x2]. Throws NotATrace.
AlgebraBundle trace_induced(const AlgebraBundle& a, const TraceFunctional& tau);

/// τ(x1·x2)L(x3,x4,x5) - τ(x2)x1·L(x3,x4,x5) - τ(x1)x2·L(x3,x4,x5) = 0 with L the binary Leibnizator.
std::vector<Condition> induced_conditions(const AlgebraBundle& a, const TraceFunctional& tau);
CheckReport check_induced_condition(const AlgebraBundle& a, const TraceFunctional& tau,
                                    const CheckOptions& options = {});

/// x·y = x⋄y + y⋄x
AlgebraBundle symmetrize_zinbiel(const AlgebraBundle& d);
/// [x,y,z] = {x,y,z} + {y,z,x} + {z,x,y}; the product is dropped.
AlgebraBundle subadjacent_commutator(const AlgebraBundle& s);
/// Symmetrized product and cyclic bracket of a pre-structure.
AlgebraBundle subadjacent_ternary_fmanifold(const AlgebraBundle& p);

}  // namespace ternalg
