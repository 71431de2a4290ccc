#pragma once

#include "ternalg/bundle.hpp"
#include "ternalg/report.hpp"
#include "ternalg/representations.hpp"

namespace ternalg {

/// Linear map as a matrix; columns are images of the source basis.
using InterMap = Matrix;
/// B(e_i, e_j) = matrix(i, j)
using BilinearForm = Matrix;

// Relative Rota-Baxter operators T: V -> A with respect to a representation.
std::vector<Condition> relative_rb_comm_conditions(const InterMap& T, const RepBundle& r);
std::vector<Condition> relative_rb_3lie_conditions(const InterMap& T, const RepBundle& r);
std::vector<Condition> relative_rb_conditions(const InterMap& T, const RepBundle& r);
CheckReport check_relative_rb_comm(const InterMap& T, const RepBundle& r, const CheckOptions& options = {});
CheckReport check_relative_rb_3lie(const InterMap& T, const RepBundle& r, const CheckOptions& options = {});
CheckReport check_relative_rb(const InterMap& T, const RepBundle& r, const CheckOptions& options = {});

/// u⋄v = μ(Tu)v on the module. Throws NotRelativeRB.
AlgebraBundle induced_zinbiel(const InterMap& T, const RepBundle& r);
/// {u,v,w} = ρ(Tu,Tv)w on the module. Throws NotRelativeRB.
AlgebraBundle induced_3prelie(const InterMap& T, const RepBundle& r);
/// Both of the above on one bundle. Throws NotRelativeRB.
AlgebraBundle induced_pre_fmanifold(const InterMap& T, const RepBundle& r);

/// x⋄y = R(x)·y, {x,y,z} = [Rx,Ry,z]. Throws NotRotaBaxter.
AlgebraBundle rb_induced_pre(const InterMap& R, const AlgebraBundle& a);

/// x⋄y = T(μ(x)T⁻¹y), {x,y,z} = T(ρ(x,y)T⁻¹z). Throws SingularMatrix or NotRelativeRB.
AlgebraBundle invertible_rb_to_pre(const InterMap& T, const RepBundle& r);

/// Throws NotSkew unless B = -Bᵀ.
void require_skew(const BilinearForm& B);
std::vector<Condition> cyclic_2cocycle_conditions(const BilinearForm& B, const AlgebraBundle& a);
std::vector<Condition> symplectic_conditions(const BilinearForm& B, const AlgebraBundle& a);
CheckReport check_cyclic_2cocycle(const BilinearForm& B, const AlgebraBundle& a, const CheckOptions& options = {});
CheckReport check_symplectic(const BilinearForm& B, const AlgebraBundle& a, const CheckOptions& options = {});

/// Matrix of x ↦ B(x, ·) in the dual basis, i.e. Bᵀ.
Matrix musical(const BilinearForm& B);

/// Solves B(x⋄y,z) = B(y,x·z), B({x,y,z},u) = -B(z,[x,y,u]).
/// Throws NotCoherent, NotSkew, NotSymplectic or SingularMatrix.
AlgebraBundle symplectic_induced_pre(const BilinearForm& B, const AlgebraBundle& a);

// Nijenhuis operators.
std::vector<Condition> nijenhuis_conditions(const InterMap& N, const AlgebraBundle& a);
CheckReport check_nijenhuis(const InterMap& N, const AlgebraBundle& a, const CheckOptions& options = {});

/// x·_N y = Nx·y + x·Ny - N(x·y) and
/// [x,y,z]_N = [Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz] - N([Nx,y,z] + [x,Ny,z] + [x,y,Nz]) + N²[x,y,z].
/// Throws NotNijenhuis.
AlgebraBundle deform(const InterMap& N, const AlgebraBundle& a);
/// Same tensors without the precondition check.
AlgebraBundle deform_unchecked(const InterMap& N, const AlgebraBundle& a);

/// Block matrix (0 T; 0 0) on A ⊕ V.
InterMap lift_nijenhuis(const InterMap& T, const RepBundle& r);

/// Module A over the sub-adjacent algebra on V:
///   ρ_T(u,v)x = [Tu,Tv,x] - T(ρ(Tv,x)u + ρ(x,Tu)v),  μ_T(u)x = Tu·x - T(μ(x)u).
/// Throws NotRelativeRB.
RepBundle induced_rep_on_A(const InterMap& T, const RepBundle& r);

}  // namespace ternalg
