#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ternalg/document.hpp"
#include "ternalg/operators.hpp"

namespace ternalg {

/// 4-dim 3-Lie algebra with [e_i,e_j,e_k] = ±e_l on distinct indices and a zero product.
AlgebraBundle fil4();
/// k[t]/(t^n) with basis 1, t, ..., t^{n-1}, unit e0 and a zero bracket.
AlgebraBundle trunc(std::size_t n);
/// Integration t^k ↦ t^{k+1}/(k+1) on trunc(n), zero on the top degree.
InterMap r_int(std::size_t n);
/// Multiplication by t on trunc(n).
InterMap mult_by_t(std::size_t n);

/// [e1,e2] = e3 with τ = e1*.
Document heisenberg_trace();
/// gl(2) on (h, e, f, z) with τ(z) = 1 and τ zero on h, e, f.
Document gl2_trace();

/// Adjoint module of fil4().
RepBundle fil4_adjoint();
/// T(e3) = e1, T(e4) = e2, zero elsewhere; relative Rota-Baxter on fil4_adjoint().
InterMap fil4_rb();

/// 2-dim zero algebra with B(e1,e2) = 1.
Document symplectic2();
/// trunc(2) with B(e1,e2) = 1; not a cyclic 2-cocycle.
Document trunc2_cocycle();

/// A check a catalog entry is documented to satisfy (or, with expect_pass=false, to fail).
struct CatalogCheck {
  std::string kind;
  bool rep = false;
  bool expect_pass = true;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::function<Document()> build;
  std::vector<CatalogCheck> checks;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownName.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ternalg
