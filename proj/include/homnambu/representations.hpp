#pragma once

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"
#include "homnambu/representation.hpp"

namespace homnambu {

// rho(x) = L(x), nu = alpha_{n-1}. Needs the bracket antisymmetric in its
// first n-1 arguments so that rho is skew.
Representation adjoint_rep(const HomNambuAlgebra& a);

struct CoadjointResult {
  Representation rep;  // rho* = -L^T, nu* = alpha_{n-1}^T
  CheckReport report;  // whether (N*, rho*, nu*) is a representation
};
CoadjointResult coadjoint_rep(const HomNambuAlgebra& a, const CheckOptions& options = {});

struct PsiResult {
  Matrix psi;          // x -> B(beta x, .), beta = identity when absent
  CheckReport report;  // intertwining of the adjoint and coadjoint representations
};
PsiResult rep_isomorphism_psi(const QuadraticStructure& q, const CheckOptions& options = {});

// f rho(x) = rho'(x) f on basis tuples and f nu = nu' f.
CheckReport check_equivalence(const Representation& from, const Representation& to, const Matrix& f,
                              const CheckOptions& options = {});

}  // namespace homnambu
