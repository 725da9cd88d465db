#pragma once

#include <optional>

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"

namespace homnambu {

// A binary, skew, untwisted Lie algebra with a nondegenerate invariant form.
// All of this is checked on construction.
class QuadraticLieAlgebra {
 public:
  QuadraticLieAlgebra(BracketTensor bracket, BilinearForm form, const CheckOptions& options = {});

  std::size_t dim() const { return algebra_.dim(); }
  const HomNambuAlgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }

  Vector bracket(const Vector& x, const Vector& y) const;

 private:
  HomNambuAlgebra algebra_;
  BilinearForm form_;
  Matrix gram_inverse_;
};

// Dual vectors are stored by their values on the basis: f_i = f(e_i).

// The vector phi(x (x) f) with B(y, phi) = <[y, x], f> for every y.
Vector phi_map(const QuadraticLieAlgebra& g, const Vector& x, const Vector& f);
// (p . f)(y) = -f([p, y]), the coadjoint action.
Vector dual_action(const QuadraticLieAlgebra& g, const Vector& p, const Vector& f);
// y -> B(y, .)
Vector flat(const QuadraticLieAlgebra& g, const Vector& y);

// [x(x)f, y(x)g] = [phi(x,f), y] (x) g + y (x) phi(x,f).g on the basis e_i (x) e_j^*
// with index i * d + j.
HomLeibnizAlgebra tensor_leibniz(const QuadraticLieAlgebra& g);

struct OmegaLeibniz {
  HomLeibnizAlgebra algebra;   // Omega o bracket, twist Omega = alpha (x) alpha^T
  BilinearForm form;           // B_Omega(x(x)f, y(x)g) = <alpha x, g> <alpha y, f>
  CheckReport multiplicativity;
  CheckReport hom_leibniz;
  CheckReport quadratic;       // symmetry, Omega-symmetry and invariance of B_Omega
  bool nondegenerate = false;
};
OmegaLeibniz omega_twist_leibniz(const QuadraticLieAlgebra& g, const Matrix& alpha, const CheckOptions& options = {});

// T(x (x) y) = phi(x, flat y)
Vector t_map(const QuadraticLieAlgebra& g, const Vector& x, const Vector& y);
CheckReport check_t_antisymmetry(const QuadraticLieAlgebra& g, const CheckOptions& options = {});
// [phi(x,f), phi(y,h)] = phi([phi(x,f), y], h) + phi(y, phi(x,f).h) on basis quadruples.
CheckReport check_equivariance(const QuadraticLieAlgebra& g, const CheckOptions& options = {});

struct FaulknerTernary {
  QuadraticStructure structure;  // [x,y,z] = [T(x(x)y), z]; with alpha: alpha o [..], twists (alpha, alpha), B_alpha
  CheckReport t_antisymmetry;
  CheckReport hom_nambu;
  CheckReport quadratic;
};
FaulknerTernary faulkner_ternary(const QuadraticLieAlgebra& g, const std::optional<Matrix>& alpha = std::nullopt,
                                 const CheckOptions& options = {});

}  // namespace homnambu
