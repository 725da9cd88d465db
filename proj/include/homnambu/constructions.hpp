#pragma once

#include <optional>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"

namespace homnambu {

// Every construction checks its hypotheses and throws HypothesisError with the
// failing report attached. Outputs carry only flags that were verified or that
// the construction guarantees.

HomNambuAlgebra twist_by_morphism(const HomNambuAlgebra& a, const Matrix& rho, const CheckOptions& options = {});
HomNambuAlgebra self_twist(const HomNambuAlgebra& a, const CheckOptions& options = {});

// mu(a_1..a_n) (x) [x_1..x_n] on the basis index p * dN + i.
BracketTensor tensor_bracket(const BracketTensor& mu, const BracketTensor& bracket);
HomNambuAlgebra tensor_product(const HomAssocNAry& h, const HomNambuAlgebra& a, const CheckOptions& options = {});

struct FormWithTwist {
  BilinearForm form;
  Matrix beta;
};
// The condition on B_A: eta_i-symmetry and
// B_A(mu(a_1..a_{n-1}, b), beta_A c) = B_A(beta_A b, mu(a_1..a_{n-1}, c)).
CheckReport check_tensor_factor_form(const HomAssocNAry& h, const FormWithTwist& fa, const CheckOptions& options = {});
QuadraticStructure tensor_product(const HomAssocNAry& h, const HomNambuAlgebra& a, const FormWithTwist& fa,
                                  const FormWithTwist& fn, const CheckOptions& options = {});

struct InducedLeibniz {
  HomLeibnizAlgebra algebra;          // on the d^(n-1)-dim tensor power, index = flat (i_1..i_{n-1})
  std::optional<BilinearForm> form;   // product form B(x_1,y_1)...B(x_{n-1},y_{n-1})
};
InducedLeibniz induced_hom_leibniz(const HomNambuAlgebra& a, const std::optional<BilinearForm>& form = std::nullopt,
                                   const CheckOptions& options = {});

struct TStarExtension {
  QuadraticStructure extension;                 // identity twists, gram [[B, I], [I, 0]]
  std::optional<QuadraticStructure> hom;        // Omega o bracket, twists Omega, beta = Omega
  std::optional<QuadraticStructure> twisted;    // same algebra with gram of B_L(Omega u, v), no beta
  CheckReport skew;                             // skewness of the extension bracket
};
TStarExtension tstar_extension(const HomNambuAlgebra& a, const BilinearForm& b,
                               const std::optional<Matrix>& omega = std::nullopt, const CheckOptions& options = {});

// gram' = m^T gram, i.e. B'(x, y) = B(m x, y); m must be B-symmetric.
BilinearForm pullback_form(const BilinearForm& b, const Matrix& m);

struct TraceQuadratic {
  BilinearForm form;
  Matrix beta;
};
struct TraceTernary {
  HomNambuAlgebra algebra;
  std::optional<QuadraticStructure> quadratic;
};
TraceTernary trace_induced_ternary(const HomLeibnizAlgebra& l, const Matrix& gamma, const Vector& tau,
                                   const std::optional<TraceQuadratic>& quadratic = std::nullopt,
                                   const CheckOptions& options = {});

HomNambuAlgebra raise_arity(const HomNambuAlgebra& a, std::size_t k, const CheckOptions& options = {});
// beta' = beta alpha^(2^k - 1); beta defaults to the identity.
QuadraticStructure raise_arity(const QuadraticStructure& q, std::size_t k, const CheckOptions& options = {});

HomNambuAlgebra reduce_arity(const HomNambuAlgebra& a, const std::vector<Vector>& fixed, const CheckOptions& options = {});
QuadraticStructure reduce_arity(const QuadraticStructure& q, const std::vector<Vector>& fixed,
                                const CheckOptions& options = {});

// {x_1..x_n}_p = [theta x_1, .., theta x_p, x_{p+1}, .., x_n] with twists theta.
HomNambuAlgebra centroid_twisted_bracket(const HomNambuAlgebra& a, const Matrix& theta, std::size_t p,
                                         const CheckOptions& options = {});

}  // namespace homnambu
