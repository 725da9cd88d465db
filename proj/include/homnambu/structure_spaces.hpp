#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"

namespace homnambu {

struct SubspaceBasis {
  enum class Ambient { matrices, vectors };

  Ambient ambient = Ambient::matrices;
  std::size_t dim = 0;          // the algebra dimension d
  std::vector<Vector> basis;    // RREF rows; d*d row-major entries for matrices

  std::size_t dimension() const { return basis.size(); }
  std::vector<Matrix> matrices() const;
  bool contains(const Vector& v) const;
  bool contains(const Matrix& m) const;
};

// One row per linear condition on the unknowns (theta or D flattened row-major,
// or a vector z). Labels are 1-based and human readable.
struct LinearSystem {
  Matrix coefficients;
  std::vector<std::string> labels;
};

struct MembershipReport {
  bool member = true;
  std::string violated;  // label of the first violated condition
  Scalar residual = 0;
};

// alpha^k with alpha^0 = identity and alpha^-1 = 0.
Matrix level_power(const Matrix& alpha, int k);

// The twist shared by all slots; throws when the twists differ.
const Matrix& single_twist(const HomNambuAlgebra& a);

LinearSystem centroid_system(const BracketTensor& bracket, const Matrix& alpha_k);
LinearSystem derivation_system(const BracketTensor& bracket, const Matrix& alpha, const Matrix& alpha_k);

SubspaceBasis compute_centroid(const HomNambuAlgebra& a, int k);
MembershipReport centroid_membership(const HomNambuAlgebra& a, const Matrix& theta, int k);
MembershipReport centroid_membership(const BracketTensor& bracket, const Matrix& alpha, const Matrix& theta, int k);

SubspaceBasis compute_derivations(const HomNambuAlgebra& a, int k);
MembershipReport derivation_membership(const HomNambuAlgebra& a, const Matrix& d, int k);

// ad_k(x)(y) = [x_1..x_{n-1}, alpha^k y]; needs alpha(x_i) = x_i and a
// multiplicative algebra, and is checked to be an alpha^(k+1)-derivation.
Matrix inner_derivation(const HomNambuAlgebra& a, const std::vector<Vector>& x, int k,
                        const CheckOptions& options = {});

SubspaceBasis compute_center(const HomNambuAlgebra& a);
SubspaceBasis compute_central_derivations(const HomNambuAlgebra& a);

struct CommutatorResult {
  Matrix commutator;
  MembershipReport membership;  // in Der_{alpha^(k+k')}
};
CommutatorResult derivation_commutator(const HomNambuAlgebra& a, const Matrix& d, int k, const Matrix& dp, int kp);

struct VarsigmaResult {
  SubspaceBasis space;                       // closure of the requested levels inside End(N)
  std::optional<HomLeibnizAlgebra> algebra;  // absent when the space is zero
  CheckReport hom_lie;
  CheckReport skew;
};
VarsigmaResult varsigma_hom_lie(const HomNambuAlgebra& a, const std::vector<int>& levels = {-1, 0, 1, 2},
                                const CheckOptions& options = {});

struct CentroidDerivationResult {
  Matrix product;                            // theta D
  MembershipReport product_membership;       // in Der_{alpha^(k+k')}
  std::optional<Matrix> commutator;          // [D, theta], when theta is in Cent(N) and commutes with alpha
  std::optional<MembershipReport> commutator_membership;  // in Cent_{alpha^k}
};
CentroidDerivationResult centroid_derivation_product(const HomNambuAlgebra& a, const Matrix& theta, int kp,
                                                     const Matrix& d, int k);

enum class TensorMapMode { centroid, derivation };
struct TensorMapResult {
  Matrix map;
  MembershipReport membership;
};
TensorMapResult tensor_centroid_derivation(const HomAssocNAry& h, const HomNambuAlgebra& a, const Matrix& f,
                                           const Matrix& g, TensorMapMode mode, int k);

// theta [x_1..x_n] = [alpha^k x_1, .., theta x_p, .., alpha^k x_n] for every slot p.
CheckReport check_slot_independence(const HomNambuAlgebra& a, const Matrix& theta, int k,
                                    const CheckOptions& options = {});
// [theta^p1 x_1, ..., theta^pn x_n] = theta^(p1+..+pn) [x_1..x_n] for 0 <= p_i <= max_power.
CheckReport check_centroid_power_law(const HomNambuAlgebra& a, const Matrix& theta, std::size_t max_power,
                                     const CheckOptions& options = {});

}  // namespace homnambu
