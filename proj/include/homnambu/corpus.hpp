#pragma once

#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/faulkner.hpp"
#include "homnambu/io.hpp"

namespace homnambu::corpus {

HomNambuAlgebra zero_algebra(std::size_t dim, std::size_t arity);

// [x,y,z] = lambda (B(y,z) alpha x - B(z,x) alpha y), B = identity,
// alpha = diag(1,1,-1), twists (alpha, alpha), beta = alpha.
QuadraticStructure example1(const Scalar& lambda = 1);

// [e1,e2,e3] = e1 + 2e2 + e3 with the two twist maps and the form M.
QuadraticStructure example2(const Scalar& lambda = 1, const Scalar& nu = 2, const Scalar& b = 1);

// [e_i, e_j, e_k] = sum_l eps_{ijkl} e_l
HomNambuAlgebra simple_3lie4();
Matrix sign_automorphism();  // diag(1,1,-1,-1)

// span(e1) central, the simple 3-Lie algebra on e2..e5.
HomNambuAlgebra center_plus_simple();

// [e1,e2] = e3
HomLeibnizAlgebra heisenberg3();

// basis (h, e, f), Killing form, and the involution diag(1,-1,-1).
QuadraticLieAlgebra sl2();
Matrix sl2_involution();

// K[t]/(t^2) with the n-ary product and identity twists.
HomAssocNAry truncated_polynomial(std::size_t arity);
Matrix multiplication_by_t();
// 1-dim, mu(1,..,1) = 1
HomAssocNAry unit_assoc(std::size_t arity);

struct Entry {
  std::string file;
  AlgebraFile algebra;
};
std::vector<Entry> bundled();

}  // namespace homnambu::corpus
