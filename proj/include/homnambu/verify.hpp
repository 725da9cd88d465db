#pragma once

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"
#include "homnambu/representation.hpp"

namespace homnambu {

CheckReport check_hom_nambu_identity(const HomNambuAlgebra& a, const CheckOptions& options = {});
CheckReport check_skew_symmetry(const BracketTensor& bracket, const CheckOptions& options = {});
CheckReport check_skew_symmetry(const HomNambuAlgebra& a, const CheckOptions& options = {});
CheckReport check_multiplicativity(const HomNambuAlgebra& a, const CheckOptions& options = {});
// alpha [x_1..x_n] = [alpha x_1, ..., alpha x_n] for a single map.
CheckReport check_bracket_endomorphism(const BracketTensor& bracket, const Matrix& alpha,
                                       const CheckOptions& options = {});
CheckReport check_total_hom_associativity(const HomAssocNAry& h, const CheckOptions& options = {});
CheckReport check_hom_leibniz(const HomLeibnizAlgebra& l, const CheckOptions& options = {});
// Degeneracy is reported as a warning, not a failure.
CheckReport check_quadratic(const QuadraticStructure& q, const CheckOptions& options = {});
CheckReport check_morphism(const HomNambuAlgebra& src, const HomNambuAlgebra& dst, const Matrix& f,
                           const CheckOptions& options = {});

enum class RepMode { primal, dual };
CheckReport check_representation(const HomNambuAlgebra& a, const Representation& rep, RepMode mode,
                                 const CheckOptions& options = {});

// B(m x, y) = B(x, m y) on basis pairs.
CheckReport check_form_symmetric_map(const BilinearForm& form, const Matrix& m, const std::string& identity,
                                     const CheckOptions& options = {});

}  // namespace homnambu
