#pragma once

#include <map>
#include <span>

#include "homnambu/matrix.hpp"
#include "homnambu/tensor.hpp"

namespace homnambu {

// rho: an (n-1)-linear map from the algebra to End(V), stored as a dense
// tensor over the algebra's basis whose values are row-major m x m matrices.
class Representation {
 public:
  Representation(std::size_t arity, DenseTensor rho, Matrix nu);
  static Representation from_matrices(std::size_t source_dim, std::size_t arity, std::size_t target_dim,
                                      const std::map<MultiIndex, Matrix>& rho, Matrix nu);

  std::size_t source_dim() const { return rho_.dim(); }
  std::size_t arity() const { return arity_; }
  std::size_t target_dim() const { return nu_.rows(); }
  const DenseTensor& rho_tensor() const { return rho_; }
  const Matrix& nu() const { return nu_; }

  Matrix rho(const MultiIndex& x) const;
  Matrix rho(std::span<const Vector> x) const;

  bool is_skew() const;

  // (V*, -rho^T, nu^T)
  Representation dual() const;

 private:
  std::size_t arity_;
  DenseTensor rho_;
  Matrix nu_;
};

}  // namespace homnambu
