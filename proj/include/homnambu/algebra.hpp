#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homnambu/matrix.hpp"
#include "homnambu/tensor.hpp"

namespace homnambu {

// Claims only: constructors store what they are given and never infer.
struct Flags {
  bool skew = false;
  bool multiplicative = false;
  friend bool operator==(const Flags&, const Flags&) = default;
};

class HomNambuAlgebra {
 public:
  HomNambuAlgebra(BracketTensor bracket, std::vector<Matrix> twists, Flags flags = {});
  static HomNambuAlgebra untwisted(BracketTensor bracket, Flags flags = {});

  std::size_t dim() const { return bracket_.dim(); }
  std::size_t arity() const { return bracket_.arity(); }
  const BracketTensor& bracket() const { return bracket_; }
  const std::vector<Matrix>& twists() const { return twists_; }
  const Matrix& twist(std::size_t i) const { return twists_.at(i); }
  const Flags& flags() const { return flags_; }

  bool twists_equal() const;
  bool twists_identity() const;

  HomNambuAlgebra with_flags(Flags flags) const;

  friend bool operator==(const HomNambuAlgebra& a, const HomNambuAlgebra& b) {
    return a.bracket_ == b.bracket_ && a.twists_ == b.twists_;
  }

 private:
  BracketTensor bracket_;
  std::vector<Matrix> twists_;
  Flags flags_;
};

class HomLeibnizAlgebra {
 public:
  HomLeibnizAlgebra(BracketTensor bracket, Matrix twist, Flags flags = {});

  std::size_t dim() const { return bracket_.dim(); }
  const BracketTensor& bracket() const { return bracket_; }
  const Matrix& twist() const { return twist_; }
  const Flags& flags() const { return flags_; }

  HomNambuAlgebra as_nambu() const;

 private:
  BracketTensor bracket_;
  Matrix twist_;
  Flags flags_;
};

class HomAssocNAry {
 public:
  HomAssocNAry(BracketTensor mu, std::vector<Matrix> twists);

  std::size_t dim() const { return mu_.dim(); }
  std::size_t arity() const { return mu_.arity(); }
  const BracketTensor& mu() const { return mu_; }
  const std::vector<Matrix>& twists() const { return twists_; }

 private:
  BracketTensor mu_;
  std::vector<Matrix> twists_;
};

class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);
  static BilinearForm identity(std::size_t dim) { return BilinearForm(Matrix::identity(dim)); }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar value(const Vector& x, const Vector& y) const;
  bool is_symmetric() const { return gram_.is_symmetric(); }
  std::size_t rank() const;
  bool nondegenerate() const { return rank() == dim(); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

struct QuadraticStructure {
  HomNambuAlgebra algebra;
  BilinearForm form;
  std::optional<Matrix> beta;
};

Vector eval_bracket(const HomNambuAlgebra& a, std::span<const Vector> args);

// Matrix of z -> [x_1, ..., x_{n-1}, z].
Matrix adjoint_operator(const BracketTensor& bracket, std::span<const Vector> x);
Matrix adjoint_operator(const HomNambuAlgebra& a, std::span<const Vector> x);

// L(e_{i_1}, ..., e_{i_{n-1}}) read directly from the coefficient table.
Matrix basis_adjoint(const BracketTensor& bracket, const MultiIndex& x);

}  // namespace homnambu
