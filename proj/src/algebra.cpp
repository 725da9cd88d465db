#include "homnambu/algebra.hpp"

#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"

namespace homnambu {

namespace {

void require_twists(const std::vector<Matrix>& twists, std::size_t count, std::size_t dim) {
  if (twists.size() != count) throw Error("expected " + std::to_string(count) + " twist maps");
  for (const auto& t : twists) {
    if (t.rows() != dim || t.cols() != dim) throw Error("twist map has wrong shape");
  }
}

}  // namespace

HomNambuAlgebra::HomNambuAlgebra(BracketTensor bracket, std::vector<Matrix> twists, Flags flags)
    : bracket_(std::move(bracket)), twists_(std::move(twists)), flags_(flags) {
  require_twists(twists_, bracket_.arity() - 1, bracket_.dim());
}

HomNambuAlgebra HomNambuAlgebra::untwisted(BracketTensor bracket, Flags flags) {
  std::vector<Matrix> twists(bracket.arity() - 1, Matrix::identity(bracket.dim()));
  return HomNambuAlgebra(std::move(bracket), std::move(twists), flags);
}

bool HomNambuAlgebra::twists_equal() const {
  for (const auto& t : twists_) {
    if (!(t == twists_.front())) return false;
  }
  return true;
}

bool HomNambuAlgebra::twists_identity() const {
  for (const auto& t : twists_) {
    if (!t.is_identity()) return false;
  }
  return true;
}

HomNambuAlgebra HomNambuAlgebra::with_flags(Flags flags) const {
  HomNambuAlgebra copy = *this;
  copy.flags_ = flags;
  return copy;
}

HomLeibnizAlgebra::HomLeibnizAlgebra(BracketTensor bracket, Matrix twist, Flags flags)
    : bracket_(std::move(bracket)), twist_(std::move(twist)), flags_(flags) {
  if (bracket_.arity() != 2) throw Error("Hom-Leibniz bracket must be binary");
  require_twists({twist_}, 1, bracket_.dim());
}

HomNambuAlgebra HomLeibnizAlgebra::as_nambu() const { return HomNambuAlgebra(bracket_, {twist_}, flags_); }

HomAssocNAry::HomAssocNAry(BracketTensor mu, std::vector<Matrix> twists)
    : mu_(std::move(mu)), twists_(std::move(twists)) {
  require_twists(twists_, mu_.arity() - 1, mu_.dim());
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw Error("Gram matrix must be square");
}

Scalar BilinearForm::value(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

std::size_t BilinearForm::rank() const { return homnambu::rank(gram_); }

Vector eval_bracket(const HomNambuAlgebra& a, std::span<const Vector> args) {
  return a.bracket().eval(args);
}

Matrix adjoint_operator(const BracketTensor& bracket, std::span<const Vector> x) {
  const std::size_t d = bracket.dim();
  if (x.size() + 1 != bracket.arity()) throw Error("adjoint operator needs n-1 arguments");
  std::vector<Vector> args(x.begin(), x.end());
  args.emplace_back(d);
  Matrix m(d, d);
  for (std::size_t z = 0; z < d; ++z) {
    args.back() = Vector::unit(d, z);
    const Vector col = bracket.eval(args);
    for (std::size_t r = 0; r < d; ++r) m(r, z) = col[r];
  }
  return m;
}

Matrix adjoint_operator(const HomNambuAlgebra& a, std::span<const Vector> x) {
  return adjoint_operator(a.bracket(), x);
}

Matrix basis_adjoint(const BracketTensor& bracket, const MultiIndex& x) {
  const std::size_t d = bracket.dim();
  if (x.size() + 1 != bracket.arity()) throw Error("adjoint operator needs n-1 arguments");
  Matrix m(d, d);
  const std::uint64_t base = flat_index(x, d) * d;
  for (std::size_t z = 0; z < d; ++z) {
    const Scalar* col = bracket.dense().at(base + z);
    for (std::size_t r = 0; r < d; ++r) m(r, z) = col[r];
  }
  return m;
}

}  // namespace homnambu
