#include "homnambu/corpus.hpp"

namespace homnambu::corpus {

HomNambuAlgebra zero_algebra(std::size_t dim, std::size_t arity) {
  return HomNambuAlgebra::untwisted(BracketTensor(dim, arity, Storage::antisymmetric), Flags{true, true});
}

QuadraticStructure example1(const Scalar& lambda) {
  const Matrix alpha = Matrix::diagonal({1, 1, -1});
  const Matrix b = Matrix::identity(3);
  BracketTensor bracket = BracketTensor::tabulate(3, 3, [&](const MultiIndex& t) {
    Vector out(3);
    out += (lambda * b(t[1], t[2])) * alpha.column(t[0]);
    out -= (lambda * b(t[2], t[0])) * alpha.column(t[1]);
    return out;
  });
  return {HomNambuAlgebra(bracket, {alpha, alpha}, Flags{false, true}), BilinearForm(b), alpha};
}

QuadraticStructure example2(const Scalar& lambda, const Scalar& nu, const Scalar& b) {
  BracketTensor bracket =
      BracketTensor::from_entries(3, 3, {{{0, 1, 2}, Vector{1, 2, 1}}}, Storage::antisymmetric);
  const Scalar half = Scalar(1, 2);
  const Matrix alpha1 = Matrix::from_columns({Vector{0, 0, 0}, Vector{lambda, nu, 0}, Vector{half * lambda, half * nu, 0}}, 3);
  const Matrix alpha2 = Matrix::diagonal({0, 0, b});
  const Scalar r = nu / lambda;
  const Scalar s = lambda / nu;
  const Matrix m = Matrix::from_rows({{-r, 1, r - 2}, {1, -s, 2 * s - 1}, {r - 2, 2 * s - 1, 4 - 4 * s - r}});
  return {HomNambuAlgebra(bracket, {alpha1, alpha2}, Flags{true, false}), BilinearForm(m), std::nullopt};
}

HomNambuAlgebra simple_3lie4() {
  BracketTensor::Entries entries;
  // increasing triples; the missing index l carries the sign of (i j k l)
  entries[{0, 1, 2}] = Vector{0, 0, 0, 1};
  entries[{0, 1, 3}] = Vector{0, 0, -1, 0};
  entries[{0, 2, 3}] = Vector{0, 1, 0, 0};
  entries[{1, 2, 3}] = Vector{-1, 0, 0, 0};
  return HomNambuAlgebra::untwisted(BracketTensor::from_entries(4, 3, entries, Storage::antisymmetric), Flags{true, true});
}

Matrix sign_automorphism() { return Matrix::diagonal({1, 1, -1, -1}); }

HomNambuAlgebra center_plus_simple() {
  BracketTensor::Entries entries;
  const HomNambuAlgebra simple = simple_3lie4();
  for (const auto& [t, v] : simple.bracket().entries()) {
    Vector w(5);
    for (std::size_t i = 0; i < 4; ++i) w[i + 1] = v[i];
    entries[{t[0] + 1, t[1] + 1, t[2] + 1}] = w;
  }
  return HomNambuAlgebra::untwisted(BracketTensor::from_entries(5, 3, entries, Storage::antisymmetric), Flags{true, true});
}

HomLeibnizAlgebra heisenberg3() {
  BracketTensor b = BracketTensor::from_entries(3, 2, {{{0, 1}, Vector{0, 0, 1}}}, Storage::antisymmetric);
  return HomLeibnizAlgebra(b, Matrix::identity(3), Flags{true, true});
}

QuadraticLieAlgebra sl2() {
  BracketTensor::Entries entries;
  entries[{0, 1}] = Vector{0, 2, 0};
  entries[{0, 2}] = Vector{0, 0, -2};
  entries[{1, 2}] = Vector{1, 0, 0};
  const Matrix killing = Matrix::from_rows({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  return QuadraticLieAlgebra(BracketTensor::from_entries(3, 2, entries, Storage::antisymmetric), BilinearForm(killing));
}

Matrix sl2_involution() { return Matrix::diagonal({1, -1, -1}); }

HomAssocNAry truncated_polynomial(std::size_t arity) {
  // basis (1, t); the product is t^(sum of exponents), zero past t^1
  BracketTensor mu = BracketTensor::tabulate(2, arity, [](const MultiIndex& t) {
    std::size_t degree = 0;
    for (auto i : t) degree += i;
    Vector out(2);
    if (degree <= 1) out[degree] = 1;
    return out;
  });
  return HomAssocNAry(mu, std::vector<Matrix>(arity - 1, Matrix::identity(2)));
}

Matrix multiplication_by_t() { return Matrix::from_rows({{0, 0}, {1, 0}}); }

HomAssocNAry unit_assoc(std::size_t arity) {
  BracketTensor mu = BracketTensor::from_entries(1, arity, {{MultiIndex(arity, 0), Vector{1}}});
  return HomAssocNAry(mu, std::vector<Matrix>(arity - 1, Matrix::identity(1)));
}

std::vector<Entry> bundled() {
  std::vector<Entry> out;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::string name = "zero_d" + std::to_string(d) + "_n" + std::to_string(n);
      out.push_back({name + ".json", AlgebraFile::of(zero_algebra(d, n)).named(name, "zero bracket, identity twists")});
    }
  }
  out.push_back({"zero3.json", AlgebraFile::of(zero_algebra(3, 3)).named("zero3", "zero ternary bracket on a 3-dim space")});
  out.push_back({"example1.json",
                 AlgebraFile::of(example1()).named("example1", "ternary Hom-Nambu algebra from a form and an involution: "
                                                               "lambda = 1, B = identity, alpha = diag(1,1,-1), beta = alpha")});
  out.push_back({"example2.json",
                 AlgebraFile::of(example2()).named("example2", "3-dim ternary Hom-Nambu-Lie algebra with lambda = 1, nu = 2, "
                                                               "b = 1 and the degenerate form M")});
  out.push_back({"simple3lie4.json",
                 AlgebraFile::of(simple_3lie4()).named("simple3lie4", "4-dim simple 3-Lie algebra, epsilon-tensor bracket")});
  out.push_back({"center_simple5.json",
                 AlgebraFile::of(center_plus_simple()).named("center_simple5", "1-dim center e1 plus the simple 3-Lie algebra on e2..e5")});
  out.push_back({"heisenberg3.json",
                 AlgebraFile::of(heisenberg3()).named("heisenberg3", "3-dim Heisenberg Lie algebra [e1,e2] = e3")});
  out.push_back({"sl2.json", AlgebraFile::of(sl2()).named("sl2", "sl2 over Q, basis (h, e, f), Killing form")});
  out.push_back({"truncated_poly3.json",
                 AlgebraFile::of(truncated_polynomial(3)).named("truncated_poly3", "K[t]/(t^2) with the ternary product, basis (1, t)")});
  return out;
}

}  // namespace homnambu::corpus
