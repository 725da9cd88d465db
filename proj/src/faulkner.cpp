#include "homnambu/faulkner.hpp"

#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/verify.hpp"
#include "scan.hpp"

namespace homnambu {

namespace {

void require(const CheckReport& report, const std::string& what) {
  if (!report.passed) throw HypothesisError(what, report);
}

void require_involutive_automorphism(const QuadraticLieAlgebra& g, const Matrix& alpha, const CheckOptions& options) {
  const std::size_t d = g.dim();
  if (alpha.rows() != d || alpha.cols() != d) throw Error("alpha has the wrong shape");
  const Matrix sq = alpha * alpha;
  for (std::size_t c = 0; c < d; ++c) {
    if (!(sq.column(c) == Vector::unit(d, c))) {
      CheckReport r;
      r.identity = "involution";
      r.passed = false;
      r.tuples_checked = c + 1;
      r.counterexample = Counterexample{{c}, sq.column(c), Vector::unit(d, c), ""};
      throw HypothesisError("alpha is not an involution", r);
    }
  }
  require(check_morphism(g.algebra(), g.algebra(), alpha, options), "alpha is not an automorphism");
  require(check_form_symmetric_map(g.form(), alpha, "alpha_symmetry", options), "alpha is not symmetric for B");
}

Vector basis_phi(const QuadraticLieAlgebra& g, std::size_t x, std::size_t f) {
  const std::size_t d = g.dim();
  return phi_map(g, Vector::unit(d, x), Vector::unit(d, f));
}

}  // namespace

QuadraticLieAlgebra::QuadraticLieAlgebra(BracketTensor bracket, BilinearForm form, const CheckOptions& options)
    : algebra_(HomNambuAlgebra::untwisted(std::move(bracket))), form_(std::move(form)) {
  if (algebra_.arity() != 2) throw Error("a quadratic Lie algebra has a binary bracket");
  if (form_.dim() != algebra_.dim()) throw Error("form and algebra dimensions differ");
  require(check_skew_symmetry(algebra_, options), "the bracket is not skew-symmetric");
  require(check_hom_nambu_identity(algebra_, options), "the bracket fails the Jacobi identity");
  require(check_quadratic({algebra_, form_, std::nullopt}, options), "the form is not invariant");
  auto inv = inverse(form_.gram());
  if (!inv) throw Error("the form is degenerate");
  gram_inverse_ = std::move(*inv);
  algebra_ = HomNambuAlgebra::untwisted(algebra_.bracket().with_storage(Storage::antisymmetric), Flags{true, true});
}

Vector QuadraticLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const Vector args[] = {x, y};
  return algebra_.bracket().eval(args);
}

Vector phi_map(const QuadraticLieAlgebra& g, const Vector& x, const Vector& f) {
  const std::size_t d = g.dim();
  if (x.size() != d || f.size() != d) throw Error("vector has the wrong dimension");
  // rhs_y = <[e_y, x], f>, then G phi = rhs.
  const Matrix lx = adjoint_operator(g.algebra(), std::span<const Vector>(&x, 1));
  Vector rhs(d);
  for (std::size_t y = 0; y < d; ++y) rhs[y] = -dot(lx.column(y), f);
  return g.gram_inverse() * rhs;
}

Vector dual_action(const QuadraticLieAlgebra& g, const Vector& p, const Vector& f) {
  const std::size_t d = g.dim();
  Vector out(d);
  for (std::size_t y = 0; y < d; ++y) out[y] = -dot(f, g.bracket(p, Vector::unit(d, y)));
  return out;
}

Vector flat(const QuadraticLieAlgebra& g, const Vector& y) { return g.form().gram().transpose() * y; }

HomLeibnizAlgebra tensor_leibniz(const QuadraticLieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<Vector> phis(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t f = 0; f < d; ++f) phis[x * d + f] = basis_phi(g, x, f);
  BracketTensor::Entries entries;
  for (std::size_t u = 0; u < d * d; ++u) {
    const Vector& p = phis[u];
    for (std::size_t y = 0; y < d; ++y) {
      const Vector py = g.bracket(p, Vector::unit(d, y));
      for (std::size_t h = 0; h < d; ++h) {
        Vector v = kronecker(py, Vector::unit(d, h));
        v += kronecker(Vector::unit(d, y), dual_action(g, p, Vector::unit(d, h)));
        if (!v.is_zero()) entries.emplace(MultiIndex{u, y * d + h}, std::move(v));
      }
    }
  }
  return HomLeibnizAlgebra(BracketTensor::from_entries(d * d, 2, entries), Matrix::identity(d * d));
}

OmegaLeibniz omega_twist_leibniz(const QuadraticLieAlgebra& g, const Matrix& alpha, const CheckOptions& options) {
  require_involutive_automorphism(g, alpha, options);
  const std::size_t d = g.dim();
  const HomLeibnizAlgebra base = tensor_leibniz(g);
  const Matrix omega = kronecker(alpha, alpha.transpose());
  Matrix gram(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) gram(i * d + j, k * d + l) = alpha(l, i) * alpha(j, k);
  HomLeibnizAlgebra twisted(base.bracket().postcompose(omega), omega, Flags{false, true});
  BilinearForm form(gram);
  OmegaLeibniz out{twisted, form, {}, {}, {}, form.nondegenerate()};
  const HomNambuAlgebra as_nambu = twisted.as_nambu();
  out.multiplicativity = check_multiplicativity(as_nambu, options);
  out.hom_leibniz = check_hom_leibniz(twisted, options);
  out.quadratic = check_quadratic({as_nambu, form, std::nullopt}, options);
  return out;
}

Vector t_map(const QuadraticLieAlgebra& g, const Vector& x, const Vector& y) { return phi_map(g, x, flat(g, y)); }

CheckReport check_t_antisymmetry(const QuadraticLieAlgebra& g, const CheckOptions& options) {
  const std::size_t d = g.dim();
  return detail::scan("t_antisymmetry", d * d, options, [&](std::uint64_t cs) -> std::optional<Counterexample> {
    const std::size_t x = cs / d, y = cs % d;
    const Vector left = t_map(g, Vector::unit(d, x), Vector::unit(d, y));
    const Vector right = -t_map(g, Vector::unit(d, y), Vector::unit(d, x));
    if (left == right) return std::nullopt;
    return Counterexample{{x, y}, left, right, ""};
  });
}

CheckReport check_equivariance(const QuadraticLieAlgebra& g, const CheckOptions& options) {
  const std::size_t d = g.dim();
  std::vector<Vector> phis(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t f = 0; f < d; ++f) phis[x * d + f] = basis_phi(g, x, f);
  return detail::scan("equivariance", d * d * d * d, options, [&](std::uint64_t cs) -> std::optional<Counterexample> {
    const std::size_t u = cs / (d * d), v = cs % (d * d);
    const std::size_t y = v / d, h = v % d;
    const Vector& p = phis[u];
    const Vector left = g.bracket(p, phis[v]);
    Vector right = phi_map(g, g.bracket(p, Vector::unit(d, y)), Vector::unit(d, h));
    right += phi_map(g, Vector::unit(d, y), dual_action(g, p, Vector::unit(d, h)));
    if (left == right) return std::nullopt;
    return Counterexample{{u / d, u % d, y, h}, left, right, ""};
  });
}

FaulknerTernary faulkner_ternary(const QuadraticLieAlgebra& g, const std::optional<Matrix>& alpha,
                                 const CheckOptions& options) {
  const std::size_t d = g.dim();
  if (alpha) require_involutive_automorphism(g, *alpha, options);
  std::vector<Vector> ts(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) ts[x * d + y] = t_map(g, Vector::unit(d, x), Vector::unit(d, y));
  BracketTensor bracket = BracketTensor::tabulate(d, 3, [&](const MultiIndex& t) {
    return g.bracket(ts[t[0] * d + t[1]], Vector::unit(d, t[2]));
  });
  std::vector<Matrix> twists(2, Matrix::identity(d));
  BilinearForm form = g.form();
  std::optional<Matrix> beta;
  Flags flags{false, false};
  if (alpha) {
    bracket = bracket.postcompose(*alpha);
    twists.assign(2, *alpha);
    form = BilinearForm(alpha->transpose() * g.form().gram());
    flags.multiplicative = true;
  }
  FaulknerTernary out{{HomNambuAlgebra(bracket, twists, flags), form, beta}, check_t_antisymmetry(g, options), {}, {}};
  out.hom_nambu = check_hom_nambu_identity(out.structure.algebra, options);
  out.quadratic = check_quadratic(out.structure, options);
  return out;
}

}  // namespace homnambu
