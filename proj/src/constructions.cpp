#include "homnambu/constructions.hpp"

#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/structure_spaces.hpp"
#include "homnambu/verify.hpp"
#include "scan.hpp"
#include "twisting.hpp"

namespace homnambu {

namespace {

void require(const CheckReport& report, const std::string& what) {
  if (!report.passed) throw HypothesisError(what, report);
}

// Column-by-column comparison of two matrices as a one-off check.
CheckReport compare_maps(const std::string& identity, const Matrix& left, const Matrix& right) {
  CheckReport report;
  report.identity = identity;
  for (std::size_t c = 0; c < left.cols(); ++c) {
    ++report.tuples_checked;
    if (!(left.column(c) == right.column(c))) {
      report.passed = false;
      report.counterexample = Counterexample{{c}, left.column(c), right.column(c), ""};
      return report;
    }
  }
  return report;
}

void require_shape(const Matrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) throw Error(std::string(what) + " has the wrong shape");
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

BracketTensor bracket_twisted_in(const BracketTensor& b, const std::vector<const Matrix*>& maps) {
  return BracketTensor::from_dense(b.dense().precompose(maps));
}

// Keeps antisymmetric storage when the data allows it.
BracketTensor prefer_antisymmetric(const BracketTensor& b) {
  try {
    return b.with_storage(Storage::antisymmetric);
  } catch (const Error&) {
    return b;
  }
}

}  // namespace

HomNambuAlgebra twist_by_morphism(const HomNambuAlgebra& a, const Matrix& rho, const CheckOptions& options) {
  require_shape(rho, a.dim(), "rho");
  if (!a.twists_identity()) throw Error("twist_by_morphism needs an algebra with identity twists");
  require(check_hom_nambu_identity(a, options), "the input is not a Nambu algebra");
  require(check_morphism(a, a, rho, options), "rho is not an endomorphism of the algebra");
  Flags flags{a.flags().skew, true};
  return HomNambuAlgebra(a.bracket().postcompose(rho), std::vector<Matrix>(a.arity() - 1, rho), flags);
}

HomNambuAlgebra self_twist(const HomNambuAlgebra& a, const CheckOptions& options) {
  require(check_multiplicativity(a, options), "the input is not multiplicative");
  const std::size_t n = a.arity();
  const Matrix& alpha = a.twist(0);
  Flags flags{a.flags().skew, true};
  return HomNambuAlgebra(a.bracket().postcompose(power(alpha, n - 1)), std::vector<Matrix>(n - 1, power(alpha, n)),
                         flags);
}

BracketTensor tensor_bracket(const BracketTensor& mu, const BracketTensor& bracket) {
  if (mu.arity() != bracket.arity()) throw Error("arities differ");
  const std::size_t n = bracket.arity();
  const std::size_t dn = bracket.dim();
  const Storage storage = bracket.storage();
  return BracketTensor::tabulate(
      mu.dim() * dn, n,
      [&](const MultiIndex& t) {
        MultiIndex ta(n), tx(n);
        for (std::size_t s = 0; s < n; ++s) {
          ta[s] = t[s] / dn;
          tx[s] = t[s] % dn;
        }
        return kronecker(mu.value(ta), bracket.value(tx));
      },
      storage);
}

HomNambuAlgebra tensor_product(const HomAssocNAry& h, const HomNambuAlgebra& a, const CheckOptions& options) {
  if (h.arity() != a.arity()) throw Error("arities differ");
  require(check_total_hom_associativity(h, options), "the first factor is not totally Hom-associative");
  require(check_hom_nambu_identity(a, options), "the second factor is not a Hom-Nambu algebra");
  // mu is symmetric (checked above), so antisymmetric storage of the bracket carries over.
  std::vector<Matrix> zeta;
  for (std::size_t i = 0; i + 1 < a.arity(); ++i) zeta.push_back(kronecker(h.twists()[i], a.twist(i)));
  Flags flags{a.bracket().storage() == Storage::antisymmetric, false};
  return HomNambuAlgebra(tensor_bracket(h.mu(), a.bracket()), std::move(zeta), flags);
}

CheckReport check_tensor_factor_form(const HomAssocNAry& h, const FormWithTwist& fa, const CheckOptions& options) {
  const std::size_t d = h.dim();
  const std::size_t n = h.arity();
  require_shape(fa.form.gram(), d, "form");
  require_shape(fa.beta, d, "beta");
  ReportBuilder rb("tensor_factor_form");
  if (!rb.add(check_form_symmetric_map(fa.form, Matrix::identity(d), "form_symmetry", options))) return rb.finish();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!rb.add(check_form_symmetric_map(fa.form, h.twists()[i], "eta_symmetry", options))) return rb.finish();
  }
  const BracketTensor& mu = h.mu();
  const Matrix& g = fa.form.gram();
  const std::uint64_t heads = checked_pow(d, n - 1);
  auto eval = [&](std::uint64_t cs) -> std::optional<Counterexample> {
    const std::uint64_t head = cs / (d * d);
    const std::size_t b = (cs / d) % d;
    const std::size_t c = cs % d;
    MultiIndex prefix = unflatten_index(head, d, n - 1);
    MultiIndex tb = prefix, tc = prefix;
    tb.push_back(b);
    tc.push_back(c);
    const Vector mb = mu.value(tb), mc = mu.value(tc);
    const Scalar left = dot(mb, g * fa.beta.column(c));
    const Scalar right = dot(fa.beta.column(b), g * mc);
    if (left == right) return std::nullopt;
    MultiIndex tuple = prefix;
    tuple.push_back(b);
    tuple.push_back(c);
    return Counterexample{tuple, Vector{left}, Vector{right}, ""};
  };
  rb.add(detail::scan("mu_beta_symmetry", heads * d * d, options, eval));
  return rb.finish();
}

QuadraticStructure tensor_product(const HomAssocNAry& h, const HomNambuAlgebra& a, const FormWithTwist& fa,
                                  const FormWithTwist& fn, const CheckOptions& options) {
  require(check_tensor_factor_form(h, fa, options), "the form on the first factor fails its hypotheses");
  require(check_quadratic({a, fn.form, fn.beta}, options), "the second factor is not Hom-quadratic");
  HomNambuAlgebra t = tensor_product(h, a, options);
  return {std::move(t), BilinearForm(kronecker(fa.form.gram(), fn.form.gram())), kronecker(fa.beta, fn.beta)};
}

InducedLeibniz induced_hom_leibniz(const HomNambuAlgebra& a, const std::optional<BilinearForm>& form,
                                   const CheckOptions& options) {
  require(check_multiplicativity(a, options), "the input is not multiplicative");
  const std::size_t d = a.dim();
  const std::size_t m = a.arity() - 1;
  const Matrix& alpha = a.twist(0);
  const std::uint64_t big = checked_pow(d, m);
  const DenseTensor& c = a.bracket().dense();
  BracketTensor::Entries entries;
  for (std::uint64_t x = 0; x < big; ++x) {
    for (std::uint64_t y = 0; y < big; ++y) {
      const MultiIndex ys = unflatten_index(y, d, m);
      Vector sum(big);
      for (std::size_t i = 0; i < m; ++i) {
        Vector term{Scalar(1)};
        for (std::size_t s = 0; s < m; ++s) {
          term = kronecker(term, s == i ? c.value(x * d + ys[s]) : alpha.column(ys[s]));
        }
        sum += term;
      }
      if (!sum.is_zero()) entries.emplace(MultiIndex{x, y}, std::move(sum));
    }
  }
  InducedLeibniz out{HomLeibnizAlgebra(BracketTensor::from_entries(big, 2, entries), kronecker_power(alpha, m)),
                     std::nullopt};
  if (form) {
    require_shape(form->gram(), d, "form");
    out.form = BilinearForm(kronecker_power(form->gram(), m));
  }
  return out;
}

TStarExtension tstar_extension(const HomNambuAlgebra& a, const BilinearForm& b, const std::optional<Matrix>& omega,
                               const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  require_shape(b.gram(), d, "form");
  if (!a.twists_identity()) throw Error("the T* extension needs an algebra with identity twists");
  require(check_skew_symmetry(a, options), "the input is not skew-symmetric");
  require(check_hom_nambu_identity(a, options), "the input is not a Nambu-Lie algebra");
  require(check_quadratic({a, b, std::nullopt}, options), "the input is not quadratic");
  if (!b.nondegenerate()) throw Error("the form is degenerate");
  if (omega) {
    require_shape(*omega, d, "omega");
    require(compare_maps("involution", *omega * *omega, Matrix::identity(d)), "omega is not an involution");
    require(check_morphism(a, a, *omega, options), "omega is not an automorphism");
    require(check_form_symmetric_map(b, *omega, "omega_symmetry", options), "omega is not symmetric for B");
  }

  const DenseTensor& c = a.bracket().dense();
  BracketTensor bracket = BracketTensor::tabulate(2 * d, n, [&](const MultiIndex& u) {
    Vector out(2 * d);
    std::size_t dual_slot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] < d) continue;
      if (dual_slot != n) return out;  // two forms: zero
      dual_slot = i;
    }
    if (dual_slot == n) {
      const Vector v = c.value(flat_index(u, d));
      for (std::size_t j = 0; j < d; ++j) out[j] = v[j];
      return out;
    }
    // f_i o L(x_1..^x_i..x_n) with f_i = e_k^*: row k of the adjoint matrix.
    const std::size_t k = u[dual_slot] - d;
    MultiIndex rest;
    for (std::size_t s = 0; s < n; ++s) {
      if (s != dual_slot) rest.push_back(u[s]);
    }
    const Matrix l = basis_adjoint(a.bracket(), rest);
    const bool negative = (dual_slot + 1 + n + 1) % 2 == 1;
    for (std::size_t j = 0; j < d; ++j) out[d + j] = negative ? Scalar(-l(k, j)) : l(k, j);
    return out;
  });

  Matrix gram(2 * d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) gram(r, s) = b.gram()(r, s);
    gram(r, d + r) = 1;
    gram(d + r, r) = 1;
  }

  TStarExtension out{{HomNambuAlgebra::untwisted(bracket), BilinearForm(gram), std::nullopt}, std::nullopt,
                     std::nullopt, check_skew_symmetry(bracket, options)};
  if (out.skew.passed) {
    bracket = bracket.with_storage(Storage::antisymmetric);
    out.extension.algebra = HomNambuAlgebra::untwisted(bracket, Flags{true, false});
  }
  if (omega) {
    const Matrix big = block_diagonal(*omega, omega->transpose());
    HomNambuAlgebra twisted(bracket.postcompose(big), std::vector<Matrix>(n - 1, big), Flags{out.skew.passed, true});
    out.hom = QuadraticStructure{twisted, BilinearForm(gram), big};
    out.twisted = QuadraticStructure{twisted, BilinearForm(big.transpose() * gram), std::nullopt};
  }
  return out;
}

BilinearForm pullback_form(const BilinearForm& b, const Matrix& m) {
  require_shape(m, b.dim(), "map");
  require(check_form_symmetric_map(b, m, "form_symmetric_map"), "the map is not symmetric for the form");
  return BilinearForm(m.transpose() * b.gram());
}

TraceTernary trace_induced_ternary(const HomLeibnizAlgebra& l, const Matrix& gamma, const Vector& tau,
                                   const std::optional<TraceQuadratic>& quadratic, const CheckOptions& options) {
  const std::size_t d = l.dim();
  require_shape(gamma, d, "gamma");
  if (tau.size() != d) throw Error("tau has the wrong dimension");
  require(check_skew_symmetry(l.bracket(), options), "the binary bracket is not skew-symmetric");
  require(check_hom_leibniz(l, options), "the binary algebra fails the Hom-Jacobi identity");
  const Matrix& alpha = l.twist();
  const Vector ta = alpha.transpose() * tau;  // x -> tau(alpha x)
  const Vector tg = gamma.transpose() * tau;

  auto scalar_condition = [&](const char* name, const Vector& tm) {
    return detail::scan(name, d * d, options, [&](std::uint64_t cs) -> std::optional<Counterexample> {
      const std::size_t x = cs / d, y = cs % d;
      const Scalar left = tm[x] * tau[y];
      const Scalar right = tau[x] * tm[y];
      if (left == right) return std::nullopt;
      return Counterexample{{x, y}, Vector{left}, Vector{right}, ""};
    });
  };
  require(scalar_condition("trace_alpha", ta), "tau(alpha x) tau(y) = tau(x) tau(alpha y) fails");
  require(scalar_condition("trace_gamma", tg), "tau(gamma x) tau(y) = tau(x) tau(gamma y) fails");
  require(detail::scan("trace_alpha_gamma", d * d, options,
                       [&](std::uint64_t cs) -> std::optional<Counterexample> {
                         const std::size_t x = cs / d, y = cs % d;
                         Vector left = ta[x] * gamma.column(y);
                         Vector right = tg[x] * alpha.column(y);
                         if (left == right) return std::nullopt;
                         return Counterexample{{x, y}, left, right, ""};
                       }),
          "tau(alpha x) gamma(y) = tau(gamma x) alpha(y) fails");

  const BracketTensor& b2 = l.bracket();
  BracketTensor ternary = BracketTensor::tabulate(
      d, 3,
      [&](const MultiIndex& t) {
        Vector v(d);
        v += tau[t[0]] * b2.value({t[1], t[2]});
        v += tau[t[1]] * b2.value({t[2], t[0]});
        v += tau[t[2]] * b2.value({t[0], t[1]});
        return v;
      },
      Storage::antisymmetric);
  TraceTernary out{HomNambuAlgebra(ternary, {alpha, gamma}, Flags{true, false}), std::nullopt};
  if (quadratic) {
    const BilinearForm& form = quadratic->form;
    const Matrix& beta = quadratic->beta;
    require_shape(form.gram(), d, "form");
    require_shape(beta, d, "beta");
    require(check_quadratic({l.as_nambu(), form, beta}, options), "the binary algebra is not Hom-quadratic");
    require(check_form_symmetric_map(form, alpha, "alpha_symmetry", options), "B is not alpha-symmetric");
    require(check_form_symmetric_map(form, gamma, "gamma_symmetry", options), "B is not gamma-symmetric");
    // bg(y, z) = B(beta y, z)
    const Matrix bg = beta.transpose() * form.gram();
    require(detail::scan("trace_form", d * d * d, options,
                         [&](std::uint64_t cs) -> std::optional<Counterexample> {
                           const std::size_t x = cs / (d * d), y = (cs / d) % d, z = cs % d;
                           const Scalar left = tau[x] * bg(y, z);
                           const Scalar right = tau[y] * bg(x, z);
                           if (left == right) return std::nullopt;
                           return Counterexample{{x, y, z}, Vector{left}, Vector{right}, ""};
                         }),
            "tau(x) B(beta y, z) = tau(y) B(beta x, z) fails");
    out.quadratic = QuadraticStructure{out.algebra, form, beta};
  }
  return out;
}

namespace {

// [[x_1..x_m], alpha x_{m+1}, .., alpha x_{2m-1}]
BracketTensor raise_once(const BracketTensor& b, const Matrix& alpha) {
  const std::size_t d = b.dim();
  const std::size_t m = b.arity();
  const DenseTensor& c = b.dense();
  std::vector<const Matrix*> maps(m, &alpha);
  maps[0] = nullptr;
  const DenseTensor p = c.precompose(maps);
  const std::size_t arity = 2 * m - 1;
  DenseTensor out(d, arity);
  const std::uint64_t tail = checked_pow(d, m - 1);
  for (std::uint64_t t = 0; t < out.tuples(); ++t) {
    const std::uint64_t head = t / tail;
    const std::uint64_t rest = t % tail;
    const Scalar* inner = c.at(head);
    std::vector<Scalar> acc(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(inner[j]) != 0) detail::axpy(acc, inner[j], p.at(j * tail + rest));
    }
    Scalar* dst = out.at(t);
    for (std::size_t j = 0; j < d; ++j) dst[j] = acc[j];
  }
  return BracketTensor::from_dense(out);
}

}  // namespace

HomNambuAlgebra raise_arity(const HomNambuAlgebra& a, std::size_t k, const CheckOptions& options) {
  if (k == 0) return a;
  require(check_multiplicativity(a, options), "the input is not multiplicative");
  BracketTensor b = a.bracket();
  Matrix alpha = a.twist(0);
  for (std::size_t step = 0; step < k; ++step) {
    b = raise_once(b, alpha);
    alpha = alpha * alpha;
  }
  return HomNambuAlgebra(b, std::vector<Matrix>(b.arity() - 1, alpha), Flags{false, true});
}

QuadraticStructure raise_arity(const QuadraticStructure& q, std::size_t k, const CheckOptions& options) {
  if (k == 0) return q;
  HomNambuAlgebra raised = raise_arity(q.algebra, k, options);
  const Matrix beta = q.beta.value_or(Matrix::identity(q.algebra.dim()));
  const std::size_t exponent = (std::size_t{1} << k) - 1;
  return {std::move(raised), q.form, beta * power(q.algebra.twist(0), exponent)};
}

HomNambuAlgebra reduce_arity(const HomNambuAlgebra& a, const std::vector<Vector>& fixed, const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  const std::size_t k = fixed.size();
  if (k == 0) return a;
  if (k + 2 > n) throw Error("reduction must leave arity at least 2");
  for (std::size_t j = 0; j < k; ++j) {
    if (fixed[j].size() != d) throw Error("fixed vector has the wrong dimension");
    const Vector image = a.twist(j) * fixed[j];
    if (!(image == fixed[j])) {
      CheckReport r;
      r.identity = "fixed_point";
      r.passed = false;
      r.tuples_checked = j + 1;
      r.counterexample = Counterexample{{j}, image, fixed[j], "alpha_" + std::to_string(j + 1) + " moves a_" +
                                                                  std::to_string(j + 1)};
      throw HypothesisError("alpha_j(a_j) = a_j fails", r);
    }
  }
  // [a_1..a_j, x_{j+1}..x_{n-1}, a_j] = 0 for every j and basis x.
  std::vector<std::uint64_t> offsets{0};
  for (std::size_t j = 1; j <= k; ++j) offsets.push_back(offsets.back() + checked_pow(d, n - 1 - j));
  auto eval = [&](std::uint64_t cs) -> std::optional<Counterexample> {
    std::size_t j = 1;
    while (cs >= offsets[j]) ++j;
    const MultiIndex xs = unflatten_index(cs - offsets[j - 1], d, n - 1 - j);
    std::vector<Vector> args(fixed.begin(), fixed.begin() + j);
    for (auto x : xs) args.push_back(Vector::unit(d, x));
    args.push_back(fixed[j - 1]);
    Vector v = a.bracket().eval(args);
    if (v.is_zero()) return std::nullopt;
    return Counterexample{xs, v, Vector(d), "a_" + std::to_string(j) + " in the last slot"};
  };
  require(detail::scan("annihilation", offsets.back(), options, eval), "the annihilation condition fails");

  const Storage storage = a.bracket().storage();
  BracketTensor reduced = BracketTensor::tabulate(
      d, n - k,
      [&](const MultiIndex& t) {
        std::vector<Vector> args(fixed.begin(), fixed.end());
        for (auto x : t) args.push_back(Vector::unit(d, x));
        return a.bracket().eval(args);
      },
      storage);
  std::vector<Matrix> twists(a.twists().begin() + k, a.twists().end());
  return HomNambuAlgebra(reduced, std::move(twists), Flags{storage == Storage::antisymmetric, false});
}

QuadraticStructure reduce_arity(const QuadraticStructure& q, const std::vector<Vector>& fixed,
                                const CheckOptions& options) {
  return {reduce_arity(q.algebra, fixed, options), q.form, q.beta};
}

HomNambuAlgebra centroid_twisted_bracket(const HomNambuAlgebra& a, const Matrix& theta, std::size_t p,
                                         const CheckOptions& options) {
  const std::size_t n = a.arity();
  require_shape(theta, a.dim(), "theta");
  if (p < 1 || p > n) throw Error("p must lie between 1 and n");
  if (!a.twists_identity()) throw Error("the centroid bracket needs an algebra with identity twists");
  require(check_skew_symmetry(a, options), "the input is not skew-symmetric");
  require(check_hom_nambu_identity(a, options), "the input is not a Nambu-Lie algebra");
  const SubspaceBasis cent = compute_centroid(a, 0);
  if (!cent.contains(theta)) {
    const auto m = centroid_membership(a, theta, 0);
    throw Error("theta is not in the centroid: " + m.violated);
  }
  std::vector<const Matrix*> maps(n, nullptr);
  for (std::size_t s = 0; s < p; ++s) maps[s] = &theta;
  BracketTensor b = prefer_antisymmetric(bracket_twisted_in(a.bracket(), maps));
  return HomNambuAlgebra(b, std::vector<Matrix>(n - 1, theta), Flags{b.storage() == Storage::antisymmetric, false});
}

}  // namespace homnambu
