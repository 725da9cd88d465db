#include "homnambu/verify.hpp"

#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "scan.hpp"
#include "twisting.hpp"

namespace homnambu {

using detail::axpy;
using detail::scan;
using detail::slot_twisted;

namespace {

std::vector<MultiIndex> all_tuples(std::size_t dim, std::size_t length) {
  const std::uint64_t count = checked_pow(dim, length);
  std::vector<MultiIndex> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(unflatten_index(k, dim, length));
  return out;
}

MultiIndex join(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vector row_vector(const Scalar* p, std::size_t width) { return Vector(std::vector<Scalar>(p, p + width)); }

}  // namespace

CheckReport check_hom_nambu_identity(const HomNambuAlgebra& a, const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  const DenseTensor& c = a.bracket().dense();
  std::vector<DenseTensor> twisted;
  twisted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) twisted.push_back(slot_twisted(c, a.twists(), i));

  // Both sides are antisymmetric in x, and in y when all twists agree.
  const bool reduced = a.bracket().storage() == Storage::antisymmetric && a.twists_equal();
  const auto xs = reduced ? increasing_tuples(d, n - 1) : all_tuples(d, n - 1);
  const auto ys = reduced ? increasing_tuples(d, n) : all_tuples(d, n);
  std::vector<std::uint64_t> place(n);
  for (std::size_t i = 0; i < n; ++i) place[i] = checked_pow(d, n - 1 - i);

  auto eval = [&](std::uint64_t k) -> std::optional<Counterexample> {
    const MultiIndex& x = xs[k / ys.size()];
    const MultiIndex& y = ys[k % ys.size()];
    const std::uint64_t xf = flat_index(x, d);
    const std::uint64_t yf = flat_index(y, d);
    std::vector<Scalar> left(d), right(d);
    const Scalar* inner = c.at(yf);
    for (std::size_t m = 0; m < d; ++m) {
      if (sgn(inner[m]) != 0) axpy(left, inner[m], twisted[n - 1].at(xf * d + m));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar* u = c.at(xf * d + y[i]);
      for (std::size_t m = 0; m < d; ++m) {
        if (sgn(u[m]) == 0) continue;
        const std::uint64_t t = yf + m * place[i] - y[i] * place[i];
        axpy(right, u[m], twisted[i].at(t));
      }
    }
    if (left == right) return std::nullopt;
    return Counterexample{join(x, y), Vector(std::move(left)), Vector(std::move(right)), ""};
  };
  return scan("hom_nambu", xs.size() * ys.size(), options, eval);
}

CheckReport check_skew_symmetry(const BracketTensor& bracket, const CheckOptions& options) {
  const std::size_t d = bracket.dim();
  const std::size_t n = bracket.arity();
  const DenseTensor& c = bracket.dense();
  auto eval = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const MultiIndex tuple = unflatten_index(t, d, n);
    const Scalar* v = c.at(t);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        MultiIndex swapped = tuple;
        std::swap(swapped[p], swapped[q]);
        const Scalar* w = c.at(flat_index(swapped, d));
        for (std::size_t j = 0; j < d; ++j) {
          if (w[j] != -v[j]) {
            return Counterexample{tuple, row_vector(w, d), -row_vector(v, d),
                                  "swap of slots " + std::to_string(p + 1) + " and " + std::to_string(q + 1)};
          }
        }
      }
    }
    return std::nullopt;
  };
  return scan("skew_symmetry", c.tuples(), options, eval);
}

CheckReport check_skew_symmetry(const HomNambuAlgebra& a, const CheckOptions& options) {
  return check_skew_symmetry(a.bracket(), options);
}

CheckReport check_bracket_endomorphism(const BracketTensor& bracket, const Matrix& alpha,
                                       const CheckOptions& options) {
  const std::size_t d = bracket.dim();
  if (alpha.rows() != d || alpha.cols() != d) throw Error("twist map has wrong shape");
  const DenseTensor& c = bracket.dense();
  const std::vector<const Matrix*> maps(bracket.arity(), &alpha);
  const DenseTensor after = c.precompose(maps);
  const DenseTensor before = c.postcompose(alpha);
  auto eval = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const Scalar* l = before.at(t);
    const Scalar* r = after.at(t);
    for (std::size_t j = 0; j < d; ++j) {
      if (l[j] != r[j]) {
        return Counterexample{unflatten_index(t, d, bracket.arity()), row_vector(l, d), row_vector(r, d), ""};
      }
    }
    return std::nullopt;
  };
  return scan("multiplicativity", c.tuples(), options, eval);
}

CheckReport check_multiplicativity(const HomNambuAlgebra& a, const CheckOptions& options) {
  const std::size_t d = a.dim();
  const auto& tw = a.twists();
  for (std::size_t i = 1; i < tw.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector first = tw[0].column(j);
      const Vector other = tw[i].column(j);
      if (!(first == other)) {
        CheckReport r;
        r.identity = "multiplicativity";
        r.passed = false;
        r.tuples_checked = 0;
        r.counterexample = Counterexample{{i, j}, first, other, "twists differ"};
        return r;
      }
    }
  }
  return check_bracket_endomorphism(a.bracket(), tw[0], options);
}

CheckReport check_total_hom_associativity(const HomAssocNAry& h, const CheckOptions& options) {
  const std::size_t d = h.dim();
  const std::size_t n = h.arity();
  const DenseTensor& c = h.mu().dense();
  ReportBuilder out("total_hom_associativity");

  auto symmetric = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const MultiIndex tuple = unflatten_index(t, d, n);
    const Scalar* v = c.at(t);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        MultiIndex swapped = tuple;
        std::swap(swapped[p], swapped[q]);
        const Scalar* w = c.at(flat_index(swapped, d));
        for (std::size_t j = 0; j < d; ++j) {
          if (w[j] != v[j]) {
            return Counterexample{tuple, row_vector(v, d), row_vector(w, d),
                                  "swap of slots " + std::to_string(p + 1) + " and " + std::to_string(q + 1)};
          }
        }
      }
    }
    return std::nullopt;
  };
  if (!out.add(scan("symmetry", c.tuples(), options, symmetric))) return out.finish();

  // Order j puts the inner product on a_{j+1..j+n}; its outer slot pattern
  // is the same as the one used by the Hom-Nambu identity.
  std::vector<DenseTensor> twisted;
  for (std::size_t j = 0; j < n; ++j) twisted.push_back(slot_twisted(c, h.twists(), j));
  const std::size_t len = 2 * n - 1;
  auto order = [&](const MultiIndex& a, std::size_t j) {
    std::vector<Scalar> acc(d);
    MultiIndex inner_args(a.begin() + static_cast<long>(j), a.begin() + static_cast<long>(j + n));
    const Scalar* inner = c.at(flat_index(inner_args, d));
    MultiIndex outer(n);
    for (std::size_t s = 0; s < j; ++s) outer[s] = a[s];
    for (std::size_t s = j + 1; s < n; ++s) outer[s] = a[s + n - 1];
    for (std::size_t m = 0; m < d; ++m) {
      if (sgn(inner[m]) == 0) continue;
      outer[j] = m;
      axpy(acc, inner[m], twisted[j].at(flat_index(outer, d)));
    }
    return Vector(std::move(acc));
  };
  auto chain = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const MultiIndex a = unflatten_index(t, d, len);
    const Vector first = order(a, 0);
    for (std::size_t j = 1; j < n; ++j) {
      Vector other = order(a, j);
      if (!(other == first)) {
        return Counterexample{a, first, std::move(other), "association order 1 vs " + std::to_string(j + 1)};
      }
    }
    return std::nullopt;
  };
  out.add(scan("association", checked_pow(d, len), options, chain));
  return out.finish();
}

CheckReport check_hom_leibniz(const HomLeibnizAlgebra& l, const CheckOptions& options) {
  const std::size_t d = l.dim();
  const DenseTensor& c = l.bracket().dense();
  const Matrix& alpha = l.twist();
  const std::vector<const Matrix*> first{&alpha, nullptr};
  const std::vector<const Matrix*> second{nullptr, &alpha};
  const DenseTensor a_first = c.precompose(first);    // [alpha e_x, e_m]
  const DenseTensor a_second = c.precompose(second);  // [e_m, alpha e_z]
  auto eval = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const std::size_t x = t / (d * d), y = (t / d) % d, z = t % d;
    std::vector<Scalar> left(d), right(d);
    const Scalar* yz = c.at(y * d + z);
    const Scalar* xy = c.at(x * d + y);
    const Scalar* xz = c.at(x * d + z);
    for (std::size_t m = 0; m < d; ++m) {
      if (sgn(yz[m]) != 0) axpy(left, yz[m], a_first.at(x * d + m));
      if (sgn(xy[m]) != 0) axpy(right, xy[m], a_second.at(m * d + z));
      if (sgn(xz[m]) != 0) axpy(right, xz[m], a_first.at(y * d + m));
    }
    if (left == right) return std::nullopt;
    return Counterexample{{x, y, z}, Vector(std::move(left)), Vector(std::move(right)), ""};
  };
  return scan("hom_leibniz", checked_pow(d, 3), options, eval);
}

CheckReport check_form_symmetric_map(const BilinearForm& form, const Matrix& m, const std::string& identity,
                                     const CheckOptions& options) {
  const std::size_t d = form.dim();
  if (m.rows() != d || m.cols() != d) throw Error("map shape does not match the form");
  const Matrix left = m.transpose() * form.gram();  // B(m e_y, e_z)
  const Matrix right = form.gram() * m;              // B(e_y, m e_z)
  auto eval = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const std::size_t y = t / d, z = t % d;
    if (left(y, z) == right(y, z)) return std::nullopt;
    return Counterexample{{y, z}, Vector{left(y, z)}, Vector{right(y, z)}, ""};
  };
  return scan(identity, d * d, options, eval);
}

CheckReport check_quadratic(const QuadraticStructure& q, const CheckOptions& options) {
  const HomNambuAlgebra& a = q.algebra;
  const BilinearForm& form = q.form;
  const std::size_t d = a.dim();
  if (form.dim() != d) throw Error("form dimension does not match the algebra");
  if (q.beta && (q.beta->rows() != d || q.beta->cols() != d)) throw Error("beta has wrong shape");
  ReportBuilder out(q.beta ? "hom_quadratic" : "quadratic");
  const Matrix& g = form.gram();

  auto symmetric = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const std::size_t i = t / d, j = t % d;
    if (g(i, j) == g(j, i)) return std::nullopt;
    return Counterexample{{i, j}, Vector{g(i, j)}, Vector{g(j, i)}, ""};
  };
  if (!out.add(scan("form_symmetry", d * d, options, symmetric))) return out.finish();

  const std::size_t r = form.rank();
  if (r < d) {
    out.warn("degenerate form: rank " + std::to_string(r) + " < " + std::to_string(d) +
             ", det " + to_string(det(g)));
  }

  for (std::size_t i = 0; i < a.twists().size(); ++i) {
    const auto part = check_form_symmetric_map(form, a.twist(i), "alpha_" + std::to_string(i + 1) + "_symmetry",
                                               options);
    if (!out.add(part)) return out.finish();
  }

  const Matrix beta = q.beta ? *q.beta : Matrix::identity(d);
  const Matrix g_beta = g * beta;                    // column z: G beta e_z
  const Matrix beta_t_g = beta.transpose() * g;      // row y: (beta e_y)^T G
  const DenseTensor& c = a.bracket().dense();
  const std::size_t n = a.arity();
  auto invariant = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const std::uint64_t xf = t / (d * d);
    const std::size_t y = (t / d) % d, z = t % d;
    const Scalar* ly = c.at(xf * d + y);  // L(x) e_y
    const Scalar* lz = c.at(xf * d + z);  // L(x) e_z
    Scalar lhs = 0, rhs = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(ly[k]) != 0) lhs += ly[k] * g_beta(k, z);
      if (sgn(lz[k]) != 0) rhs += beta_t_g(y, k) * lz[k];
    }
    if (lhs + rhs == 0) return std::nullopt;
    MultiIndex tuple = unflatten_index(xf, d, n - 1);
    tuple.push_back(y);
    tuple.push_back(z);
    return Counterexample{std::move(tuple), Vector{lhs}, Vector{Scalar(-rhs)}, ""};
  };
  out.add(scan(q.beta ? "beta_invariance" : "invariance", checked_pow(d, n - 1) * d * d, options, invariant));
  return out.finish();
}

CheckReport check_morphism(const HomNambuAlgebra& src, const HomNambuAlgebra& dst, const Matrix& f,
                           const CheckOptions& options) {
  if (src.arity() != dst.arity()) throw Error("morphism between algebras of different arity");
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw Error("morphism matrix has wrong shape");
  const std::size_t d = src.dim();
  const std::size_t n = src.arity();
  ReportBuilder out("morphism");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(f.column(j));
  auto bracket = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const MultiIndex tuple = unflatten_index(t, d, n);
    Vector left = f * src.bracket().dense().value(t);
    std::vector<Vector> args;
    args.reserve(n);
    for (auto i : tuple) args.push_back(images[i]);
    Vector right = dst.bracket().eval(args);
    if (left == right) return std::nullopt;
    return Counterexample{tuple, std::move(left), std::move(right), ""};
  };
  if (!out.add(scan("bracket", src.bracket().dense().tuples(), options, bracket))) return out.finish();
  auto twists = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const std::size_t i = t / d, j = t % d;
    Vector left = f * src.twist(i).column(j);
    Vector right = dst.twist(i) * images[j];
    if (left == right) return std::nullopt;
    return Counterexample{{i, j}, std::move(left), std::move(right), "twist " + std::to_string(i + 1)};
  };
  out.add(scan("twists", (n - 1) * d, options, twists));
  return out.finish();
}

CheckReport check_representation(const HomNambuAlgebra& a, const Representation& rep, RepMode mode,
                                 const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  if (rep.source_dim() != d || rep.arity() != n) throw Error("representation does not match the algebra");
  const std::size_t m = rep.target_dim();
  const DenseTensor& rho = rep.rho_tensor();
  const DenseTensor& c = a.bracket().dense();
  const std::size_t slots = n - 1;

  std::vector<const Matrix*> all(slots);
  for (std::size_t s = 0; s < slots; ++s) all[s] = &a.twist(s);
  const DenseTensor rho_twisted = rho.precompose(all);
  std::vector<DenseTensor> rho_slot;
  for (std::size_t i = 0; i < slots; ++i) rho_slot.push_back(slot_twisted(rho, a.twists(), i));
  std::vector<std::uint64_t> place(slots);
  for (std::size_t i = 0; i < slots; ++i) place[i] = checked_pow(d, slots - 1 - i);
  const Matrix& nu = rep.nu();
  const std::uint64_t per = checked_pow(d, slots);

  auto mat = [&](const DenseTensor& t, std::uint64_t k) {
    Matrix out(m, m);
    const Scalar* p = t.at(k);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t col = 0; col < m; ++col) out(r, col) = p[r * m + col];
    return out;
  };

  auto eval = [&](std::uint64_t k) -> std::optional<Counterexample> {
    const std::uint64_t xf = k / per, yf = k % per;
    const MultiIndex y = unflatten_index(yf, d, slots);
    // Sum over i of rho(alpha_1 y_1, ..., L(x) y_i, ..., alpha_{n-2} y_{n-1}).
    std::vector<Scalar> acc(m * m);
    for (std::size_t i = 0; i < slots; ++i) {
      const Scalar* u = c.at(xf * d + y[i]);
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(u[j]) == 0) continue;
        axpy(acc, u[j], rho_slot[i].at(yf + j * place[i] - y[i] * place[i]));
      }
    }
    Matrix inner(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t col = 0; col < m; ++col) inner(r, col) = acc[r * m + col];
    Matrix left, right;
    if (mode == RepMode::primal) {
      left = mat(rho_twisted, xf) * mat(rho, yf) - mat(rho_twisted, yf) * mat(rho, xf);
      right = inner * nu;
    } else {
      left = mat(rho, xf) * mat(rho_twisted, yf) - mat(rho, yf) * mat(rho_twisted, xf);
      right = nu * inner;
    }
    if (left == right) return std::nullopt;
    for (std::size_t col = 0; col < m; ++col) {
      Vector lc = left.column(col), rc = right.column(col);
      if (lc == rc) continue;
      MultiIndex tuple = unflatten_index(xf, d, slots);
      tuple.insert(tuple.end(), y.begin(), y.end());
      tuple.push_back(col);
      return Counterexample{std::move(tuple), std::move(lc), std::move(rc), "column " + std::to_string(col + 1)};
    }
    return std::nullopt;
  };
  return scan(mode == RepMode::primal ? "representation" : "representation_dual", per * per, options, eval);
}

}  // namespace homnambu
