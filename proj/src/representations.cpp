#include "homnambu/representations.hpp"

#include "homnambu/error.hpp"
#include "homnambu/verify.hpp"
#include "scan.hpp"

namespace homnambu {

Representation::Representation(std::size_t arity, DenseTensor rho, Matrix nu)
    : arity_(arity), rho_(std::move(rho)), nu_(std::move(nu)) {
  if (arity_ < 2 || rho_.arity() + 1 != arity_) throw Error("representation needs an (n-1)-linear rho");
  if (!nu_.is_square() || nu_.rows() * nu_.rows() != rho_.width()) {
    throw Error("representation target dimension mismatch");
  }
}

Representation Representation::from_matrices(std::size_t source_dim, std::size_t arity, std::size_t target_dim,
                                             const std::map<MultiIndex, Matrix>& rho, Matrix nu) {
  if (arity < 2) throw Error("representation arity must be at least 2");
  DenseTensor t(source_dim, arity - 1, target_dim * target_dim);
  for (const auto& [x, m] : rho) {
    if (x.size() != arity - 1) throw Error("rho entry has wrong arity");
    for (auto i : x) {
      if (i >= source_dim) throw Error("rho entry index out of range");
    }
    if (m.rows() != target_dim || m.cols() != target_dim) throw Error("rho entry has wrong shape");
    Scalar* to = t.at(flat_index(x, source_dim));
    for (std::size_t k = 0; k < m.data().size(); ++k) to[k] = m.data()[k];
  }
  return Representation(arity, std::move(t), std::move(nu));
}

Matrix Representation::rho(const MultiIndex& x) const {
  const std::size_t m = target_dim();
  Matrix out(m, m);
  const Scalar* p = rho_.at(flat_index(x, source_dim()));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = p[r * m + c];
  return out;
}

Matrix Representation::rho(std::span<const Vector> x) const {
  return unflatten(rho_.eval(x), target_dim(), target_dim());
}

bool Representation::is_skew() const {
  const std::size_t d = source_dim();
  const std::size_t slots = rho_.arity();
  for (std::uint64_t t = 0; t < rho_.tuples(); ++t) {
    const MultiIndex x = unflatten_index(t, d, slots);
    const Scalar* v = rho_.at(t);
    for (std::size_t p = 0; p < slots; ++p) {
      for (std::size_t q = p + 1; q < slots; ++q) {
        MultiIndex s = x;
        std::swap(s[p], s[q]);
        const Scalar* w = rho_.at(flat_index(s, d));
        for (std::size_t k = 0; k < rho_.width(); ++k) {
          if (w[k] != -v[k]) return false;
        }
      }
    }
  }
  return true;
}

Representation Representation::dual() const {
  const std::size_t m = target_dim();
  DenseTensor t(source_dim(), rho_.arity(), m * m);
  for (std::uint64_t k = 0; k < rho_.tuples(); ++k) {
    const Scalar* from = rho_.at(k);
    Scalar* to = t.at(k);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) to[c * m + r] = -from[r * m + c];
  }
  return Representation(arity_, std::move(t), nu_.transpose());
}

Representation adjoint_rep(const HomNambuAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  const DenseTensor& c = a.bracket().dense();
  const std::size_t slots = n - 1;
  DenseTensor rho(d, slots, d * d);
  for (std::uint64_t x = 0; x < rho.tuples(); ++x) {
    Scalar* to = rho.at(x);
    for (std::size_t z = 0; z < d; ++z) {
      const Scalar* col = c.at(x * d + z);
      for (std::size_t r = 0; r < d; ++r) to[r * d + z] = col[r];
    }
  }
  // L must be skew: [.., x_p, .., x_q, .., z] = -[.., x_q, .., x_p, .., z]
  auto skew = [&](std::uint64_t t) -> std::optional<Counterexample> {
    const MultiIndex x = unflatten_index(t / d, d, slots);
    for (std::size_t p = 0; p < slots; ++p) {
      for (std::size_t q = p + 1; q < slots; ++q) {
        MultiIndex s = x;
        std::swap(s[p], s[q]);
        s.push_back(t % d);
        const Vector left = c.value(t);
        const Vector right = -c.value(flat_index(s, d));
        if (left == right) continue;
        MultiIndex tuple = x;
        tuple.push_back(t % d);
        return Counterexample{std::move(tuple), left, right,
                              "swap of slots " + std::to_string(p + 1) + " and " + std::to_string(q + 1)};
      }
    }
    return std::nullopt;
  };
  const CheckReport r = detail::scan("adjoint_skew", c.tuples(), {}, skew);
  if (!r.passed) {
    throw HypothesisError("adjoint representation needs a bracket antisymmetric in its first n-1 arguments", r);
  }
  return Representation(n, std::move(rho), a.twist(n - 2));
}

CoadjointResult coadjoint_rep(const HomNambuAlgebra& a, const CheckOptions& options) {
  const Representation ad = adjoint_rep(a);
  CheckReport report = check_representation(a, ad, RepMode::dual, options);
  report.identity = "coadjoint";
  return {ad.dual(), std::move(report)};
}

PsiResult rep_isomorphism_psi(const QuadraticStructure& q, const CheckOptions& options) {
  if (!q.form.nondegenerate()) throw Error("degenerate form: psi is not an isomorphism");
  const CheckReport quad = check_quadratic(q, options);
  if (!quad.passed) throw HypothesisError("structure is not quadratic", quad);
  const Matrix psi = q.beta ? q.form.gram() * *q.beta : q.form.gram();
  const Representation ad = adjoint_rep(q.algebra);
  CheckReport report = check_equivalence(ad, ad.dual(), psi, options);
  report.identity = "psi_intertwining";
  return {psi, std::move(report)};
}

CheckReport check_equivalence(const Representation& from, const Representation& to, const Matrix& f,
                              const CheckOptions& options) {
  if (from.source_dim() != to.source_dim() || from.arity() != to.arity()) {
    throw Error("representations of different algebras");
  }
  if (f.rows() != to.target_dim() || f.cols() != from.target_dim()) throw Error("equivalence map has wrong shape");
  const std::size_t d = from.source_dim();
  const std::size_t slots = from.arity() - 1;
  const std::uint64_t count = checked_pow(d, slots);
  auto first_column = [](const Matrix& l, const Matrix& r, MultiIndex tuple,
                         std::string detail) -> std::optional<Counterexample> {
    for (std::size_t c = 0; c < l.cols(); ++c) {
      Vector lc = l.column(c), rc = r.column(c);
      if (lc == rc) continue;
      tuple.push_back(c);
      return Counterexample{std::move(tuple), std::move(lc), std::move(rc), std::move(detail)};
    }
    return std::nullopt;
  };
  auto eval = [&](std::uint64_t k) -> std::optional<Counterexample> {
    if (k == count) return first_column(f * from.nu(), to.nu() * f, {}, "nu");
    const MultiIndex x = unflatten_index(k, d, slots);
    return first_column(f * from.rho(x), to.rho(x) * f, x, "");
  };
  return detail::scan("equivalence", count + 1, options, eval);
}

}  // namespace homnambu
