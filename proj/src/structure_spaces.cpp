#include "homnambu/structure_spaces.hpp"

#include <set>
#include <sstream>

#include "homnambu/constructions.hpp"
#include "homnambu/error.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/verify.hpp"
#include "scan.hpp"

namespace homnambu {

namespace {

std::string tuple_label(const MultiIndex& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ")";
  return os.str();
}

struct SystemBuilder {
  std::size_t unknowns;
  std::vector<Vector> rows;
  std::vector<std::string> labels;

  void push(Vector row, std::string label) {
    if (row.is_zero()) return;
    rows.push_back(std::move(row));
    labels.push_back(std::move(label));
  }
  LinearSystem finish() { return {Matrix::from_row_vectors(rows, unknowns), std::move(labels)}; }
};

DenseTensor twisted_except(const DenseTensor& c, const Matrix& alpha_k, std::size_t keep) {
  std::vector<const Matrix*> maps(c.arity(), &alpha_k);
  maps[keep] = nullptr;
  return c.precompose(maps);
}

void add_commutation_rows(SystemBuilder& sys, const Matrix& alpha) {
  const std::size_t d = alpha.rows();
  // (D alpha - alpha D)(r, c)
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Vector row(d * d);
      for (std::size_t j = 0; j < d; ++j) {
        row[r * d + j] += alpha(j, c);
        row[j * d + c] -= alpha(r, j);
      }
      sys.push(std::move(row), "commutation with alpha at (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + ")");
    }
  }
}

MembershipReport evaluate(const LinearSystem& sys, const Vector& unknowns) {
  MembershipReport out;
  for (std::size_t r = 0; r < sys.coefficients.rows(); ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      if (sgn(unknowns[c]) != 0) acc += sys.coefficients(r, c) * unknowns[c];
    }
    if (sgn(acc) != 0) {
      out.member = false;
      out.violated = sys.labels[r];
      out.residual = acc;
      return out;
    }
  }
  return out;
}

SubspaceBasis matrix_space(std::size_t d, std::vector<Vector> basis) {
  SubspaceBasis s;
  s.ambient = SubspaceBasis::Ambient::matrices;
  s.dim = d;
  s.basis = std::move(basis);
  return s;
}

void require_square(const Matrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) throw Error(std::string(what) + " has the wrong shape");
}

const Matrix& twist_for_level(const HomNambuAlgebra& a, int k, Matrix& storage) {
  if (k == 0) {
    storage = Matrix::identity(a.dim());
    return storage;
  }
  return single_twist(a);
}

}  // namespace

std::vector<Matrix> SubspaceBasis::matrices() const {
  if (ambient != Ambient::matrices) throw Error("subspace does not consist of matrices");
  std::vector<Matrix> out;
  for (const auto& b : basis) out.push_back(unflatten(b, dim, dim));
  return out;
}

bool SubspaceBasis::contains(const Vector& v) const { return coordinates(basis, v).has_value(); }

bool SubspaceBasis::contains(const Matrix& m) const { return contains(flatten(m)); }

Matrix level_power(const Matrix& alpha, int k) {
  if (k < -1) throw Error("level must be at least -1");
  if (k == -1) return Matrix(alpha.rows(), alpha.cols());
  return power(alpha, static_cast<std::size_t>(k));
}

const Matrix& single_twist(const HomNambuAlgebra& a) {
  if (!a.twists_equal()) throw Error("the twist maps differ; a single alpha is required");
  return a.twist(0);
}

LinearSystem centroid_system(const BracketTensor& bracket, const Matrix& alpha_k) {
  const std::size_t d = bracket.dim();
  const std::size_t n = bracket.arity();
  const DenseTensor& c = bracket.dense();
  const DenseTensor q = twisted_except(c, alpha_k, 0);
  SystemBuilder sys{d * d, {}, {}};
  for (std::uint64_t t = 0; t < c.tuples(); ++t) {
    const MultiIndex tuple = unflatten_index(t, d, n);
    const std::uint64_t rest = t % checked_pow(d, n - 1);
    for (std::size_t m = 0; m < d; ++m) {
      Vector row(d * d);
      const Scalar* v = c.at(t);
      for (std::size_t j = 0; j < d; ++j) row[m * d + j] += v[j];
      for (std::size_t r = 0; r < d; ++r) row[r * d + tuple[0]] -= q.at(r * checked_pow(d, n - 1) + rest)[m];
      sys.push(std::move(row), "tuple " + tuple_label(tuple) + " coordinate " + std::to_string(m + 1));
    }
  }
  return sys.finish();
}

LinearSystem derivation_system(const BracketTensor& bracket, const Matrix& alpha, const Matrix& alpha_k) {
  const std::size_t d = bracket.dim();
  const std::size_t n = bracket.arity();
  const DenseTensor& c = bracket.dense();
  std::vector<DenseTensor> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(twisted_except(c, alpha_k, i));
  SystemBuilder sys{d * d, {}, {}};
  for (std::uint64_t t = 0; t < c.tuples(); ++t) {
    const MultiIndex tuple = unflatten_index(t, d, n);
    for (std::size_t m = 0; m < d; ++m) {
      Vector row(d * d);
      const Scalar* v = c.at(t);
      for (std::size_t j = 0; j < d; ++j) row[m * d + j] += v[j];
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t place = checked_pow(d, n - 1 - i);
        const std::uint64_t base = t - tuple[i] * place;
        for (std::size_t r = 0; r < d; ++r) row[r * d + tuple[i]] -= s[i].at(base + r * place)[m];
      }
      sys.push(std::move(row), "tuple " + tuple_label(tuple) + " coordinate " + std::to_string(m + 1));
    }
  }
  add_commutation_rows(sys, alpha);
  return sys.finish();
}

SubspaceBasis compute_centroid(const HomNambuAlgebra& a, int k) {
  Matrix id;
  const Matrix alpha_k = level_power(twist_for_level(a, k, id), k);
  return matrix_space(a.dim(), nullspace(centroid_system(a.bracket(), alpha_k).coefficients));
}

MembershipReport centroid_membership(const BracketTensor& bracket, const Matrix& alpha, const Matrix& theta, int k) {
  require_square(theta, bracket.dim(), "theta");
  return evaluate(centroid_system(bracket, level_power(alpha, k)), flatten(theta));
}

MembershipReport centroid_membership(const HomNambuAlgebra& a, const Matrix& theta, int k) {
  Matrix id;
  return centroid_membership(a.bracket(), twist_for_level(a, k, id), theta, k);
}

SubspaceBasis compute_derivations(const HomNambuAlgebra& a, int k) {
  const Matrix& alpha = single_twist(a);
  return matrix_space(a.dim(), nullspace(derivation_system(a.bracket(), alpha, level_power(alpha, k)).coefficients));
}

MembershipReport derivation_membership(const HomNambuAlgebra& a, const Matrix& d, int k) {
  require_square(d, a.dim(), "derivation");
  const Matrix& alpha = single_twist(a);
  return evaluate(derivation_system(a.bracket(), alpha, level_power(alpha, k)), flatten(d));
}

Matrix inner_derivation(const HomNambuAlgebra& a, const std::vector<Vector>& x, int k, const CheckOptions& options) {
  if (x.size() != a.arity() - 1) throw Error("inner derivation needs n-1 vectors");
  const Matrix& alpha = single_twist(a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != a.dim()) throw Error("vector has the wrong dimension");
    if (!(alpha * x[i] == x[i])) throw Error("alpha does not fix x_" + std::to_string(i + 1));
  }
  const auto mult = check_multiplicativity(a, options);
  if (!mult.passed) throw HypothesisError("the algebra is not multiplicative", mult);
  const Matrix ad = adjoint_operator(a, x) * level_power(alpha, k);
  const auto member = derivation_membership(a, ad, k + 1);
  if (!member.member) throw Error("ad_k(x) fails the derivation equation at " + member.violated);
  return ad;
}

SubspaceBasis compute_center(const HomNambuAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  const DenseTensor& c = a.bracket().dense();
  const std::uint64_t ys = checked_pow(d, n - 1);
  SystemBuilder sys{d, {}, {}};
  for (std::uint64_t y = 0; y < ys; ++y) {
    for (std::size_t m = 0; m < d; ++m) {
      Vector row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = c.at(j * ys + y)[m];
      sys.push(std::move(row), "tuple " + tuple_label(unflatten_index(y, d, n - 1)));
    }
  }
  SubspaceBasis s;
  s.ambient = SubspaceBasis::Ambient::vectors;
  s.dim = d;
  s.basis = nullspace(sys.finish().coefficients);
  return s;
}

SubspaceBasis compute_central_derivations(const HomNambuAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  const DenseTensor& c = a.bracket().dense();
  const std::uint64_t ys = checked_pow(d, n - 1);
  SystemBuilder sys{d * d, {}, {}};
  // each column phi(e_col) is central
  for (std::size_t col = 0; col < d; ++col) {
    for (std::uint64_t y = 0; y < ys; ++y) {
      for (std::size_t m = 0; m < d; ++m) {
        Vector row(d * d);
        for (std::size_t j = 0; j < d; ++j) row[j * d + col] = c.at(j * ys + y)[m];
        sys.push(std::move(row), "image of e" + std::to_string(col + 1) + " is not central");
      }
    }
  }
  // phi kills every bracket value
  for (std::uint64_t t = 0; t < c.tuples(); ++t) {
    for (std::size_t m = 0; m < d; ++m) {
      Vector row(d * d);
      for (std::size_t j = 0; j < d; ++j) row[m * d + j] = c.at(t)[j];
      sys.push(std::move(row), "bracket value " + tuple_label(unflatten_index(t, d, n)));
    }
  }
  return matrix_space(d, nullspace(sys.finish().coefficients));
}

CommutatorResult derivation_commutator(const HomNambuAlgebra& a, const Matrix& d, int k, const Matrix& dp, int kp) {
  if (k + kp < -1) throw Error("levels must sum to at least -1");
  const auto m1 = derivation_membership(a, d, k);
  if (!m1.member) throw Error("D is not an alpha^" + std::to_string(k) + "-derivation: " + m1.violated);
  const auto m2 = derivation_membership(a, dp, kp);
  if (!m2.member) throw Error("D' is not an alpha^" + std::to_string(kp) + "-derivation: " + m2.violated);
  CommutatorResult out{commutator(d, dp), {}};
  out.membership = derivation_membership(a, out.commutator, k + kp);
  if (!out.membership.member) throw Error("[D, D'] fails the derivation equation at " + out.membership.violated);
  return out;
}

VarsigmaResult varsigma_hom_lie(const HomNambuAlgebra& a, const std::vector<int>& levels, const CheckOptions& options) {
  const Matrix& alpha = single_twist(a);
  const std::size_t d = a.dim();
  std::vector<Vector> span;
  for (int k : std::set<int>(levels.begin(), levels.end())) {
    auto s = compute_derivations(a, k);
    span.insert(span.end(), s.basis.begin(), s.basis.end());
  }
  auto basis = canonical_basis(span, d * d);
  // Close under varsigma and the twisted commutator.
  for (;;) {
    std::vector<Vector> grown = basis;
    const auto mats = matrix_space(d, basis).matrices();
    for (std::size_t i = 0; i < mats.size(); ++i) {
      grown.push_back(flatten(alpha * mats[i]));
      for (std::size_t j = i + 1; j < mats.size(); ++j) grown.push_back(flatten(alpha * commutator(mats[i], mats[j])));
    }
    auto next = canonical_basis(grown, d * d);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  VarsigmaResult out;
  out.space = matrix_space(d, basis);
  const std::size_t r = basis.size();
  if (r == 0) {
    out.hom_lie.identity = "hom_leibniz";
    out.skew.identity = "skew_symmetry";
    return out;
  }
  const auto mats = out.space.matrices();
  auto coords = [&](const Matrix& m) {
    auto c = coordinates(basis, flatten(m));
    if (!c) throw Error("derivation space is not closed");
    return Vector(std::move(*c));
  };
  BracketTensor::Entries entries;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Vector v = coords(alpha * commutator(mats[i], mats[j]));
      if (!v.is_zero()) entries.emplace(MultiIndex{i, j}, std::move(v));
    }
  }
  std::vector<Vector> twist_cols;
  for (const auto& m : mats) twist_cols.push_back(coords(alpha * m));
  HomLeibnizAlgebra l(BracketTensor::from_entries(r, 2, entries), Matrix::from_columns(twist_cols, r));
  out.hom_lie = check_hom_leibniz(l, options);
  out.skew = check_skew_symmetry(l.bracket(), options);
  out.algebra = std::move(l);
  return out;
}

CentroidDerivationResult centroid_derivation_product(const HomNambuAlgebra& a, const Matrix& theta, int kp,
                                                     const Matrix& d, int k) {
  if (k + kp < -1) throw Error("levels must sum to at least -1");
  const auto mt = centroid_membership(a, theta, kp);
  if (!mt.member) throw Error("theta is not in the alpha^" + std::to_string(kp) + "-centroid: " + mt.violated);
  const auto md = derivation_membership(a, d, k);
  if (!md.member) throw Error("D is not an alpha^" + std::to_string(k) + "-derivation: " + md.violated);
  CentroidDerivationResult out{theta * d, {}, std::nullopt, std::nullopt};
  out.product_membership = derivation_membership(a, out.product, k + kp);
  if (!out.product_membership.member) throw Error("theta D fails the derivation equation at " + out.product_membership.violated);
  const Matrix& alpha = single_twist(a);
  if (kp == 0 && commutator(theta, alpha).is_zero()) {
    out.commutator = commutator(d, theta);
    out.commutator_membership = centroid_membership(a, *out.commutator, k);
    if (!out.commutator_membership->member) {
      throw Error("[D, theta] is not in the alpha^" + std::to_string(k) + "-centroid: " + out.commutator_membership->violated);
    }
  }
  return out;
}

TensorMapResult tensor_centroid_derivation(const HomAssocNAry& h, const HomNambuAlgebra& a, const Matrix& f,
                                           const Matrix& g, TensorMapMode mode, int k) {
  if (h.arity() != a.arity()) throw Error("arities differ");
  require_square(f, h.dim(), "f");
  require_square(g, a.dim(), "g");
  const HomNambuAlgebra hn(h.mu(), h.twists());
  const HomNambuAlgebra& an = a;
  const Matrix& eta = single_twist(hn);
  const Matrix& alpha = single_twist(an);
  const auto mf = centroid_membership(h.mu(), eta, f, k);
  if (!mf.member) throw Error("f is not in the eta^" + std::to_string(k) + "-centroid: " + mf.violated);
  const auto mg = mode == TensorMapMode::centroid ? centroid_membership(an.bracket(), alpha, g, k)
                                                  : derivation_membership(an, g, k);
  if (!mg.member) throw Error("g is not in the requested space: " + mg.violated);

  const BracketTensor tb = tensor_bracket(h.mu(), a.bracket());
  const Matrix zeta = kronecker(eta, alpha);
  TensorMapResult out{kronecker(f, g), {}};
  if (mode == TensorMapMode::centroid) {
    out.membership = centroid_membership(tb, zeta, out.map, k);
  } else {
    const HomNambuAlgebra t(tb, std::vector<Matrix>(a.arity() - 1, zeta));
    out.membership = derivation_membership(t, out.map, k);
  }
  if (!out.membership.member) throw Error("f (x) g fails membership at " + out.membership.violated);
  return out;
}

CheckReport check_slot_independence(const HomNambuAlgebra& a, const Matrix& theta, int k, const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  Matrix id;
  const Matrix alpha_k = level_power(twist_for_level(a, k, id), k);
  const DenseTensor& c = a.bracket().dense();
  std::vector<DenseTensor> slot;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<const Matrix*> maps(n, &alpha_k);
    maps[p] = &theta;
    slot.push_back(c.precompose(maps));
  }
  const std::uint64_t tuples = c.tuples();
  auto eval = [&](std::uint64_t cs) -> std::optional<Counterexample> {
    const std::uint64_t t = cs / n;
    const std::size_t p = cs % n;
    Vector left = theta * c.value(t);
    Vector right = slot[p].value(t);
    if (left == right) return std::nullopt;
    return Counterexample{unflatten_index(t, d, n), left, right, "theta in slot " + std::to_string(p + 1)};
  };
  return detail::scan("slot_independence", tuples * n, options, eval);
}

CheckReport check_centroid_power_law(const HomNambuAlgebra& a, const Matrix& theta, std::size_t max_power,
                                     const CheckOptions& options) {
  const std::size_t d = a.dim();
  const std::size_t n = a.arity();
  std::vector<Matrix> powers;
  for (std::size_t p = 0; p <= n * max_power; ++p) powers.push_back(power(theta, p));
  const DenseTensor& c = a.bracket().dense();
  const std::uint64_t exps = checked_pow(max_power + 1, n);
  std::vector<DenseTensor> twisted;
  for (std::uint64_t e = 0; e < exps; ++e) {
    const MultiIndex ps = unflatten_index(e, max_power + 1, n);
    std::vector<const Matrix*> maps(n);
    for (std::size_t s = 0; s < n; ++s) maps[s] = &powers[ps[s]];
    twisted.push_back(c.precompose(maps));
  }
  auto eval = [&](std::uint64_t cs) -> std::optional<Counterexample> {
    const std::uint64_t e = cs / c.tuples();
    const std::uint64_t t = cs % c.tuples();
    const MultiIndex ps = unflatten_index(e, max_power + 1, n);
    std::size_t total = 0;
    for (auto p : ps) total += p;
    Vector left = twisted[e].value(t);
    Vector right = powers[total] * c.value(t);
    if (left == right) return std::nullopt;
    std::ostringstream os;
    os << "powers (";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
    os << ")";
    return Counterexample{unflatten_index(t, d, n), left, right, os.str()};
  };
  return detail::scan("centroid_power_law", exps * c.tuples(), options, eval);
}

}  // namespace homnambu
