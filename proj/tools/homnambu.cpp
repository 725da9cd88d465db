#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homnambu/constructions.hpp"
#include "homnambu/corpus.hpp"
#include "homnambu/faulkner.hpp"
#include "homnambu/io.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/representations.hpp"
#include "homnambu/structure_spaces.hpp"
#include "homnambu/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace homnambu;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

// Usage problems found after argument parsing.
struct UsageError : Error {
  using Error::Error;
};

struct Global {
  std::string format = "text";
  unsigned parallel = 1;
  std::optional<std::uint64_t> max_tuples;

  CheckOptions options() const { return {std::max(1u, parallel), max_tuples}; }
  bool json() const { return format == "json"; }
};

std::string join_indices(const MultiIndex& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ")";
  return os.str();
}

std::string vector_text(const Vector& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << "]";
  return os.str();
}

void print_report_text(std::ostream& os, const CheckReport& r) {
  os << r.identity << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.tuples_checked << " cases)\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    if (cx.left.size() == 0 && cx.right.size() == 0) {
      os << "  not evaluated: " << cx.detail << "\n";
      return;
    }
    os << "  counterexample " << join_indices(cx.tuple) << ": left " << vector_text(cx.left) << ", right "
       << vector_text(cx.right);
    if (!cx.detail.empty()) os << " (" << cx.detail << ")";
    os << "\n";
  }
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

void print_reports(const Global& g, const std::string& file, const std::vector<CheckReport>& reports) {
  if (g.json()) {
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    std::cout << json{{"file", file}, {"passed", all_passed(reports)}, {"reports", rs}}.dump(2) << "\n";
  } else {
    std::cout << file << "\n";
    for (const auto& r : reports) print_report_text(std::cout, r);
  }
}

std::vector<std::string> default_selectors(const AlgebraFile& f) {
  std::vector<std::string> s;
  switch (f.kind) {
    case AlgebraKind::hom_nambu: s.push_back("nambu"); break;
    case AlgebraKind::hom_leibniz: s.push_back("leibniz"); break;
    case AlgebraKind::hom_assoc: s.push_back("assoc"); break;
    case AlgebraKind::quadratic_lie:
      s = {"nambu", "skew"};
      break;
  }
  if (f.kind != AlgebraKind::quadratic_lie && f.flags.skew) s.push_back("skew");
  if (f.flags.multiplicative) s.push_back("multiplicative");
  if (f.form) s.push_back("quadratic");
  return s;
}

CheckReport nondegeneracy_report(const BilinearForm& form) {
  CheckReport r;
  r.identity = "nondegenerate";
  r.tuples_checked = 1;
  const std::size_t rk = form.rank();
  r.passed = rk == form.dim();
  if (!r.passed) {
    r.warnings.push_back("degenerate form: rank " + std::to_string(rk) + " < " + std::to_string(form.dim()) + ", det " +
                         to_string(det(form.gram())));
    // left is a radical vector, right its image G v = 0
    const Vector v = nullspace(form.gram()).front();
    r.counterexample = Counterexample{{}, v, form.gram() * v, "B(left, .) = 0"};
  }
  return r;
}

const QuadraticStructure require_form(const AlgebraFile& f) {
  auto q = f.quadratic();
  if (!q) throw UsageError("the file has no form");
  return *q;
}

void run_selector(const AlgebraFile& f, const std::string& s, const CheckOptions& o, std::vector<CheckReport>& out) {
  try {
    if (s == "nambu") {
      out.push_back(check_hom_nambu_identity(f.nambu(), o));
    } else if (s == "skew") {
      out.push_back(check_skew_symmetry(f.bracket, o));
    } else if (s == "multiplicative") {
      out.push_back(check_multiplicativity(f.nambu(), o));
    } else if (s == "assoc") {
      out.push_back(check_total_hom_associativity(f.assoc(), o));
    } else if (s == "leibniz") {
      if (f.arity() != 2) throw UsageError("leibniz needs a binary bracket");
      out.push_back(check_hom_leibniz(f.leibniz(), o));
    } else if (s == "quadratic") {
      const auto q = require_form(f);
      out.push_back(check_quadratic(q, o));
      out.push_back(nondegeneracy_report(q.form));
    } else if (s == "representation") {
      const auto a = f.nambu();
      out.push_back(check_representation(a, adjoint_rep(a), RepMode::primal, o));
    } else if (s == "coadjoint") {
      out.push_back(coadjoint_rep(f.nambu(), o).report);
    } else if (s == "psi") {
      out.push_back(rep_isomorphism_psi(require_form(f), o).report);
    } else {
      throw UsageError("unknown check \"" + s + "\"");
    }
  } catch (const HypothesisError& e) {
    CheckReport r = e.report();
    r.warnings.push_back(e.what());
    out.push_back(r);
  } catch (const UsageError&) {
    throw;
  } catch (const TupleLimitError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    CheckReport r;
    r.identity = s;
    r.passed = false;
    r.counterexample = Counterexample{{}, Vector(), Vector(), e.what()};
    out.push_back(r);
  }
}

std::vector<CheckReport> run_checks(const AlgebraFile& f, std::vector<std::string> selectors, const CheckOptions& o) {
  if (selectors.empty()) selectors = default_selectors(f);
  std::vector<std::string> expanded;
  for (const auto& s : selectors) {
    if (s == "all") {
      for (const auto& d : default_selectors(f)) expanded.push_back(d);
      if (f.kind == AlgebraKind::hom_nambu || f.kind == AlgebraKind::quadratic_lie) {
        expanded.push_back("representation");
        expanded.push_back("coadjoint");
        if (f.form) expanded.push_back("psi");
      }
    } else {
      expanded.push_back(s);
    }
  }
  std::vector<CheckReport> out;
  std::vector<std::string> seen;
  for (const auto& s : expanded) {
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
    seen.push_back(s);
    run_selector(f, s, o, out);
  }
  return out;
}

// ---- verify

int cmd_verify(const Global& g, const std::string& path, const std::vector<std::string>& checks) {
  const AlgebraFile f = load_algebra(path, g.options());
  const auto reports = run_checks(f, checks, g.options());
  print_reports(g, path, reports);
  return all_passed(reports) ? ok : failed;
}

// ---- construct

struct ConstructArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string rho, form, beta, omega, variant, gamma, tau, theta, map, alpha, result;
  std::string form_a, beta_a, form_n, beta_n;
  std::vector<std::string> fixed;
  std::size_t k = 1;
  std::size_t p = 1;
};

json parameters_of(const ConstructArgs& a) {
  json out = json::object();
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) out[key] = v;
  };
  put("rho", a.rho);
  put("form", a.form);
  put("beta", a.beta);
  put("omega", a.omega);
  put("variant", a.variant);
  put("gamma", a.gamma);
  put("tau", a.tau);
  put("theta", a.theta);
  put("map", a.map);
  put("alpha", a.alpha);
  put("result", a.result);
  put("form_a", a.form_a);
  put("beta_a", a.beta_a);
  put("form_n", a.form_n);
  put("beta_n", a.beta_n);
  if (!a.fixed.empty()) out["fixed"] = a.fixed;
  return out;
}

AlgebraFile build(const std::string& sub, const ConstructArgs& a, const std::vector<AlgebraFile>& in,
                  const CheckOptions& o) {
  const AlgebraFile& first = in.at(0);
  const std::size_t d = first.dim();
  auto quadratic_or_plain = [&](const AlgebraFile& f) { return f.quadratic(); };

  if (sub == "twist") {
    if (a.rho.empty()) throw UsageError("twist needs --rho");
    return AlgebraFile::of(twist_by_morphism(first.nambu(), matrix_argument(a.rho, d), o));
  }
  if (sub == "self-twist") {
    AlgebraFile out = AlgebraFile::of(self_twist(first.nambu(), o));
    return out;
  }
  if (sub == "tensor") {
    if (in.size() != 2) throw UsageError("tensor needs two inputs: the associative factor and the Nambu factor");
    const HomAssocNAry h = in[0].assoc();
    const HomNambuAlgebra n = in[1].nambu();
    const bool forms = !a.form_a.empty() || !a.form_n.empty() || (in[0].form && in[1].form);
    if (!forms) return AlgebraFile::of(tensor_product(h, n, o));
    auto pick = [&](const std::string& arg, const std::optional<Matrix>& file, std::size_t dim, bool gram) {
      if (!arg.empty()) return matrix_argument(arg, dim);
      if (file) return *file;
      if (gram) throw UsageError("tensor with forms needs a form on both factors");
      return Matrix::identity(dim);
    };
    FormWithTwist fa{BilinearForm(pick(a.form_a, in[0].form, h.dim(), true)), pick(a.beta_a, in[0].beta, h.dim(), false)};
    FormWithTwist fn{BilinearForm(pick(a.form_n, in[1].form, n.dim(), true)), pick(a.beta_n, in[1].beta, n.dim(), false)};
    return AlgebraFile::of(tensor_product(h, n, fa, fn, o));
  }
  if (sub == "leibniz") {
    std::optional<BilinearForm> form;
    if (!a.form.empty()) form = BilinearForm(matrix_argument(a.form, d));
    else if (first.form) form = BilinearForm(*first.form);
    const auto r = induced_hom_leibniz(first.nambu(), form, o);
    AlgebraFile out = AlgebraFile::of(r.algebra);
    if (r.form) {
      out.form = r.form->gram();
      out.beta = r.algebra.twist();
    }
    return out;
  }
  if (sub == "tstar") {
    const BilinearForm b(!a.form.empty() ? matrix_argument(a.form, d)
                                         : first.form ? *first.form : throw UsageError("tstar needs --form"));
    std::optional<Matrix> omega;
    if (!a.omega.empty()) omega = matrix_argument(a.omega, d);
    const auto r = tstar_extension(first.nambu(), b, omega, o);
    const std::string variant = a.variant.empty() ? (omega ? "hom" : "plain") : a.variant;
    if (variant == "plain") return AlgebraFile::of(r.extension);
    if (!omega) throw UsageError("variant " + variant + " needs --omega");
    if (variant == "hom") return AlgebraFile::of(*r.hom);
    if (variant == "twisted") return AlgebraFile::of(*r.twisted);
    throw UsageError("unknown tstar variant \"" + variant + "\"");
  }
  if (sub == "trace-ternary") {
    if (a.tau.empty()) throw UsageError("trace-ternary needs --tau");
    const HomLeibnizAlgebra l = first.leibniz();
    const Matrix gamma = a.gamma.empty() ? l.twist() : matrix_argument(a.gamma, d);
    std::optional<TraceQuadratic> q;
    if (!a.form.empty() || first.form) {
      const Matrix gram = !a.form.empty() ? matrix_argument(a.form, d) : *first.form;
      const Matrix beta = !a.beta.empty() ? matrix_argument(a.beta, d) : first.beta.value_or(Matrix::identity(d));
      q = TraceQuadratic{BilinearForm(gram), beta};
    }
    const auto r = trace_induced_ternary(l, gamma, vector_argument(a.tau, d), q, o);
    if (r.quadratic) return AlgebraFile::of(*r.quadratic);
    return AlgebraFile::of(r.algebra);
  }
  if (sub == "raise") {
    if (auto q = quadratic_or_plain(first)) return AlgebraFile::of(raise_arity(*q, a.k, o));
    return AlgebraFile::of(raise_arity(first.nambu(), a.k, o));
  }
  if (sub == "reduce") {
    std::vector<Vector> fixed;
    for (const auto& v : a.fixed) fixed.push_back(vector_argument(v, d));
    if (fixed.empty()) throw UsageError("reduce needs at least one --fixed vector");
    if (auto q = quadratic_or_plain(first)) return AlgebraFile::of(reduce_arity(*q, fixed, o));
    return AlgebraFile::of(reduce_arity(first.nambu(), fixed, o));
  }
  if (sub == "centroid-bracket") {
    if (a.theta.empty()) throw UsageError("centroid-bracket needs --theta");
    const Matrix theta = matrix_argument(a.theta, d);
    AlgebraFile out = AlgebraFile::of(centroid_twisted_bracket(first.nambu(), theta, a.p, o));
    if (first.form) out.form = pullback_form(BilinearForm(*first.form), theta).gram();
    return out;
  }
  if (sub == "pullback-form") {
    if (a.map.empty()) throw UsageError("pullback-form needs --map");
    const Matrix gram = !a.form.empty() ? matrix_argument(a.form, d)
                                        : first.form ? *first.form : throw UsageError("pullback-form needs a form");
    AlgebraFile out = first;
    out.metadata = json::object();
    out.form = pullback_form(BilinearForm(gram), matrix_argument(a.map, d)).gram();
    return out;
  }
  if (sub == "faulkner") {
    const QuadraticLieAlgebra lie = first.quadratic_lie(o);
    std::optional<Matrix> alpha;
    if (!a.alpha.empty()) alpha = matrix_argument(a.alpha, d);
    const std::string result = a.result.empty() ? "ternary" : a.result;
    if (result == "leibniz") return AlgebraFile::of(tensor_leibniz(lie));
    if (result == "omega-leibniz") {
      if (!alpha) throw UsageError("omega-leibniz needs --alpha");
      const auto r = omega_twist_leibniz(lie, *alpha, o);
      AlgebraFile out = AlgebraFile::of(r.algebra);
      out.form = r.form.gram();
      return out;
    }
    if (result == "ternary") {
      const auto r = faulkner_ternary(lie, alpha, o);
      if (!r.t_antisymmetry.passed) throw HypothesisError("T is not antisymmetric", r.t_antisymmetry);
      return AlgebraFile::of(r.structure);
    }
    throw UsageError("unknown faulkner result \"" + result + "\"");
  }
  throw UsageError("unknown construction \"" + sub + "\"");
}

int cmd_construct(const Global& g, const std::string& sub, const ConstructArgs& a) {
  std::vector<AlgebraFile> in;
  for (const auto& p : a.inputs) in.push_back(load_algebra(p, g.options()));
  AlgebraFile out = build(sub, a, in, g.options());

  // Only claims that hold are written.
  const auto claims = verify_claims(out, g.options());
  if (!all_passed(claims)) {
    print_reports(g, a.output.empty() ? "<stdout>" : a.output, claims);
    return failed;
  }
  const auto reports = run_checks(out, {}, g.options());
  if (!all_passed(reports)) {
    std::cerr << "construction output fails verification\n";
    print_reports(g, a.output.empty() ? "<stdout>" : a.output, reports);
    return failed;
  }
  json inputs = json::array();
  std::string names;
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    inputs.push_back(fs::path(a.inputs[i]).filename().string());
    const json& md = in[i].metadata;
    names += (i ? " and " : "") + (md.contains("name") ? md["name"].get<std::string>() : inputs.back().get<std::string>());
  }
  json params = parameters_of(a);
  if (sub == "raise") params["k"] = a.k;
  if (sub == "centroid-bracket") params["p"] = a.p;
  out.metadata = {{"name", sub + " of " + names},
                  {"provenance", "constructed by homnambu construct " + sub},
                  {"construction", sub},
                  {"inputs", inputs},
                  {"parameters", params}};
  if (a.output.empty()) {
    std::cout << serialize(out);
  } else {
    save_algebra(a.output, out);
    if (!g.json()) {
      std::cout << "wrote " << a.output << " (" << to_string(out.kind) << ", dim " << out.dim() << ", arity "
                << out.arity() << ")\n";
      for (const auto& r : reports) print_report_text(std::cout, r);
    }
  }
  return ok;
}

// ---- solve

int cmd_solve(const Global& g, const std::string& path, const std::string& space, int k) {
  const AlgebraFile f = load_algebra(path, g.options());
  const HomNambuAlgebra a = f.nambu();
  SubspaceBasis s;
  if (space == "centroid") s = compute_centroid(a, k);
  else if (space == "derivations") s = compute_derivations(a, k);
  else if (space == "center") s = compute_center(a);
  else if (space == "central-derivations") s = compute_central_derivations(a);
  else throw UsageError("unknown space \"" + space + "\" (centroid, derivations, center, central-derivations)");
  json j = subspace_json(s);
  j["space"] = space;
  if (space == "centroid" || space == "derivations") j["k"] = k;
  if (g.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << space;
    if (j.contains("k")) std::cout << " (k = " << k << ")";
    std::cout << ": dimension " << s.dimension() << "\n";
    for (const auto& b : j["basis"]) std::cout << "  " << b.dump() << "\n";
  }
  return ok;
}

// ---- report

std::vector<std::string> expand_paths(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> files;
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

int cmd_report(const Global& g, const std::vector<std::string>& paths) {
  int code = ok;
  json rows = json::array();
  for (const auto& p : expand_paths(paths)) {
    json row = {{"file", fs::path(p).filename().string()}};
    try {
      const AlgebraFile f = load_algebra(p, g.options());
      row["kind"] = to_string(f.kind);
      row["dim"] = f.dim();
      row["arity"] = f.arity();
      std::vector<std::string> ids;
      for (const auto& s : default_selectors(f)) {
        if (s != "quadratic") ids.push_back(s);
      }
      json identities = json::object();
      for (const auto& r : run_checks(f, ids, g.options())) {
        identities[r.identity] = r.passed;
        if (!r.passed) code = std::max<int>(code, failed);
      }
      row["identities"] = identities;
      const HomNambuAlgebra a = f.nambu();
      row["centroid"] = compute_centroid(a, 0).dimension();
      if (a.twists_equal()) row["derivations"] = compute_derivations(a, 0).dimension();
      if (auto q = f.quadratic()) {
        const bool inv = check_quadratic(*q, g.options()).passed;
        row["quadratic"] = !inv ? "no" : q->form.nondegenerate() ? "yes" : "degenerate";
      }
    } catch (const ParseError& e) {
      row["error"] = e.what();
      code = usage;
    } catch (const std::exception& e) {
      row["error"] = e.what();
      code = std::max<int>(code, failed);
    }
    rows.push_back(row);
  }
  if (g.json()) {
    std::cout << rows.dump(2) << "\n";
    return code;
  }
  std::cout << std::left;
  auto cell = [](const std::string& s, std::size_t w) {
    std::string out = s;
    if (out.size() < w) out.append(w - out.size(), ' ');
    return out + " ";
  };
  std::cout << cell("file", 24) << cell("kind", 14) << cell("dim", 4) << cell("arity", 6) << cell("identities", 56)
            << cell("centroid", 9) << cell("derivations", 12) << "quadratic\n";
  for (const auto& row : rows) {
    if (row.contains("error")) {
      std::cout << cell(row["file"], 24) << "error: " << row["error"].get<std::string>() << "\n";
      continue;
    }
    std::string ids;
    for (auto it = row["identities"].begin(); it != row["identities"].end(); ++it) {
      ids += (ids.empty() ? "" : " ") + it.key() + (it.value().get<bool>() ? "=ok" : "=FAIL");
    }
    std::cout << cell(row["file"], 24) << cell(row["kind"], 14) << cell(std::to_string(row["dim"].get<int>()), 4)
              << cell(std::to_string(row["arity"].get<int>()), 6) << cell(ids, 56)
              << cell(std::to_string(row["centroid"].get<int>()), 9)
              << cell(row.contains("derivations") ? std::to_string(row["derivations"].get<int>()) : "-", 12)
              << (row.contains("quadratic") ? row["quadratic"].get<std::string>() : "-") << "\n";
  }
  return code;
}

// ---- corpus

int cmd_corpus(const Global& g, const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& e : corpus::bundled()) {
    save_algebra(fs::path(dir) / e.file, e.algebra);
    if (!g.json()) std::cout << "wrote " << (fs::path(dir) / e.file).string() << "\n";
  }
  return ok;
}

// ---- rep

int cmd_rep(const Global& g, const std::string& path, const std::string& mode) {
  const AlgebraFile f = load_algebra(path, g.options());
  const HomNambuAlgebra a = f.nambu();
  json out = {{"file", path}, {"mode", mode}};
  CheckReport report;
  try {
    if (mode == "adjoint") {
      const Representation rep = adjoint_rep(a);
      report = check_representation(a, rep, RepMode::primal, g.options());
      out["representation"] = representation_json(rep);
    } else if (mode == "coadjoint") {
      const auto r = coadjoint_rep(a, g.options());
      report = r.report;
      out["representation"] = representation_json(r.rep);
    } else if (mode == "psi") {
      const auto r = rep_isomorphism_psi(require_form(f), g.options());
      report = r.report;
      out["psi"] = matrix_json(r.psi);
    } else {
      throw UsageError("unknown mode \"" + mode + "\" (adjoint, coadjoint, psi)");
    }
  } catch (const HypothesisError& e) {
    report = e.report();
    report.warnings.push_back(e.what());
  }
  out["report"] = report_json(report);
  if (g.json()) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (out.contains("representation")) std::cout << out["representation"].dump() << "\n";
    if (out.contains("psi")) std::cout << "psi " << out["psi"].dump() << "\n";
    print_report_text(std::cout, report);
  }
  return report.passed ? ok : failed;
}

void print_error(const Global& g, const std::string& message, const std::vector<CheckReport>& reports = {}) {
  if (g.json()) {
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    std::cout << json{{"error", message}, {"reports", rs}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
    for (const auto& r : reports) print_report_text(std::cerr, r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and constructions for Hom-Nambu algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallel", g.parallel, "worker threads for exhaustive checks");
  app.add_option("--max-tuples", g.max_tuples, "refuse checks needing more cases than this");

  std::string path, space = "centroid", mode = "adjoint", corpus_dir;
  std::vector<std::string> checks, paths;
  int level = 0;
  std::optional<int> level_flag;

  auto* verify = app.add_subcommand("verify", "check identities on an algebra file");
  verify->add_option("file", path, "algebra file")->required();
  verify->add_option("--check,-c", checks,
                     "nambu, skew, multiplicative, assoc, leibniz, quadratic, representation, coadjoint, psi, all");

  auto* construct = app.add_subcommand("construct", "build a new algebra file from a theorem");
  construct->require_subcommand(1);
  ConstructArgs ca;
  std::string chosen;
  auto add_construct = [&](const std::string& name, const std::string& help, std::size_t inputs) {
    auto* c = construct->add_subcommand(name, help);
    c->add_option("inputs", ca.inputs, "input algebra files")->required()->expected(static_cast<int>(inputs));
    c->add_option("-o,--output", ca.output, "output file (standard output when absent)");
    c->callback([&, name] { chosen = name; });
    return c;
  };
  add_construct("twist", "rho o [..] with twists rho", 1)->add_option("--rho", ca.rho, "endomorphism")->required();
  add_construct("self-twist", "alpha^(n-1) o [..] with twists alpha^n", 1);
  {
    auto* c = add_construct("tensor", "tensor product of an associative and a Nambu algebra", 2);
    c->add_option("--form-a", ca.form_a, "form on the associative factor");
    c->add_option("--beta-a", ca.beta_a, "its twist");
    c->add_option("--form-n", ca.form_n, "form on the Nambu factor");
    c->add_option("--beta-n", ca.beta_n, "its twist");
  }
  add_construct("leibniz", "Hom-Leibniz algebra on the (n-1)-th tensor power", 1)->add_option("--form", ca.form, "form for the product form");
  {
    auto* c = add_construct("tstar", "trivial T* extension", 1);
    c->add_option("--form", ca.form, "invariant form (defaults to the file's form)");
    c->add_option("--omega", ca.omega, "involutive symmetric automorphism");
    c->add_option("--variant", ca.variant, "plain, hom or twisted")->check(CLI::IsMember({"plain", "hom", "twisted"}));
  }
  {
    auto* c = add_construct("trace-ternary", "ternary bracket induced by a trace form", 1);
    c->add_option("--tau", ca.tau, "trace form values, e.g. 0,0,1")->required();
    c->add_option("--gamma", ca.gamma, "second twist (defaults to alpha)");
    c->add_option("--form", ca.form, "invariant form for a quadratic output");
    c->add_option("--beta", ca.beta, "its twist beta");
  }
  add_construct("raise", "raise the arity k times", 1)->add_option("-k", ca.k, "number of steps");
  add_construct("reduce", "fix leading arguments", 1)->add_option("--fixed", ca.fixed, "fixed vector, e.g. e4")->required();
  {
    auto* c = add_construct("centroid-bracket", "bracket twisted by a centroid element", 1);
    c->add_option("--theta", ca.theta, "centroid element")->required();
    c->add_option("-p", ca.p, "number of twisted slots");
  }
  {
    auto* c = add_construct("pullback-form", "B'(x, y) = B(m x, y)", 1);
    c->add_option("--map", ca.map, "B-symmetric map")->required();
    c->add_option("--form", ca.form, "form to pull back (defaults to the file's form)");
  }
  {
    auto* c = add_construct("faulkner", "Faulkner construction on a quadratic Lie algebra", 1);
    c->add_option("--alpha", ca.alpha, "involutive symmetric automorphism");
    c->add_option("--result", ca.result, "ternary, leibniz or omega-leibniz")
        ->check(CLI::IsMember({"ternary", "leibniz", "omega-leibniz"}));
  }

  auto* solve = app.add_subcommand("solve", "compute a structure space");
  solve->add_option("file", path, "algebra file")->required();
  solve->add_option("space", space, "centroid, derivations, center or central-derivations");
  solve->add_option("level", level, "level k");
  solve->add_option("-k", level_flag, "level k");

  auto* report = app.add_subcommand("report", "summary table of algebra files");
  report->add_option("paths", paths, "files or directories")->required();

  auto* corp = app.add_subcommand("corpus", "write the bundled corpus");
  corp->add_option("dir", corpus_dir, "target directory")->required();

  auto* rep = app.add_subcommand("rep", "adjoint, coadjoint or psi for an algebra file");
  rep->add_option("file", path, "algebra file")->required();
  rep->add_option("--mode", mode, "adjoint, coadjoint or psi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*verify) return cmd_verify(g, path, checks);
    if (*construct) return cmd_construct(g, chosen, ca);
    if (*solve) return cmd_solve(g, path, space, level_flag.value_or(level));
    if (*report) return cmd_report(g, paths);
    if (*corp) return cmd_corpus(g, corpus_dir);
    if (*rep) return cmd_rep(g, path, mode);
  } catch (const UsageError& e) {
    print_error(g, e.what());
    return usage;
  } catch (const ParseError& e) {
    print_error(g, e.what());
    return usage;
  } catch (const TupleLimitError& e) {
    print_error(g, e.what());
    return usage;
  } catch (const ClaimError& e) {
    print_error(g, e.what(), e.reports());
    return failed;
  } catch (const HypothesisError& e) {
    print_error(g, e.what(), {e.report()});
    return failed;
  } catch (const Error& e) {
    print_error(g, e.what());
    return failed;
  } catch (const std::exception& e) {
    print_error(g, e.what());
    return usage;
  }
  return usage;
}
