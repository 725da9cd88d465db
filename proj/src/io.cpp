#include "homnambu/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "homnambu/faulkner.hpp"
#include "homnambu/verify.hpp"

namespace homnambu {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

std::size_t positive_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
    bad(std::string("\"") + key + "\" must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

Matrix square_from_json(const json& j, std::size_t d, const std::string& what) {
  Matrix m;
  try {
    m = matrix_from_json(j);
  } catch (const ParseError& e) {
    bad(what + ": " + e.what());
  }
  if (m.rows() != d || m.cols() != d) bad(what + " must be " + std::to_string(d) + "x" + std::to_string(d));
  return m;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::hom_nambu: return "hom_nambu";
    case AlgebraKind::hom_leibniz: return "hom_leibniz";
    case AlgebraKind::hom_assoc: return "hom_assoc";
    case AlgebraKind::quadratic_lie: return "quadratic_lie";
  }
  return "hom_nambu";
}

AlgebraKind kind_from_string(std::string_view name) {
  for (auto k : {AlgebraKind::hom_nambu, AlgebraKind::hom_leibniz, AlgebraKind::hom_assoc, AlgebraKind::quadratic_lie}) {
    if (to_string(k) == name) return k;
  }
  bad("unknown kind \"" + std::string(name) + "\"");
}

AlgebraFile AlgebraFile::of(const HomNambuAlgebra& a, AlgebraKind kind) {
  AlgebraFile f;
  f.kind = kind;
  f.bracket = a.bracket();
  f.twists = a.twists();
  f.flags = a.flags();
  return f;
}

AlgebraFile AlgebraFile::of(const QuadraticStructure& q) {
  AlgebraFile f = of(q.algebra);
  f.form = q.form.gram();
  f.beta = q.beta;
  return f;
}

AlgebraFile AlgebraFile::of(const HomLeibnizAlgebra& l) { return of(l.as_nambu(), AlgebraKind::hom_leibniz); }

AlgebraFile AlgebraFile::of(const HomAssocNAry& h) {
  AlgebraFile f;
  f.kind = AlgebraKind::hom_assoc;
  f.bracket = h.mu();
  f.twists = h.twists();
  return f;
}

AlgebraFile AlgebraFile::of(const QuadraticLieAlgebra& g) {
  AlgebraFile f = of(g.algebra(), AlgebraKind::quadratic_lie);
  f.form = g.form().gram();
  return f;
}

AlgebraFile& AlgebraFile::named(std::string name, std::string provenance) {
  metadata["name"] = std::move(name);
  metadata["provenance"] = std::move(provenance);
  return *this;
}

HomNambuAlgebra AlgebraFile::nambu() const { return HomNambuAlgebra(bracket, twists, flags); }

HomLeibnizAlgebra AlgebraFile::leibniz() const {
  if (arity() != 2) throw Error("a Hom-Leibniz algebra needs a binary bracket");
  return HomLeibnizAlgebra(bracket, twists.at(0), flags);
}

HomAssocNAry AlgebraFile::assoc() const { return HomAssocNAry(bracket, twists); }

std::optional<QuadraticStructure> AlgebraFile::quadratic() const {
  if (!form) return std::nullopt;
  return QuadraticStructure{nambu(), BilinearForm(*form), beta};
}

QuadraticLieAlgebra AlgebraFile::quadratic_lie(const CheckOptions& options) const {
  if (!form) throw Error("a quadratic Lie algebra needs a form");
  if (!nambu().twists_identity()) throw Error("a quadratic Lie algebra has identity twists");
  return QuadraticLieAlgebra(bracket, BilinearForm(*form), options);
}

json scalar_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  bad("a rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Vector vector_from_json(const json& j, std::optional<std::size_t> size) {
  if (!j.is_array()) bad("a vector must be a JSON list");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
  if (size && v.size() != *size) bad("vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(*size));
  return v;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("a matrix must be a non-empty list of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r).entries());
    if (rows.back().size() != rows.front().size()) bad("matrix rows have different lengths");
  }
  return Matrix::from_rows(rows);
}

json to_json(const AlgebraFile& f) {
  const std::size_t d = f.dim();
  const std::size_t n = f.arity();
  json bracket = json::array();
  auto emit = [&](const MultiIndex& t, const Vector& v) {
    json inputs = json::array();
    for (auto i : t) inputs.push_back(i + 1);
    bracket.push_back({{"inputs", inputs}, {"output", vector_json(v)}});
  };
  if (f.bracket.storage() == Storage::antisymmetric && !f.flags.skew) {
    // Without the skew claim a reader expects every tuple listed.
    const DenseTensor& dense = f.bracket.dense();
    for (std::uint64_t t = 0; t < dense.tuples(); ++t) {
      if (!dense.value_is_zero(t)) emit(unflatten_index(t, d, n), dense.value(t));
    }
  } else {
    for (const auto& [t, v] : f.bracket.entries()) emit(t, v);
  }
  json twists = json::array();
  for (const auto& t : f.twists) twists.push_back(matrix_json(t));
  json out = {{"schema_version", 1},
              {"kind", to_string(f.kind)},
              {"dim", d},
              {"arity", n},
              {"bracket", bracket},
              {"twists", twists},
              {"flags", {{"skew", f.flags.skew}, {"multiplicative", f.flags.multiplicative}}},
              {"metadata", f.metadata}};
  if (f.form) out["form"] = matrix_json(*f.form);
  if (f.beta) out["beta"] = matrix_json(*f.beta);
  return out;
}

AlgebraFile algebra_from_json(const json& j) {
  if (!j.is_object()) bad("an algebra file must hold a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != 1) bad("\"schema_version\" must be 1");
  AlgebraFile f;
  if (!j.contains("kind") || !j["kind"].is_string()) bad("\"kind\" is missing");
  f.kind = kind_from_string(j["kind"].get<std::string>());
  const std::size_t d = positive_count(j, "dim");
  const std::size_t n = positive_count(j, "arity");
  if (n < 2) bad("\"arity\" must be at least 2");
  if ((f.kind == AlgebraKind::hom_leibniz || f.kind == AlgebraKind::quadratic_lie) && n != 2) {
    bad(to_string(f.kind) + " needs arity 2");
  }

  if (j.contains("flags")) {
    const json& fl = j["flags"];
    if (!fl.is_object()) bad("\"flags\" must be an object");
    for (auto it = fl.begin(); it != fl.end(); ++it) {
      if (!it.value().is_boolean()) bad("flag \"" + it.key() + "\" must be true or false");
      if (it.key() == "skew") f.flags.skew = it.value().get<bool>();
      else if (it.key() == "multiplicative") f.flags.multiplicative = it.value().get<bool>();
      else bad("unknown flag \"" + it.key() + "\"");
    }
  }

  if (!j.contains("bracket") || !j["bracket"].is_array()) bad("\"bracket\" must be a list");
  BracketTensor::Entries entries;
  bool all_increasing = true;
  for (const auto& e : j["bracket"]) {
    if (!e.is_object() || !e.contains("inputs") || !e.contains("output")) bad("bracket entries need inputs and output");
    const json& in = e["inputs"];
    if (!in.is_array() || in.size() != n) bad("bracket inputs must list " + std::to_string(n) + " indices");
    MultiIndex t;
    for (const auto& i : in) {
      if (!i.is_number_integer() || i.get<long long>() < 1 || i.get<long long>() > static_cast<long long>(d)) {
        bad("bracket index " + i.dump() + " outside 1.." + std::to_string(d));
      }
      t.push_back(i.get<std::size_t>() - 1);
    }
    for (std::size_t s = 1; s < t.size(); ++s) {
      if (t[s - 1] >= t[s]) all_increasing = false;
    }
    Vector v = vector_from_json(e["output"], d);
    if (!entries.emplace(t, std::move(v)).second) bad("bracket inputs " + in.dump() + " listed twice");
  }
  const Storage storage = f.flags.skew && all_increasing ? Storage::antisymmetric : Storage::general;
  try {
    f.bracket = BracketTensor::from_entries(d, n, entries, storage);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    bad(std::string("bracket: ") + e.what());
  }

  if (j.contains("twists")) {
    if (!j["twists"].is_array() || j["twists"].size() != n - 1) bad("\"twists\" must list " + std::to_string(n - 1) + " matrices");
    for (std::size_t i = 0; i + 1 < n; ++i) f.twists.push_back(square_from_json(j["twists"][i], d, "twist " + std::to_string(i + 1)));
  } else {
    f.twists.assign(n - 1, Matrix::identity(d));
  }
  if (j.contains("form") && !j["form"].is_null()) f.form = square_from_json(j["form"], d, "form");
  if (j.contains("beta") && !j["beta"].is_null()) f.beta = square_from_json(j["beta"], d, "beta");
  if (f.kind == AlgebraKind::quadratic_lie && !f.form) bad("quadratic_lie needs a form");
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad("\"metadata\" must be an object");
    f.metadata = j["metadata"];
  }
  return f;
}

std::string serialize(const AlgebraFile& f) { return to_json(f).dump(2) + "\n"; }

AlgebraFile parse_algebra(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

std::vector<CheckReport> verify_claims(const AlgebraFile& f, const CheckOptions& options) {
  std::vector<CheckReport> out;
  if (f.flags.skew) out.push_back(check_skew_symmetry(f.bracket, options));
  if (f.flags.multiplicative) out.push_back(check_multiplicativity(f.nambu(), options));
  if (f.kind == AlgebraKind::quadratic_lie) {
    CheckReport r;
    r.identity = "quadratic_lie";
    try {
      f.quadratic_lie(options);
    } catch (const HypothesisError& e) {
      r = e.report();
    } catch (const Error& e) {
      r.passed = false;
      r.counterexample = Counterexample{{}, Vector(), Vector(), e.what()};
    }
    out.push_back(r);
  }
  return out;
}

AlgebraFile load_algebra_text(std::string_view text, const CheckOptions& options) {
  AlgebraFile f = parse_algebra(text);
  auto reports = verify_claims(f, options);
  for (const auto& r : reports) {
    if (!r.passed) throw ClaimError("claimed property fails: " + r.identity, reports);
  }
  if (f.flags.skew && f.bracket.storage() == Storage::general) f.bracket = f.bracket.with_storage(Storage::antisymmetric);
  return f;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraFile load_algebra(const std::filesystem::path& path, const CheckOptions& options) {
  return load_algebra_text(read_text(path), options);
}

void save_algebra(const std::filesystem::path& path, const AlgebraFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(file);
  if (!out) throw Error("write failed for " + path.string());
}

Matrix matrix_argument(std::string_view arg, std::size_t dim) {
  if (arg == "identity") return Matrix::identity(dim);
  if (arg == "zero") return Matrix(dim, dim);
  auto check = [&](Matrix m) {
    if (m.rows() != dim || m.cols() != dim) bad("matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    return m;
  };
  auto values = [&](std::string_view body) {
    std::vector<Scalar> out;
    for (const auto& s : split(body, ',')) out.push_back(parse_scalar(s));
    return out;
  };
  if (arg.rfind("diag:", 0) == 0) return check(Matrix::diagonal(values(arg.substr(5))));
  if (arg.rfind("scalar:", 0) == 0) return Matrix::scalar(dim, parse_scalar(arg.substr(7)));
  json j;
  try {
    j = json::parse(!arg.empty() && arg.front() == '[' ? std::string(arg) : read_text(std::string(arg)));
  } catch (const json::exception& e) {
    bad(std::string("invalid matrix JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  return check(matrix_from_json(j));
}

Vector vector_argument(std::string_view arg, std::size_t dim) {
  if (arg == "zero") return Vector(dim);
  if (arg.size() > 1 && arg.front() == 'e') {
    std::size_t k = 0;
    try {
      k = std::stoul(std::string(arg.substr(1)));
    } catch (const std::exception&) {
      bad("bad basis vector \"" + std::string(arg) + "\"");
    }
    if (k < 1 || k > dim) bad("basis index outside 1.." + std::to_string(dim));
    return Vector::unit(dim, k - 1);
  }
  if (!arg.empty() && arg.front() == '[') {
    try {
      return vector_from_json(json::parse(std::string(arg)), dim);
    } catch (const json::exception& e) {
      bad(std::string("invalid vector JSON: ") + e.what());
    }
  }
  std::vector<Scalar> out;
  for (const auto& s : split(arg, ',')) out.push_back(parse_scalar(s));
  if (out.size() != dim) bad("vector must have " + std::to_string(dim) + " entries");
  return Vector(out);
}

json report_json(const CheckReport& r) {
  json out = {{"identity", r.identity}, {"passed", r.passed}, {"tuples_checked", r.tuples_checked},
              {"warnings", r.warnings}};
  if (r.counterexample) {
    json tuple = json::array();
    for (auto i : r.counterexample->tuple) tuple.push_back(i + 1);
    out["counterexample"] = {{"tuple", tuple},
                             {"left", vector_json(r.counterexample->left)},
                             {"right", vector_json(r.counterexample->right)},
                             {"detail", r.counterexample->detail}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json subspace_json(const SubspaceBasis& s) {
  json basis = json::array();
  if (s.ambient == SubspaceBasis::Ambient::matrices) {
    for (const auto& m : s.matrices()) basis.push_back(matrix_json(m));
  } else {
    for (const auto& v : s.basis) basis.push_back(vector_json(v));
  }
  return {{"ambient", s.ambient == SubspaceBasis::Ambient::matrices ? "matrices" : "vectors"},
          {"dim", s.dim},
          {"dimension", s.dimension()},
          {"basis", basis}};
}

json representation_json(const Representation& rep) {
  json rho = json::array();
  const DenseTensor& t = rep.rho_tensor();
  for (std::uint64_t k = 0; k < t.tuples(); ++k) {
    if (t.value_is_zero(k)) continue;
    MultiIndex x = unflatten_index(k, rep.source_dim(), rep.arity() - 1);
    json inputs = json::array();
    for (auto i : x) inputs.push_back(i + 1);
    rho.push_back({{"inputs", inputs}, {"matrix", matrix_json(rep.rho(x))}});
  }
  return {{"target_dim", rep.target_dim()}, {"rho", rho}, {"nu", matrix_json(rep.nu())}};
}

Representation representation_from_json(const json& j, std::size_t source_dim, std::size_t arity) {
  if (!j.is_object()) bad("a representation must be a JSON object");
  const std::size_t m = positive_count(j, "target_dim");
  if (!j.contains("rho") || !j["rho"].is_array()) bad("\"rho\" must be a list");
  std::map<MultiIndex, Matrix> rho;
  for (const auto& e : j["rho"]) {
    if (!e.is_object() || !e.contains("inputs") || !e.contains("matrix")) bad("rho entries need inputs and matrix");
    const json& in = e["inputs"];
    if (!in.is_array() || in.size() != arity - 1) bad("rho inputs must list " + std::to_string(arity - 1) + " indices");
    MultiIndex x;
    for (const auto& i : in) {
      if (!i.is_number_integer() || i.get<long long>() < 1 || i.get<long long>() > static_cast<long long>(source_dim)) {
        bad("rho index outside 1.." + std::to_string(source_dim));
      }
      x.push_back(i.get<std::size_t>() - 1);
    }
    if (!rho.emplace(x, square_from_json(e["matrix"], m, "rho matrix")).second) bad("rho inputs listed twice");
  }
  if (!j.contains("nu")) bad("\"nu\" is missing");
  return Representation::from_matrices(source_dim, arity, m, rho, square_from_json(j["nu"], m, "nu"));
}

}  // namespace homnambu
