#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homnambu/algebra.hpp"
#include "homnambu/check_report.hpp"
#include "homnambu/error.hpp"
#include "homnambu/representation.hpp"
#include "homnambu/structure_spaces.hpp"

namespace homnambu {

enum class AlgebraKind { hom_nambu, hom_leibniz, hom_assoc, quadratic_lie };

std::string to_string(AlgebraKind kind);
AlgebraKind kind_from_string(std::string_view name);

class QuadraticLieAlgebra;

struct AlgebraFile {
  AlgebraKind kind = AlgebraKind::hom_nambu;
  BracketTensor bracket;
  std::vector<Matrix> twists;
  std::optional<Matrix> form;
  std::optional<Matrix> beta;
  Flags flags;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t dim() const { return bracket.dim(); }
  std::size_t arity() const { return bracket.arity(); }

  static AlgebraFile of(const HomNambuAlgebra& a, AlgebraKind kind = AlgebraKind::hom_nambu);
  static AlgebraFile of(const QuadraticStructure& q);
  static AlgebraFile of(const HomLeibnizAlgebra& l);
  static AlgebraFile of(const HomAssocNAry& h);
  static AlgebraFile of(const QuadraticLieAlgebra& g);

  AlgebraFile& named(std::string name, std::string provenance);

  HomNambuAlgebra nambu() const;
  HomLeibnizAlgebra leibniz() const;
  HomAssocNAry assoc() const;
  std::optional<QuadraticStructure> quadratic() const;
  QuadraticLieAlgebra quadratic_lie(const CheckOptions& options = {}) const;
};

// The load failed because a claimed property does not hold.
class ClaimError : public Error {
 public:
  ClaimError(const std::string& what, std::vector<CheckReport> reports) : Error(what), reports_(std::move(reports)) {}
  const std::vector<CheckReport>& reports() const { return reports_; }

 private:
  std::vector<CheckReport> reports_;
};

nlohmann::json to_json(const AlgebraFile& file);
// Structural parsing only; claims are not checked. Throws ParseError.
AlgebraFile algebra_from_json(const nlohmann::json& j);
std::string serialize(const AlgebraFile& file);
AlgebraFile parse_algebra(std::string_view text);

// One report per claim: skew and multiplicative flags, and the defining
// properties of a quadratic Lie algebra.
std::vector<CheckReport> verify_claims(const AlgebraFile& file, const CheckOptions& options = {});

// Parses, re-verifies claims (ClaimError on failure) and switches verified
// skew brackets to antisymmetric storage.
AlgebraFile load_algebra(const std::filesystem::path& path, const CheckOptions& options = {});
AlgebraFile load_algebra_text(std::string_view text, const CheckOptions& options = {});
void save_algebra(const std::filesystem::path& path, const AlgebraFile& file);

std::string read_text(const std::filesystem::path& path);

nlohmann::json scalar_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json vector_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j, std::optional<std::size_t> size = std::nullopt);
nlohmann::json matrix_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
// A matrix given inline as JSON, as a file holding such JSON, or by the
// words "identity" or "zero".
Matrix matrix_argument(std::string_view arg, std::size_t dim);
Vector vector_argument(std::string_view arg, std::size_t dim);

nlohmann::json report_json(const CheckReport& report);
nlohmann::json subspace_json(const SubspaceBasis& s);
nlohmann::json representation_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j, std::size_t source_dim, std::size_t arity);

}  // namespace homnambu
