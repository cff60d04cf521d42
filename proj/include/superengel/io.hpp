#ifndef SUPERENGEL_IO_HPP
#define SUPERENGEL_IO_HPP

// JSON algebra files and report sections.

#include <string>

#include <json.hpp>

#include "superengel/verdict.hpp"

namespace superengel::io {

using json = nlohmann::json;

/// Reads {"characteristic", "restricted", "even_basis", "odd_basis",
/// "brackets": [{"left", "right", "value": [{"c", "b"}]}], "p_map": [{"of",
/// "value"}]}. Coefficients are integers or "a/b" strings.
RawAlgebra algebra_from_json(const json& j);
RawAlgebra read_algebra(const std::string& path);
json algebra_to_json(const RawAlgebra& raw);
void write_algebra(const RawAlgebra& raw, const std::string& path);

/// 64-bit FNV-1a of the canonical JSON text, as 16 hex digits.
std::string digest(const RawAlgebra& raw);

json input_json(const RawAlgebra& raw);
json validation_json(const ValidationReport& r);
json analysis_json(const LieSuperalgebra& L, std::uint64_t budget);
json verdict_json(const LieSuperalgebra& L, const Verdict& v);
/// Witnesses are written as PBW expressions that EnvAlgebra::parse reads back.
json oracle_json(const LieSuperalgebra& L, const OracleResult& r);
json cross_validation_json(const LieSuperalgebra& L, const CrossValidation& cv);
json corpus_json(const CorpusReport& r);

/// The algebra a witness lives in: u(L), or U(L) truncated at the degree
/// recorded in the element.
EnvAlgebra witness_algebra(const LieSuperalgebra& L, const EnvElement& e);

}  // namespace superengel::io

#endif  // SUPERENGEL_IO_HPP
