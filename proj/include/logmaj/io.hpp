#pragma once

#include <string>

#include <json.hpp>

#include "logmaj/divergence.hpp"
#include "logmaj/expansion.hpp"
#include "logmaj/golden_thompson.hpp"

namespace logmaj {

// Matrix file format: {"dim": m, "re": [[...]], "im": [[...]]}, row-major,
// "im" optional. Writers emit 17 significant digits.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& a);

ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& a);

// formats with %.17g; nlohmann would round-trip but not fix the digit count
std::string dump_matrix_json(const ComplexMatrix& a);

nlohmann::json to_json(const MajorizationReport& rep);
nlohmann::json to_json(const ArakiResult& res);
nlohmann::json to_json(const KarcherSolveResult& res);
nlohmann::json to_json(const GtReport& rep);
nlohmann::json to_json(const DivergenceValue& v);
nlohmann::json to_json(const EqualityCaseReport& rep);
nlohmann::json to_json(const LieTrotterKatoResult& res);
nlohmann::json to_json(const Spectrum& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace logmaj
