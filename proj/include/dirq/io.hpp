#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "dirq/estimation.hpp"
#include "dirq/measurement.hpp"
#include "dirq/optimizer.hpp"

namespace dirq {

/// Input does not match the documented file schema (exit code 2 territory).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input parses but violates a domain invariant (exit code 3 territory).
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex numbers serialize as [re, im]; never strings.
[[nodiscard]] nlohmann::json complex_to_json(const cplx& z);
[[nodiscard]] cplx complex_from_json(const nlohmann::json& j);

/// {"label": ..., "basis": 4x4 [re, im] pairs (rows are basis vectors in the
/// computational order), "guesses": 4x3 reals}. Parsing validates the
/// measurement and throws SemanticError with the residuals when it fails.
[[nodiscard]] nlohmann::json measurement_to_json(const ProjectiveMeasurement& m);
[[nodiscard]] ProjectiveMeasurement measurement_from_json(const nlohmann::json& j);

/// {"state": [[re, im] x 4]} for a two-qubit state, [[re, im] x 2] for a
/// spinor; either must be normalized.
[[nodiscard]] nlohmann::json state_to_json(const TwoQubitState& s);
[[nodiscard]] std::variant<Spinor, TwoQubitState> state_from_json(const nlohmann::json& j);

/// {"prior": [{"direction": [x, y, z], "weight": w}, ...]} with unit
/// directions and weights summing to 1 within 1e-10.
[[nodiscard]] Prior prior_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json fidelity_report_to_json(const FidelityReport& r);
[[nodiscard]] nlohmann::json optimization_result_to_json(const OptimizationResult& r);

[[nodiscard]] std::string pairing_name(Pairing p);
[[nodiscard]] Pairing pairing_from_name(const std::string& name);

/// Parses a file as JSON; file-system and parse failures become SchemaError.
[[nodiscard]] nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dirq
