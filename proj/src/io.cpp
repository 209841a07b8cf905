#include "dirq/io.hpp"

#include <fstream>
#include <sstream>

namespace dirq {

using nlohmann::json;

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemaError("complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json measurement_to_json(const ProjectiveMeasurement& m) {
  json basis = json::array();
  for (const auto& b : m.basis) {
    json row = json::array();
    for (const auto& amp : b.c) row.push_back(complex_to_json(amp));
    basis.push_back(row);
  }
  json guesses = json::array();
  for (const auto& g : m.guesses) guesses.push_back(json::array({g.x, g.y, g.z}));
  return json{{"label", m.label}, {"basis", basis}, {"guesses", guesses}};
}

ProjectiveMeasurement measurement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("label") || !j.contains("basis") ||
      !j.contains("guesses")) {
    throw SchemaError("measurement file must be {label, basis, guesses}");
  }
  if (!j["label"].is_string()) throw SchemaError("label must be a string");

  ProjectiveMeasurement m;
  m.label = j["label"].get<std::string>();

  const auto& basis = j["basis"];
  if (!basis.is_array() || basis.size() != 4) {
    throw SchemaError("basis must be an array of 4 state vectors");
  }
  for (int r = 0; r < 4; ++r) {
    const auto& row = basis[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) {
      throw SchemaError("each basis vector must have 4 complex amplitudes");
    }
    for (int c = 0; c < 4; ++c)
      m.basis[static_cast<std::size_t>(r)].c[static_cast<std::size_t>(c)] =
          complex_from_json(row[static_cast<std::size_t>(c)]);
  }

  const auto& guesses = j["guesses"];
  if (!guesses.is_array() || guesses.size() != 4) {
    throw SchemaError("guesses must be an array of 4 directions");
  }
  for (int r = 0; r < 4; ++r) {
    const auto& row = guesses[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
        !row[1].is_number() || !row[2].is_number()) {
      throw SchemaError("each guess must be [x, y, z] numbers");
    }
    m.guesses[static_cast<std::size_t>(r)] = {row[0].get<double>(),
                                              row[1].get<double>(),
                                              row[2].get<double>()};
  }

  const auto v = validate(m);
  if (!v.pass) {
    std::ostringstream os;
    os << "measurement failed validation: orthonormality residual "
       << v.orthonormality_residual << ", completeness residual "
       << v.completeness_residual;
    throw SemanticError(os.str());
  }
  for (const auto& g : m.guesses) {
    if (!is_unit(g, 1e-9)) throw SemanticError("guess direction is not unit length");
  }
  return m;
}

json state_to_json(const TwoQubitState& s) {
  json amps = json::array();
  for (const auto& amp : s.c) amps.push_back(complex_to_json(amp));
  return json{{"state", amps}};
}

std::variant<Spinor, TwoQubitState> state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("state") || !j["state"].is_array()) {
    throw SchemaError("state file must be {\"state\": [[re, im], ...]}");
  }
  const auto& amps = j["state"];
  if (amps.size() == 2) {
    Spinor s{complex_from_json(amps[0]), complex_from_json(amps[1])};
    if (std::abs(norm_sq(s) - 1.0) > kUnitTol) {
      throw SemanticError("spinor is not normalized");
    }
    return s;
  }
  if (amps.size() == 4) {
    TwoQubitState s;
    for (int k = 0; k < 4; ++k)
      s.c[static_cast<std::size_t>(k)] = complex_from_json(amps[static_cast<std::size_t>(k)]);
    if (std::abs(norm_sq(s) - 1.0) > kUnitTol) {
      throw SemanticError("state is not normalized");
    }
    return s;
  }
  throw SchemaError("state must have 2 (spinor) or 4 (two-qubit) amplitudes");
}

Prior prior_from_json(const json& j) {
  if (!j.is_object() || !j.contains("prior") || !j["prior"].is_array()) {
    throw SchemaError("prior file must be {\"prior\": [{direction, weight}, ...]}");
  }
  std::vector<PriorAtom> atoms;
  for (const auto& entry : j["prior"]) {
    if (!entry.is_object() || !entry.contains("direction") || !entry.contains("weight") ||
        !entry["direction"].is_array() || entry["direction"].size() != 3 ||
        !entry["weight"].is_number()) {
      throw SchemaError("each prior atom must be {direction: [x, y, z], weight: w}");
    }
    const auto& d = entry["direction"];
    atoms.push_back({{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()},
                     entry["weight"].get<double>()});
  }
  try {
    return Prior::discrete(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
}

json fidelity_report_to_json(const FidelityReport& r) {
  json j{{"value", r.value},
         {"method", r.method == FidelityMethod::exact ? "exact" : "monte-carlo"}};
  if (r.method == FidelityMethod::monte_carlo) {
    j["trials"] = r.trials;
    j["std_error"] = r.std_error;
  }
  return j;
}

json optimization_result_to_json(const OptimizationResult& r) {
  return json{{"best_fidelity", r.best_fidelity},
              {"best_measurement", measurement_to_json(r.best_measurement)},
              {"starts", r.starts},
              {"evaluations", r.evaluations},
              {"converged", r.converged}};
}

std::string pairing_name(Pairing p) {
  return p == Pairing::parallel ? "parallel" : "antiparallel";
}

Pairing pairing_from_name(const std::string& name) {
  if (name == "parallel") return Pairing::parallel;
  if (name == "antiparallel") return Pairing::antiparallel;
  throw SchemaError("unknown pairing '" + name + "'");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace dirq
