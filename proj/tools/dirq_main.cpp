#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirq/estimation.hpp"
#include "dirq/flip.hpp"
#include "dirq/io.hpp"
#include "dirq/measurement.hpp"
#include "dirq/optimizer.hpp"
#include "dirq/transpose.hpp"
#include "dirq/verify.hpp"

namespace {

using nlohmann::json;

void emit_json(const std::string& path, const json& j) {
  if (!path.empty()) dirq::write_text_file(path, j.dump(2) + "\n");
}

dirq::ProjectiveMeasurement resolve_measurement(const std::string& preset,
                                                const std::string& file) {
  if (!preset.empty()) {
    if (preset == "parallel-optimal") return dirq::build_parallel_optimal();
    if (preset == "antiparallel") return dirq::build_antiparallel();
    throw dirq::SchemaError("unknown preset '" + preset +
                            "' (use parallel-optimal or antiparallel)");
  }
  return dirq::measurement_from_json(dirq::load_json_file(file));
}

dirq::Prior resolve_prior(const std::string& name, const std::string& file) {
  if (!file.empty()) return dirq::prior_from_json(dirq::load_json_file(file));
  if (name == "uniform") return dirq::Prior::uniform_sphere();
  if (name == "tetrahedron") return dirq::Prior::tetrahedron_uniform();
  throw dirq::SchemaError("unknown prior '" + name + "' (use uniform or tetrahedron)");
}

std::optional<dirq::Direction> resolve_axis(const std::vector<double>& axis) {
  if (axis.empty()) return std::nullopt;
  dirq::Direction d{axis[0], axis[1], axis[2]};
  if (std::abs(dirq::dot(d, d) - 1.0) > 1e-6) {
    throw dirq::SemanticError("--axis must be a unit vector");
  }
  return dirq::normalized(d);
}

json verify_report_to_json(const dirq::VerifyReport& rep) {
  json claims = json::array();
  for (const auto& c : rep.claims) {
    claims.push_back({{"id", c.id},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"tolerance", c.tolerance},
                      {"comparison", c.comparison},
                      {"pass", c.pass}});
  }
  return json{{"claims", claims},
              {"overall_pass", rep.overall_pass},
              {"seed", rep.seed},
              {"trials", rep.trials},
              {"version", rep.version},
              {"fidelity_table",
               {{"parallel_uniform", rep.fidelity_parallel_uniform},
                {"parallel_tetrahedron", rep.fidelity_parallel_tetrahedron},
                {"antiparallel_uniform", rep.fidelity_antiparallel_uniform},
                {"antiparallel_tetrahedron", rep.fidelity_antiparallel_tetrahedron}}}};
}

int cmd_verify(std::uint64_t seed, long long trials, const std::string& json_path,
               const std::string& corrupt_claim) {
  const dirq::VerifyReport rep = dirq::run_verification(seed, trials, corrupt_claim);

  std::printf("%-44s %14s %14s %9s %4s %s\n", "claim", "expected", "computed",
              "tolerance", "cmp", "pass");
  for (const auto& c : rep.claims) {
    std::printf("%-44s %14.9f %14.9f %9.1e %4s %s\n", c.id.c_str(), c.expected,
                c.computed, c.tolerance, c.comparison.c_str(),
                c.pass ? "ok" : "FAIL");
  }

  std::printf("\nexact fidelity by pairing and prior\n");
  std::printf("%-14s %12s %12s\n", "", "uniform", "tetrahedron");
  std::printf("%-14s %12.9f %12.9f\n", "parallel", rep.fidelity_parallel_uniform,
              rep.fidelity_parallel_tetrahedron);
  std::printf("%-14s %12.9f %12.9f\n", "antiparallel",
              rep.fidelity_antiparallel_uniform, rep.fidelity_antiparallel_tetrahedron);
  std::printf("\noverall: %s\n", rep.overall_pass ? "PASS" : "FAIL");

  emit_json(json_path, verify_report_to_json(rep));
  return rep.overall_pass ? 0 : 1;
}

int cmd_fidelity(const std::string& preset, const std::string& file,
                 const std::string& pairing, const std::string& prior,
                 const std::string& prior_file, const std::string& method,
                 long long trials, std::uint64_t seed, const std::string& json_path) {
  const auto m = resolve_measurement(preset, file);
  const dirq::Scenario s{dirq::pairing_from_name(pairing),
                         resolve_prior(prior, prior_file)};

  dirq::FidelityReport rep;
  if (method == "exact") {
    rep = dirq::fidelity_exact(m, s);
    std::printf("fidelity = %.12f (exact, %s, %s pairing)\n", rep.value,
                m.label.c_str(), pairing.c_str());
  } else if (method == "monte-carlo") {
    rep = dirq::fidelity_monte_carlo(m, s, trials, seed);
    std::printf("fidelity = %.12f +/- %.2e (monte-carlo, %lld trials, seed %llu)\n",
                rep.value, rep.std_error, rep.trials,
                static_cast<unsigned long long>(seed));
  } else {
    throw dirq::SchemaError("unknown method '" + method +
                            "' (use exact or monte-carlo)");
  }
  emit_json(json_path, dirq::fidelity_report_to_json(rep));
  return 0;
}

int cmd_optimize(const std::string& pairing, const std::string& prior,
                 const std::string& prior_file, int starts, std::uint64_t seed,
                 const std::string& constraint, const std::string& json_path,
                 const std::string& out_measurement) {
  const dirq::Scenario s{dirq::pairing_from_name(pairing),
                         resolve_prior(prior, prior_file)};

  dirq::OptimizationResult result;
  if (constraint == "full") {
    result = dirq::optimize(s, starts, seed);
  } else if (constraint == "product") {
    result = dirq::optimize_product(s, starts, seed);
  } else {
    throw dirq::SchemaError("unknown constraint '" + constraint +
                            "' (use full or product)");
  }

  int converged = 0;
  for (bool c : result.converged) converged += c ? 1 : 0;
  std::printf("best fidelity = %.12f (%s, %s prior, %d starts, %d converged)\n",
              result.best_fidelity, pairing.c_str(),
              prior_file.empty() ? prior.c_str() : "file", starts, converged);

  json j = dirq::optimization_result_to_json(result);
  j["pairing"] = pairing;
  j["prior"] = prior_file.empty() ? prior : std::string("file:") + prior_file;
  j["constraint"] = constraint;
  j["seed"] = seed;
  emit_json(json_path, j);
  if (!out_measurement.empty()) {
    dirq::write_text_file(
        out_measurement,
        dirq::measurement_to_json(result.best_measurement).dump(2) + "\n");
  }
  return 0;
}

int cmd_flip(long long trials, int copies, const std::vector<double>& axis,
             std::uint64_t seed, const std::string& json_path) {
  const auto fixed_axis = resolve_axis(axis);

  json j{{"trials", trials},
         {"copies", copies},
         {"seed", seed},
         {"axis_mode", fixed_axis ? "fixed" : "random"}};
  if (fixed_axis) j["axis"] = {fixed_axis->x, fixed_axis->y, fixed_axis->z};

  if (copies == 1) {
    const auto mc = dirq::uqsf_average_fidelity(trials, seed, fixed_axis);
    std::printf("flip fidelity = %.6f +/- %.2e (%lld trials)\n", mc.mean,
                mc.std_error, mc.trials);
    j["mean"] = mc.mean;
    j["std_error"] = mc.std_error;
  } else {
    const auto s = dirq::uqsf_multicopy_summary(copies, trials, seed, fixed_axis);
    std::printf("flip fidelity per copy (%d copies, %lld trials):\n", copies, trials);
    for (std::size_t c = 0; c < s.per_copy_mean.size(); ++c) {
      std::printf("  copy %2zu: %.6f +/- %.2e\n", c, s.per_copy_mean[c],
                  s.per_copy_std_error[c]);
    }
    j["mean"] = s.per_copy_mean[0];
    j["std_error"] = s.per_copy_std_error[0];
    j["per_copy_mean"] = s.per_copy_mean;
    j["per_copy_std_error"] = s.per_copy_std_error;
  }
  emit_json(json_path, j);
  return 0;
}

json ppt_entry(const dirq::Mat4& density) {
  const auto d = dirq::pauli_decompose(density);
  const dirq::Mat4 pt = dirq::partial_transpose(density, 2);
  const auto eig = dirq::hermitian_eigen(pt);

  json correlation = json::array();
  for (int k = 0; k < 3; ++k)
    correlation.push_back({d.correlation[k][0], d.correlation[k][1], d.correlation[k][2]});

  return json{
      {"pauli",
       {{"scalar", d.scalar},
        {"alpha", {d.alpha[0], d.alpha[1], d.alpha[2]}},
        {"beta", {d.beta[0], d.beta[1], d.beta[2]}},
        {"correlation", correlation}}},
      {"pt_spectrum", {eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2],
                       eig.eigenvalues[3]}},
      {"negativity", eig.eigenvalues[0]},
      {"flipped_nonidempotency", (pt * pt - pt).frobenius_norm()}};
}

int cmd_ppt(const std::string& state_file, const std::string& measurement_file,
            const std::string& preset, const std::string& json_path) {
  json entries = json::array();

  if (!state_file.empty()) {
    const auto parsed = dirq::state_from_json(dirq::load_json_file(state_file));
    if (!std::holds_alternative<dirq::TwoQubitState>(parsed)) {
      throw dirq::SchemaError("ppt needs a two-qubit state (4 amplitudes)");
    }
    entries.push_back(ppt_entry(dirq::pure_density(std::get<dirq::TwoQubitState>(parsed))));
  } else {
    const auto m = resolve_measurement(preset, measurement_file);
    for (const auto& b : m.basis) entries.push_back(ppt_entry(dirq::pure_density(b)));
  }

  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    std::printf("entry %zu: negativity %.9f, spectrum [%.6f, %.6f, %.6f, %.6f], "
                "flipped nonidempotency %.6f\n",
                k, e["negativity"].get<double>(), e["pt_spectrum"][0].get<double>(),
                e["pt_spectrum"][1].get<double>(), e["pt_spectrum"][2].get<double>(),
                e["pt_spectrum"][3].get<double>(),
                e["flipped_nonidempotency"].get<double>());
  }
  emit_json(json_path, json{{"entries", entries}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"direction estimation with spin pairs: exact fidelities, "
               "measurement optimization, the universal spin-flip machine, and "
               "partial-transpose diagnostics"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "recompute and check every built-in claim");
  std::uint64_t v_seed = 1;
  long long v_trials = 100000;
  std::string v_json, v_corrupt;
  verify->add_option("--seed", v_seed, "random seed")->envname("DIRQ_SEED");
  verify->add_option("--trials", v_trials, "Monte-Carlo trials (0 skips those claims)");
  verify->add_option("--json", v_json, "write the report as JSON to this path");
  verify->add_option("--corrupt-claim", v_corrupt)->group("");  // test hook

  // fidelity ----------------------------------------------------------------
  auto* fidelity = app.add_subcommand("fidelity", "evaluate a measurement's fidelity");
  std::string f_preset, f_file, f_pairing, f_prior = "uniform", f_prior_file;
  std::string f_method = "exact", f_json;
  long long f_trials = 100000;
  std::uint64_t f_seed = 1;
  auto* fp = fidelity->add_option("--preset", f_preset,
                                  "built-in measurement (parallel-optimal or antiparallel)");
  auto* ff = fidelity->add_option("--measurement", f_file, "measurement JSON file");
  fp->excludes(ff);
  fidelity->add_option("--pairing", f_pairing, "parallel or antiparallel")->required();
  fidelity->add_option("--prior", f_prior, "uniform or tetrahedron");
  fidelity->add_option("--prior-file", f_prior_file, "discrete prior JSON file");
  fidelity->add_option("--method", f_method, "exact or monte-carlo");
  fidelity->add_option("--trials", f_trials, "Monte-Carlo trials");
  fidelity->add_option("--seed", f_seed, "random seed")->envname("DIRQ_SEED");
  fidelity->add_option("--json", f_json, "write the report as JSON to this path");

  // optimize ----------------------------------------------------------------
  auto* optimize = app.add_subcommand("optimize", "search for the best measurement");
  std::string o_pairing, o_prior = "uniform", o_prior_file, o_constraint = "full";
  std::string o_json, o_out;
  int o_starts = 20;
  std::uint64_t o_seed = 1;
  optimize->add_option("--pairing", o_pairing, "parallel or antiparallel")->required();
  optimize->add_option("--prior", o_prior, "uniform or tetrahedron");
  optimize->add_option("--prior-file", o_prior_file, "discrete prior JSON file");
  optimize->add_option("--starts", o_starts, "number of random starts");
  optimize->add_option("--seed", o_seed, "random seed")->envname("DIRQ_SEED");
  optimize->add_option("--constraint", o_constraint,
                       "full (any basis) or product (separate per-qubit bases)");
  optimize->add_option("--json", o_json, "write the result as JSON to this path");
  optimize->add_option("--out-measurement", o_out, "write the best measurement file here");

  // flip --------------------------------------------------------------------
  auto* flip = app.add_subcommand("flip", "run the measure-and-prepare spin flipper");
  long long fl_trials = 100000;
  int fl_copies = 1;
  std::vector<double> fl_axis;
  std::uint64_t fl_seed = 1;
  std::string fl_json;
  flip->add_option("--trials", fl_trials, "number of trials");
  flip->add_option("--copies", fl_copies, "flipped copies prepared per trial");
  flip->add_option("--axis", fl_axis, "fixed measurement axis x,y,z (default: random per trial)")
      ->delimiter(',')
      ->expected(3);
  flip->add_option("--seed", fl_seed, "random seed")->envname("DIRQ_SEED");
  flip->add_option("--json", fl_json, "write the summary as JSON to this path");

  // ppt ---------------------------------------------------------------------
  auto* ppt = app.add_subcommand("ppt", "Pauli decomposition and partial-transpose spectra");
  std::string p_state, p_measurement, p_preset, p_json;
  auto* ps = ppt->add_option("--state", p_state, "two-qubit state JSON file");
  auto* pm = ppt->add_option("--measurement", p_measurement, "measurement JSON file");
  auto* pp = ppt->add_option("--preset", p_preset, "built-in measurement name");
  ps->excludes(pm)->excludes(pp);
  pm->excludes(pp);
  ppt->add_option("--json", p_json, "write the analysis as JSON to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(v_seed, v_trials, v_json, v_corrupt);
    if (fidelity->parsed()) {
      if (f_preset.empty() && f_file.empty()) {
        throw dirq::SchemaError("fidelity needs --preset or --measurement");
      }
      return cmd_fidelity(f_preset, f_file, f_pairing, f_prior, f_prior_file, f_method,
                          f_trials, f_seed, f_json);
    }
    if (optimize->parsed()) {
      return cmd_optimize(o_pairing, o_prior, o_prior_file, o_starts, o_seed,
                          o_constraint, o_json, o_out);
    }
    if (flip->parsed()) return cmd_flip(fl_trials, fl_copies, fl_axis, fl_seed, fl_json);
    if (ppt->parsed()) {
      if (p_state.empty() && p_measurement.empty() && p_preset.empty()) {
        throw dirq::SchemaError("ppt needs --state, --measurement or --preset");
      }
      return cmd_ppt(p_state, p_measurement, p_preset, p_json);
    }
  } catch (const dirq::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const dirq::SemanticError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const dirq::MeasurementConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
