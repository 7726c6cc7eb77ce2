#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dbcohom/serialization.hpp"

namespace dbcohom {

// Exit codes of the scenario pipeline (also the CLI process codes).
enum class ScenarioStatus : int {
  ok = 0,
  invariant_failure = 1,
  config_error = 2,
  infeasible = 3,
};

struct ConvergenceRow {
  double h = 0;        // max edge length at this refinement level
  double value = 0;
  double error = 0;    // |value - oracle|; NaN when no oracle is configured
  bool has_error = false;
};

// Everything run_scenario produces: the deterministic report document, the
// per-observable convergence series, and wall-clock timings (kept out of the
// report so reruns are byte-identical).
struct ScenarioReport {
  json document;
  std::map<std::string, std::vector<ConvergenceRow>> series;
  std::map<std::string, double> timings_seconds;
  ScenarioStatus status = ScenarioStatus::ok;
};

// Parsed and validated configuration. Unknown fields anywhere are rejected
// with the offending path; k = 0 is rejected.
struct ScenarioConfig {
  std::string name;
  std::uint64_t seed = 20240801;

  MeshKind kind = MeshKind::circle;
  int nodes = 64;          // circle
  int n_r = 4;             // annulus
  int n_theta = 48;        // annulus
  double r_inner = 1.0;
  double r_outer = 2.0;
  int subdivision = 2;     // sphere

  int charts = 4;

  long long k = 1;
  long long p = 0;
  long long n = 0;
  double e2 = 1.0;

  struct FourierSpec {
    double constant = 0;
    std::vector<double> cos_coeffs;  // coefficient of cos(m*theta), m >= 1
    std::vector<double> sin_coeffs;
    long long winding = 0;           // multiples of theta (chart-lifted)
  };
  FourierSpec alpha;
  FourierSpec alpha_tilde;
  FourierSpec dressed_a;
  FourierSpec psi;            // sphere: function of z = cos(polar)
  long long monopole_c1 = 0;  // sphere: first Chern number of the test class

  double solver_tolerance = 1e-8;
  double drift_tolerance = 1e-10;
  std::vector<int> refinement_levels = {1, 2, 4};
  int gauge_samples = 20;
  int nilpotency_samples = 25;
  bool exact_only = false;

  static ScenarioConfig parse(const json& raw);
  json echo() const;  // the validated configuration, normalized key order
};

ScenarioReport run_scenario(const ScenarioConfig& config);

// Structural verification only: cover certificates, differential
// nilpotency on seeded random cochains, discrete Stokes, operator-matrix
// fidelity. This is the `verify` subcommand and the exact_only mode.
ScenarioReport verify_scenario(const ScenarioConfig& config);

// Writes report.json, one CSV per observable series (columns h, value,
// error) and the timings sidecar into `directory`.
void emit_outputs(const ScenarioReport& report,
                  const std::filesystem::path& directory);

// Bundled scenario discovery for the list-scenarios subcommand.
std::vector<std::string> list_scenarios(const std::filesystem::path& dir);

}  // namespace dbcohom
