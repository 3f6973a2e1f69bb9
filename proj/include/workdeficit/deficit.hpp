#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "workdeficit/qstate.hpp"

namespace workdeficit {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-8;
  std::uint64_t seed = 0;
  int threads = 1;  // parallel restarts; 0 means hardware concurrency
};

struct OptimizerDiagnostics {
  int iterations = 0;           // winning restart
  int winner_restart = 0;
  long long evaluations = 0;    // all restarts
};

struct ClosedForm {
  std::string family;  // "pure" or "max-correlated"
  double value = 0.0;
};

struct DeficitReport {
  std::optional<int> n;              // qubit count; empty for non-qubit dims
  std::optional<double> w_total;     // n - S(rho); empty likewise
  double s_a = 0.0;
  double s_b = 0.0;
  double s_total = 0.0;
  double delta_one_way = 0.0;
  double lower_bound = 0.0;
  BasisAngles best_basis;
  std::optional<ClosedForm> closed_form;
  OptimizerDiagnostics optimizer;
};

// W_t = n - S(rho). Requires power-of-two subsystem dimensions.
double total_work(const BipartiteState& s);

// W_C = n - H(X) for a distribution over n-bit strings.
double classical_work(const RealVector& p);

// Minimum over Alice rank-1 dephasing bases of S(dephased) - S(rho), by
// multi-start simplex search over BasisAngles. Deterministic for a fixed
// seed regardless of thread count.
DeficitReport one_way_deficit(const BipartiteState& s, const OptimizerConfig& cfg);

// Exhaustive (theta, phi) grid version of the same minimum; dim_a must be 2.
// theta spans [0, pi] inclusive, phi spans [0, 2*pi).
double oracle_one_way_deficit(const BipartiteState& s, int grid_theta, int grid_phi);

struct OracleScan {
  double value = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};
OracleScan oracle_scan(const BipartiteState& s, int grid_theta, int grid_phi);

// max{S(rho_A), S(rho_B)} - S(rho).
double deficit_lower_bound(const BipartiteState& s);

// Shannon entropy of the squared Schmidt coefficients.
double pure_state_deficit(const PureState& psi);

// S(rho_A) - S(rho) for states of the form sum_ij sigma_ij |ii><jj|; the
// value doubles as the distillable-entanglement reference for this family.
double maxcorr_deficit(const BipartiteState& s);

// (delta(rho), delta(rho x rho)) with the two-copy Alice side treated as one
// 4-dimensional subsystem. Requires total dimension <= 4.
std::pair<double, double> additivity_check(const BipartiteState& s,
                                           const OptimizerConfig& cfg);

// Structure probe shared with the report's closed-form detection.
bool is_maximally_correlated(const BipartiteState& s);
std::optional<PureState> as_pure(const BipartiteState& s);

}  // namespace workdeficit
