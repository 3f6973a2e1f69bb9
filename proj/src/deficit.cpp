#include "workdeficit/deficit.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "workdeficit/channels.hpp"
#include "workdeficit/nelder_mead.hpp"
#include "workdeficit/rng.hpp"

namespace workdeficit {

namespace {

constexpr double kPi = std::numbers::pi;

struct RestartOutcome {
  double f = 0.0;
  RealVector x;
  int iterations = 0;
  long long evaluations = 0;
};

int resolve_threads(int requested, int restarts) {
  int t = requested;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return std::min(t, restarts);
}

void check_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw SpecError("optimizer needs at least one restart");
  if (cfg.max_iters < 1) throw SpecError("optimizer needs at least one iteration");
  if (cfg.f_tol <= 0.0 || cfg.x_tol <= 0.0) throw SpecError("tolerances must be positive");
}

RealVector random_start(Eigen::Index dim_a, CounterRng& rng) {
  if (dim_a == 2) {
    RealVector x(2);
    x << rng.uniform(0.0, kPi), rng.uniform(0.0, 2.0 * kPi);
    return x;
  }
  RealVector x(angle_count(dim_a));
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(-kPi, kPi);
  return x;
}

}  // namespace

double total_work(const BipartiteState& s) {
  require_valid(s);
  const int n = log2_exact(s.dim_a) + log2_exact(s.dim_b);
  return static_cast<double>(n) - von_neumann_entropy(s.rho);
}

double classical_work(const RealVector& p) {
  const int n = log2_exact(p.size());
  return static_cast<double>(n) - shannon_entropy(p);
}

double deficit_lower_bound(const BipartiteState& s) {
  const double s_a = von_neumann_entropy(partial_trace(s, Party::Alice));
  const double s_b = von_neumann_entropy(partial_trace(s, Party::Bob));
  return std::max(s_a, s_b) - von_neumann_entropy(s.rho);
}

double pure_state_deficit(const PureState& psi) {
  const SchmidtForm schmidt = schmidt_decompose(psi);
  RealVector weights = schmidt.coefficients.array().square();
  // renormalize away the SVD's least-significant-digit drift
  weights /= weights.sum();
  return shannon_entropy(weights);
}

bool is_maximally_correlated(const BipartiteState& s) {
  if (s.dim_a != s.dim_b) return false;
  const Eigen::Index d = s.dim_a;
  for (Eigen::Index r = 0; r < s.rho.rows(); ++r)
    for (Eigen::Index c = 0; c < s.rho.cols(); ++c) {
      const bool diag_r = (r / d) == (r % d);
      const bool diag_c = (c / d) == (c % d);
      if (!(diag_r && diag_c) && std::abs(s.rho(r, c)) > tol::structure) return false;
    }
  return true;
}

std::optional<PureState> as_pure(const BipartiteState& s) {
  const HermitianEigen eig = eig_hermitian(s.rho);
  const Eigen::Index last = eig.values.size() - 1;
  if (eig.values[last] < 1.0 - 1e-9) return std::nullopt;
  PureState psi;
  psi.dim_a = s.dim_a;
  psi.dim_b = s.dim_b;
  psi.amplitudes = eig.vectors.col(last);
  psi.amplitudes /= psi.amplitudes.norm();
  return psi;
}

double maxcorr_deficit(const BipartiteState& s) {
  require_valid(s);
  if (s.dim_a != s.dim_b)
    throw FamilyError("maximally correlated states need equal subsystem dimensions");
  if (!is_maximally_correlated(s))
    throw FamilyError("state is not of the maximally correlated form");
  const double s_a = von_neumann_entropy(partial_trace(s, Party::Alice));
  return s_a - von_neumann_entropy(s.rho);
}

DeficitReport one_way_deficit(const BipartiteState& s, const OptimizerConfig& cfg) {
  check_config(cfg);
  require_valid(s);
  if (s.dim_a < 2 || s.dim_a > 4)
    throw DimensionError("one-way search supports Alice dimension 2, 3 or 4");
  if (s.dim() > 64) throw DimensionError("total dimension too large for the search");

  DeficitReport report;
  report.s_a = von_neumann_entropy(partial_trace(s, Party::Alice));
  report.s_b = von_neumann_entropy(partial_trace(s, Party::Bob));
  report.s_total = von_neumann_entropy(s.rho);
  report.lower_bound = std::max(report.s_a, report.s_b) - report.s_total;
  if (is_power_of_two(s.dim_a) && is_power_of_two(s.dim_b)) {
    report.n = log2_exact(s.dim_a) + log2_exact(s.dim_b);
    report.w_total = static_cast<double>(*report.n) - report.s_total;
  }

  const Eigen::Index da = s.dim_a;
  const auto objective = [&s, da](const RealVector& params) {
    BasisAngles angles;
    angles.dim = da;
    angles.params = params;
    return von_neumann_entropy(dephase_local(s, Party::Alice, basis_from_angles(angles)).rho);
  };

  NelderMeadOptions nm;
  nm.max_iters = cfg.max_iters;
  nm.f_tol = cfg.f_tol;
  nm.x_tol = cfg.x_tol;

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next.fetch_add(1); r < cfg.restarts; r = next.fetch_add(1)) {
      CounterRng rng(cfg.seed, static_cast<std::uint64_t>(r));
      const RealVector x0 = random_start(da, rng);
      NelderMeadResult coarse = nelder_mead(objective, x0, nm);
      NelderMeadOptions fine = nm;
      fine.initial_step = 0.05;
      NelderMeadResult polish = nelder_mead(objective, coarse.x, fine);
      RestartOutcome& out = outcomes[static_cast<std::size_t>(r)];
      out.f = polish.f;
      out.x = polish.x;
      out.iterations = coarse.iterations + polish.iterations;
      out.evaluations = coarse.evaluations + polish.evaluations;
    }
  };
  const int threads = resolve_threads(cfg.threads, cfg.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int winner = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (outcomes[static_cast<std::size_t>(r)].f < outcomes[static_cast<std::size_t>(winner)].f)
      winner = r;
  const RestartOutcome& best = outcomes[static_cast<std::size_t>(winner)];

  report.delta_one_way = best.f - report.s_total;
  BasisAngles angles;
  angles.dim = da;
  angles.params = best.x;
  report.best_basis = normalized_angles(angles);
  report.optimizer.winner_restart = winner;
  report.optimizer.iterations = best.iterations;
  report.optimizer.evaluations = 0;
  for (const RestartOutcome& out : outcomes) report.optimizer.evaluations += out.evaluations;

  if (auto psi = as_pure(s)) {
    report.closed_form = ClosedForm{"pure", pure_state_deficit(*psi)};
  } else if (s.dim_a == s.dim_b && is_maximally_correlated(s)) {
    report.closed_form = ClosedForm{"max-correlated", report.s_a - report.s_total};
  }
  return report;
}

OracleScan oracle_scan(const BipartiteState& s, int grid_theta, int grid_phi) {
  require_valid(s);
  if (s.dim_a != 2) throw DimensionError("the grid oracle needs Alice dimension 2");
  if (grid_theta < 2 || grid_phi < 1) throw SpecError("grid must have at least 2x1 points");
  const double s_total = von_neumann_entropy(s.rho);
  OracleScan best;
  best.value = std::numeric_limits<double>::infinity();
  BasisAngles angles;
  angles.dim = 2;
  angles.params = RealVector::Zero(2);
  for (int i = 0; i < grid_theta; ++i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(grid_theta - 1);
    for (int j = 0; j < grid_phi; ++j) {
      const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid_phi);
      angles.params << theta, phi;
      const double val =
          von_neumann_entropy(dephase_local(s, Party::Alice, basis_from_angles(angles)).rho) -
          s_total;
      if (val < best.value) {
        best.value = val;
        best.theta = theta;
        best.phi = phi;
      }
    }
  }
  return best;
}

double oracle_one_way_deficit(const BipartiteState& s, int grid_theta, int grid_phi) {
  return oracle_scan(s, grid_theta, grid_phi).value;
}

std::pair<double, double> additivity_check(const BipartiteState& s,
                                           const OptimizerConfig& cfg) {
  require_valid(s);
  if (s.dim() > 4) throw DimensionError("two-copy check needs total dimension <= 4");
  const DeficitReport one = one_way_deficit(s, cfg);
  const BipartiteState doubled = tensor_bipartite(s, s);
  const DeficitReport two = one_way_deficit(doubled, cfg);
  return {one.delta_one_way, two.delta_one_way};
}

}  // namespace workdeficit
