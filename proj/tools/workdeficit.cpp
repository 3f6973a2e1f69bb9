#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "workdeficit/channels.hpp"
#include "workdeficit/deficit.hpp"
#include "workdeficit/io.hpp"
#include "workdeficit/protocol.hpp"
#include "workdeficit/states.hpp"

namespace wd = workdeficit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;     // parse failures, bad parameters
constexpr int kExitState = 3;     // invalid density matrix
constexpr int kExitMismatch = 4;  // mode/family/dimension/locality mismatch

int threads_from_env() {
  const char* env = std::getenv("WORKDEFICIT_THREADS");
  if (env == nullptr || *env == '\0') return 0;  // auto
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 0) return 0;
  return static_cast<int>(v);
}

struct GenOptions {
  std::string family;
  Eigen::Index d = 2;
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  double p = 0.5;
  Eigen::Index rank = 0;
  std::uint64_t seed = 0;
  std::string prob_table;
  std::string sigma;
  std::string out;
};

struct ComputeOptions {
  std::string state_path;
  std::string mode = "one-way";
  std::string direction = "a-to-b";
  int restarts = 32;
  int max_iters = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-8;
  std::uint64_t seed = 0;
  std::string out;
};

struct OracleOptions {
  std::string state_path;
  int grid_theta = 181;
  int grid_phi = 360;
  std::string out;
};

struct ProtocolOptions {
  std::string state_path;
  std::string builtin;
  std::string script_path;
  std::string out;
};

json envelope(const std::string& mode, std::uint64_t seed) {
  json j;
  j["tool"] = wd::kToolName;
  j["version"] = wd::kToolVersion;
  j["mode"] = mode;
  j["seed"] = seed;
  return j;
}

void emit(json report, const std::chrono::steady_clock::time_point& started,
          const std::string& out_path) {
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report["duration_seconds"] =
      std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
  const std::string text = wd::dump_json(report);
  if (out_path.empty())
    std::cout << text;
  else
    wd::write_text_file(out_path, text);
}

json basis_to_json(const wd::BasisAngles& basis) {
  json j;
  j["dim"] = basis.dim;
  j["params"] = std::vector<double>(basis.params.data(),
                                    basis.params.data() + basis.params.size());
  return j;
}

json parse_inline_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw wd::SchemaError(std::string("cannot parse ") + what + ": " + e.what());
  }
}

int run_gen(const GenOptions& opt) {
  const auto family = wd::family_from_name(opt.family);
  if (!family) throw wd::SpecError("unknown family '" + opt.family + "'");
  wd::FamilySpec spec;
  spec.family = *family;
  spec.dim_a = opt.dim_a > 0 ? opt.dim_a : opt.d;
  spec.dim_b = opt.dim_b > 0 ? opt.dim_b : opt.d;
  spec.p = opt.p;
  spec.rank = opt.rank;
  spec.seed = opt.seed;
  if (!opt.prob_table.empty()) {
    const json t = parse_inline_json(opt.prob_table, "--prob-table");
    if (!t.is_array() || t.empty() || !t[0].is_array())
      throw wd::SpecError("--prob-table must be a 2-d JSON array");
    spec.prob_table = wd::RealMatrix(t.size(), t[0].size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_array() || t[i].size() != t[0].size())
        throw wd::SpecError("--prob-table rows must have equal length");
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        if (!t[i][j].is_number()) throw wd::SpecError("--prob-table entries must be numbers");
        spec.prob_table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            t[i][j].get<double>();
      }
    }
  }
  if (!opt.sigma.empty())
    spec.sigma = wd::matrix_from_json(parse_inline_json(opt.sigma, "--sigma"));
  const wd::BipartiteState state = wd::gen_density(spec);
  const std::string text = wd::dump_json(wd::state_to_json(state));
  if (opt.out.empty())
    std::cout << text;
  else
    wd::write_text_file(opt.out, text);
  return kExitOk;
}

int run_compute(const ComputeOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  wd::BipartiteState state = wd::load_state_file(opt.state_path);
  if (opt.direction == "b-to-a")
    state = wd::swap_parties(state);
  else if (opt.direction != "a-to-b")
    throw wd::SpecError("--direction must be a-to-b or b-to-a");

  json report = envelope(opt.mode, opt.seed);
  report["direction"] = opt.direction;
  report["dims"] = json::array({state.dim_a, state.dim_b});

  const double s_a = wd::von_neumann_entropy(wd::partial_trace(state, wd::Party::Alice));
  const double s_b = wd::von_neumann_entropy(wd::partial_trace(state, wd::Party::Bob));
  const double s_total = wd::von_neumann_entropy(state.rho);
  report["s_a"] = s_a;
  report["s_b"] = s_b;
  report["s_total"] = s_total;
  report["lower_bound"] = std::max(s_a, s_b) - s_total;
  const bool qubit_dims =
      wd::is_power_of_two(state.dim_a) && wd::is_power_of_two(state.dim_b);
  report["n"] = nullptr;
  report["w_total"] = nullptr;
  if (qubit_dims) {
    const int n = wd::log2_exact(state.dim_a) + wd::log2_exact(state.dim_b);
    report["n"] = n;
    report["w_total"] = static_cast<double>(n) - s_total;
  }
  report["delta_one_way"] = nullptr;
  report["best_basis"] = nullptr;
  report["closed_form"] = nullptr;
  report["optimizer"] = nullptr;

  if (opt.mode == "one-way") {
    wd::OptimizerConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.max_iters = opt.max_iters;
    cfg.f_tol = opt.f_tol;
    cfg.x_tol = opt.x_tol;
    cfg.seed = opt.seed;
    cfg.threads = threads_from_env();
    const wd::DeficitReport r = wd::one_way_deficit(state, cfg);
    report["delta_one_way"] = r.delta_one_way;
    report["best_basis"] = basis_to_json(r.best_basis);
    if (r.closed_form)
      report["closed_form"] = json{{"family", r.closed_form->family},
                                   {"value", r.closed_form->value}};
    report["optimizer"] = json{{"restarts", cfg.restarts},
                               {"iterations", r.optimizer.iterations},
                               {"winner_restart", r.optimizer.winner_restart},
                               {"evaluations", r.optimizer.evaluations}};
  } else if (opt.mode == "bound") {
    // envelope already carries the bound
  } else if (opt.mode == "pure") {
    const auto psi = wd::as_pure(state);
    if (!psi) throw wd::FamilyError("state is not pure; cannot use --mode pure");
    report["closed_form"] =
        json{{"family", "pure"}, {"value", wd::pure_state_deficit(*psi)}};
  } else if (opt.mode == "maxcorr") {
    report["closed_form"] =
        json{{"family", "max-correlated"}, {"value", wd::maxcorr_deficit(state)}};
  } else {
    throw wd::SpecError("unknown mode '" + opt.mode + "'");
  }
  emit(std::move(report), started, opt.out);
  return kExitOk;
}

int run_oracle(const OracleOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  const wd::BipartiteState state = wd::load_state_file(opt.state_path);
  const wd::OracleScan scan = wd::oracle_scan(state, opt.grid_theta, opt.grid_phi);
  json report = envelope("oracle", 0);
  report["dims"] = json::array({state.dim_a, state.dim_b});
  report["grid_theta"] = opt.grid_theta;
  report["grid_phi"] = opt.grid_phi;
  report["value"] = scan.value;
  report["argmin"] = json{{"theta", scan.theta}, {"phi", scan.phi}};
  emit(std::move(report), started, opt.out);
  return kExitOk;
}

int run_protocol(const ProtocolOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  const wd::BipartiteState state = wd::load_state_file(opt.state_path);
  std::vector<wd::ProtocolStep> steps;
  std::string script_name = "file";
  if (!opt.builtin.empty()) {
    script_name = opt.builtin;
    std::string key = opt.builtin;
    std::replace(key.begin(), key.end(), '-', '_');
    const int alice_qubits = wd::log2_exact(state.dim_a);
    if (key == "schmidt_dephase") {
      const auto psi = wd::as_pure(state);
      if (!psi)
        throw wd::FamilyError("schmidt-dephase needs a pure state");
      steps = wd::builtin_script(key, alice_qubits, wd::schmidt_decompose(*psi).basis_a);
    } else {
      steps = wd::builtin_script(key, alice_qubits);
    }
  } else {
    steps = wd::load_script_file(opt.script_path);
  }
  wd::ProtocolLedger ledger = wd::ledger_init(state);
  for (const wd::ProtocolStep& step : steps) ledger = wd::ledger_apply(ledger, step);
  const wd::WorkResult result = wd::ledger_finalize(ledger);
  const double w_total = wd::total_work(state);

  json report = envelope("protocol", 0);
  report["dims"] = json::array({state.dim_a, state.dim_b});
  report["script"] = script_name;
  report["steps"] = steps.size();
  report["w_total"] = w_total;
  report["w_local"] = result.w_local;
  report["delta"] = w_total - result.w_local;
  report["k"] = result.k;
  report["s_a_final"] = result.s_a_final;
  report["s_b_final"] = result.s_b_final;
  emit(std::move(report), started, opt.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Work extractable from bipartite quantum states: global vs local"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a state file for a named family");
  gen->add_option("--family", gen_opt.family, "Family name")->required();
  gen->add_option("--d", gen_opt.d, "Local dimension (square splits)");
  gen->add_option("--dim-a", gen_opt.dim_a, "Alice dimension");
  gen->add_option("--dim-b", gen_opt.dim_b, "Bob dimension");
  gen->add_option("--p", gen_opt.p, "Mixing weight for phi-mixture");
  gen->add_option("--rank", gen_opt.rank, "Rank for random-mixed (0 = full)");
  gen->add_option("--seed", gen_opt.seed, "Seed for random families");
  gen->add_option("--prob-table", gen_opt.prob_table,
                  "JSON 2-d array p_ij for classically-correlated");
  gen->add_option("--sigma", gen_opt.sigma,
                  "JSON [re,im] matrix for max-correlated");
  gen->add_option("--out", gen_opt.out, "Output path (default stdout)");

  ComputeOptions comp_opt;
  CLI::App* comp = app.add_subcommand("compute", "Compute deficit quantities for a state");
  comp->add_option("state", comp_opt.state_path, "State file")->required();
  comp->add_option("--mode", comp_opt.mode, "one-way | bound | pure | maxcorr");
  comp->add_option("--direction", comp_opt.direction, "a-to-b | b-to-a");
  comp->add_option("--restarts", comp_opt.restarts, "Optimizer restarts");
  comp->add_option("--max-iters", comp_opt.max_iters, "Iteration cap per restart");
  comp->add_option("--f-tol", comp_opt.f_tol, "Objective tolerance");
  comp->add_option("--x-tol", comp_opt.x_tol, "Parameter tolerance");
  comp->add_option("--seed", comp_opt.seed, "Optimizer seed");
  comp->add_option("--out", comp_opt.out, "Output path (default stdout)");

  OracleOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive grid minimum (Alice qubit)");
  oracle->add_option("state", oracle_opt.state_path, "State file")->required();
  oracle->add_option("--grid-theta", oracle_opt.grid_theta, "Points over [0, pi]");
  oracle->add_option("--grid-phi", oracle_opt.grid_phi, "Points over [0, 2*pi)");
  oracle->add_option("--out", oracle_opt.out, "Output path (default stdout)");

  ProtocolOptions proto_opt;
  CLI::App* proto = app.add_subcommand("protocol", "Replay a protocol script");
  proto->add_option("state", proto_opt.state_path, "State file")->required();
  CLI::Option* builtin =
      proto->add_option("--builtin", proto_opt.builtin,
                        "cc-measure-send | schmidt-dephase | maxcorr-dephase");
  proto->add_option("--script", proto_opt.script_path, "Script file")->excludes(builtin);
  proto->add_option("--out", proto_opt.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (comp->parsed()) return run_compute(comp_opt);
    if (oracle->parsed()) return run_oracle(oracle_opt);
    if (proto->parsed()) {
      if (proto_opt.builtin.empty() == proto_opt.script_path.empty())
        throw wd::SpecError("protocol needs exactly one of --builtin or --script");
      return run_protocol(proto_opt);
    }
    return kExitUsage;
  } catch (const wd::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wd::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wd::InvalidStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitState;
  } catch (const wd::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const wd::FamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const wd::LocalityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
