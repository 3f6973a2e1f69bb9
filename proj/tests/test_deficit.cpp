#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "workdeficit/channels.hpp"
#include "workdeficit/deficit.hpp"
#include "workdeficit/protocol.hpp"
#include "test_support.hpp"

using namespace workdeficit;
using wdtest::kBinaryEntropy08;
using wdtest::kOneMinusH08;

namespace {

OptimizerConfig quick_config(std::uint64_t seed = 0) {
  OptimizerConfig cfg;
  cfg.restarts = 16;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("total_work") {
  CHECK(total_work(wdtest::singlet()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(total_work(wdtest::cc_pair()) == doctest::Approx(1.0).epsilon(1e-12));

  BipartiteState mixed;
  mixed.dim_a = 2;
  mixed.dim_b = 2;
  mixed.rho = ComplexMatrix::Identity(4, 4) / 4.0;
  CHECK(total_work(mixed) == doctest::Approx(0.0).epsilon(1e-12));

  BipartiteState qutrit;
  qutrit.dim_a = 3;
  qutrit.dim_b = 3;
  qutrit.rho = ComplexMatrix::Identity(9, 9) / 9.0;
  CHECK_THROWS_AS(total_work(qutrit), DimensionError);
}

TEST_CASE("classical_work") {
  RealVector p(4);
  p << 1, 0, 0, 0;
  CHECK(classical_work(p) == doctest::Approx(2.0));
  p << 0.5, 0, 0, 0.5;
  CHECK(classical_work(p) == doctest::Approx(1.0));
  p << 0.25, 0.25, 0.25, 0.25;
  CHECK(classical_work(p) == doctest::Approx(0.0));
}

TEST_CASE("deficit_lower_bound") {
  CHECK(deficit_lower_bound(wdtest::singlet()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(deficit_lower_bound(wdtest::cc_pair()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(deficit_lower_bound(wdtest::phi_mixture(0.8)) ==
        doctest::Approx(kOneMinusH08).epsilon(1e-12));
}

TEST_CASE("pure_state_deficit") {
  FamilySpec spec;
  spec.family = Family::MaxEntangled;
  spec.dim_a = 2;
  CHECK(pure_state_deficit(std::get<PureState>(gen(spec))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  PureState product;
  product.dim_a = 2;
  product.dim_b = 2;
  product.amplitudes = ComplexVector::Zero(4);
  product.amplitudes[1] = 1.0;
  CHECK(pure_state_deficit(product) == doctest::Approx(0.0));

  PureState skew;
  skew.dim_a = 2;
  skew.dim_b = 2;
  skew.amplitudes = ComplexVector::Zero(4);
  skew.amplitudes[0] = std::sqrt(0.3);
  skew.amplitudes[3] = std::sqrt(0.7);
  CHECK(pure_state_deficit(skew) ==
        doctest::Approx(wdtest::kBinaryEntropy03).epsilon(1e-12));
}

TEST_CASE("maxcorr_deficit") {
  CHECK(maxcorr_deficit(wdtest::phi_mixture(0.8)) ==
        doctest::Approx(1.0 - kBinaryEntropy08).epsilon(1e-10));
  CHECK(maxcorr_deficit(wdtest::phi_mixture(0.2)) ==
        doctest::Approx(1.0 - kBinaryEntropy08).epsilon(1e-10));
  CHECK(maxcorr_deficit(wdtest::phi_mixture(0.5)) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(maxcorr_deficit(wdtest::singlet()) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(maxcorr_deficit(wdtest::separable_mixture()), FamilyError);
  CHECK_THROWS_AS(maxcorr_deficit(wdtest::random_two_qubit(3)), FamilyError);
}

TEST_CASE("one_way_deficit on the named examples") {
  const DeficitReport singlet = one_way_deficit(wdtest::singlet(), quick_config());
  CHECK(singlet.delta_one_way == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(singlet.lower_bound == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(singlet.n.has_value());
  CHECK(*singlet.n == 2);
  CHECK(*singlet.w_total == doctest::Approx(2.0).epsilon(1e-9));
  REQUIRE(singlet.closed_form.has_value());
  CHECK(singlet.closed_form->family == "pure");
  CHECK(singlet.closed_form->value == doctest::Approx(1.0).epsilon(1e-9));

  const DeficitReport cc = one_way_deficit(wdtest::cc_pair(), quick_config());
  CHECK(cc.delta_one_way >= -1e-9);
  CHECK(cc.delta_one_way < 1e-9);

  const DeficitReport sep = one_way_deficit(wdtest::separable_mixture(), quick_config());
  CHECK(sep.delta_one_way == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(sep.delta_one_way >= 0.1);
}

TEST_CASE("one_way_deficit rejects unsupported dimensions") {
  BipartiteState big;
  big.dim_a = 5;
  big.dim_b = 5;
  big.rho = ComplexMatrix::Identity(25, 25) / 25.0;
  CHECK_THROWS_AS(one_way_deficit(big, quick_config()), DimensionError);
}

TEST_CASE("grid oracle on the named examples") {
  CHECK(oracle_one_way_deficit(wdtest::singlet(), 181, 360) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(oracle_one_way_deficit(wdtest::cc_pair(), 19, 36) <
        1e-12);  // theta = 0 is on the grid
  const ComplexMatrix ra = wdtest::random_density(2, 2, 61);
  const ComplexMatrix rb = wdtest::random_density(2, 2, 62);
  BipartiteState prod;
  prod.dim_a = 2;
  prod.dim_b = 2;
  prod.rho = tensor_product(ra, rb);
  CHECK(oracle_one_way_deficit(prod, 181, 360) < 1e-3);

  BipartiteState qutrit;
  qutrit.dim_a = 3;
  qutrit.dim_b = 3;
  qutrit.rho = ComplexMatrix::Identity(9, 9) / 9.0;
  CHECK_THROWS_AS(oracle_one_way_deficit(qutrit, 10, 10), DimensionError);
}

TEST_CASE("bound and nonnegativity over random states") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BipartiteState s = wdtest::random_two_qubit(seed, 1 + seed % 4);
    const DeficitReport r = one_way_deficit(s, quick_config(seed));
    CHECK(r.delta_one_way >= r.lower_bound - 1e-6);
    CHECK(r.delta_one_way >= -1e-9);
  }
}

TEST_CASE("local-unitary invariance of the one-way deficit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BipartiteState s = wdtest::random_two_qubit(seed + 70);
    const double base = one_way_deficit(s, quick_config()).delta_one_way;
    BipartiteState rotated = apply_local_unitary(
        s, Party::Alice, wdtest::random_basis(2, seed + 1).u);
    rotated = apply_local_unitary(rotated, Party::Bob,
                                  wdtest::random_basis(2, seed + 2).u);
    const double moved = one_way_deficit(rotated, quick_config()).delta_one_way;
    CHECK(std::abs(base - moved) < 1e-6);
  }
}

TEST_CASE("pure states match the Schmidt entropy") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState psi = wdtest::random_pure(2, 2, seed + 11);
    const double via_optimizer =
        one_way_deficit(to_density(psi), quick_config(seed)).delta_one_way;
    CHECK(std::abs(via_optimizer - pure_state_deficit(psi)) < 1e-6);
  }
}

TEST_CASE("maximally correlated states match the closed form") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FamilySpec spec;
    spec.family = Family::MaxCorrelated;
    spec.sigma = wdtest::random_density(2, 2, seed + 900);
    const BipartiteState s = gen_density(spec);
    const double closed = maxcorr_deficit(s);
    const double searched = one_way_deficit(s, quick_config(seed)).delta_one_way;
    CHECK(std::abs(searched - closed) < 1e-6);
  }
}

TEST_CASE("optimizer agrees with the grid oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BipartiteState s = wdtest::random_two_qubit(seed + 7000);
    const double fine = one_way_deficit(s, quick_config(seed)).delta_one_way;
    const double coarse = oracle_one_way_deficit(s, 181, 360);
    CHECK(std::abs(fine - coarse) <= 5e-4);
  }
}

TEST_CASE("classically correlated states have zero deficit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CounterRng rng(seed, 23);
    RealMatrix p(2, 2);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
      p(i / 2, i % 2) = rng.uniform();
      sum += p(i / 2, i % 2);
    }
    p /= sum;
    FamilySpec spec;
    spec.family = Family::ClassicallyCorrelated;
    spec.prob_table = p;
    spec.basis_a = wdtest::random_basis(2, seed + 51);
    spec.basis_b = wdtest::random_basis(2, seed + 52);
    const double delta = one_way_deficit(gen_density(spec), quick_config(seed)).delta_one_way;
    CHECK(delta <= 1e-6);
    CHECK(delta >= -1e-9);
  }
}

TEST_CASE("replaying the winning basis reproduces W_l = W_t - delta") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BipartiteState s = wdtest::random_two_qubit(seed + 330);
    const DeficitReport r = one_way_deficit(s, quick_config(seed));
    const LocalBasis best = basis_from_angles(r.best_basis);
    ProtocolLedger l = ledger_init(s);
    for (const ProtocolStep& step : builtin_script("schmidt_dephase", 1, best))
      l = ledger_apply(l, step);
    const WorkResult w = ledger_finalize(l);
    CHECK(std::abs(w.w_local - (*r.w_total - r.delta_one_way)) < 1e-8);
  }
}

TEST_CASE("additivity on the closed-form families") {
  OptimizerConfig cfg = quick_config();
  cfg.restarts = 48;
  cfg.max_iters = 5000;
  const auto [one_cc, two_cc] = additivity_check(wdtest::cc_pair(), cfg);
  CHECK(std::abs(one_cc) < 1e-9);
  CHECK(std::abs(two_cc) < 1e-6);

  const auto [one_ent, two_ent] = additivity_check(wdtest::singlet(), cfg);
  CHECK(one_ent == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(two_ent == doctest::Approx(2.0).epsilon(1e-3));

  BipartiteState wide;
  wide.dim_a = 2;
  wide.dim_b = 4;
  wide.rho = ComplexMatrix::Identity(8, 8) / 8.0;
  CHECK_THROWS_AS(additivity_check(wide, cfg), DimensionError);
}

TEST_CASE("the search is deterministic for a fixed seed, any thread count") {
  const BipartiteState s = wdtest::random_two_qubit(424242);
  OptimizerConfig cfg = quick_config(9);
  const DeficitReport a = one_way_deficit(s, cfg);
  const DeficitReport b = one_way_deficit(s, cfg);
  cfg.threads = 4;
  const DeficitReport c = one_way_deficit(s, cfg);
  CHECK(a.delta_one_way == b.delta_one_way);
  CHECK(a.delta_one_way == c.delta_one_way);
  CHECK(a.best_basis.params == b.best_basis.params);
  CHECK(a.best_basis.params == c.best_basis.params);
  CHECK(a.optimizer.winner_restart == c.optimizer.winner_restart);
  CHECK(a.optimizer.evaluations == c.optimizer.evaluations);

  cfg.threads = 1;
  cfg.seed = 10;
  const DeficitReport d = one_way_deficit(s, cfg);
  // a different seed may land on a different (equivalent) winning basis
  CHECK(std::abs(a.delta_one_way - d.delta_one_way) < 1e-8);
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(one_way_deficit(wdtest::singlet(), cfg), SpecError);
  cfg = OptimizerConfig{};
  cfg.f_tol = 0.0;
  CHECK_THROWS_AS(one_way_deficit(wdtest::singlet(), cfg), SpecError);
}
