#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "workdeficit/io.hpp"
#include "test_support.hpp"

using namespace workdeficit;

TEST_CASE("max_entangled matches the equal-weight pure state") {
  FamilySpec spec;
  spec.family = Family::MaxEntangled;
  spec.dim_a = 2;
  const auto psi = std::get<PureState>(gen(spec));
  CHECK(psi.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(psi.amplitudes[3].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(psi.amplitudes[1]) == 0.0);
  CHECK(std::abs(psi.amplitudes[2]) == 0.0);

  spec.dim_a = 3;
  const auto qutrit = std::get<PureState>(gen(spec));
  CHECK(qutrit.dim() == 9);
  CHECK(std::abs(qutrit.amplitudes.squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("phi_mixture(0.5) collapses to the classically correlated pair") {
  CHECK(max_abs(wdtest::phi_mixture(0.5).rho - wdtest::cc_pair().rho) < 1e-12);
}

TEST_CASE("phi_mixture entropies") {
  for (double p : {0.1, 0.3, 0.8}) {
    const BipartiteState s = wdtest::phi_mixture(p);
    RealVector weights(2);
    weights << p, 1.0 - p;
    CHECK(std::abs(von_neumann_entropy(s.rho) - shannon_entropy(weights)) < 1e-9);
    CHECK(von_neumann_entropy(partial_trace(s, Party::Alice)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(von_neumann_entropy(partial_trace(s, Party::Bob)) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("max_correlated with a pure sigma is pure") {
  FamilySpec spec;
  spec.family = Family::MaxCorrelated;
  ComplexVector phi(2);
  phi << std::sqrt(0.3), std::sqrt(0.7);
  spec.sigma = phi * phi.adjoint();
  const BipartiteState s = gen_density(spec);
  const RealVector ev = eigvals_hermitian(s.rho);
  CHECK(ev[ev.size() - 1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(von_neumann_entropy(s.rho) < 1e-9);
}

TEST_CASE("max_correlated reductions share the sigma diagonal spectrum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FamilySpec spec;
    spec.family = Family::MaxCorrelated;
    spec.sigma = wdtest::random_density(3, 3, seed + 300);
    const BipartiteState s = gen_density(spec);
    const ComplexMatrix ra = partial_trace(s, Party::Alice);
    const ComplexMatrix rb = partial_trace(s, Party::Bob);
    CHECK(max_abs(ra - rb) < 1e-12);
    for (Eigen::Index i = 0; i < 3; ++i)
      CHECK(std::abs(ra(i, i) - spec.sigma(i, i)) < 1e-12);
  }
}

TEST_CASE("every family output passes validate") {
  std::vector<FamilySpec> specs;
  FamilySpec s1;
  s1.family = Family::MaxEntangled;
  s1.dim_a = 4;
  specs.push_back(s1);
  FamilySpec s2;
  s2.family = Family::CcPair;
  specs.push_back(s2);
  FamilySpec s3;
  s3.family = Family::ClassicallyCorrelated;
  s3.prob_table = RealMatrix(2, 3);
  s3.prob_table << 0.1, 0.2, 0.05, 0.15, 0.3, 0.2;
  s3.basis_a = wdtest::random_basis(2, 1);
  s3.basis_b = wdtest::random_basis(3, 2);
  specs.push_back(s3);
  FamilySpec s4;
  s4.family = Family::MaxCorrelated;
  s4.sigma = wdtest::random_density(2, 2, 4);
  specs.push_back(s4);
  FamilySpec s5;
  s5.family = Family::PhiMixture;
  s5.p = 0.25;
  specs.push_back(s5);
  FamilySpec s6;
  s6.family = Family::RandomMixed;
  s6.dim_a = 2;
  s6.dim_b = 3;
  s6.rank = 2;
  s6.seed = 7;
  specs.push_back(s6);
  FamilySpec s7;
  s7.family = Family::RandomPure;
  s7.dim_a = 3;
  s7.dim_b = 2;
  s7.seed = 8;
  specs.push_back(s7);

  for (const FamilySpec& spec : specs) {
    const BipartiteState s = gen_density(spec);
    CHECK(validate(s).pass());
  }
}

TEST_CASE("random generators are reproducible at the serialization level") {
  FamilySpec spec;
  spec.family = Family::RandomMixed;
  spec.seed = 7;
  const std::string a = dump_json(state_to_json(gen_density(spec)));
  const std::string b = dump_json(state_to_json(gen_density(spec)));
  CHECK(a == b);
  spec.seed = 8;
  CHECK(a != dump_json(state_to_json(gen_density(spec))));

  spec.family = Family::RandomPure;
  spec.seed = 7;
  const std::string c = dump_json(state_to_json(gen_density(spec)));
  CHECK(c == dump_json(state_to_json(gen_density(spec))));
}

TEST_CASE("validate reports residuals") {
  BipartiteState s = wdtest::cc_pair();
  s.rho *= 1.01;
  const ValidationReport r = validate(s);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.trace_ok);
  CHECK(r.trace_residual == doctest::Approx(0.01));

  BipartiteState t = wdtest::cc_pair();
  t.rho(0, 0) += 1e-4;
  t.rho(1, 1) -= 1e-4;
  const ValidationReport r2 = validate(t);
  CHECK_FALSE(r2.psd_ok);
  CHECK(r2.min_eigenvalue == doctest::Approx(-1e-4).epsilon(1e-6));
  CHECK(r2.hermitian_ok);
}

TEST_CASE("generators reject bad parameters") {
  FamilySpec spec;
  spec.family = Family::PhiMixture;
  spec.p = 1.5;
  CHECK_THROWS_AS(gen(spec), SpecError);

  spec = FamilySpec{};
  spec.family = Family::ClassicallyCorrelated;
  spec.prob_table = RealMatrix(2, 2);
  spec.prob_table << 0.8, 0.4, -0.1, -0.1;
  CHECK_THROWS_AS(gen(spec), SpecError);

  spec = FamilySpec{};
  spec.family = Family::MaxCorrelated;
  spec.sigma = ComplexMatrix(2, 2);
  spec.sigma << 1.5, 0, 0, -0.5;  // not PSD
  CHECK_THROWS_AS(gen(spec), SpecError);

  spec = FamilySpec{};
  spec.family = Family::RandomMixed;
  spec.rank = 9;
  CHECK_THROWS_AS(gen(spec), SpecError);
}

TEST_CASE("classically correlated generator respects supplied bases") {
  FamilySpec spec;
  spec.family = Family::ClassicallyCorrelated;
  spec.prob_table = RealMatrix(2, 2);
  spec.prob_table << 0.4, 0.1, 0.2, 0.3;
  spec.basis_a = wdtest::random_basis(2, 31);
  spec.basis_b = wdtest::random_basis(2, 32);
  const BipartiteState s = gen_density(spec);
  CHECK(is_cc_in_basis(s, *spec.basis_a, *spec.basis_b));
  CHECK_FALSE(is_cc_in_basis(s, computational_basis(2), computational_basis(2)));
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::MaxEntangled, Family::CcPair, Family::ClassicallyCorrelated,
                   Family::MaxCorrelated, Family::PhiMixture, Family::RandomMixed,
                   Family::RandomPure}) {
    const auto parsed = family_from_name(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK_FALSE(family_from_name("werner").has_value());
  CHECK(family_from_name("max_entangled").has_value());
}
