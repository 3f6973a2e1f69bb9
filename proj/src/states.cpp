#include "workdeficit/states.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "workdeficit/rng.hpp"

namespace workdeficit {

namespace {

PureState max_entangled(Eigen::Index d) {
  if (d < 2) throw SpecError("maximally entangled state needs dimension >= 2");
  PureState psi;
  psi.dim_a = d;
  psi.dim_b = d;
  psi.amplitudes = ComplexVector::Zero(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < d; ++i) psi.amplitudes[i * d + i] = Complex{a, 0.0};
  return psi;
}

BipartiteState cc_pair() {
  BipartiteState s;
  s.dim_a = 2;
  s.dim_b = 2;
  s.rho = ComplexMatrix::Zero(4, 4);
  s.rho(0, 0) = Complex{0.5, 0.0};
  s.rho(3, 3) = Complex{0.5, 0.0};
  return s;
}

BipartiteState classically_correlated(const FamilySpec& spec) {
  const RealMatrix& p = spec.prob_table;
  if (p.size() == 0) throw SpecError("classically correlated family needs a probability table");
  const Eigen::Index da = p.rows(), db = p.cols();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j) {
      if (p(i, j) < -1e-9) throw SpecError("probability table has a negative entry");
      sum += std::max(p(i, j), 0.0);
    }
  if (std::abs(sum - 1.0) > 1e-9) throw SpecError("probability table does not sum to one");
  const LocalBasis ba = spec.basis_a.value_or(computational_basis(da));
  const LocalBasis bb = spec.basis_b.value_or(computational_basis(db));
  if (ba.dim() != da || bb.dim() != db)
    throw SpecError("basis dimensions do not match the probability table");
  require_unitary(ba.u);
  require_unitary(bb.u);
  ComplexMatrix diag = ComplexMatrix::Zero(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      diag(i * db + j, i * db + j) = Complex{std::max(p(i, j), 0.0), 0.0};
  const ComplexMatrix w = tensor_product(ba.u, bb.u);
  BipartiteState s;
  s.dim_a = da;
  s.dim_b = db;
  s.rho = w * diag * w.adjoint();
  return s;
}

BipartiteState max_correlated(const ComplexMatrix& sigma) {
  const Eigen::Index d = sigma.rows();
  if (d < 2 || sigma.cols() != d) throw SpecError("sigma must be square with dimension >= 2");
  if (max_abs(sigma - sigma.adjoint()) > 1e-9) throw SpecError("sigma must be Hermitian");
  const Complex tr = sigma.trace();
  if (std::abs(tr.real() - 1.0) > 1e-9 || std::abs(tr.imag()) > 1e-9)
    throw SpecError("sigma must have unit trace");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sigma, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw SpecError("sigma must be positive semidefinite");
  BipartiteState s;
  s.dim_a = d;
  s.dim_b = d;
  s.rho = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      s.rho(i * d + i, j * d + j) = sigma(i, j);
  return s;
}

BipartiteState phi_mixture(double p) {
  if (p < 0.0 || p > 1.0) throw SpecError("mixing weight must lie in [0, 1]");
  ComplexVector plus = ComplexVector::Zero(4), minus = ComplexVector::Zero(4);
  const double a = 1.0 / std::sqrt(2.0);
  plus[0] = Complex{a, 0.0};
  plus[3] = Complex{a, 0.0};
  minus[0] = Complex{a, 0.0};
  minus[3] = Complex{-a, 0.0};
  BipartiteState s;
  s.dim_a = 2;
  s.dim_b = 2;
  s.rho = p * (plus * plus.adjoint()) + (1.0 - p) * (minus * minus.adjoint());
  return s;
}

BipartiteState random_mixed(const FamilySpec& spec) {
  if (spec.dim_a < 1 || spec.dim_b < 1) throw SpecError("dimensions must be positive");
  const Eigen::Index d = spec.dim_a * spec.dim_b;
  const Eigen::Index rank = spec.rank == 0 ? d : spec.rank;
  if (rank < 1 || rank > d) throw SpecError("rank must lie in [1, total dimension]");
  CounterRng rng(spec.seed, 0);
  ComplexMatrix g(d, rank);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex{re, im} / std::sqrt(2.0);
    }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  BipartiteState s;
  s.dim_a = spec.dim_a;
  s.dim_b = spec.dim_b;
  s.rho = 0.5 * (m + m.adjoint().eval());
  return s;
}

PureState random_pure(const FamilySpec& spec) {
  if (spec.dim_a < 1 || spec.dim_b < 1) throw SpecError("dimensions must be positive");
  const Eigen::Index d = spec.dim_a * spec.dim_b;
  CounterRng rng(spec.seed, 0);
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v[i] = Complex{re, im};
  }
  v /= v.norm();
  PureState psi;
  psi.dim_a = spec.dim_a;
  psi.dim_b = spec.dim_b;
  psi.amplitudes = v;
  return psi;
}

}  // namespace

GeneratedState gen(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::MaxEntangled:
      return max_entangled(spec.dim_a);
    case Family::CcPair:
      return cc_pair();
    case Family::ClassicallyCorrelated:
      return classically_correlated(spec);
    case Family::MaxCorrelated:
      return max_correlated(spec.sigma);
    case Family::PhiMixture:
      return phi_mixture(spec.p);
    case Family::RandomMixed:
      return random_mixed(spec);
    case Family::RandomPure:
      return random_pure(spec);
  }
  throw SpecError("unknown family");
}

BipartiteState gen_density(const FamilySpec& spec) {
  GeneratedState g = gen(spec);
  if (auto* s = std::get_if<BipartiteState>(&g)) return *s;
  return to_density(std::get<PureState>(g));
}

ValidationReport validate(const BipartiteState& s) {
  ValidationReport r;
  if (s.dim_a < 1 || s.dim_b < 1 || s.rho.rows() != s.dim() || s.rho.cols() != s.dim())
    return r;  // all checks fail on a malformed shape
  r.hermitian_residual = max_abs(s.rho - s.rho.adjoint());
  r.hermitian_ok = r.hermitian_residual <= tol::hermitian;
  const Complex tr = s.rho.trace();
  r.trace_residual = std::max(std::abs(tr.real() - 1.0), std::abs(tr.imag()));
  r.trace_ok = r.trace_residual <= tol::trace;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (s.rho + s.rho.adjoint().eval()),
                                                  Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.psd_ok = r.min_eigenvalue >= tol::psd_floor;
  return r;
}

std::optional<Family> family_from_name(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "max-entangled") return Family::MaxEntangled;
  if (key == "cc-pair") return Family::CcPair;
  if (key == "classically-correlated") return Family::ClassicallyCorrelated;
  if (key == "max-correlated") return Family::MaxCorrelated;
  if (key == "phi-mixture") return Family::PhiMixture;
  if (key == "random-mixed") return Family::RandomMixed;
  if (key == "random-pure") return Family::RandomPure;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::MaxEntangled: return "max-entangled";
    case Family::CcPair: return "cc-pair";
    case Family::ClassicallyCorrelated: return "classically-correlated";
    case Family::MaxCorrelated: return "max-correlated";
    case Family::PhiMixture: return "phi-mixture";
    case Family::RandomMixed: return "random-mixed";
    case Family::RandomPure: return "random-pure";
  }
  return "unknown";
}

}  // namespace workdeficit
