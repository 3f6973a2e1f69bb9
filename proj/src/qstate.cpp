#include "workdeficit/qstate.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace workdeficit {

ComplexMatrix tensor_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  return Eigen::kroneckerProduct(x, y).eval();
}

ComplexMatrix partial_trace(const BipartiteState& s, Party keep) {
  require_valid(s);
  const Eigen::Index da = s.dim_a, db = s.dim_b;
  if (keep == Party::Alice) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b = 0; b < db; ++b)
          out(a, a2) += s.rho(a * db + b, a2 * db + b);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index b = 0; b < db; ++b)
    for (Eigen::Index b2 = 0; b2 < db; ++b2)
      for (Eigen::Index a = 0; a < da; ++a)
        out(b, b2) += s.rho(a * db + b, a * db + b2);
  return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (m.size() == 0 || m.rows() != m.cols())
    throw DimensionError("eigendecomposition needs a square matrix");
  if (max_abs(m - m.adjoint()) > tol::hermitian)
    throw InvalidStateError("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector eigvals_hermitian(const ComplexMatrix& m) { return eig_hermitian(m).values; }

double von_neumann_entropy(const ComplexMatrix& m) {
  if (m.size() == 0 || m.rows() != m.cols())
    throw DimensionError("entropy needs a square matrix");
  if (max_abs(m - m.adjoint()) > tol::hermitian)
    throw InvalidStateError("matrix is not Hermitian within tolerance");
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > tol::trace || std::abs(tr.imag()) > tol::trace)
    throw InvalidStateError("matrix trace differs from one");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lambda = es.eigenvalues()[i];
    if (lambda < tol::psd_floor)
      throw InvalidStateError("eigenvalue " + std::to_string(lambda) +
                              " below the positive-semidefinite floor");
    if (lambda < 0.0) lambda = 0.0;
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h < 0.0 ? 0.0 : h;
}

double shannon_entropy(const RealVector& p) {
  if (p.size() == 0) throw InvalidStateError("empty probability vector");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < tol::psd_floor)
      throw InvalidStateError("negative probability " + std::to_string(p[i]));
    sum += p[i] < 0.0 ? 0.0 : p[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidStateError("probabilities sum to " + std::to_string(sum));
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
  return h < 0.0 ? 0.0 : h;
}

SchmidtForm schmidt_decompose(const PureState& psi) {
  require_normalized(psi);
  ComplexMatrix m(psi.dim_a, psi.dim_b);
  for (Eigen::Index a = 0; a < psi.dim_a; ++a)
    for (Eigen::Index b = 0; b < psi.dim_b; ++b)
      m(a, b) = psi.amplitudes[a * psi.dim_b + b];
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtForm out;
  out.coefficients = svd.singularValues();  // nonincreasing
  out.basis_a = {svd.matrixU()};
  // m = U S V^dagger, so the Bob vectors are the conjugated columns of V
  out.basis_b = {svd.matrixV().conjugate()};
  return out;
}

bool is_cc_in_basis(const BipartiteState& s, const LocalBasis& basis_a,
                    const LocalBasis& basis_b) {
  require_valid(s);
  if (basis_a.dim() != s.dim_a || basis_b.dim() != s.dim_b)
    throw DimensionError("basis dimensions do not match the state split");
  require_unitary(basis_a.u);
  require_unitary(basis_b.u);
  const ComplexMatrix w = tensor_product(basis_a.u, basis_b.u);
  const ComplexMatrix t = w.adjoint() * s.rho * w;
  double off = 0.0;
  for (Eigen::Index r = 0; r < t.rows(); ++r)
    for (Eigen::Index c = 0; c < t.cols(); ++c)
      if (r != c) off = std::max(off, std::abs(t(r, c)));
  return off <= tol::structure;
}

BipartiteState to_density(const PureState& psi) {
  require_normalized(psi);
  BipartiteState out;
  out.dim_a = psi.dim_a;
  out.dim_b = psi.dim_b;
  out.rho = psi.amplitudes * psi.amplitudes.adjoint();
  return out;
}

BipartiteState swap_parties(const BipartiteState& s) {
  require_valid(s);
  BipartiteState out;
  out.dim_a = s.dim_b;
  out.dim_b = s.dim_a;
  out.rho = ComplexMatrix::Zero(s.dim(), s.dim());
  for (Eigen::Index a = 0; a < s.dim_a; ++a)
    for (Eigen::Index b = 0; b < s.dim_b; ++b)
      for (Eigen::Index a2 = 0; a2 < s.dim_a; ++a2)
        for (Eigen::Index b2 = 0; b2 < s.dim_b; ++b2)
          out.rho(b * s.dim_a + a, b2 * s.dim_a + a2) =
              s.rho(a * s.dim_b + b, a2 * s.dim_b + b2);
  return out;
}

BipartiteState tensor_bipartite(const BipartiteState& x, const BipartiteState& y) {
  require_valid(x);
  require_valid(y);
  const Eigen::Index da = x.dim_a * y.dim_a;
  const Eigen::Index db = x.dim_b * y.dim_b;
  // kron leaves the index as ((a1 b1), (a2 b2)); regroup to ((a1 a2), (b1 b2))
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(da * db));
  for (Eigen::Index a1 = 0; a1 < x.dim_a; ++a1)
    for (Eigen::Index b1 = 0; b1 < x.dim_b; ++b1)
      for (Eigen::Index a2 = 0; a2 < y.dim_a; ++a2)
        for (Eigen::Index b2 = 0; b2 < y.dim_b; ++b2) {
          const Eigen::Index from = (a1 * x.dim_b + b1) * y.dim() + a2 * y.dim_b + b2;
          const Eigen::Index to = (a1 * y.dim_a + a2) * db + b1 * y.dim_b + b2;
          perm[static_cast<std::size_t>(from)] = to;
        }
  const ComplexMatrix kron = tensor_product(x.rho, y.rho);
  BipartiteState out;
  out.dim_a = da;
  out.dim_b = db;
  out.rho = ComplexMatrix::Zero(da * db, da * db);
  for (Eigen::Index r = 0; r < kron.rows(); ++r)
    for (Eigen::Index c = 0; c < kron.cols(); ++c)
      out.rho(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]) =
          kron(r, c);
  return out;
}

void require_valid(const BipartiteState& s) {
  if (s.dim_a < 1 || s.dim_b < 1) throw DimensionError("subsystem dimensions must be positive");
  if (s.rho.rows() != s.dim() || s.rho.cols() != s.dim())
    throw DimensionError("density matrix size does not match the subsystem dimensions");
  if (max_abs(s.rho - s.rho.adjoint()) > tol::hermitian)
    throw InvalidStateError("density matrix is not Hermitian within tolerance");
  const Complex tr = s.rho.trace();
  if (std::abs(tr.real() - 1.0) > tol::trace || std::abs(tr.imag()) > tol::trace)
    throw InvalidStateError("density matrix trace differs from one");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min < tol::psd_floor)
    throw InvalidStateError("density matrix has eigenvalue " + std::to_string(lambda_min));
}

void require_normalized(const PureState& psi) {
  if (psi.dim_a < 1 || psi.dim_b < 1)
    throw DimensionError("subsystem dimensions must be positive");
  if (psi.amplitudes.size() != psi.dim())
    throw DimensionError("amplitude count does not match the subsystem dimensions");
  if (std::abs(psi.amplitudes.squaredNorm() - 1.0) > tol::hermitian)
    throw InvalidStateError("pure state is not normalized");
}

}  // namespace workdeficit
