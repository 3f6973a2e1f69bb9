#include "workdeficit/basis.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace workdeficit {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.size() == 0 || u.rows() != u.cols()) return false;
  const ComplexMatrix gram =
      u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols());
  return max_abs(gram) <= tolerance;
}

void require_unitary(const ComplexMatrix& u, double tolerance) {
  if (!is_unitary(u, tolerance)) throw SpecError("matrix is not unitary within tolerance");
}

int angle_count(Eigen::Index dim) {
  if (dim < 2) throw DimensionError("basis dimension must be at least 2");
  return dim == 2 ? 2 : static_cast<int>(dim * dim);
}

LocalBasis computational_basis(Eigen::Index dim) {
  if (dim < 1) throw DimensionError("basis dimension must be positive");
  return {ComplexMatrix::Identity(dim, dim)};
}

LocalBasis basis_from_angles(const BasisAngles& angles) {
  const Eigen::Index d = angles.dim;
  if (angles.params.size() != angle_count(d))
    throw SpecError("expected " + std::to_string(angle_count(d)) +
                    " basis parameters for dimension " + std::to_string(d));
  if (d == 2) {
    const double half = angles.params[0] / 2.0;
    const Complex eip = std::polar(1.0, angles.params[1]);
    ComplexMatrix u(2, 2);
    u(0, 0) = std::cos(half);
    u(1, 0) = eip * std::sin(half);
    u(0, 1) = -std::conj(eip) * std::sin(half);
    u(1, 1) = std::cos(half);
    return {u};
  }
  ComplexMatrix h(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) h(i, i) = angles.params[k++];
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const Complex z(angles.params[k], angles.params[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("generator eigendecomposition failed");
  ComplexVector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) phases[i] = std::polar(1.0, es.eigenvalues()[i]);
  ComplexMatrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return {u};
}

BasisAngles angles_from_basis(const LocalBasis& basis) {
  if (basis.dim() != 2) throw DimensionError("angle extraction needs a 2-d basis");
  require_unitary(basis.u);
  const Complex u00 = basis.u(0, 0);
  const Complex u10 = basis.u(1, 0);
  const double theta = 2.0 * std::atan2(std::abs(u10), std::abs(u00));
  double phi = std::arg(u10 * std::conj(u00));
  if (phi < 0) phi += kTwoPi;
  BasisAngles out;
  out.dim = 2;
  out.params = RealVector(2);
  out.params << theta, phi;
  return out;
}

BasisAngles normalized_angles(const BasisAngles& angles) {
  if (angles.dim != 2) return angles;
  if (angles.params.size() != 2) throw SpecError("expected 2 basis parameters");
  double theta = std::fmod(angles.params[0], kTwoPi);
  double phi = angles.params[1];
  if (theta < 0) theta += kTwoPi;
  if (theta > kPi) {
    // (2*pi - theta, phi + pi) points at the same Bloch axis
    theta = kTwoPi - theta;
    phi += kPi;
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  BasisAngles out;
  out.dim = 2;
  out.params = RealVector(2);
  out.params << theta, phi;
  return out;
}

}  // namespace workdeficit
