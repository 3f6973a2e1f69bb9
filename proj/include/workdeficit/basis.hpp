#pragma once

#include "workdeficit/types.hpp"

namespace workdeficit {

// Orthonormal basis of one subsystem; the columns of u are the basis vectors.
// Rank-1 dephasing in this basis uses the projectors u_i u_i^dagger.
struct LocalBasis {
  ComplexMatrix u;

  Eigen::Index dim() const { return u.cols(); }
};

// Smooth parameterization of a LocalBasis for derivative-free search.
// dim 2: Bloch angles (theta, phi) with theta in [0, pi], phi in [0, 2*pi).
// dim d > 2: the d^2 real entries of a Hermitian generator H, mapped through
// U = exp(iH). Column phases and ordering are irrelevant to dephasing, so
// both maps are surjective onto the bases that matter.
struct BasisAngles {
  Eigen::Index dim = 2;
  RealVector params;
};

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::unitary);
void require_unitary(const ComplexMatrix& u, double tolerance = tol::unitary);

int angle_count(Eigen::Index dim);  // 2 for qubits, dim^2 otherwise

LocalBasis computational_basis(Eigen::Index dim);
LocalBasis basis_from_angles(const BasisAngles& angles);

// Bloch angles of a 2-d basis; inverts basis_from_angles up to the column
// phases and ordering that dephasing ignores.
BasisAngles angles_from_basis(const LocalBasis& basis);

// Fold dim-2 angles into theta in [0, pi], phi in [0, 2*pi) without moving
// the projector pair. Parameters for dim > 2 pass through unchanged.
BasisAngles normalized_angles(const BasisAngles& angles);

}  // namespace workdeficit
