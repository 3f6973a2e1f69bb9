#pragma once

#include "workdeficit/basis.hpp"
#include "workdeficit/qstate.hpp"

namespace workdeficit {

// Complete rank-1 dephasing of one party: sum_i (P_i x I) rho (P_i x I) with
// P_i the projectors onto the basis columns. Trace preserving.
BipartiteState dephase_local(const BipartiteState& s, Party party, const LocalBasis& basis);

BipartiteState apply_local_unitary(const BipartiteState& s, Party party,
                                   const ComplexMatrix& u);

// Tensors an ancilla in |0><0| onto the given party's subsystem (appended as
// that party's least significant factor). Leaves total entropy unchanged.
BipartiteState add_ancilla(const BipartiteState& s, Party party, Eigen::Index anc_dim);

// Permutation unitary on 2^total_qubits flipping `target` when `control` is
// set. Qubit 0 is the most significant bit of the joint index.
ComplexMatrix cnot(int control, int target, int total_qubits);

}  // namespace workdeficit
