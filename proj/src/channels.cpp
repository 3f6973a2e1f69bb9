#include "workdeficit/channels.hpp"

namespace workdeficit {

BipartiteState dephase_local(const BipartiteState& s, Party party, const LocalBasis& basis) {
  const Eigen::Index dp = party == Party::Alice ? s.dim_a : s.dim_b;
  if (basis.dim() != dp)
    throw DimensionError("dephasing basis dimension " + std::to_string(basis.dim()) +
                         " does not match subsystem dimension " + std::to_string(dp));
  require_unitary(basis.u);
  const Eigen::Index da = s.dim_a, db = s.dim_b;
  const ComplexMatrix w =
      party == Party::Alice
          ? tensor_product(basis.u, ComplexMatrix::Identity(db, db))
          : tensor_product(ComplexMatrix::Identity(da, da), basis.u);
  ComplexMatrix t = w.adjoint() * s.rho * w;
  // kill coherences between different basis labels of the dephased party
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    const Eigen::Index lr = party == Party::Alice ? r / db : r % db;
    for (Eigen::Index c = 0; c < t.cols(); ++c) {
      const Eigen::Index lc = party == Party::Alice ? c / db : c % db;
      if (lr != lc) t(r, c) = Complex{0.0, 0.0};
    }
  }
  BipartiteState out;
  out.dim_a = da;
  out.dim_b = db;
  out.rho = w * t * w.adjoint();
  return out;
}

BipartiteState apply_local_unitary(const BipartiteState& s, Party party,
                                   const ComplexMatrix& u) {
  const Eigen::Index dp = party == Party::Alice ? s.dim_a : s.dim_b;
  if (u.rows() != dp || u.cols() != dp)
    throw DimensionError("unitary dimension does not match the subsystem");
  require_unitary(u);
  const ComplexMatrix w =
      party == Party::Alice
          ? tensor_product(u, ComplexMatrix::Identity(s.dim_b, s.dim_b))
          : tensor_product(ComplexMatrix::Identity(s.dim_a, s.dim_a), u);
  BipartiteState out;
  out.dim_a = s.dim_a;
  out.dim_b = s.dim_b;
  out.rho = w * s.rho * w.adjoint();
  return out;
}

BipartiteState add_ancilla(const BipartiteState& s, Party party, Eigen::Index anc_dim) {
  if (anc_dim < 2) throw SpecError("ancilla dimension must be at least 2");
  const Eigen::Index da = s.dim_a, db = s.dim_b;
  BipartiteState out;
  out.dim_a = party == Party::Alice ? da * anc_dim : da;
  out.dim_b = party == Party::Bob ? db * anc_dim : db;
  out.rho = ComplexMatrix::Zero(out.dim(), out.dim());
  // ancilla index appended as the party's least significant factor, in |0>
  const auto map = [&](Eigen::Index j) {
    const Eigen::Index a = j / db, b = j % db;
    return party == Party::Alice ? (a * anc_dim) * db + b : a * (db * anc_dim) + b * anc_dim;
  };
  for (Eigen::Index r = 0; r < s.dim(); ++r)
    for (Eigen::Index c = 0; c < s.dim(); ++c)
      out.rho(map(r), map(c)) = s.rho(r, c);
  return out;
}

ComplexMatrix cnot(int control, int target, int total_qubits) {
  if (total_qubits < 1 || total_qubits > 20)
    throw DimensionError("unsupported qubit count");
  if (control == target) throw SpecError("cnot control and target must differ");
  if (control < 0 || target < 0 || control >= total_qubits || target >= total_qubits)
    throw SpecError("cnot qubit index out of range");
  const Eigen::Index dim = Eigen::Index{1} << total_qubits;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const Eigen::Index cbit = Eigen::Index{1} << (total_qubits - 1 - control);
  const Eigen::Index tbit = Eigen::Index{1} << (total_qubits - 1 - target);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const Eigen::Index y = (x & cbit) ? (x ^ tbit) : x;
    m(y, x) = Complex{1.0, 0.0};
  }
  return m;
}

}  // namespace workdeficit
