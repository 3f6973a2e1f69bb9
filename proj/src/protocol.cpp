#include "workdeficit/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "workdeficit/channels.hpp"

namespace workdeficit {

namespace {

int bit_of(Eigen::Index x, int q, int n) {
  return static_cast<int>((x >> (n - 1 - q)) & 1);
}

// Scatter the k bits of sub (MSB first) onto the listed qubit positions.
Eigen::Index scatter(Eigen::Index sub, const std::vector<int>& qubits, int n) {
  Eigen::Index x = 0;
  const int k = static_cast<int>(qubits.size());
  for (int j = 0; j < k; ++j)
    if ((sub >> (k - 1 - j)) & 1) x |= Eigen::Index{1} << (n - 1 - qubits[j]);
  return x;
}

ComplexMatrix embed_unitary(const ComplexMatrix& u, const std::vector<int>& qubits, int n) {
  const int k = static_cast<int>(qubits.size());
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index sub_dim = Eigen::Index{1} << k;
  const Eigen::Index rest_dim = Eigen::Index{1} << static_cast<int>(rest.size());
  ComplexMatrix w = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index o = 0; o < rest_dim; ++o) {
    const Eigen::Index base = scatter(o, rest, n);
    for (Eigen::Index i = 0; i < sub_dim; ++i) {
      const Eigen::Index col = base | scatter(i, qubits, n);
      for (Eigen::Index i2 = 0; i2 < sub_dim; ++i2)
        w(base | scatter(i2, qubits, n), col) = u(i2, i);
    }
  }
  return w;
}

ComplexMatrix dephase_qubit(const ComplexMatrix& joint, int q, const LocalBasis& basis,
                            int n) {
  const ComplexMatrix v = embed_unitary(basis.u, {q}, n);
  ComplexMatrix t = v.adjoint() * joint * v;
  for (Eigen::Index r = 0; r < t.rows(); ++r)
    for (Eigen::Index c = 0; c < t.cols(); ++c)
      if (bit_of(r, q, n) != bit_of(c, q, n)) t(r, c) = Complex{0.0, 0.0};
  return v * t * v.adjoint();
}

std::string canonical_name(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

}  // namespace

ComplexMatrix reduce_qubits(const ComplexMatrix& joint, const std::vector<int>& keep,
                            int total_qubits) {
  std::vector<int> drop;
  for (int q = 0; q < total_qubits; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) drop.push_back(q);
  const Eigen::Index out_dim = Eigen::Index{1} << static_cast<int>(keep.size());
  const Eigen::Index drop_dim = Eigen::Index{1} << static_cast<int>(drop.size());
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index m = 0; m < out_dim; ++m) {
    const Eigen::Index rm = scatter(m, keep, total_qubits);
    for (Eigen::Index m2 = 0; m2 < out_dim; ++m2) {
      const Eigen::Index cm = scatter(m2, keep, total_qubits);
      Complex acc{0.0, 0.0};
      for (Eigen::Index d = 0; d < drop_dim; ++d) {
        const Eigen::Index off = scatter(d, drop, total_qubits);
        acc += joint(rm | off, cm | off);
      }
      out(m, m2) = acc;
    }
  }
  return out;
}

ProtocolLedger ledger_init(const BipartiteState& s) {
  const int na = log2_exact(s.dim_a);
  const int nb = log2_exact(s.dim_b);
  std::vector<Party> holders(static_cast<std::size_t>(na), Party::Alice);
  holders.insert(holders.end(), static_cast<std::size_t>(nb), Party::Bob);
  return ledger_init(s, holders);
}

ProtocolLedger ledger_init(const BipartiteState& s, const std::vector<Party>& holders) {
  require_valid(s);
  const int na = log2_exact(s.dim_a);
  const int nb = log2_exact(s.dim_b);
  if (static_cast<int>(holders.size()) != na + nb)
    throw SpecError("holder count does not match the qubit count");
  for (int q = 0; q < na + nb; ++q) {
    const Party expect = q < na ? Party::Alice : Party::Bob;
    if (holders[static_cast<std::size_t>(q)] != expect)
      throw SpecError("holders are inconsistent with the Alice-major (A,B) split");
  }
  ProtocolLedger l;
  l.joint = s.rho;
  l.holders = holders;
  l.n_original = na + nb;
  return l;
}

ProtocolLedger ledger_apply(const ProtocolLedger& l, const ProtocolStep& step) {
  const int n = l.qubit_count();
  ProtocolLedger out = l;
  if (const auto* add = std::get_if<AddAncillaStep>(&step)) {
    ComplexMatrix e00 = ComplexMatrix::Zero(2, 2);
    e00(0, 0) = Complex{1.0, 0.0};
    out.joint = tensor_product(l.joint, e00);
    out.holders.push_back(add->party);
    return out;
  }
  if (const auto* lu = std::get_if<LocalUnitaryStep>(&step)) {
    if (lu->qubits.empty()) throw SpecError("local unitary lists no qubits");
    std::set<int> distinct(lu->qubits.begin(), lu->qubits.end());
    if (distinct.size() != lu->qubits.size()) throw SpecError("repeated qubit index");
    for (int q : lu->qubits) {
      if (q < 0 || q >= n) throw SpecError("qubit index out of range");
      if (l.holders[static_cast<std::size_t>(q)] != lu->party)
        throw LocalityError("local unitary touches a qubit held by the other party");
    }
    const Eigen::Index want = Eigen::Index{1} << static_cast<int>(lu->qubits.size());
    if (lu->u.rows() != want || lu->u.cols() != want)
      throw DimensionError("unitary size does not match the listed qubits");
    require_unitary(lu->u);
    const ComplexMatrix w = embed_unitary(lu->u, lu->qubits, n);
    out.joint = w * l.joint * w.adjoint();
    return out;
  }
  const auto& ds = std::get<DephaseSendStep>(step);
  if (ds.qubit < 0 || ds.qubit >= n) throw SpecError("qubit index out of range");
  if (ds.basis.dim != 2) throw DimensionError("dephase-send basis must be 2-dimensional");
  out.joint = dephase_qubit(l.joint, ds.qubit, basis_from_angles(ds.basis), n);
  out.holders[static_cast<std::size_t>(ds.qubit)] = ds.to;
  return out;
}

WorkResult ledger_finalize(const ProtocolLedger& l) {
  const int n = l.qubit_count();
  std::vector<int> a_qubits, b_qubits;
  for (int q = 0; q < n; ++q)
    (l.holders[static_cast<std::size_t>(q)] == Party::Alice ? a_qubits : b_qubits)
        .push_back(q);
  const double s_a = von_neumann_entropy(reduce_qubits(l.joint, a_qubits, n));
  const double s_b = von_neumann_entropy(reduce_qubits(l.joint, b_qubits, n));
  const double w_explicit = static_cast<double>(a_qubits.size()) - s_a +
                            static_cast<double>(b_qubits.size()) - s_b -
                            static_cast<double>(l.k());
  const double w_reduced = static_cast<double>(l.n_original) - s_a - s_b;
  if (std::abs(w_explicit - w_reduced) > 1e-9)
    throw std::logic_error("work accounting forms disagree");
  WorkResult r;
  r.w_local = w_explicit;
  r.s_a_final = s_a;
  r.s_b_final = s_b;
  r.k = l.k();
  return r;
}

std::vector<ProtocolStep> builtin_script(const std::string& name, int alice_qubits,
                                         const std::optional<LocalBasis>& alice_basis) {
  const std::string key = canonical_name(name);
  BasisAngles computational;
  computational.dim = 2;
  computational.params = RealVector::Zero(2);

  if (key == "cc_measure_send") {
    if (alice_qubits != 1)
      throw SpecError("cc_measure_send is defined for one qubit per side");
    const ComplexMatrix gate = cnot(0, 1, 2);
    std::vector<ProtocolStep> steps;
    steps.push_back(AddAncillaStep{Party::Alice});
    steps.push_back(LocalUnitaryStep{Party::Alice, {0, 2}, gate, "cnot"});
    steps.push_back(DephaseSendStep{2, computational, Party::Bob});
    steps.push_back(LocalUnitaryStep{Party::Bob, {2, 1}, gate, "cnot"});
    steps.push_back(DephaseSendStep{2, computational, Party::Alice});
    steps.push_back(LocalUnitaryStep{Party::Alice, {0, 2}, gate, "cnot"});
    return steps;
  }

  if (key == "schmidt_dephase" || key == "maxcorr_dephase") {
    if (alice_qubits < 1) throw SpecError("alice_qubits must be at least 1");
    std::vector<ProtocolStep> steps;
    if (key == "schmidt_dephase" && alice_basis.has_value()) {
      const Eigen::Index want = Eigen::Index{1} << alice_qubits;
      if (alice_basis->dim() != want)
        throw DimensionError("basis does not span Alice's subsystem");
      if (alice_qubits == 1) {
        steps.push_back(DephaseSendStep{0, angles_from_basis(*alice_basis), Party::Bob});
        return steps;
      }
      // rotate into the basis, then product dephasing equals dephasing in it
      std::vector<int> qubits(static_cast<std::size_t>(alice_qubits));
      for (int q = 0; q < alice_qubits; ++q) qubits[static_cast<std::size_t>(q)] = q;
      steps.push_back(
          LocalUnitaryStep{Party::Alice, qubits, alice_basis->u.adjoint(), ""});
    }
    for (int q = 0; q < alice_qubits; ++q)
      steps.push_back(DephaseSendStep{q, computational, Party::Bob});
    return steps;
  }

  throw SpecError("unknown builtin script '" + name + "'");
}

}  // namespace workdeficit
