#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "workdeficit/basis.hpp"
#include "workdeficit/qstate.hpp"

namespace workdeficit {

struct AddAncillaStep {
  Party party = Party::Alice;
};

struct LocalUnitaryStep {
  Party party = Party::Alice;
  std::vector<int> qubits;  // u's qubit j acts on qubits[j]; all held by party
  ComplexMatrix u;
  std::string builtin;      // "cnot" when u came from the named gate, else empty
};

// Atomic communication step: the qubit is dephased in the given basis and its
// holder becomes `to`.
struct DephaseSendStep {
  int qubit = 0;
  BasisAngles basis;  // dim 2
  Party to = Party::Bob;
};

using ProtocolStep = std::variant<AddAncillaStep, LocalUnitaryStep, DephaseSendStep>;

// Joint state over all live qubits plus per-qubit holder labels. Qubit 0 is
// the most significant bit of the joint index; ancillas are appended at the
// end. A ledger is a value: apply returns a new one.
struct ProtocolLedger {
  ComplexMatrix joint;
  std::vector<Party> holders;
  int n_original = 0;

  int qubit_count() const { return static_cast<int>(holders.size()); }
  int k() const { return qubit_count() - n_original; }
};

struct WorkResult {
  double w_local = 0.0;  // bits
  double s_a_final = 0.0;
  double s_b_final = 0.0;
  int k = 0;
};

ProtocolLedger ledger_init(const BipartiteState& s);
ProtocolLedger ledger_init(const BipartiteState& s, const std::vector<Party>& holders);
ProtocolLedger ledger_apply(const ProtocolLedger& l, const ProtocolStep& step);
WorkResult ledger_finalize(const ProtocolLedger& l);

// Scripted protocols. cc_measure_send is the six-step measure/copy/send/reset
// routine for one qubit per side; schmidt_dephase and maxcorr_dephase dephase
// all of Alice's qubits (in the supplied basis / computational basis) and send
// them to Bob. Names accept '-' or '_' separators.
std::vector<ProtocolStep> builtin_script(
    const std::string& name, int alice_qubits = 1,
    const std::optional<LocalBasis>& alice_basis = std::nullopt);

// Reduction of a density matrix over 2^total_qubits onto the kept qubits
// (ascending order). An empty keep list yields the 1x1 trace.
ComplexMatrix reduce_qubits(const ComplexMatrix& joint, const std::vector<int>& keep,
                            int total_qubits);

}  // namespace workdeficit
