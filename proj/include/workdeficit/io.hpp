#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "workdeficit/protocol.hpp"
#include "workdeficit/qstate.hpp"

namespace workdeficit {

inline constexpr const char* kToolName = "workdeficit";
inline constexpr const char* kToolVersion = "0.1.0";

// Malformed or schema-violating input files (CLI exit 2).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// StateFile schema: {"dims": [dim_a, dim_b], "matrix": [[[re, im], ...], ...]}
// with the matrix row-major over the Alice-major joint index a * dim_b + b.
nlohmann::json state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const nlohmann::json& j);  // validates the state

BipartiteState load_state_file(const std::string& path);
void save_state_file(const BipartiteState& s, const std::string& path);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Protocol script schema: ordered array of
//   {"op": "add-ancilla" | "local-unitary" | "dephase-send",
//    "party": "A" | "B" | null, "qubits": [...] | null,
//    "basis": {"theta": t, "phi": p} | null, "to": "A" | "B" | null,
//    "unitary": matrix | "cnot" | null}
nlohmann::json script_to_json(const std::vector<ProtocolStep>& steps);
std::vector<ProtocolStep> script_from_json(const nlohmann::json& j);
std::vector<ProtocolStep> load_script_file(const std::string& path);

std::string read_text_file(const std::string& path);   // throws SchemaError
void write_text_file(const std::string& path, const std::string& content);

// Canonical serialization used for every file and report this tool emits.
std::string dump_json(const nlohmann::json& j);

}  // namespace workdeficit
