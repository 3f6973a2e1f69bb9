#include "workdeficit/io.hpp"

#include <fstream>
#include <sstream>

#include "workdeficit/channels.hpp"

namespace workdeficit {

namespace {

using nlohmann::json;

Party party_from_json(const json& j, const char* field) {
  if (!j.is_string()) throw SchemaError(std::string(field) + " must be \"A\" or \"B\"");
  const std::string v = j.get<std::string>();
  if (v == "A") return Party::Alice;
  if (v == "B") return Party::Bob;
  throw SchemaError(std::string(field) + " must be \"A\" or \"B\"");
}

double number_from_json(const json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex entry_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("matrix entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw SchemaError("matrix rows must be arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw SchemaError("matrix rows must all have the same length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json state_to_json(const BipartiteState& s) {
  json j;
  j["dims"] = json::array({s.dim_a, s.dim_b});
  j["matrix"] = matrix_to_json(s.rho);
  return j;
}

BipartiteState state_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("state file must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2)
    throw SchemaError("state file needs \"dims\": [dim_a, dim_b]");
  for (const auto& d : j["dims"])
    if (!d.is_number_integer() || d.get<Eigen::Index>() < 1)
      throw SchemaError("dims must be positive integers");
  if (!j.contains("matrix")) throw SchemaError("state file needs a \"matrix\" field");
  BipartiteState s;
  s.dim_a = j["dims"][0].get<Eigen::Index>();
  s.dim_b = j["dims"][1].get<Eigen::Index>();
  s.rho = matrix_from_json(j["matrix"]);
  if (s.rho.rows() != s.dim() || s.rho.cols() != s.dim())
    throw SchemaError("matrix size does not match dims");
  require_valid(s);
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << content;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

BipartiteState load_state_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw SchemaError("cannot parse '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const BipartiteState& s, const std::string& path) {
  write_text_file(path, dump_json(state_to_json(s)));
}

json script_to_json(const std::vector<ProtocolStep>& steps) {
  json out = json::array();
  for (const ProtocolStep& step : steps) {
    json rec{{"op", nullptr},    {"party", nullptr}, {"qubits", nullptr},
             {"basis", nullptr}, {"to", nullptr},    {"unitary", nullptr}};
    if (const auto* add = std::get_if<AddAncillaStep>(&step)) {
      rec["op"] = "add-ancilla";
      rec["party"] = std::string(1, party_char(add->party));
    } else if (const auto* lu = std::get_if<LocalUnitaryStep>(&step)) {
      rec["op"] = "local-unitary";
      rec["party"] = std::string(1, party_char(lu->party));
      rec["qubits"] = lu->qubits;
      if (lu->builtin.empty())
        rec["unitary"] = matrix_to_json(lu->u);
      else
        rec["unitary"] = lu->builtin;
    } else {
      const auto& ds = std::get<DephaseSendStep>(step);
      rec["op"] = "dephase-send";
      rec["qubits"] = json::array({ds.qubit});
      rec["basis"] = json{{"theta", ds.basis.params[0]}, {"phi", ds.basis.params[1]}};
      rec["to"] = std::string(1, party_char(ds.to));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ProtocolStep> script_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("script must be a JSON array of steps");
  std::vector<ProtocolStep> steps;
  for (const json& rec : j) {
    if (!rec.is_object() || !rec.contains("op") || !rec["op"].is_string())
      throw SchemaError("each step needs an \"op\" string");
    const std::string op = rec["op"].get<std::string>();
    const auto field = [&rec](const char* name) -> const json& {
      static const json null_value;
      return rec.contains(name) ? rec[name] : null_value;
    };
    if (op == "add-ancilla") {
      steps.push_back(AddAncillaStep{party_from_json(field("party"), "party")});
    } else if (op == "local-unitary") {
      LocalUnitaryStep lu;
      lu.party = party_from_json(field("party"), "party");
      const json& qubits = field("qubits");
      if (!qubits.is_array() || qubits.empty())
        throw SchemaError("local-unitary needs a nonempty \"qubits\" array");
      for (const auto& q : qubits) {
        if (!q.is_number_integer()) throw SchemaError("qubit indices must be integers");
        lu.qubits.push_back(q.get<int>());
      }
      const json& u = field("unitary");
      if (u.is_string()) {
        if (u.get<std::string>() != "cnot")
          throw SchemaError("unknown builtin unitary '" + u.get<std::string>() + "'");
        if (lu.qubits.size() != 2)
          throw SchemaError("cnot needs exactly two qubits (control, target)");
        lu.u = cnot(0, 1, 2);
        lu.builtin = "cnot";
      } else if (u.is_array()) {
        lu.u = matrix_from_json(u);
      } else {
        throw SchemaError("local-unitary needs a \"unitary\" matrix or builtin name");
      }
      steps.push_back(std::move(lu));
    } else if (op == "dephase-send") {
      DephaseSendStep ds;
      const json& qubits = field("qubits");
      if (!qubits.is_array() || qubits.size() != 1 || !qubits[0].is_number_integer())
        throw SchemaError("dephase-send needs \"qubits\": [index]");
      ds.qubit = qubits[0].get<int>();
      const json& basis = field("basis");
      if (!basis.is_object())
        throw SchemaError("dephase-send needs \"basis\": {\"theta\", \"phi\"}");
      ds.basis.dim = 2;
      ds.basis.params = RealVector(2);
      ds.basis.params << number_from_json(basis.contains("theta") ? basis["theta"] : json(),
                                          "basis.theta"),
          number_from_json(basis.contains("phi") ? basis["phi"] : json(), "basis.phi");
      ds.to = party_from_json(field("to"), "to");
      steps.push_back(std::move(ds));
    } else {
      throw SchemaError("unknown op '" + op + "'");
    }
  }
  return steps;
}

std::vector<ProtocolStep> load_script_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw SchemaError("cannot parse '" + path + "': " + e.what());
  }
  return script_from_json(j);
}

}  // namespace workdeficit
