#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace workdeficit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class Party { Alice, Bob };

inline Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }
inline char party_char(Party p) { return p == Party::Alice ? 'A' : 'B'; }

// Validation windows; they absorb floating-point drift from chained channel
// applications, not physical noise.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd_floor = -1e-9;  // smallest admissible eigenvalue
inline constexpr double unitary = 1e-9;
inline constexpr double structure = 1e-9;   // basis-diagonality / family checks
}  // namespace tol

// Bad generator, config, or script parameters (CLI exit 2).
struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix fails density-matrix validation (CLI exit 3).
struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension mismatch or unsupported size (CLI exit 4).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State lacks the structural form an operation requires (CLI exit 4).
struct FamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Protocol step touches qubits held by more than one party (CLI exit 4).
struct LocalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(Eigen::Index n) {
  if (!is_power_of_two(n))
    throw DimensionError("dimension " + std::to_string(n) + " is not a power of two");
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace workdeficit
