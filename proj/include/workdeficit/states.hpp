#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "workdeficit/qstate.hpp"

namespace workdeficit {

enum class Family {
  MaxEntangled,           // sum_i |ii> / sqrt(d)
  CcPair,                 // (|00><00| + |11><11|) / 2
  ClassicallyCorrelated,  // sum_ij p_ij |i_A j_B><i_A j_B| in the given bases
  MaxCorrelated,          // sum_ij sigma_ij |ii><jj|
  PhiMixture,             // p Phi+ + (1-p) Phi-
  RandomMixed,            // seeded Ginibre at a chosen rank
  RandomPure,             // seeded Haar-like pure state
};

struct FamilySpec {
  Family family = Family::MaxEntangled;
  Eigen::Index dim_a = 2;
  Eigen::Index dim_b = 2;
  RealMatrix prob_table;               // ClassicallyCorrelated
  ComplexMatrix sigma;                 // MaxCorrelated coefficient matrix
  double p = 0.5;                      // PhiMixture weight
  Eigen::Index rank = 0;               // RandomMixed; 0 means full
  std::uint64_t seed = 0;
  std::optional<LocalBasis> basis_a;   // ClassicallyCorrelated bases
  std::optional<LocalBasis> basis_b;   // (default computational)
};

using GeneratedState = std::variant<BipartiteState, PureState>;

GeneratedState gen(const FamilySpec& spec);
BipartiteState gen_density(const FamilySpec& spec);  // pure families projected

struct ValidationReport {
  double hermitian_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool hermitian_ok = false;
  bool trace_ok = false;
  bool psd_ok = false;

  bool pass() const { return hermitian_ok && trace_ok && psd_ok; }
};

ValidationReport validate(const BipartiteState& s);

std::optional<Family> family_from_name(const std::string& name);  // kebab or snake
std::string family_name(Family f);

}  // namespace workdeficit
