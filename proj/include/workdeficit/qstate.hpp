#pragma once

#include "workdeficit/basis.hpp"
#include "workdeficit/types.hpp"

namespace workdeficit {

// Bipartite density matrix with an (Alice, Bob) split. The joint index is
// Alice-major: |a b> lives at row a * dim_b + b.
struct BipartiteState {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  ComplexMatrix rho;

  Eigen::Index dim() const { return dim_a * dim_b; }
};

struct PureState {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  ComplexVector amplitudes;  // Alice-major, length dim_a * dim_b

  Eigen::Index dim() const { return dim_a * dim_b; }
};

// psi = sum_i a_i |e_i>|f_i> with a_i >= 0 sorted nonincreasing.
struct SchmidtForm {
  RealVector coefficients;
  LocalBasis basis_a;
  LocalBasis basis_b;
};

struct HermitianEigen {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // columns, matching values
};

// Standard Kronecker product; the left factor carries the high index bits.
ComplexMatrix tensor_product(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix partial_trace(const BipartiteState& s, Party keep);

HermitianEigen eig_hermitian(const ComplexMatrix& m);
RealVector eigvals_hermitian(const ComplexMatrix& m);

// Both entropies are in bits. von_neumann_entropy demands a valid density
// matrix and clips eigenvalues in [psd_floor, 0) to zero.
double von_neumann_entropy(const ComplexMatrix& m);
double shannon_entropy(const RealVector& p);

SchmidtForm schmidt_decompose(const PureState& psi);

// True iff rho is diagonal in the product basis basis_a x basis_b, i.e. of
// the form sum_ij p_ij |i_A j_B><i_A j_B|.
bool is_cc_in_basis(const BipartiteState& s, const LocalBasis& basis_a,
                    const LocalBasis& basis_b);

BipartiteState to_density(const PureState& psi);
BipartiteState swap_parties(const BipartiteState& s);

// Joint state of two pairs with the Alice parts grouped first:
// index ((a1 a2), (b1 b2)).
BipartiteState tensor_bipartite(const BipartiteState& x, const BipartiteState& y);

void require_valid(const BipartiteState& s);      // throws InvalidStateError
void require_normalized(const PureState& psi);    // throws InvalidStateError

}  // namespace workdeficit
