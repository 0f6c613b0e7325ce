#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric {

using VecZ = std::vector<Int>;
using MatZ = std::vector<VecZ>; // row major
using VecQ = std::vector<Rat>;
using MatQ = std::vector<VecQ>;

// Dense exact linear algebra on the small matrices this project sees
// (m <= 16 everywhere). Everything is deterministic: fixed pivot rules,
// no randomization.

MatZ mat_z_identity(int n);
MatZ mat_z_transpose(const MatZ& a);
VecZ mat_z_mul_vec(const MatZ& a, const VecZ& x);
MatZ mat_z_mul(const MatZ& a, const MatZ& b);
Int dot_z(const VecZ& a, const VecZ& b);
Int det_z(MatZ a);

MatQ mat_q_from_z(const MatZ& a);
VecQ vec_q_from_z(const VecZ& a);
Rat dot_q(const VecQ& a, const VecQ& b);

// Row-style Hermite normal form: returns H and unimodular U with U*a = H.
// Pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
    MatZ h;
    MatZ u;
    int rank = 0;
};
HnfResult hnf_rows(const MatZ& a);

// Basis of the saturated kernel lattice {x in Z^cols : a*x = 0}.
// Rows of the result are the basis vectors.
MatZ kernel_lattice(const MatZ& a);

// One integral solution of a*x = b, if any (a need not be square).
std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);

// gcd-normalize, first nonzero entry positive. Zero vector stays zero.
VecZ primitive_vector(VecZ v);

int rank_q(MatQ a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_q(MatQ& a);

// Affine solution set of a*x = b over Q: particular point + nullspace basis.
// Empty optional when inconsistent.
struct AffineSolution {
    VecQ particular;
    std::vector<VecQ> nullspace;
};
std::optional<AffineSolution> solve_q(const MatQ& a, const VecQ& b);

} // namespace toric

#endif
