#ifndef HUMBERT_NORMAL_FORMS_HPP
#define HUMBERT_NORMAL_FORMS_HPP

#include "humbert/matrix.hpp"
#include "humbert/polarization.hpp"

namespace humbert {

struct SmithResult {
    IntMat S;  // diagonal, s_1 | s_2 | ..., entries >= 0
    IntMat U;  // unimodular, rows
    IntMat V;  // unimodular, cols;  S == U * M * V
    int rank;  // number of nonzero diagonal entries
};

// Smith normal form with transformation matrices. Works for any shape.
// Pivot rule: smallest nonzero absolute value, ties broken by lowest
// row-major index, so the run is deterministic.
SmithResult smith_normal_form(const IntMat& M);

// Column-style Hermite normal form H = M * V with V unimodular: pivots go
// strictly down as columns go right, pivots positive, entries left of a
// pivot in its row reduced into [0, pivot). Zero columns are dropped, so
// the result is a canonical basis of the column lattice of M.
IntMat column_hermite_basis(const IntMat& M);

// Z-basis of {v integer : M v = 0} for a rational matrix M, in canonical
// column Hermite form. The solution lattice of a rational system is
// saturated by construction.
IntMat hermite_saturated_kernel(const RatMat& M);

struct SymplecticBasis {
    IntMat U;              // unimodular, U^T E U = [[0, D], [-D, 0]]
    PolarizationType type; // D = diag(d_1..d_k), divisor chain
};

// Frobenius-style symplectic basis of a nondegenerate alternating integer
// form: skew Gaussian reduction on the smallest pairing, then divisor-chain
// repair by 2x2 base changes on adjacent hyperbolic pairs.
SymplecticBasis symplectic_divisor_basis(const IntMat& E);

// Exact Sylvester criterion on a symmetric rational matrix.
bool is_positive_definite(const RatMat& S);

} // namespace humbert

#endif
