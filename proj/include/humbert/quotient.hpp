#ifndef HUMBERT_QUOTIENT_HPP
#define HUMBERT_QUOTIENT_HPP

#include "humbert/finite_symplectic.hpp"
#include "humbert/torus.hpp"

namespace humbert {

// M x N with the product polarization, for M of type D and N of type D~.
// Lattice basis order is (Z(M) cols, Z(N) cols, diag(D) cols, diag(D~) cols).
struct ProductTorus {
    PolarizedTorus M, N;
    int g = 0;
    GaussMat period; // g x 2g
    IntMat gram;     // 2g x 2g
    DirectSumModule torsion; // K(H_M (x) H_N) with its two factors

    // rational lattice coordinates of the torsion lift: lambda_j lifts to
    // (1/d_j) * (j-th Z column), mu_j to the unit e_j
    RatMat lift(const FsElement& x) const; // 2g x 1
};

ProductTorus product(const PolarizedTorus& M, const PolarizedTorus& N);

struct QuotientResult {
    SiegelMatrix Z_prime;
    RatMat basis_change;          // new lattice basis in old coordinates, 2g x 2g
    PolarizationType induced_type;
    IntMat m_coords;              // M's lattice in the new basis, 2g x 2k
    IntMat n_coords;              // N's lattice in the new basis
};

// (M x N)/K for an allowed K: enlarges the lattice by the lifted
// generators, renormalizes a symplectic basis of the induced (integral)
// form, and validates principality and Siegel membership.
QuotientResult quotient_ppav(const ProductTorus& P, const FiniteSubgroup& K);

// The global map: product, standard allowed subgroup, quotient.
QuotientResult psi(const SiegelMatrix& Z_k, const SiegelMatrix& Z_gk, const PolarizationType& D);

} // namespace humbert

#endif
