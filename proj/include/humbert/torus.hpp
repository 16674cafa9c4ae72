#ifndef HUMBERT_TORUS_HPP
#define HUMBERT_TORUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "humbert/matrix.hpp"
#include "humbert/normal_forms.hpp"
#include "humbert/polarization.hpp"

namespace humbert {

// Symmetric g x g complex matrix with positive definite imaginary part,
// checked exactly on construction.
class SiegelMatrix {
public:
    SiegelMatrix() = default;
    explicit SiegelMatrix(GaussMat Z);

    int dim() const { return Z_.rows(); }
    const GaussMat& mat() const { return Z_; }
    RatMat real() const { return real_part(Z_); }
    RatMat imag() const { return imag_part(Z_); }

    bool operator==(const SiegelMatrix& o) const { return Z_ == o.Z_; }

private:
    GaussMat Z_;
};

// C^g / <Z D> with the polarization of type D whose analytic form is
// (Im Z)^{-1}. Lattice basis order is (Z columns f_1..f_g, d_1 e_1..d_g e_g).
class PolarizedTorus {
public:
    PolarizedTorus() = default;
    PolarizedTorus(SiegelMatrix Z, PolarizationType D);

    int dim() const { return Z_.dim(); }
    const SiegelMatrix& siegel() const { return Z_; }
    const PolarizationType& type() const { return D_; }
    bool is_principal() const { return D_.is_principal(); }

    GaussMat period_matrix() const; // g x 2g,  [Z | diag(D)]
    IntMat gram() const;            // 2g x 2g, [[0, -D], [D, 0]]

private:
    SiegelMatrix Z_;
    PolarizationType D_;
};

// Gram matrix of Im H on the lattice basis (f's, then scaled e's):
// E = [[0, -diag(D)], [diag(D), 0]].
IntMat symplectic_gram(const PolarizationType& D);

// D~ = (1,...,1, d_1,...,d_k) of length g - k.
PolarizationType complementary_type(const PolarizationType& D, int g);

// Sublattice of rank 2k spanning a k-dimensional complex subspace, with a
// symplectically normalized basis and the induced sub-torus.
struct LatticeEmbedding {
    PolarizedTorus parent;
    IntMat coords;       // the input C, 2g x 2k
    IntMat coords_norm;  // same lattice, basis with Gram [[0,-D_M],[D_M,0]]
    PolarizedTorus subtorus;
    GaussMat analytic;   // g x k: period(parent) * coords_norm == analytic * period(subtorus)
    bool primitive;      // SNF of C is all ones

    int k() const { return coords.cols() / 2; }
};

LatticeEmbedding embed(const PolarizedTorus& A, const IntMat& C);

PolarizationType restricted_type(const LatticeEmbedding& e);

// Saturated E-orthogonal complement, returned as an embedding of rank
// 2(g-k); its restricted type is the complementary type.
LatticeEmbedding symplectic_complement(const LatticeEmbedding& e);

struct CertificateCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;
    bool passed = false;
    std::optional<PolarizationType> computed_type;
    IntMat restricted_gram; // C^T E C, for independent re-derivation
    GaussMat image;         // period(A) * C
};

// Exact non-simplicity certificate: a passing report proves that the
// principal torus A has a k-dimensional abelian subvariety with restricted
// polarization D_expected, i.e. A lies in Is^g_D.
CertificateReport certify_nonsimple(const PolarizedTorus& A, const IntMat& C,
                                    const PolarizationType& D_expected);

struct EndomorphismCandidate {
    RatMat rational_rep;  // 2g x 2g on the lattice, integral for Nm
    GaussMat analytic_rep; // g x g on C^g
    mpz_class exponent;    // e(M)
};

// Norm endomorphism Nm_M = e(M) * (projector onto M's complex subspace along
// the symplectic complement), with exact verification of integrality,
// Nm^2 = e Nm, and E-symmetry.
EndomorphismCandidate norm_endomorphism(const LatticeEmbedding& e);

// (eps_M, eps_N) with eps_M + eps_N = 1 exactly, both idempotent.
std::pair<RatMat, RatMat> idempotent_pair(const LatticeEmbedding& e);

} // namespace humbert

#endif
