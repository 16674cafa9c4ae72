#ifndef HUMBERT_LOCUS_HPP
#define HUMBERT_LOCUS_HPP

#include <array>

#include "humbert/torus.hpp"

namespace humbert {

// z_{ij} = d * z_{(g+1-i) j}, 1-based indices, i,j <= k
struct ProportionalityConstraint {
    int i, j;
    mpz_class d;
};

// z_{ij} = 0, k+1 <= i <= g-k, j <= k
struct VanishingConstraint {
    int i, j;
};

struct LocusEquationSet {
    int g = 0, k = 0;
    PolarizationType D;
    std::vector<ProportionalityConstraint> proportionality;
    std::vector<VanishingConstraint> vanishing;

    // constraints counted on the space of symmetric matrices
    int constraint_count() const;
};

// The linear equations cutting out one irreducible component of the
// preimage of Is^g_D in Siegel space.
LocusEquationSet locus_equations(int g, int k, const PolarizationType& D);

bool satisfies_equations(const SiegelMatrix& Z, const PolarizationType& D);

struct ConstructResult {
    SiegelMatrix Z_A;
    IntMat C_M; // columns f_1..f_k, then d_i e_i + e_{g+1-i}
    IntMat C_N; // the complementary embedding
};

// Builds a principal g-fold containing the k-fold of period Z_M with
// restricted type D and complement of period Z_N; the assembled matrix is
// validated in Siegel space and both embeddings are certified.
ConstructResult construct_member(const SiegelMatrix& Z_M, const SiegelMatrix& Z_N,
                                 const PolarizationType& D);

// Inverse of the lower-right block assembly: recovers Z_N from a matrix
// satisfying the equations.
SiegelMatrix complementary_period(const SiegelMatrix& Z_A, const PolarizationType& D);

struct SingularRelation {
    std::array<mpz_class, 5> rel; // (a, b, c, d, e), primitive
    mpz_class delta;              // b^2 - 4ac - 4de
};

mpz_class humbert_discriminant(const std::array<mpz_class, 5>& rel);

// a t1 + b t2 + c t3 + d (t2^2 - t1 t3) + e  at  t1 = z11, t2 = z12, t3 = z22
GaussianRational singular_relation_residual(const SiegelMatrix& Z,
                                            const std::array<mpz_class, 5>& rel);

// All primitive integer 5-tuples of sup-norm <= height satisfying the
// singular relation exactly; by default only positive square discriminants
// are returned, sorted by discriminant then lexicographically.
std::vector<SingularRelation> detect_singular_relations(const SiegelMatrix& Z,
                                                        const mpz_class& height,
                                                        bool all_discriminants = false);

struct LocusDimension {
    long dim;
    long codim;
};

// (C(k+1,2) + C(g-k+1,2), k(g-k)); the two always sum to C(g+1,2).
LocusDimension locus_dimension(int g, int k);

} // namespace humbert

#endif
