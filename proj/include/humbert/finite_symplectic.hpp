#ifndef HUMBERT_FINITE_SYMPLECTIC_HPP
#define HUMBERT_FINITE_SYMPLECTIC_HPP

#include <vector>

#include "humbert/matrix.hpp"
#include "humbert/normal_forms.hpp"
#include "humbert/polarization.hpp"

namespace humbert {

// Coordinate vector of length 2l over (Z_{d_1} x ... x Z_{d_l})^2,
// ordered (lambda_1..lambda_l, mu_1..mu_l).
using FsElement = std::vector<mpz_class>;

// Finite symplectic Z-module of type (d_1,...,d_l)^2 with the standard
// pairing <lambda_i, mu_j> = delta_ij / d_i mod 1. Unit divisors are
// dropped on construction, so only the torsion part is represented.
class FiniteSymplecticModule {
public:
    FiniteSymplecticModule() = default;
    explicit FiniteSymplecticModule(const PolarizationType& D)
        : d_(D.nontrivial()) {}

    int torsion_rank() const { return int(d_.size()); }
    int coord_count() const { return 2 * int(d_.size()); }
    const std::vector<mpz_class>& divisors() const { return d_; }
    const mpz_class& coord_order(int i) const { return d_[size_t(i) % d_.size()]; }

    // group order (prod d_i)^2
    mpz_class order() const {
        mpz_class p = 1;
        for (const auto& d : d_) p *= d;
        return p * p;
    }

    bool same_type(const FiniteSymplecticModule& o) const { return d_ == o.d_; }

    FsElement zero() const { return FsElement(coord_count(), 0); }
    FsElement basis(int i) const;
    FsElement reduce(FsElement v) const;
    FsElement add(const FsElement& a, const FsElement& b) const;
    FsElement neg(const FsElement& a) const;

    // additive exponent of e^H in [0, 1)
    mpq_class pairing(const FsElement& a, const FsElement& b) const;

    // all elements x with n*x = 0, in deterministic mixed-radix order
    std::vector<FsElement> torsion_elements(const mpz_class& n) const;
    std::vector<FsElement> elements() const { return torsion_elements(d_.empty() ? 1 : d_.back()); }

    bool operator==(const FiniteSymplecticModule& o) const { return d_ == o.d_; }

private:
    std::vector<mpz_class> d_;
};

// Z-linear map between modules of equal type, given by an integer matrix on
// coordinates (column j = image of basis j).
struct AntisymplecticMap {
    FiniteSymplecticModule domain, codomain;
    IntMat matrix;

    FsElement apply(const FsElement& x) const;
};

// Checks that the map is well-defined mod the orders and negates the pairing on all
// basis pairs (sufficient by bilinearity).
bool is_antisymplectic(const AntisymplecticMap& f);

// X (+) Y for X, Y of the same type. The merged chain interleaves the two
// copies: factor coordinate i of X lands at sum index 2i, of Y at 2i+1,
// separately on the lambda and mu halves.
struct DirectSumModule {
    FiniteSymplecticModule factor; // common type of the two halves
    FiniteSymplecticModule sum;

    FsElement embed_first(const FsElement& x) const;
    FsElement embed_second(const FsElement& y) const;
    // sum coordinate index -> (factor coordinate index, which half)
    int factor_coord(int sum_coord) const;
    bool coord_in_first(int sum_coord) const;
};

DirectSumModule direct_sum(const FiniteSymplecticModule& X);

// Subgroup given by generators; canonicalized on construction as the column
// Hermite basis of the lattice spanned by generator lifts and the order
// relations, which makes equality and membership decidable.
class FiniteSubgroup {
public:
    FiniteSubgroup(FiniteSymplecticModule parent, std::vector<FsElement> gens);

    const FiniteSymplecticModule& parent() const { return parent_; }
    const std::vector<FsElement>& generators() const { return gens_; }
    const IntMat& lattice_basis() const { return lattice_; } // square, column HNF
    mpz_class order() const;
    bool contains(const FsElement& x) const;
    // generators in canonical form: nonzero reductions of the lattice basis
    std::vector<FsElement> canonical_generators() const;

    bool operator==(const FiniteSubgroup& o) const {
        return parent_ == o.parent_ && lattice_ == o.lattice_;
    }

private:
    FiniteSymplecticModule parent_;
    std::vector<FsElement> gens_;
    IntMat lattice_;
};

enum class SubgroupClass { Allowed, IsotropicNotAllowed, NotIsotropic };

const char* to_string(SubgroupClass c);

// Classification of K <= X (+) Y: isotropy, maximality via the order
// (prod d_i)^2, and trivial intersection with both factors.
SubgroupClass classify_subgroup(const DirectSumModule& ds, const FiniteSubgroup& K);

// Graph {(b, f(b))} of an antisymplectic map, as a subgroup of the direct
// sum; maximal isotropic and meeting the factors only in 0.
FiniteSubgroup graph_subgroup(const AntisymplecticMap& f);

// All antisymplectic maps X -> Y, by DFS over basis images constrained by
// the pairing equation; deterministic order.
std::vector<AntisymplecticMap> enumerate_antisymplectic(const FiniteSymplecticModule& X,
                                                        const FiniteSymplecticModule& Y);

// All allowed subgroups of K(H_M (x) H_N) for factors of type D, via the
// graph construction; requires prod d_i <= bound.
std::vector<FiniteSubgroup> enumerate_allowed(const PolarizationType& D,
                                              unsigned long bound = 64);

// The subgroup generated by {lambda_i^M + lambda_i^N, mu_i^M - mu_i^N}.
FiniteSubgroup standard_allowed(const PolarizationType& D);

} // namespace humbert

#endif
