#include "humbert/torus.hpp"

#include <algorithm>

namespace humbert {

SiegelMatrix::SiegelMatrix(GaussMat Z) : Z_(std::move(Z)) {
    check(Z_.rows() == Z_.cols(), "NotSiegel", "period matrix must be square");
    check(Z_.transpose() == Z_, "NotSiegel", "period matrix must be symmetric");
    check(is_positive_definite(imag_part(Z_)), "NotSiegel",
          "imaginary part must be positive definite");
}

PolarizedTorus::PolarizedTorus(SiegelMatrix Z, PolarizationType D)
    : Z_(std::move(Z)), D_(std::move(D)) {
    check(D_.length() == Z_.dim(), "DimensionMismatch",
          "polarization type length must equal the dimension");
}

GaussMat PolarizedTorus::period_matrix() const {
    const int g = dim();
    GaussMat p(g, 2 * g);
    p.set_block(0, 0, Z_.mat());
    for (int i = 0; i < g; ++i) p(i, g + i) = GaussianRational(mpq_class(D_.divisor(i)));
    return p;
}

IntMat PolarizedTorus::gram() const { return symplectic_gram(D_); }

IntMat symplectic_gram(const PolarizationType& D) {
    const int g = D.length();
    IntMat e(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        e(i, g + i) = -D.divisor(i);
        e(g + i, i) = D.divisor(i);
    }
    return e;
}

PolarizationType complementary_type(const PolarizationType& D, int g) {
    const int k = D.length();
    check(2 * k <= g, "KTooLarge", "need k <= g/2");
    std::vector<mpz_class> d(g - 2 * k, mpz_class(1));
    for (int i = 0; i < k; ++i) d.push_back(D.divisor(i));
    return PolarizationType(std::move(d));
}

namespace {

// Choose a swap set so the second-half images become a complex basis.
// Swapping pair i replaces (b_i, c_i) by (c_i, -b_i), which preserves the
// Gram [[0,-D],[D,0]]. Deterministic: subsets by popcount, then value.
bool make_second_half_invertible(const GaussMat& period, IntMat& cnorm, int k) {
    auto second_rank = [&](const IntMat& cand) {
        GaussMat w = period * to_gauss(cand);
        return mat_rank(w.block(0, k, w.rows(), k));
    };
    if (second_rank(cnorm) == k) return true;
    std::vector<unsigned> subsets;
    for (unsigned s = 1; s < (1u << k); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (unsigned s : subsets) {
        IntMat cand = cnorm;
        for (int i = 0; i < k; ++i)
            if (s & (1u << i))
                for (int r = 0; r < cand.rows(); ++r) {
                    mpz_class b = cand(r, i), c = cand(r, k + i);
                    cand(r, i) = c;
                    cand(r, k + i) = -b;
                }
        if (second_rank(cand) == k) {
            cnorm = cand;
            return true;
        }
    }
    return false;
}

} // namespace

LatticeEmbedding embed(const PolarizedTorus& A, const IntMat& C) {
    const int g = A.dim();
    check(C.rows() == 2 * g, "DimensionMismatch", "coordinate matrix must have 2g rows");
    check(C.cols() % 2 == 0, "DimensionMismatch", "coordinate matrix must have 2k columns");
    const int k = C.cols() / 2;

    check(mat_rank(to_rat(C)) == 2 * k, "RankDeficient", "coordinates are not independent");

    GaussMat period = A.period_matrix();
    GaussMat image = period * to_gauss(C);
    check(mat_rank(image) == k, "NotComplexSubspace",
          "sublattice does not span a k-dimensional complex subspace");

    IntMat F = C.transpose() * A.gram() * C;
    SymplecticBasis sb = symplectic_divisor_basis(F); // DegenerateForm propagates

    SmithResult snf = smith_normal_form(C);
    bool primitive = true;
    for (int i = 0; i < 2 * k; ++i)
        if (snf.S(i, i) != 1) primitive = false;

    // basis with Gram [[0,-D_M],[D_M,0]]: the divisor basis (a,b) has
    // E(a_i,b_j) = d_i delta_ij, so order it (b's first, a's second)
    IntMat cnorm(2 * g, 2 * k);
    {
        IntMat cu = C * sb.U;
        cnorm.set_block(0, 0, cu.block(0, k, 2 * g, k));
        cnorm.set_block(0, k, cu.block(0, 0, 2 * g, k));
    }

    LatticeEmbedding e;
    e.parent = A;
    e.coords = C;
    e.primitive = primitive;

    if (k == 0) {
        e.coords_norm = cnorm;
        e.subtorus = PolarizedTorus(SiegelMatrix(GaussMat(0, 0)), PolarizationType());
        e.analytic = GaussMat(g, 0);
        return e;
    }

    check(make_second_half_invertible(period, cnorm, k), "NotSiegel",
          "no pair swap makes the second half a complex basis");
    e.coords_norm = cnorm;

    GaussMat w = period * to_gauss(cnorm);
    GaussMat wb = w.block(0, 0, g, k), wa = w.block(0, k, g, k);
    GaussMat ubasis(g, k); // u_i = (second-half image i) / d_i
    for (int r = 0; r < g; ++r)
        for (int i = 0; i < k; ++i)
            ubasis(r, i) = wa(r, i) / GaussianRational(mpq_class(sb.type.divisor(i)));

    auto zsub = mat_solve(ubasis, wb);
    check(zsub.has_value(), "Internal", "sub-period solve inconsistent");
    e.subtorus = PolarizedTorus(SiegelMatrix(*zsub), sb.type); // NotSiegel if conventions broke
    e.analytic = ubasis;

    check(e.analytic * e.subtorus.period_matrix() == w, "Internal",
          "analytic representation identity failed");
    return e;
}

PolarizationType restricted_type(const LatticeEmbedding& e) { return e.subtorus.type(); }

LatticeEmbedding symplectic_complement(const LatticeEmbedding& e) {
    RatMat cond = to_rat(e.coords.transpose() * e.parent.gram());
    IntMat K = hermite_saturated_kernel(cond);
    return embed(e.parent, K);
}

namespace {

void add_check(CertificateReport& r, const std::string& name, bool ok, std::string detail = "") {
    r.checks.push_back({name, ok, std::move(detail)});
    if (!ok) r.passed = false;
}

} // namespace

CertificateReport certify_nonsimple(const PolarizedTorus& A, const IntMat& C,
                                    const PolarizationType& D_expected) {
    CertificateReport r;
    r.passed = true;
    const int g = A.dim();
    const int k = C.cols() / 2;

    add_check(r, "parent-principal", A.is_principal());
    add_check(r, "shape", C.rows() == 2 * g && C.cols() % 2 == 0);
    add_check(r, "dimension-bounds", k > 0 && k < g); // proper nontrivial subvariety
    if (!r.passed) return r;

    bool rank_ok = mat_rank(to_rat(C)) == 2 * k;
    add_check(r, "rational-rank", rank_ok, rank_ok ? "" : "RankDeficient");
    if (!r.passed) return r;

    SmithResult snf = smith_normal_form(C);
    bool prim = true;
    for (int i = 0; i < 2 * k; ++i)
        if (snf.S(i, i) != 1) prim = false;
    add_check(r, "primitive", prim);

    r.image = A.period_matrix() * to_gauss(C);
    bool span_ok = mat_rank(r.image) == k;
    add_check(r, "complex-span", span_ok, span_ok ? "" : "NotComplexSubspace");

    r.restricted_gram = C.transpose() * A.gram() * C;
    if (!r.passed) return r;

    try {
        LatticeEmbedding e = embed(A, C);
        r.computed_type = restricted_type(e);
        add_check(r, "restricted-type", *r.computed_type == D_expected,
                  "computed " + r.computed_type->str() + ", expected " + D_expected.str());
    } catch (const error& err) {
        add_check(r, "restricted-type", false, err.kind());
    }
    return r;
}

EndomorphismCandidate norm_endomorphism(const LatticeEmbedding& e) {
    const PolarizedTorus& A = e.parent;
    const int g = A.dim();
    check(A.is_principal(), "NotPrincipal", "norm endomorphism needs a principal parent");

    LatticeEmbedding comp = symplectic_complement(e);
    RatMat B = to_rat(hconcat(e.coords, comp.coords));
    check(B.rows() == B.cols(), "RankDeficient", "embedding plus complement must span");
    RatMat Binv = mat_inverse(B);

    // projector onto M's rational span along the complement
    RatMat sel(2 * g, 2 * g);
    for (int i = 0; i < e.coords.cols(); ++i) sel(i, i) = 1;
    RatMat P = B * sel * Binv;

    const mpz_class eM = e.subtorus.type().exponent();
    RatMat nm(2 * g, 2 * g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) nm(i, j) = P(i, j) * mpq_class(eM);

    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j)
            check(nm(i, j).get_den() == 1, "NotIntegral",
                  "norm endomorphism is not integral on the lattice");

    RatMat eNm(2 * g, 2 * g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) eNm(i, j) = nm(i, j) * mpq_class(eM);
    check(nm * nm == eNm, "NotIdempotentScaled", "Nm^2 != e(M) Nm");

    RatMat E = to_rat(A.gram());
    check(nm.transpose() * E == E * nm, "NotSymmetric", "Nm is not symmetric for E");

    // analytic representation: the parent is principal, so the scaled-unit
    // half of the period matrix is the identity
    GaussMat pn = A.period_matrix() * to_gauss(nm);
    GaussMat an = pn.block(0, g, g, g);
    check(an * A.siegel().mat() == pn.block(0, 0, g, g), "Internal",
          "analytic/rational representation mismatch");

    return EndomorphismCandidate{std::move(nm), std::move(an), eM};
}

std::pair<RatMat, RatMat> idempotent_pair(const LatticeEmbedding& e) {
    EndomorphismCandidate nm = norm_endomorphism(e);
    const int n = nm.rational_rep.rows();
    RatMat epsM = nm.rational_rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) epsM(i, j) /= mpq_class(nm.exponent);

    LatticeEmbedding comp = symplectic_complement(e);
    EndomorphismCandidate nmN = norm_endomorphism(comp);
    RatMat epsN = nmN.rational_rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) epsN(i, j) /= mpq_class(nmN.exponent);

    check(epsM + epsN == RatMat::identity(n), "NotIdempotentScaled",
          "idempotents do not sum to the identity");
    check(epsM * epsM == epsM, "NotIdempotentScaled", "eps_M is not idempotent");
    return {std::move(epsM), std::move(epsN)};
}

} // namespace humbert
