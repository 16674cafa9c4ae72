#include "humbert/quotient.hpp"

#include <algorithm>

namespace humbert {

namespace {

// positions of the >1 divisors inside a type
std::vector<int> nontrivial_positions(const PolarizationType& D) {
    std::vector<int> pos;
    for (int i = 0; i < D.length(); ++i)
        if (D.divisor(i) > 1) pos.push_back(i);
    return pos;
}

} // namespace

RatMat ProductTorus::lift(const FsElement& x) const {
    const int l = torsion.factor.torsion_rank();
    check(int(x.size()) == 4 * l, "DimensionMismatch", "torsion element of wrong size");
    const int k = M.dim();
    std::vector<int> jm = nontrivial_positions(M.type());
    std::vector<int> jn = nontrivial_positions(N.type());
    check(int(jm.size()) == l && int(jn.size()) == l, "Internal", "divisor bookkeeping");

    RatMat v(2 * g, 1);
    for (int i = 0; i < l; ++i) {
        const mpz_class& d = torsion.factor.divisors()[i];
        mpq_class inv(1, d);
        inv.canonicalize();
        // lambda^M_i at sum coord 2i: (1/d) f^M_{jm[i]}
        v(jm[i], 0) += mpq_class(x[2 * i]) * inv;
        // lambda^N_i at 2i+1: (1/d) f^N_{jn[i]}
        v(k + jn[i], 0) += mpq_class(x[2 * i + 1]) * inv;
        // mu^M_i at 2l + 2i: e^M_{jm[i]} = (1/d) * (d e_{jm[i]})
        v(g + jm[i], 0) += mpq_class(x[2 * l + 2 * i]) * inv;
        // mu^N_i at 2l + 2i + 1
        v(g + k + jn[i], 0) += mpq_class(x[2 * l + 2 * i + 1]) * inv;
    }
    return v;
}

ProductTorus product(const PolarizedTorus& M, const PolarizedTorus& N) {
    const int k = M.dim(), m = N.dim(), g = k + m;
    PolarizationType Dt;
    try {
        Dt = complementary_type(M.type(), g);
    } catch (const error&) {
        fail("TypesNotComplementary", "dim(M) must be at most dim(N)");
    }
    check(Dt == N.type(), "TypesNotComplementary",
          "N must carry the complementary type " + Dt.str() + ", got " + N.type().str());

    ProductTorus p;
    p.M = M;
    p.N = N;
    p.g = g;

    p.period = GaussMat(g, 2 * g);
    p.period.set_block(0, 0, M.siegel().mat());
    p.period.set_block(k, k, N.siegel().mat());
    for (int i = 0; i < k; ++i)
        p.period(i, g + i) = GaussianRational(mpq_class(M.type().divisor(i)));
    for (int i = 0; i < m; ++i)
        p.period(k + i, g + k + i) = GaussianRational(mpq_class(N.type().divisor(i)));

    p.gram = IntMat(2 * g, 2 * g);
    for (int i = 0; i < k; ++i) {
        p.gram(i, g + i) = -M.type().divisor(i);
        p.gram(g + i, i) = M.type().divisor(i);
    }
    for (int i = 0; i < m; ++i) {
        p.gram(k + i, g + k + i) = -N.type().divisor(i);
        p.gram(g + k + i, k + i) = N.type().divisor(i);
    }

    p.torsion = direct_sum(FiniteSymplecticModule(M.type()));
    return p;
}

QuotientResult quotient_ppav(const ProductTorus& P, const FiniteSubgroup& K) {
    check(classify_subgroup(P.torsion, K) == SubgroupClass::Allowed, "NotAllowed",
          "subgroup is not allowed");
    const int g = P.g;
    const int n = 2 * g;
    const mpz_class delta = P.torsion.factor.divisors().empty()
                                ? mpz_class(1)
                                : P.torsion.factor.divisors().back();

    // lattice enlarged by the lifted generators, scaled integral, then HNF
    std::vector<FsElement> gens = K.canonical_generators();
    IntMat scaled(n, n + int(gens.size()));
    for (int i = 0; i < n; ++i) scaled(i, i) = delta;
    for (size_t j = 0; j < gens.size(); ++j) {
        RatMat lv = P.lift(gens[j]);
        for (int i = 0; i < n; ++i) {
            mpq_class s = lv(i, 0) * mpq_class(delta);
            check(s.get_den() == 1, "Internal", "scaled lift must be integral");
            scaled(i, int(n + j)) = s.get_num();
        }
    }
    IntMat H = column_hermite_basis(scaled);
    check(H.cols() == n, "Internal", "enlarged lattice lost rank");

    RatMat basis(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            basis(i, j) = mpq_class(H(i, j), delta);
            basis(i, j).canonicalize();
        }

    // [Lambda' : Lambda] equals the subgroup order
    {
        mpz_class diag = 1, deltapow = 1;
        for (int i = 0; i < n; ++i) {
            diag *= H(i, i);
            deltapow *= delta;
        }
        check(diag != 0 && deltapow % diag == 0 && deltapow / diag == K.order(), "NotPrincipal",
              "lattice index does not match the subgroup order");
    }

    // induced alternating form: integral by isotropy
    RatMat gq = basis.transpose() * to_rat(P.gram) * basis;
    auto gz = to_int(gq);
    check(gz.has_value(), "NonIntegralGram", "induced form is not integral");
    SymplecticBasis sb = symplectic_divisor_basis(*gz);
    check(sb.type == PolarizationType::ones(g), "NotPrincipal",
          "induced type is " + sb.type.str() + ", not principal");

    // symplectic basis ordered (f-like = b half, e-like = a half)
    RatMat sympl = basis * to_rat(sb.U);
    RatMat c2(n, n);
    c2.set_block(0, 0, sympl.block(0, g, n, g));
    c2.set_block(0, g, sympl.block(0, 0, n, g));

    // make the e-like complex images invertible via pair swaps
    GaussMat period = P.period;
    auto second_rank = [&](const RatMat& cand) {
        GaussMat w = period * to_gauss(cand);
        return mat_rank(w.block(0, g, g, g));
    };
    if (second_rank(c2) != g) {
        bool found = false;
        std::vector<unsigned> subsets;
        for (unsigned s = 1; s < (1u << g); ++s) subsets.push_back(s);
        std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (unsigned s : subsets) {
            RatMat cand = c2;
            for (int i = 0; i < g; ++i)
                if (s & (1u << i))
                    for (int r = 0; r < n; ++r) {
                        mpq_class b = cand(r, i), a = cand(r, g + i);
                        cand(r, i) = a;
                        cand(r, g + i) = -b;
                    }
            if (second_rank(cand) == g) {
                c2 = cand;
                found = true;
                break;
            }
        }
        check(found, "NotSiegel", "no pair swap yields an invertible half");
    }

    GaussMat w = period * to_gauss(c2);
    auto zprime = mat_solve(w.block(0, g, g, g), w.block(0, 0, g, g));
    check(zprime.has_value(), "Internal", "period normalization solve failed");

    QuotientResult r;
    r.Z_prime = SiegelMatrix(*zprime); // NotSiegel on validation failure
    r.basis_change = c2;
    r.induced_type = sb.type;

    // the new lattice meets each factor's rational span exactly in the old
    // factor lattice
    const int k = P.M.dim();
    auto check_factor = [&](int lo_f, int len_f, int lo_e) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i) {
            bool in_f = (i >= lo_f && i < lo_f + len_f);
            bool in_e = (i >= g + lo_e && i < g + lo_e + len_f);
            if (!in_f && !in_e) rows.push_back(i);
        }
        RatMat outside(int(rows.size()), n);
        for (size_t a = 0; a < rows.size(); ++a)
            for (int j = 0; j < n; ++j) outside(int(a), j) = c2(rows[a], j);
        IntMat ker = hermite_saturated_kernel(outside);
        check(ker.cols() == 2 * len_f, "NotAllowed", "factor intersection has wrong rank");
        RatMat inter = c2 * to_rat(ker);
        RatMat sub(2 * len_f, 2 * len_f);
        int a = 0;
        for (int i = 0; i < n; ++i) {
            bool in_f = (i >= lo_f && i < lo_f + len_f);
            bool in_e = (i >= g + lo_e && i < g + lo_e + len_f);
            if (!in_f && !in_e) continue;
            for (int j = 0; j < 2 * len_f; ++j) sub(a, j) = inter(i, j);
            ++a;
        }
        check(abs(mat_det(sub)) == 1, "NotAllowed",
              "quotient identifies points inside a factor");
    };
    check_factor(0, k, 0);
    check_factor(k, g - k, k);

    // push the factor lattices into the new coordinates
    auto push = [&](int lo_f, int len_f, int lo_e) {
        RatMat old(n, 2 * len_f);
        for (int i = 0; i < len_f; ++i) {
            old(lo_f + i, i) = 1;
            old(g + lo_e + i, len_f + i) = 1;
        }
        auto sol = mat_solve(c2, old);
        check(sol.has_value(), "Internal", "factor push-forward failed");
        auto zi = to_int(*sol);
        check(zi.has_value(), "Internal", "factor lattice must be integral in the new basis");
        return *zi;
    };
    r.m_coords = push(0, k, 0);
    r.n_coords = push(k, g - k, k);
    return r;
}

QuotientResult psi(const SiegelMatrix& Z_k, const SiegelMatrix& Z_gk,
                   const PolarizationType& D) {
    const int g = Z_k.dim() + Z_gk.dim();
    check(D.length() == Z_k.dim(), "DimensionMismatch", "type length must match dim of Z_k");
    PolarizedTorus M(Z_k, D);
    PolarizedTorus N(Z_gk, complementary_type(D, g));
    ProductTorus P = product(M, N);
    return quotient_ppav(P, standard_allowed(D));
}

} // namespace humbert
