#include "humbert/normal_forms.hpp"


namespace humbert {

namespace {

mpz_class div_floor(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// round(a / d) for d > 0, so |a - q*d| <= d/2
mpz_class div_nearest(const mpz_class& a, const mpz_class& d) {
    return div_floor(2 * a + d, 2 * d);
}

// smallest nonzero |entry| in the submatrix starting at (r0, c0),
// lowest row-major index among ties; returns false if all zero
bool find_min_pivot(const IntMat& S, int r0, int c0, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = r0; i < S.rows(); ++i)
        for (int j = c0; j < S.cols(); ++j) {
            if (S(i, j) == 0) continue;
            mpz_class a = abs(S(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMat& M) {
    const int m = M.rows(), n = M.cols();
    IntMat S = M;
    IntMat U = IntMat::identity(m);
    IntMat V = IntMat::identity(n);
    int t = 0;
    const int tmax = std::min(m, n);

    while (t < tmax) {
        int pi, pj;
        if (!find_min_pivot(S, t, t, pi, pj)) break;
        if (pi != t) {
            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
        }
        if (pj != t) {
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);
        }
        if (S(t, t) < 0) {
            S.scale_row(t, mpz_class(-1));
            U.scale_row(t, mpz_class(-1));
        }
        const mpz_class d = S(t, t);

        bool restart = false;
        // clear column t below the pivot
        for (int i = t + 1; i < m && !restart; ++i) {
            if (S(i, t) == 0) continue;
            if (S(i, t) % d == 0) {
                mpz_class q = S(i, t) / d;
                S.add_row(i, t, -q);
                U.add_row(i, t, -q);
            } else {
                mpz_class q = div_nearest(S(i, t), d);
                S.add_row(i, t, -q);
                U.add_row(i, t, -q);
                restart = true; // a strictly smaller entry now exists
            }
        }
        // clear row t right of the pivot (column t below is zero, so these
        // column operations leave it untouched)
        for (int j = t + 1; j < n && !restart; ++j) {
            if (S(t, j) == 0) continue;
            if (S(t, j) % d == 0) {
                mpz_class q = S(t, j) / d;
                S.add_col(j, t, -q);
                V.add_col(j, t, -q);
            } else {
                mpz_class q = div_nearest(S(t, j), d);
                S.add_col(j, t, -q);
                V.add_col(j, t, -q);
                restart = true;
            }
        }
        if (restart) continue;

        // pivot must divide the remaining block for the divisor chain
        bool enforced = false;
        for (int i = t + 1; i < m && !enforced; ++i)
            for (int j = t + 1; j < n && !enforced; ++j)
                if (S(i, j) % d != 0) {
                    S.add_row(t, i, mpz_class(1));
                    U.add_row(t, i, mpz_class(1));
                    enforced = true;
                }
        if (enforced) continue;

        ++t;
    }

    SmithResult r{std::move(S), std::move(U), std::move(V), t};
    return r;
}

namespace {

// Row Hermite form (upper echelon, positive pivots, entries above a pivot
// reduced into [0, pivot)).
IntMat row_hermite(IntMat H) {
    const int m = H.rows(), n = H.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        bool nonzero = false;
        for (int i = r; i < m; ++i)
            if (H(i, c) != 0) nonzero = true;
        if (!nonzero) continue;

        for (;;) {
            int best = -1;
            mpz_class bestabs;
            for (int i = r; i < m; ++i) {
                if (H(i, c) == 0) continue;
                mpz_class a = abs(H(i, c));
                if (best < 0 || a < bestabs) {
                    best = i;
                    bestabs = a;
                }
            }
            if (best != r) H.swap_rows(r, best);
            if (H(r, c) < 0) H.scale_row(r, mpz_class(-1));
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (H(i, c) == 0) continue;
                H.add_row(i, r, -div_floor(H(i, c), H(r, c)));
                if (H(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        for (int i = 0; i < r; ++i)
            if (H(i, c) != 0) H.add_row(i, r, -div_floor(H(i, c), H(r, c)));
        ++r;
    }
    return H;
}

} // namespace

IntMat column_hermite_basis(const IntMat& M) {
    IntMat H = row_hermite(M.transpose());
    int rank = 0;
    for (int i = 0; i < H.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) nonzero = true;
        if (nonzero) rank = i + 1;
    }
    return H.block(0, 0, rank, H.cols()).transpose();
}

IntMat hermite_saturated_kernel(const RatMat& M) {
    const int n = M.cols();
    if (M.rows() == 0) return IntMat::identity(n);

    // row scaling does not change the kernel
    IntMat Mz(M.rows(), n);
    for (int i = 0; i < M.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpq_class v = M(i, j) * mpq_class(l);
            Mz(i, j) = v.get_num(); // denominator is 1
        }
    }

    SmithResult snf = smith_normal_form(Mz);
    const int r = snf.rank;
    if (r == n) return IntMat(n, 0);
    IntMat K = snf.V.block(0, r, n, n - r);
    return column_hermite_basis(K);
}

SymplecticBasis symplectic_divisor_basis(const IntMat& E) {
    const int n = E.rows();
    check(E.cols() == n, "DimensionMismatch", "alternating form must be square");
    check(E.transpose() == -E, "NotAlternating", "matrix is not alternating");
    check(n % 2 == 0, "DegenerateForm", "odd-dimensional alternating form is degenerate");

    IntMat G = E;
    IntMat U = IntMat::identity(n);
    auto basis_swap = [&](int a, int b) {
        G.swap_rows(a, b);
        G.swap_cols(a, b);
        U.swap_cols(a, b);
    };
    auto basis_add = [&](int dst, int src, const mpz_class& c) {
        G.add_row(dst, src, c);
        G.add_col(dst, src, c);
        U.add_col(dst, src, c);
    };

    std::vector<mpz_class> d;
    int t = 0;
    while (t < n) {
        // smallest nonzero pairing in the unprocessed block
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (G(i, j) == 0) continue;
                mpz_class a = abs(G(i, j));
                if (pi < 0 || a < best) {
                    pi = i;
                    pj = j;
                    best = a;
                }
            }
        check(pi >= 0, "DegenerateForm", "alternating form is degenerate");

        // pj > pi >= t, so swapping pi into t never displaces pj
        if (pi != t) basis_swap(t, pi);
        if (pj != t + 1) basis_swap(t + 1, pj);
        if (G(t, t + 1) < 0) basis_swap(t, t + 1);
        const mpz_class piv = G(t, t + 1);

        bool restart = false;
        for (int m2 = t + 2; m2 < n && !restart; ++m2) {
            const mpz_class a = G(t, m2);
            if (a != 0) {
                if (a % piv == 0) {
                    basis_add(m2, t + 1, -(a / piv));
                } else {
                    basis_add(m2, t + 1, -div_nearest(a, piv));
                    restart = true;
                    break;
                }
            }
            const mpz_class b = G(t + 1, m2);
            if (b != 0) {
                if (b % piv == 0) {
                    basis_add(m2, t, b / piv);
                } else {
                    basis_add(m2, t, div_nearest(b, piv));
                    restart = true;
                }
            }
        }
        if (restart) continue;

        d.push_back(piv);
        t += 2;
    }

    // reorder interleaved pairs into (all lambda, all mu)
    const int k = n / 2;
    IntMat U2(n, n);
    for (int p = 0; p < k; ++p)
        for (int i = 0; i < n; ++i) {
            U2(i, p) = U(i, 2 * p);
            U2(i, k + p) = U(i, 2 * p + 1);
        }

    // divisor-chain repair by 2x2 base changes on adjacent hyperbolic pairs
    for (;;) {
        int i = -1;
        for (int p = 0; p + 1 < k; ++p)
            if (d[p + 1] % d[p] != 0) {
                i = p;
                break;
            }
        if (i < 0) break;

        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), d[i].get_mpz_t(),
                   d[i + 1].get_mpz_t());
        const mpz_class da = d[i] / g, db = d[i + 1] / g;

        for (int r = 0; r < n; ++r) {
            // lambda pair: (l_i + l_{i+1},  -y*db*l_i + x*da*l_{i+1})
            mpz_class l0 = U2(r, i), l1 = U2(r, i + 1);
            U2(r, i) = l0 + l1;
            U2(r, i + 1) = -y * db * l0 + x * da * l1;
            // mu pair: (x*m_i + y*m_{i+1},  -db*m_i + da*m_{i+1})
            mpz_class m0 = U2(r, k + i), m1 = U2(r, k + i + 1);
            U2(r, k + i) = x * m0 + y * m1;
            U2(r, k + i + 1) = -db * m0 + da * m1;
        }
        d[i] = g;
        d[i + 1] = da * db * g; // lcm
    }

    // exact consistency check of the final form
    IntMat G2 = U2.transpose() * E * U2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class want = 0;
            if (j == k + i && i < k) want = d[i];
            if (i == k + j && j < k) want = -d[j];
            check(G2(i, j) == want, "Internal", "symplectic reduction postcondition failed");
        }

    return SymplecticBasis{std::move(U2), PolarizationType(std::move(d))};
}

bool is_positive_definite(const RatMat& S) {
    check(S.rows() == S.cols(), "NotSymmetric", "matrix must be square");
    check(S.transpose() == S, "NotSymmetric", "matrix must be symmetric");
    for (int t = 1; t <= S.rows(); ++t)
        if (mat_det(S.block(0, 0, t, t)) <= 0) return false;
    return true;
}

} // namespace humbert
