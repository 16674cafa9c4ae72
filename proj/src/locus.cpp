#include "humbert/locus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace humbert {

int LocusEquationSet::constraint_count() const {
    // count distinct constraints on the cells of a symmetric matrix
    std::set<std::string> seen;
    for (const auto& p : proportionality) {
        int a1 = std::min(p.i, p.j), b1 = std::max(p.i, p.j);
        int i2 = g + 1 - p.i;
        int a2 = std::min(i2, p.j), b2 = std::max(i2, p.j);
        std::ostringstream os;
        os << "p:" << a1 << "," << b1 << ":" << a2 << "," << b2 << ":" << p.d;
        seen.insert(os.str());
    }
    for (const auto& v : vanishing) {
        std::ostringstream os;
        os << "v:" << std::min(v.i, v.j) << "," << std::max(v.i, v.j);
        seen.insert(os.str());
    }
    return int(seen.size());
}

LocusEquationSet locus_equations(int g, int k, const PolarizationType& D) {
    check(D.length() == k, "DimensionMismatch", "type length must equal k");
    check(2 * k <= g, "KTooLarge", "need k <= g/2");
    LocusEquationSet s;
    s.g = g;
    s.k = k;
    s.D = D;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) s.proportionality.push_back({i, j, D.divisor(i - 1)});
    for (int i = k + 1; i <= g - k; ++i)
        for (int j = 1; j <= k; ++j) s.vanishing.push_back({i, j});
    return s;
}

bool satisfies_equations(const SiegelMatrix& Z, const PolarizationType& D) {
    const int g = Z.dim();
    LocusEquationSet s = locus_equations(g, D.length(), D);
    const GaussMat& z = Z.mat();
    for (const auto& p : s.proportionality) {
        GaussianRational rhs = z(g - p.i, p.j - 1);
        rhs.re *= mpq_class(p.d);
        rhs.im *= mpq_class(p.d);
        if (z(p.i - 1, p.j - 1) != rhs) return false;
    }
    for (const auto& v : s.vanishing)
        if (!z(v.i - 1, v.j - 1).is_zero()) return false;
    return true;
}

namespace {

// reversal of the last k indices in the (g-k)-frame
int rev_index(int a, int m, int k) { return a < m - k ? a : 2 * m - k - 1 - a; }

GaussMat zero_extension(const GaussMat& zm, int m, int k) {
    GaussMat ext(m, m);
    ext.set_block(m - k, m - k, zm);
    return ext;
}

} // namespace

ConstructResult construct_member(const SiegelMatrix& Z_M, const SiegelMatrix& Z_N,
                                 const PolarizationType& D) {
    const int k = D.length();
    check(k >= 1, "KTooLarge", "type must be nonempty");
    check(Z_M.dim() == k, "DimensionMismatch", "Z_M dimension must equal the type length");
    const int m = Z_N.dim();
    const int g = k + m;
    PolarizationType Dt = complementary_type(D, g); // throws KTooLarge if 2k > g

    // lower-right block: X = R (Dt^{-1} (Z_N + ext(Z_M)) Dt^{-1}) R
    GaussMat sum = Z_N.mat() + zero_extension(Z_M.mat(), m, k);
    GaussMat X(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int ra = rev_index(a, m, k), rb = rev_index(b, m, k);
            GaussianRational v = sum(ra, rb);
            mpq_class den = mpq_class(Dt.divisor(ra)) * mpq_class(Dt.divisor(rb));
            v.re /= den;
            v.im /= den;
            X(a, b) = v;
        }

    GaussMat za(g, g);
    za.set_block(0, 0, Z_M.mat());
    za.set_block(k, k, X);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            GaussianRational v = Z_M.mat()(i - 1, j - 1);
            v.re /= mpq_class(D.divisor(i - 1));
            v.im /= mpq_class(D.divisor(i - 1));
            za(g - i, j - 1) = v; // z_{(g+1-i) j} = z_{ij} / d_i
            za(j - 1, g - i) = v;
        }
    // rows k+1..g-k of the first k columns stay zero

    ConstructResult r;
    r.Z_A = SiegelMatrix(za); // NotSiegel if the assembled matrix fails Im > 0
    check(satisfies_equations(r.Z_A, D), "Internal", "constructed matrix violates the equations");

    // iota_M: images f_1..f_k and d_i e_i + e_{g+1-i}
    r.C_M = IntMat(2 * g, 2 * k);
    for (int j = 0; j < k; ++j) r.C_M(j, j) = 1;
    for (int i = 0; i < k; ++i) {
        r.C_M(g + i, k + i) = D.divisor(i);
        r.C_M(2 * g - 1 - i, k + i) = 1;
    }

    // iota_N: unit pairs (f_{k+1+a}, e_{k+1+a}), then for each divisor
    // (d_i f_{g-i} - f_{i+1}, e_{g-i}) in chain order
    r.C_N = IntMat(2 * g, 2 * m);
    for (int a = 0; a < m - k; ++a) {
        r.C_N(k + a, a) = 1;             // f_{k+1+a}
        r.C_N(g + k + a, m + a) = 1;     // e_{k+1+a}
    }
    for (int i = 0; i < k; ++i) {
        int c = m - k + i;
        r.C_N(g - 1 - i, c) = D.divisor(i); // d_i f_{g-i}
        r.C_N(i, c) = -1;                   // - f_{i+1}
        r.C_N(2 * g - 1 - i, m + c) = 1;    // e_{g-i}
    }

    PolarizedTorus A(r.Z_A, PolarizationType::ones(g));
    check(certify_nonsimple(A, r.C_M, D).passed, "Internal",
          "constructed iota_M fails its certificate");
    check(certify_nonsimple(A, r.C_N, Dt).passed, "Internal",
          "constructed iota_N fails its certificate");
    check(complementary_period(r.Z_A, D) == Z_N, "Internal",
          "complementary period does not round-trip");
    return r;
}

SiegelMatrix complementary_period(const SiegelMatrix& Z_A, const PolarizationType& D) {
    const int g = Z_A.dim();
    const int k = D.length();
    PolarizationType Dt = complementary_type(D, g);
    const int m = g - k;
    check(satisfies_equations(Z_A, D), "EquationsNotSatisfied",
          "period matrix does not satisfy the locus equations");

    GaussMat X = Z_A.mat().block(k, k, m, m);
    GaussMat zn(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            GaussianRational v = X(rev_index(a, m, k), rev_index(b, m, k));
            mpq_class mul = mpq_class(Dt.divisor(a)) * mpq_class(Dt.divisor(b));
            v.re *= mul;
            v.im *= mul;
            zn(a, b) = v;
        }
    zn = zn - zero_extension(Z_A.mat().block(0, 0, k, k), m, k);
    return SiegelMatrix(zn); // NotSiegel on failure
}

mpz_class humbert_discriminant(const std::array<mpz_class, 5>& r) {
    return r[1] * r[1] - 4 * r[0] * r[2] - 4 * r[3] * r[4];
}

GaussianRational singular_relation_residual(const SiegelMatrix& Z,
                                            const std::array<mpz_class, 5>& rel) {
    check(Z.dim() == 2, "DimensionMismatch", "singular relations live on 2x2 period matrices");
    const GaussianRational t1 = Z.mat()(0, 0), t2 = Z.mat()(0, 1), t3 = Z.mat()(1, 1);
    auto zc = [](const mpz_class& c) { return GaussianRational(mpq_class(c)); };
    return zc(rel[0]) * t1 + zc(rel[1]) * t2 + zc(rel[2]) * t3 +
           zc(rel[3]) * (t2 * t2 - t1 * t3) + zc(rel[4]);
}

std::vector<SingularRelation> detect_singular_relations(const SiegelMatrix& Z,
                                                        const mpz_class& height,
                                                        bool all_discriminants) {
    check(Z.dim() == 2, "DimensionMismatch", "singular relations live on 2x2 period matrices");
    check(height >= 1, "InvalidHeight", "height must be at least 1");

    const GaussianRational t1 = Z.mat()(0, 0), t2 = Z.mat()(0, 1), t3 = Z.mat()(1, 1);
    const GaussianRational coeffs[5] = {t1, t2, t3, t2 * t2 - t1 * t3, GaussianRational(1)};
    RatMat cond(2, 5);
    for (int j = 0; j < 5; ++j) {
        cond(0, j) = coeffs[j].re;
        cond(1, j) = coeffs[j].im;
    }
    IntMat K = hermite_saturated_kernel(cond);
    const int r = K.cols();

    std::vector<SingularRelation> out;
    if (r == 0) return out;

    std::vector<int> pivot(r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < 5; ++i)
            if (K(i, j) != 0) {
                pivot[j] = i;
                break;
            }

    std::vector<mpz_class> v(5, 0);
    std::function<void(int)> enumerate = [&](int j) {
        if (j == r) {
            bool zero = true;
            mpz_class g = 0;
            for (const auto& x : v) {
                if (x != 0) zero = false;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (abs(x) > height) return;
            }
            if (zero || g != 1) return;
            std::array<mpz_class, 5> rel{v[0], v[1], v[2], v[3], v[4]};
            mpz_class delta = humbert_discriminant(rel);
            if (!all_discriminants) {
                if (delta <= 0) return;
                mpz_class root, rem;
                mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), delta.get_mpz_t());
                if (rem != 0) return;
            }
            check(singular_relation_residual(Z, rel).is_zero(), "Internal",
                  "kernel vector has nonzero residual");
            out.push_back({rel, delta});
            return;
        }
        // bounds from the pivot row: later columns vanish there
        const mpz_class& p = K(pivot[j], j);
        mpz_class lo, hi;
        mpz_class a = -height - v[pivot[j]], b = height - v[pivot[j]];
        mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
        for (mpz_class c = lo; c <= hi; ++c) {
            std::vector<mpz_class> saved = v;
            for (int i = 0; i < 5; ++i) v[i] += c * K(i, j);
            enumerate(j + 1);
            v = saved;
        }
    };
    enumerate(0);

    std::sort(out.begin(), out.end(), [](const SingularRelation& a, const SingularRelation& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        return a.rel < b.rel;
    });
    return out;
}

LocusDimension locus_dimension(int g, int k) {
    check(k > 0 && 2 * k <= g, "KTooLarge", "need 0 < k <= g/2");
    auto binom2 = [](long n) { return n * (n - 1) / 2; };
    LocusDimension d;
    d.dim = binom2(k + 1) + binom2(g - k + 1);
    d.codim = long(k) * (g - k);
    check(d.dim + d.codim == binom2(g + 1), "Internal", "dimension bookkeeping failed");
    return d;
}

} // namespace humbert
