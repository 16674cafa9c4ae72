#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "humbert/locus.hpp"
#include "humbert/sampling.hpp"

using namespace humbert;

namespace {

PolarizationType ptype(std::initializer_list<long> ds) {
    std::vector<mpz_class> v;
    for (long d : ds) v.emplace_back(d);
    return PolarizationType(v);
}

GaussianRational gi(long re_num, long re_den, long im_num, long im_den) {
    return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

SiegelMatrix humbert_matrix(long p, const GaussianRational& t2, const GaussianRational& t3) {
    GaussMat z(2, 2);
    z(0, 0) = GaussianRational(mpq_class(p)) * t2;
    z(0, 1) = z(1, 0) = t2;
    z(1, 1) = t3;
    return SiegelMatrix(z);
}

std::array<mpz_class, 5> rel5(long a, long b, long c, long d, long e) {
    return {mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d), mpz_class(e)};
}

// brute-force oracle over all primitive tuples with sup-norm <= h
std::vector<std::array<mpz_class, 5>> brute_force_relations(const SiegelMatrix& Z, long h,
                                                            bool all_disc) {
    std::vector<std::array<mpz_class, 5>> out;
    std::array<mpz_class, 5> r;
    for (long a = -h; a <= h; ++a)
        for (long b = -h; b <= h; ++b)
            for (long c = -h; c <= h; ++c)
                for (long d = -h; d <= h; ++d)
                    for (long e = -h; e <= h; ++e) {
                        r = rel5(a, b, c, d, e);
                        mpz_class g = 0;
                        for (const auto& x : r)
                            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                        if (g != 1) continue;
                        if (!singular_relation_residual(Z, r).is_zero()) continue;
                        mpz_class delta = humbert_discriminant(r);
                        if (!all_disc) {
                            if (delta <= 0) continue;
                            mpz_class root, rem;
                            mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), delta.get_mpz_t());
                            if (rem != 0) continue;
                        }
                        out.push_back(r);
                    }
    return out;
}

} // namespace

TEST_CASE("locus_equations: pinned families") {
    LocusEquationSet e1 = locus_equations(2, 1, ptype({5}));
    REQUIRE(e1.proportionality.size() == 1);
    CHECK(e1.proportionality[0].i == 1);
    CHECK(e1.proportionality[0].j == 1);
    CHECK(e1.proportionality[0].d == 5);
    CHECK(e1.vanishing.empty());
    CHECK(e1.constraint_count() == 1);

    LocusEquationSet e2 = locus_equations(4, 2, ptype({1, 1}));
    CHECK(e2.proportionality.size() == 4);
    CHECK(e2.vanishing.empty());
    CHECK(e2.constraint_count() == 4);

    LocusEquationSet e3 = locus_equations(5, 2, ptype({1, 2}));
    CHECK(e3.proportionality.size() == 4);
    CHECK(e3.vanishing.size() == 2);
    CHECK(e3.constraint_count() == 6);

    CHECK_THROWS_WITH_AS(locus_equations(3, 2, ptype({1, 2})), doctest::Contains("KTooLarge"),
                         error);
}

TEST_CASE("locus_dimension and constraint counts agree") {
    LocusDimension d21 = locus_dimension(2, 1);
    CHECK(d21.dim == 2);
    CHECK(d21.codim == 1);
    LocusDimension d42 = locus_dimension(4, 2);
    CHECK(d42.dim == 6);
    CHECK(d42.codim == 4);
    LocusDimension d31 = locus_dimension(3, 1);
    CHECK(d31.dim == 4);
    CHECK(d31.codim == 2);

    for (int g = 1; g <= 12; ++g)
        for (int k = 1; 2 * k <= g; ++k) {
            LocusDimension d = locus_dimension(g, k);
            CHECK(d.dim + d.codim == g * (g + 1) / 2);
            // any divisor chain gives the same count; use (1,2,4,...) capped
            std::vector<mpz_class> ds;
            mpz_class v = 1;
            for (int i = 0; i < k; ++i) {
                ds.push_back(v);
                if (v < 4) v *= 2;
            }
            CHECK(locus_equations(g, k, PolarizationType(ds)).constraint_count() == d.codim);
        }

    CHECK_THROWS_WITH_AS(locus_dimension(4, 0), doctest::Contains("KTooLarge"), error);
}

TEST_CASE("satisfies_equations") {
    GaussMat z(2, 2);
    z(0, 0) = gi(0, 1, 2, 1);
    z(0, 1) = z(1, 0) = gi(0, 1, 1, 1);
    z(1, 1) = gi(0, 1, 1, 1);
    SiegelMatrix Z(z);
    CHECK(satisfies_equations(Z, ptype({2})));
    CHECK_FALSE(satisfies_equations(Z, ptype({3})));

    // block-diagonal with nonzero top block violates the all-ones equations
    GaussMat bd(4, 4);
    for (int i = 0; i < 4; ++i) bd(i, i) = gi(0, 1, 2, 1);
    bd(0, 2) = bd(2, 0) = gi(0, 1, 1, 1);
    bd(1, 3) = bd(3, 1) = gi(0, 1, 1, 1);
    CHECK_FALSE(satisfies_equations(SiegelMatrix(bd), ptype({1, 1})));
}

TEST_CASE("construct_member: examples and round-trips") {
    GaussMat zm(1, 1), zn(1, 1);
    zm(0, 0) = gi(0, 1, 2, 1);
    zn(0, 0) = gi(0, 1, 2, 1);
    ConstructResult r = construct_member(SiegelMatrix(zm), SiegelMatrix(zn), ptype({2}));
    GaussMat want(2, 2);
    want(0, 0) = gi(0, 1, 2, 1);
    want(0, 1) = want(1, 0) = gi(0, 1, 1, 1);
    want(1, 1) = gi(0, 1, 1, 1);
    CHECK(r.Z_A.mat() == want);
    CHECK(satisfies_equations(r.Z_A, ptype({2})));
    CHECK(complementary_period(r.Z_A, ptype({2})).mat() == zn);

    // the Humbert normalization: Z_M = (p t2) reproduces [[p t2, t2],[t2, t3]]
    for (long p : {2L, 3L}) {
        GaussianRational t2 = gi(1, 3, 1, 1), t3 = gi(0, 1, 2, 1);
        GaussianRational pt3_minus_t2 =
            GaussianRational(mpq_class(p)) * t3 - t2; // complement curve period
        GaussMat zmp(1, 1), znp(1, 1);
        zmp(0, 0) = GaussianRational(mpq_class(p)) * t2;
        znp(0, 0) = GaussianRational(mpq_class(p)) * pt3_minus_t2; // <p(pt3-t2), p>
        ConstructResult h = construct_member(SiegelMatrix(zmp), SiegelMatrix(znp), ptype({p}));
        CHECK(h.Z_A.mat() == humbert_matrix(p, t2, t3).mat());
        CHECK(complementary_period(h.Z_A, ptype({p})).mat() == znp);
    }

    // g=3, k=1, D=(2): iota_M images are {f_1, 2e_1 + e_3}, and z_21 = 0
    GaussMat zn2(2, 2);
    zn2(0, 0) = gi(0, 1, 2, 1);
    zn2(1, 1) = gi(0, 1, 3, 1);
    zn2(0, 1) = zn2(1, 0) = gi(0, 1, 1, 2);
    ConstructResult r3 = construct_member(SiegelMatrix(zm), SiegelMatrix(zn2), ptype({2}));
    CHECK(r3.Z_A.mat()(1, 0).is_zero());
    IntMat cm(6, 2);
    cm(0, 0) = 1;  // f_1
    cm(3, 1) = 2;  // 2 e_1
    cm(5, 1) = 1;  // + e_3
    CHECK(r3.C_M == cm);
}

TEST_CASE("construct_member: equation and complement properties, randomized") {
    SiegelSampler sampler(2024);
    int done = 0;
    while (done < 25) {
        int g = 2 + int(sampler.rng() % 5); // 2..6
        int kmax = g / 2;
        int k = 1 + int(sampler.rng() % kmax);
        PolarizationType D = sampler.random_type(k, 4);
        SiegelMatrix zm = sampler.random_siegel(k, 8);
        SiegelMatrix zn = sampler.random_siegel(g - k, 8);
        ConstructResult r = construct_member(zm, zn, D);
        PolarizationType Dt = complementary_type(D, g);

        CHECK(satisfies_equations(r.Z_A, D));
        PolarizedTorus A(r.Z_A, PolarizationType::ones(g));
        CHECK(certify_nonsimple(A, r.C_M, D).passed);
        CHECK(certify_nonsimple(A, r.C_N, Dt).passed);
        CHECK(complementary_period(r.Z_A, D) == zn);

        LatticeEmbedding eM = embed(A, r.C_M);
        CHECK(restricted_type(symplectic_complement(eM)) == Dt);
        ++done;
    }
}

TEST_CASE("complementary_period: error paths") {
    GaussMat z(2, 2);
    z(0, 0) = gi(0, 1, 2, 1);
    z(0, 1) = z(1, 0) = gi(0, 1, 1, 1);
    z(1, 1) = gi(0, 1, 1, 1);
    CHECK_THROWS_WITH_AS(complementary_period(SiegelMatrix(z), ptype({3})),
                         doctest::Contains("EquationsNotSatisfied"), error);
}

TEST_CASE("humbert_discriminant") {
    CHECK(humbert_discriminant(rel5(-1, 3, 0, 0, 0)) == 9);
    CHECK(humbert_discriminant(rel5(0, 0, 0, 0, 0)) == 0);
    CHECK(humbert_discriminant(rel5(1, 3, 2, 1, -1)) == 5);
}

TEST_CASE("singular_relation_residual") {
    GaussianRational t2 = gi(0, 1, 1, 1), t3 = gi(0, 1, 2, 1);
    for (long p : {2L, 5L})
        CHECK(singular_relation_residual(humbert_matrix(p, t2, t3), rel5(-1, p, 0, 0, 0))
                  .is_zero());

    GaussMat z(2, 2);
    z(0, 0) = gi(0, 1, 2, 1);
    z(0, 1) = z(1, 0) = gi(0, 1, 1, 1);
    z(1, 1) = gi(0, 1, 3, 1);
    SiegelMatrix Z(z);
    CHECK(singular_relation_residual(Z, rel5(-1, 2, 0, 0, 0)).is_zero());
    CHECK(singular_relation_residual(Z, rel5(1, 0, 0, 0, 0)) == gi(0, 1, 2, 1));
}

TEST_CASE("detect_singular_relations: [[2i,i],[i,3i]] vs brute force") {
    GaussMat z(2, 2);
    z(0, 0) = gi(0, 1, 2, 1);
    z(0, 1) = z(1, 0) = gi(0, 1, 1, 1);
    z(1, 1) = gi(0, 1, 3, 1);
    SiegelMatrix Z(z);

    auto found = detect_singular_relations(Z, 3);
    bool has = false;
    for (const auto& r : found)
        if (r.rel == rel5(-1, 2, 0, 0, 0) && r.delta == 4) has = true;
    CHECK(has);

    auto oracle = brute_force_relations(Z, 3, false);
    REQUIRE(found.size() == oracle.size());
    std::set<std::array<mpz_class, 5>> fs, os;
    for (const auto& r : found) fs.insert(r.rel);
    for (const auto& r : oracle) os.insert(r);
    CHECK(fs == os);

    // all-discriminants flag against the matching oracle
    auto found_all = detect_singular_relations(Z, 2, true);
    auto oracle_all = brute_force_relations(Z, 2, true);
    std::set<std::array<mpz_class, 5>> fa, oa;
    for (const auto& r : found_all) fa.insert(r.rel);
    for (const auto& r : oracle_all) oa.insert(r);
    CHECK(fa == oa);

    // sorted by discriminant then lexicographically
    for (size_t i = 1; i < found.size(); ++i) {
        CHECK(found[i - 1].delta <= found[i].delta);
        if (found[i - 1].delta == found[i].delta) CHECK(found[i - 1].rel < found[i].rel);
    }
}

TEST_CASE("detect_singular_relations: normalized Humbert matrices") {
    // Z = [[p t2, t2],[t2, t3]] with t2 = i, t3 = 2i, p = 3
    auto found = detect_singular_relations(humbert_matrix(3, gi(0, 1, 1, 1), gi(0, 1, 2, 1)), 5);
    bool has = false;
    for (const auto& r : found)
        if (r.rel == rel5(-1, 3, 0, 0, 0) && r.delta == 9) has = true;
    CHECK(has);
}

TEST_CASE("detect_singular_relations: equations imply the normalized relation") {
    for (long p : {2L, 3L, 5L}) {
        GaussMat zm(1, 1), zn(1, 1);
        zm(0, 0) = gi(1, 2, 3, 2);
        zn(0, 0) = gi(-1, 3, 7, 3);
        ConstructResult r = construct_member(SiegelMatrix(zm), SiegelMatrix(zn),
                                             PolarizationType({mpz_class(p)}));
        REQUIRE(satisfies_equations(r.Z_A, PolarizationType({mpz_class(p)})));
        auto found = detect_singular_relations(r.Z_A, p + 1);
        bool has = false;
        for (const auto& q : found)
            if (q.rel == rel5(-1, p, 0, 0, 0)) has = true;
        CHECK(has);
    }
}

TEST_CASE("detect_singular_relations: generic surfaces have no small relations") {
    SiegelSampler sampler(99);
    for (int it = 0; it < 5; ++it) {
        SiegelMatrix Z = sampler.random_siegel(2, 50);
        auto found = detect_singular_relations(Z, 10);
        CHECK(found.empty());
    }
}
