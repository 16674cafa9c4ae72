#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "humbert/finite_symplectic.hpp"

using namespace humbert;

namespace {

PolarizationType ptype(std::initializer_list<long> ds) {
    std::vector<mpz_class> v;
    for (long d : ds) v.emplace_back(d);
    return PolarizationType(v);
}

std::string key_of(const FiniteSubgroup& k) {
    std::ostringstream os;
    os << k.lattice_basis();
    return os.str();
}

// Test oracle: every allowed subgroup of the small direct sums below is
// 2-generated, so enumerating generator pairs and deduping by the canonical
// lattice finds all subgroups of the target order.
std::vector<FiniteSubgroup> brute_force_allowed(const PolarizationType& D) {
    FiniteSymplecticModule X(D);
    REQUIRE(X.torsion_rank() <= 1);
    DirectSumModule ds = direct_sum(X);
    auto elems = ds.sum.elements();
    std::map<std::string, FiniteSubgroup> found;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            FiniteSubgroup k(ds.sum, {a, b});
            if (k.order() != ds.factor.order()) continue;
            if (classify_subgroup(ds, k) != SubgroupClass::Allowed) continue;
            found.emplace(key_of(k), k);
        }
    std::vector<FiniteSubgroup> out;
    for (auto& [_, k] : found) out.push_back(k);
    return out;
}

} // namespace

TEST_CASE("pairing: normalization and bilinearity") {
    FiniteSymplecticModule m2(ptype({2}));
    CHECK(m2.pairing(m2.basis(0), m2.basis(1)) == mpq_class(1, 2));
    CHECK(m2.pairing(m2.basis(0), m2.basis(0)) == 0);
    CHECK(m2.pairing(m2.basis(1), m2.basis(0)) == mpq_class(1, 2)); // -1/2 mod 1

    FiniteSymplecticModule m24(ptype({2, 4}));
    CHECK(m24.pairing(m24.basis(1), m24.basis(3)) == mpq_class(1, 4));
    CHECK(m24.pairing(m24.basis(0), m24.basis(3)) == 0);
    CHECK(m24.pairing(m24.basis(0), m24.basis(2)) == mpq_class(1, 2));

    // unit divisors are dropped on construction
    FiniteSymplecticModule m12(ptype({1, 2}));
    CHECK(m12.same_type(m2));

    CHECK_THROWS_WITH_AS(m2.pairing(m2.basis(0), m24.basis(0)),
                         doctest::Contains("DimensionMismatch"), error);
}

TEST_CASE("is_antisymplectic: identity and sign flips") {
    FiniteSymplecticModule m2(ptype({2}));
    FiniteSymplecticModule m3(ptype({3}));

    // -1/2 = 1/2 mod 1, so the identity is antisymplectic for d = 2
    CHECK(is_antisymplectic({m2, m2, IntMat::identity(2)}));
    // 1/3 != -1/3 mod 1
    CHECK_FALSE(is_antisymplectic({m3, m3, IntMat::identity(2)}));

    IntMat flip = IntMat::identity(2);
    flip(1, 1) = -1; // lambda -> lambda, mu -> -mu
    CHECK(is_antisymplectic({m3, m3, flip}));

    // ill-defined mod the orders
    FiniteSymplecticModule m24(ptype({2, 4}));
    IntMat bad = IntMat::identity(4);
    bad(1, 0) = 1; // sends order-2 lambda_1 to an element of order 4
    CHECK_FALSE(is_antisymplectic({m24, m24, bad}));

    CHECK_THROWS_WITH_AS(is_antisymplectic({m2, m3, IntMat::identity(2)}),
                         doctest::Contains("TypeMismatch"), error);
}

TEST_CASE("graph_subgroup: orders and the standard subgroup") {
    FiniteSymplecticModule m2(ptype({2}));
    FiniteSubgroup g2 = graph_subgroup({m2, m2, IntMat::identity(2)});
    CHECK(g2.order() == 4);
    CHECK(g2.parent().order() == 16);

    // trivial module
    FiniteSymplecticModule m1(ptype({1}));
    FiniteSubgroup g1 = graph_subgroup({m1, m1, IntMat(0, 0)});
    CHECK(g1.order() == 1);

    // type (3), lambda -> lambda, mu -> -mu gives the standard subgroup
    FiniteSymplecticModule m3(ptype({3}));
    IntMat flip = IntMat::identity(2);
    flip(1, 1) = -1;
    CHECK(graph_subgroup({m3, m3, flip}) == standard_allowed(ptype({3})));

    IntMat notanti = IntMat::identity(2);
    CHECK_THROWS_WITH_AS(graph_subgroup({m3, m3, notanti}), doctest::Contains("NotAntisymplectic"),
                         error);
}

TEST_CASE("classify_subgroup: the three classes") {
    FiniteSymplecticModule m2(ptype({2}));
    DirectSumModule ds = direct_sum(m2);

    // graph of an antisymplectic map is allowed
    FiniteSubgroup g = graph_subgroup({m2, m2, IntMat::identity(2)});
    CHECK(classify_subgroup(ds, g) == SubgroupClass::Allowed);

    // the full first factor contains a hyperbolic pair, pairing 1/2
    FiniteSubgroup facX(ds.sum, {ds.embed_first(m2.basis(0)), ds.embed_first(m2.basis(1))});
    CHECK(facX.order() == 4);
    CHECK(classify_subgroup(ds, facX) == SubgroupClass::NotIsotropic);

    // lambda^X, lambda^Y: isotropic, right order, but meets both factors
    FiniteSubgroup lam(ds.sum, {ds.embed_first(m2.basis(0)), ds.embed_second(m2.basis(0))});
    CHECK(lam.order() == 4);
    CHECK(classify_subgroup(ds, lam) == SubgroupClass::IsotropicNotAllowed);

    // isotropic but not maximal
    FiniteSubgroup small(ds.sum, {ds.sum.add(ds.embed_first(m2.basis(0)),
                                             ds.embed_second(m2.basis(0)))});
    CHECK(small.order() == 2);
    CHECK(classify_subgroup(ds, small) == SubgroupClass::IsotropicNotAllowed);
}

TEST_CASE("enumerate_allowed: counts and uniqueness") {
    CHECK(enumerate_allowed(ptype({1})).size() == 1);

    auto a2 = enumerate_allowed(ptype({2}));
    CHECK(a2.size() == 6); // |SL_2(F_2)|
    auto a3 = enumerate_allowed(ptype({3}));
    CHECK(a3.size() == 24); // |SL_2(Z/3)|

    std::set<std::string> keys;
    for (const auto& k : a2) keys.insert(key_of(k));
    CHECK(keys.size() == a2.size());

    // invariance under unit divisors
    CHECK(enumerate_allowed(ptype({1, 2})).size() == 6);
    CHECK(enumerate_allowed(ptype({1, 1, 3})).size() == 24);

    CHECK(enumerate_allowed(ptype({2, 2})).size() == 720); // |Sp_4(F_2)|

    CHECK_THROWS_WITH_AS(enumerate_allowed(ptype({65})), doctest::Contains("BoundExceeded"),
                         error);
}

TEST_CASE("enumerate_allowed matches brute-force subgroup enumeration") {
    for (auto D : {ptype({2}), ptype({3})}) {
        auto fast = enumerate_allowed(D);
        auto slow = brute_force_allowed(D);
        REQUIRE(fast.size() == slow.size());
        std::set<std::string> fk, sk;
        for (const auto& k : fast) fk.insert(key_of(k));
        for (const auto& k : slow) sk.insert(key_of(k));
        CHECK(fk == sk);
    }
}

TEST_CASE("every allowed subgroup is the graph of a unique antisymplectic map") {
    for (auto D : {ptype({2}), ptype({3}), ptype({4}), ptype({5}), ptype({6}), ptype({2, 2})}) {
        FiniteSymplecticModule X(D);
        DirectSumModule ds = direct_sum(X);
        auto allowed = enumerate_allowed(D);
        auto elems = X.elements();
        for (const auto& K : allowed) {
            IntMat F(X.coord_count(), X.coord_count());
            for (int j = 0; j < X.coord_count(); ++j) {
                FsElement b = X.basis(j);
                int hits = 0;
                for (const auto& y : elems)
                    if (K.contains(ds.sum.add(ds.embed_first(b), ds.embed_second(y)))) {
                        ++hits;
                        for (int i = 0; i < X.coord_count(); ++i) F(i, j) = y[i];
                    }
                REQUIRE(hits == 1);
            }
            AntisymplecticMap f{X, X, F};
            CHECK(is_antisymplectic(f));
            CHECK(graph_subgroup(f) == K);
        }
    }
}

TEST_CASE("antisymplectic maps are a torsor over the symplectic group") {
    for (auto D : {ptype({2}), ptype({3})}) {
        FiniteSymplecticModule X(D);
        auto maps = enumerate_antisymplectic(X, X);
        auto elems = X.elements();
        auto invert = [&](const AntisymplecticMap& g) {
            std::map<FsElement, FsElement> inv;
            for (const auto& x : elems) inv[g.apply(x)] = x;
            return inv;
        };
        for (const auto& f : maps)
            for (const auto& g : maps) {
                auto ginv = invert(g);
                // h = g^{-1} o f preserves the pairing on all pairs
                bool symplectic = true;
                for (const auto& x : elems)
                    for (const auto& y : elems) {
                        FsElement hx = ginv.at(f.apply(x)), hy = ginv.at(f.apply(y));
                        if (X.pairing(hx, hy) != X.pairing(x, y)) symplectic = false;
                    }
                CHECK(symplectic);
            }
    }
}

TEST_CASE("standard_allowed: orders and classification") {
    FiniteSubgroup s2 = standard_allowed(ptype({2}));
    CHECK(s2.order() == 4);
    CHECK(s2.canonical_generators().size() == 2);

    CHECK(standard_allowed(ptype({1, 2})) == s2);

    FiniteSubgroup s22 = standard_allowed(ptype({2, 2}));
    CHECK(s22.order() == 16);
    CHECK(s22.parent().order() == 256);

    for (auto D : {ptype({2}), ptype({3}), ptype({4}), ptype({8}), ptype({2, 2}), ptype({2, 4}),
                   ptype({1, 2}), ptype({2, 2, 2}), ptype({3, 3}), ptype({2, 2, 4}),
                   ptype({64}), ptype({1, 1})}) {
        FiniteSymplecticModule X(D);
        DirectSumModule ds = direct_sum(X);
        CHECK(classify_subgroup(ds, standard_allowed(D)) == SubgroupClass::Allowed);
    }
}
