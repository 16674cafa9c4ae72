#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "humbert/json_io.hpp"
#include "humbert/sampling.hpp"

using namespace humbert;

TEST_CASE("rational strings: canonical round-trip") {
    CHECK(rat_to_string(mpq_class(1, 2)) == "1/2");
    CHECK(rat_to_string(mpq_class(-3, 1)) == "-3");
    CHECK(rat_from_string("4/6") == mpq_class(2, 3)); // parse canonicalizes
    CHECK(rat_from_string("-0") == 0);

    CHECK_THROWS_WITH_AS(rat_from_string(""), doctest::Contains("MalformedInput"), error);
    CHECK_THROWS_WITH_AS(rat_from_string("1/0"), doctest::Contains("MalformedInput"), error);
    CHECK_THROWS_WITH_AS(rat_from_string("1.5"), doctest::Contains("MalformedInput"), error);
    CHECK_THROWS_WITH_AS(rat_from_string("1/2/3"), doctest::Contains("MalformedInput"), error);
    CHECK_THROWS_WITH_AS(rat_from_string("a"), doctest::Contains("MalformedInput"), error);
    CHECK_THROWS_WITH_AS(rat_from_string("1/"), doctest::Contains("MalformedInput"), error);
}

TEST_CASE("decimal rendering never replaces the exact form") {
    CHECK(decimal_string(mpq_class(1, 3), 4) == "0.3333");
    CHECK(decimal_string(mpq_class(-1, 3), 4) == "-0.3333");
    CHECK(decimal_string(mpq_class(1, 2), 1) == "0.5");
    CHECK(decimal_string(mpq_class(5), 2) == "5.00");
    CHECK(decimal_string(mpq_class(2, 3), 2) == "0.67");

    GaussMat m(1, 1);
    m(0, 0) = GaussianRational(mpq_class(1, 3), mpq_class(-1, 7));
    json j = to_json(m, 3);
    CHECK(j[0][0]["re"] == "1/3");
    CHECK(j[0][0]["re_dec"] == "0.333");
    CHECK(j[0][0]["im_dec"] == "-0.143");
    // decimals are ignored on parse; the exact form round-trips
    CHECK(gauss_mat_from_json(j) == m);
}

TEST_CASE("parse . emit is the identity on random matrices") {
    SiegelSampler s(7);
    for (int it = 0; it < 20; ++it) {
        int r = 1 + int(s.rng() % 3), c = 1 + int(s.rng() % 3);
        IntMat a(r, c);
        RatMat q(r, c);
        GaussMat z(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                a(i, j) = long(s.rng() % 2001) - 1000;
                q(i, j) = s.random_rational(40);
                z(i, j) = GaussianRational(s.random_rational(40), s.random_rational(40));
            }
        CHECK(int_mat_from_json(to_json(a)) == a);
        CHECK(rat_mat_from_json(to_json(q)) == q);
        CHECK(gauss_mat_from_json(to_json(z)) == z);

        // byte-identical emission after a round-trip
        CHECK(to_json(gauss_mat_from_json(to_json(z))).dump() == to_json(z).dump());
    }

    PolarizationType D = PolarizationType::parse("1,2,4");
    CHECK(type_from_json(to_json(D)) == D);
}

TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_WITH_AS(int_mat_from_json(json::parse("[[1]]")),
                         doctest::Contains("MalformedInput"), error); // numbers, not strings
    CHECK_THROWS_WITH_AS(int_mat_from_json(json::parse(R"([["1"],["2","3"]])")),
                         doctest::Contains("MalformedInput"), error); // ragged
    CHECK_THROWS_WITH_AS(int_mat_from_json(json::parse(R"([["1/2"]])")),
                         doctest::Contains("MalformedInput"), error); // not an integer
    CHECK_THROWS_WITH_AS(gauss_mat_from_json(json::parse(R"([[{"re":"1"}]])")),
                         doctest::Contains("MalformedInput"), error); // missing im
    CHECK_THROWS_WITH_AS(type_from_json(json::parse(R"(["2"])")),
                         doctest::Contains("MalformedInput"), error);
}

TEST_CASE("report and equation serialization") {
    GaussMat z(2, 2);
    z(0, 0) = GaussianRational(mpq_class(0), mpq_class(2));
    z(0, 1) = z(1, 0) = GaussianRational(mpq_class(0), mpq_class(1));
    z(1, 1) = GaussianRational(mpq_class(0), mpq_class(1));
    PolarizedTorus A(SiegelMatrix(z), PolarizationType::ones(2));
    IntMat C(4, 2);
    C(0, 0) = 1;
    C(2, 1) = 2;
    C(3, 1) = 1;
    json rep = to_json(certify_nonsimple(A, C, PolarizationType::parse("2")));
    CHECK(rep["passed"] == true);
    CHECK(rep["type"] == json::array({2}));
    CHECK(rep.contains("restricted_gram"));

    json eq = to_json(locus_equations(2, 1, PolarizationType::parse("2")));
    CHECK(eq.dump() == R"({"proportionality":[[1,1,2]],"vanishing":[]})");
}
