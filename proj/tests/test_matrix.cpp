#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "humbert/matrix.hpp"

using namespace humbert;

namespace {

IntMat make_int(std::initializer_list<std::initializer_list<long>> rows) {
    int m = int(rows.size());
    int n = m ? int(rows.begin()->size()) : 0;
    IntMat a(m, n);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) a(i, j++) = v;
        ++i;
    }
    return a;
}

} // namespace

TEST_CASE("gaussian rational arithmetic is exact") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z + (-z) == GaussianRational(0));
    CHECK((z * z.conj()).re == z.norm());
    CHECK((z * z.conj()).im == 0);
}

TEST_CASE("matrix product and transpose") {
    IntMat a = make_int({{1, 2}, {3, 4}});
    IntMat b = make_int({{0, 1}, {1, 0}});
    CHECK(a * b == make_int({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == make_int({{1, 3}, {2, 4}}));
    CHECK(IntMat::identity(2) * a == a);
}

TEST_CASE("rational elimination: rank, det, inverse") {
    RatMat a = to_rat(make_int({{2, 1}, {1, 3}}));
    CHECK(mat_det(a) == 5);
    CHECK(mat_rank(a) == 2);
    RatMat inv = mat_inverse(a);
    CHECK(a * inv == RatMat::identity(2));

    RatMat sing = to_rat(make_int({{1, 2}, {2, 4}}));
    CHECK(mat_rank(sing) == 1);
    CHECK(mat_det(sing) == 0);
}

TEST_CASE("gaussian elimination over Q(i)") {
    GaussMat a(2, 2);
    a(0, 0) = GaussianRational::i();
    a(0, 1) = GaussianRational(1);
    a(1, 0) = GaussianRational(1);
    a(1, 1) = GaussianRational::i();
    // det = i*i - 1 = -2
    CHECK(mat_det(a) == GaussianRational(-2));
    GaussMat inv = mat_inverse(a);
    CHECK(a * inv == GaussMat::identity(2));

    GaussMat dep(2, 2);
    dep(0, 0) = GaussianRational(1);
    dep(0, 1) = GaussianRational::i();
    dep(1, 0) = GaussianRational::i();
    dep(1, 1) = GaussianRational(-1); // second row = i * first row
    CHECK(mat_rank(dep) == 1);
}

TEST_CASE("solve recovers exact solutions") {
    RatMat a = to_rat(make_int({{1, 2}, {0, 1}, {1, 0}}));
    RatMat x = to_rat(make_int({{5}, {-7}}));
    auto sol = mat_solve(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(*sol == x);

    // inconsistent system
    RatMat b = to_rat(make_int({{1}, {1}, {1}}));
    RatMat a2 = to_rat(make_int({{1}, {1}, {0}}));
    CHECK_FALSE(mat_solve(a2, b).has_value());
}
