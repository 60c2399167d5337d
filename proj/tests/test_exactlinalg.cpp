#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhom/subspace.hpp"
#include "testutil.hpp"

using namespace lhom;
using testutil::random_mat;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F5 = FieldSpec::prime_field(5);
}  // namespace

TEST_CASE("field construction checks primality") {
    CHECK_THROWS_AS(FieldSpec::prime_field(1), InputError);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), InputError);
    CHECK_THROWS_AS(FieldSpec::prime_field(100), InputError);
    CHECK(FieldSpec::prime_field(2).characteristic() == 2);
    CHECK(FieldSpec::prime_field(2147483647).characteristic() == 2147483647u);
    CHECK(Q.is_rationals());
}

TEST_CASE("scalar text round trips and canonicalizes") {
    CHECK(Scalar::parse(Q, "2/4").str() == "1/2");
    CHECK(Scalar::parse(Q, "-6/-4").str() == "3/2");
    CHECK(Scalar::parse(Q, "6/-4").str() == "-3/2");
    CHECK(Scalar::parse(Q, "+5").str() == "5");
    CHECK(Scalar::parse(Q, "0/7").str() == "0");
    CHECK(Scalar::parse(F5, "-1").str() == "4");
    CHECK(Scalar::parse(F5, "12").str() == "2");
    CHECK(Scalar::parse(F5, "123456789012345678901234567890").str() == "0");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "a"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, ""), ParseError);
    CHECK_THROWS_AS(Scalar::parse(F5, "1/2"), ParseError);
}

TEST_CASE("scalar arithmetic is exact") {
    const Scalar a = Scalar::parse(Q, "1/3");
    const Scalar b = Scalar::parse(Q, "1/6");
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    for (long x = 1; x < 7; ++x) {
        const Scalar s = Scalar::of_int(FieldSpec::prime_field(7), x);
        CHECK((s * s.inverse()).is_one());
    }
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), InputError);
    CHECK_THROWS_AS((void)(Scalar::one(Q) + Scalar::one(F2)), InputError);
}

TEST_CASE("rref on the stated examples") {
    const Mat id3 = Mat::identity(Q, 3);
    const RrefResult r1 = rref(id3);
    CHECK(r1.mat == id3);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1, 2});

    const RrefResult r2 = rref(Mat::zero(Q, 2, 4));
    CHECK(r2.mat == Mat::zero(Q, 2, 4));
    CHECK(r2.pivots.empty());

    const Mat ones = Mat::from_ints(F2, {{1, 1}, {1, 1}});
    const RrefResult r3 = rref(ones);
    CHECK(r3.mat == Mat::from_ints(F2, {{1, 1}, {0, 0}}));
    CHECK(r3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 200; ++it) {
        const FieldSpec f = it % 2 ? Q : F5;
        const Mat m = random_mat(f, draw(rng, 6) + 1, draw(rng, 6) + 1, rng);
        const Mat r = rref(m).mat;
        CHECK(rref(r).mat == r);
    }
}

TEST_CASE("kernel on the stated examples") {
    CHECK(kernel(Mat::identity(Q, 4)).cols() == 0);
    CHECK(kernel(Mat::zero(Q, 3, 4)) == Mat::identity(Q, 4));

    const Mat m = Mat::from_ints(F2, {{1, 1}});
    const Mat k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(k == Mat::from_ints(F2, {{1}, {1}}));
    // enumeration over all four vectors of F2^2
    int null_count = 0;
    for (long x0 = 0; x0 < 2; ++x0)
        for (long x1 = 0; x1 < 2; ++x1) {
            const std::vector<Scalar> v{Scalar::of_int(F2, x0), Scalar::of_int(F2, x1)};
            const bool in_null = m.apply(v)[0].is_zero();
            if (in_null && (x0 || x1)) ++null_count;
            CHECK(in_null == ((x0 + x1) % 2 == 0));
        }
    CHECK(null_count == 1);
}

TEST_CASE("image on the stated examples") {
    CHECK(image(Mat::identity(Q, 3)) == Mat::identity(Q, 3));
    CHECK(image(Mat::zero(Q, 3, 2)).cols() == 0);
    CHECK(image(Mat::from_ints(Q, {{1}, {1}})) == Mat::from_ints(Q, {{1}, {1}}));
}

TEST_CASE("solve picks the rref parameterization with zero free variables") {
    std::mt19937_64 rng(2);
    const Mat id = Mat::identity(F5, 3);
    const std::vector<Scalar> b{Scalar::of_int(F5, 1), Scalar::of_int(F5, 2),
                                Scalar::of_int(F5, 3)};
    CHECK(solve(id, b) == b);

    const Mat zero = Mat::zero(Q, 2, 3);
    const std::vector<Scalar> nb{Scalar::one(Q), Scalar::zero(Q)};
    CHECK(!solve(zero, nb).has_value());

    const Mat m = Mat::from_ints(F2, {{1, 1}, {0, 0}});
    const std::vector<Scalar> rhs{Scalar::one(F2), Scalar::zero(F2)};
    const auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    CHECK((*x)[0].is_one());
    CHECK((*x)[1].is_zero());

    for (int it = 0; it < 100; ++it) {
        const FieldSpec f = it % 2 ? Q : F2;
        const Mat a = random_mat(f, 1 + draw(rng, 5), 1 + draw(rng, 5), rng);
        std::vector<Scalar> v;
        for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(testutil::random_scalar(f, rng));
        const auto sol = solve(a, a.apply(v));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(v));
    }
}

TEST_CASE("rank plus nullity is the column count") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        const FieldSpec f = it % 3 ? F5 : Q;
        const Mat m = random_mat(f, draw(rng, 7), draw(rng, 7), rng);
        CHECK(rank(m) + kernel(m).cols() == m.cols());
    }
}

TEST_CASE("composition shrinks images and grows kernels") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        const FieldSpec f = it % 2 ? Q : F2;
        const std::size_t a = 1 + draw(rng, 4), b = 1 + draw(rng, 4), c = 1 + draw(rng, 4);
        const Mat g = random_mat(f, c, b, rng);
        const Mat fm = random_mat(f, b, a, rng);
        const Mat gf = g * fm;
        CHECK(leq(Subspace::from_span(image(gf)), Subspace::from_span(image(g))));
        CHECK(leq(Subspace::from_span(kernel(fm)), Subspace::from_span(kernel(gf))));
    }
}

TEST_CASE("scaling over Q leaves canonical kernel and image unchanged") {
    std::mt19937_64 rng(5);
    const Scalar c = Scalar::parse(Q, "3/7");
    for (int it = 0; it < 100; ++it) {
        const Mat m = random_mat(Q, 1 + draw(rng, 5), 1 + draw(rng, 5), rng);
        CHECK(kernel(m) == kernel(m.scaled(c)));
        CHECK(image(m) == image(m.scaled(c)));
    }
}
