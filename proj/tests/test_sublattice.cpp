#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhom/subspace.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace lhom;
using testutil::random_mat;
using testutil::random_subspace;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);
}  // namespace

TEST_CASE("containment on the stated examples") {
    const Subspace bot = Subspace::bottom(F2, 2);
    const Subspace top = Subspace::top(F2, 2);
    const Subspace diag = Subspace::from_span(Mat::from_ints(F2, {{1}, {1}}));
    const Subspace e0 = Subspace::from_span(Mat::from_ints(F2, {{1}, {0}}));

    CHECK(leq(bot, diag));
    CHECK(leq(bot, top));
    CHECK(!leq(top, diag));
    CHECK(leq(diag, top));
    CHECK(!leq(diag, e0));
    CHECK_THROWS_AS((void)leq(diag, Subspace::top(F2, 3)), InputError);
    CHECK_THROWS_AS((void)leq(diag, Subspace::top(F3, 2)), InputError);
}

TEST_CASE("join and meet on the stated examples") {
    const Subspace bot = Subspace::bottom(F2, 2);
    const Subspace top = Subspace::top(F2, 2);
    const Subspace e0 = Subspace::from_span(Mat::from_ints(F2, {{1}, {0}}));
    const Subspace e1 = Subspace::from_span(Mat::from_ints(F2, {{0}, {1}}));
    const Subspace diag = Subspace::from_span(Mat::from_ints(F2, {{1}, {1}}));

    CHECK(join(e0, bot) == e0);
    CHECK(join(e0, top) == top);
    CHECK(join(e0, e1) == top);
    CHECK(meet(e0, top) == e0);
    CHECK(meet(e0, bot) == bot);
    CHECK(meet(e0, diag) == bot);
}

TEST_CASE("direct and inverse image on the stated examples") {
    const Mat sum = Mat::from_ints(F2, {{1, 1}});
    CHECK(direct_image(sum, Subspace::bottom(F2, 2)) == Subspace::bottom(F2, 1));
    CHECK(direct_image(Mat::identity(F2, 2),
                       Subspace::from_span(Mat::from_ints(F2, {{1}, {1}}))) ==
          Subspace::from_span(Mat::from_ints(F2, {{1}, {1}})));
    CHECK(direct_image(sum, Subspace::top(F2, 2)) == Subspace::top(F2, 1));
    CHECK(inverse_image(sum, Subspace::top(F2, 1)) == Subspace::top(F2, 2));
    CHECK(inverse_image(Mat::identity(F2, 2), Subspace::bottom(F2, 2)) == Subspace::bottom(F2, 2));
    CHECK(inverse_image(sum, Subspace::bottom(F2, 1)) ==
          Subspace::from_span(Mat::from_ints(F2, {{1}, {1}})));
    CHECK_THROWS_AS(direct_image(sum, Subspace::top(F2, 3)), InputError);
    CHECK_THROWS_AS(inverse_image(sum, Subspace::top(F2, 2)), InputError);
}

TEST_CASE("ambient dimension zero is legal and unique") {
    const Subspace z = Subspace::top(Q, 0);
    CHECK(z == Subspace::bottom(Q, 0));
    CHECK(z.dim() == 0);
    CHECK(leq(z, z));
    CHECK(join(z, z) == z);
}

TEST_CASE("modularity, adjunction, unit and counit, preservation, monotonicity") {
    std::mt19937_64 rng(10);
    for (const FieldSpec f : {Q, F2, F3}) {
        for (int it = 0; it < 400; ++it) {
            const std::size_t n = 1 + draw(rng, 6), m = 1 + draw(rng, 6);
            const Mat fm = random_mat(f, m, n, rng);
            const Subspace s = random_subspace(f, n, rng);
            const Subspace s2 = random_subspace(f, n, rng);
            const Subspace t = random_subspace(f, m, rng);
            const Subspace t2 = random_subspace(f, m, rng);

            // modularity, with the first argument forced below the third
            const Subspace z = s2;
            const Subspace x = meet(random_subspace(f, n, rng), z);
            CHECK(join(x, meet(s, z)) == meet(join(x, s), z));

            // adjunction
            CHECK(leq(direct_image(fm, s), t) == leq(s, inverse_image(fm, t)));

            // unit and counit
            const Subspace ker = Subspace::from_span(kernel(fm));
            const Subspace im = Subspace::from_span(image(fm));
            CHECK(inverse_image(fm, direct_image(fm, s)) == join(s, ker));
            CHECK(direct_image(fm, inverse_image(fm, t)) == meet(t, im));

            // join / meet preservation
            CHECK(direct_image(fm, join(s, s2)) ==
                  join(direct_image(fm, s), direct_image(fm, s2)));
            CHECK(inverse_image(fm, meet(t, t2)) ==
                  meet(inverse_image(fm, t), inverse_image(fm, t2)));

            // monotonicity
            const Subspace s_sub = meet(s, s2);
            CHECK(leq(direct_image(fm, s_sub), direct_image(fm, s)));
            const Subspace t_sub = meet(t, t2);
            CHECK(leq(inverse_image(fm, t_sub), inverse_image(fm, t)));
        }
    }
}

TEST_CASE("every operation agrees with enumeration over F2") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = 1 + draw(rng, 4), m = 1 + draw(rng, 4);
        const Mat fm = random_mat(F2, m, n, rng);
        const Subspace s = random_subspace(F2, n, rng);
        const Subspace s2 = random_subspace(F2, n, rng);
        const Subspace t = random_subspace(F2, m, rng);

        const auto S = oracle::members(s), S2 = oracle::members(s2), T = oracle::members(t);
        CHECK(oracle::members(join(s, s2)) == oracle::join_set(n, S, S2));
        CHECK(oracle::members(meet(s, s2)) == oracle::meet_set(S, S2));
        CHECK(leq(s, s2) == oracle::leq_set(S, S2));
        CHECK(oracle::members(direct_image(fm, s)) == oracle::direct_image_set(fm, S));
        CHECK(oracle::members(inverse_image(fm, t)) == oracle::inverse_image_set(fm, n, T));
        CHECK(oracle::members(Subspace::from_span(kernel(fm))) == oracle::kernel_set(fm));
        CHECK(oracle::members(Subspace::from_span(image(fm))) == oracle::image_set(fm));
    }
}

TEST_CASE("canonical form is a byte-level subobject equality") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 1 + draw(rng, 5);
        const Subspace s = random_subspace(Q, n, rng);
        // re-span from a scrambled generating set
        Mat gens = Mat::hstack(s.basis(), s.basis().scaled(Scalar::parse(Q, "2/3")));
        CHECK(Subspace::from_span(gens) == s);
        CHECK(leq(s, s));
    }
}
