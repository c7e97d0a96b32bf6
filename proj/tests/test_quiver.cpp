#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace siltlab;
using namespace siltlab::testutil;

TEST_CASE("validation") {
    CHECK_NOTHROW(Quiver(2, {{2, 1}}));
    CHECK_NOTHROW(Quiver(1, {}));
    CHECK_THROWS_AS(Quiver(1, {{1, 1}}), CyclicQuiver);
    CHECK_THROWS_AS(Quiver(2, {{1, 2}, {2, 1}}), CyclicQuiver);
    CHECK_THROWS_AS(Quiver(2, {{1, 3}}), BadIndex);
    CHECK_THROWS_AS(Quiver(0, {}), BadIndex);
}

TEST_CASE("topological order") {
    auto q = a3();
    auto topo = q->topo_order();
    // arrows 2->1, 3->2: sources precede targets
    CHECK(topo == std::vector<int>{3, 2, 1});
}

TEST_CASE("euler form") {
    auto q = a2();
    // <e_i, e_j> = delta_ij - #arrows(i -> j)
    CHECK(q->euler_form({1, 0}, {1, 0}) == 1);
    CHECK(q->euler_form({0, 1}, {1, 0}) == -1);
    CHECK(q->euler_form({1, 0}, {0, 1}) == 0);
    CHECK(q->euler_form({1, 1}, {1, 0}) == 0);
    CHECK_THROWS_AS(q->euler_form({1}, {1, 0}), DimensionMismatch);
}

TEST_CASE("euler form bilinearity") {
    auto q = d4();
    DetRng rng(5);
    for (int t = 0; t < 20; ++t) {
        DimVec a(4), b(4), c(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = rng.next(0, 3);
            b[i] = rng.next(0, 3);
            c[i] = rng.next(0, 3);
        }
        DimVec bc(4);
        for (int i = 0; i < 4; ++i) bc[i] = b[i] + c[i];
        CHECK(q->euler_form(a, bc) == q->euler_form(a, b) + q->euler_form(a, c));
        CHECK(q->euler_form(bc, a) == q->euler_form(b, a) + q->euler_form(c, a));
    }
}

TEST_CASE("dynkin classification") {
    CHECK(a2()->dynkin_type().name() == "A2");
    CHECK(a3()->dynkin_type().name() == "A3");
    CHECK(a3_alt()->dynkin_type().name() == "A3");
    CHECK(d4()->dynkin_type().name() == "D4");
    CHECK_FALSE(triangle()->dynkin_type().is_finite());
    CHECK_FALSE(Quiver(2, {{2, 1}, {2, 1}}).dynkin_type().is_finite());  // Kronecker
    CHECK_FALSE(a1a1()->dynkin_type().is_finite());                      // disconnected
    CHECK(Quiver(1, {}).dynkin_type().name() == "A1");
    // E6: path of 5 with one extra branch at the middle
    Quiver e6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
    CHECK(e6.dynkin_type().name() == "E6");
}

TEST_CASE("positive root counts") {
    CHECK(positive_roots(*a2()).size() == 3);
    CHECK(positive_roots(*a3()).size() == 6);
    CHECK(positive_roots(*a3_alt()).size() == 6);
    CHECK(positive_roots(*d4()).size() == 12);
}
