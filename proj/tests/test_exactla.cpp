#include <catch2/catch_amalgamated.hpp>

#include "siltlab/matrix.hpp"

using namespace siltlab;

static QMat mat(std::size_t r, std::size_t c, std::vector<long> vals) {
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(vals[i * c + j]);
    return m;
}

TEST_CASE("rank") {
    CHECK(QMat::identity(2).rank() == 2);
    CHECK(QMat(3, 4).rank() == 0);
    CHECK(mat(2, 2, {1, 2, 2, 4}).rank() == 1);
}

TEST_CASE("kernel basis") {
    CHECK(QMat::identity(3).kernel_basis().empty());
    auto kb = QMat(4, 4).kernel_basis();
    REQUIRE(kb.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(kb[i][i] == 1);

    auto k = mat(1, 2, {1, 1}).kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * Rat(-1) == k[0][1]);
}

TEST_CASE("solve") {
    QVec b = {Rat(3), Rat(-2)};
    auto x = QMat::identity(2).solve(b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(QMat(2, 2).solve(b).has_value());

    auto y = mat(1, 1, {2}).solve({Rat(1)});
    REQUIRE(y);
    CHECK((*y)[0] == Rat(1, 2));

    CHECK_THROWS_AS(QMat(2, 3).solve({Rat(1)}), DimensionMismatch);
}

TEST_CASE("rank-nullity and exact solutions on pseudo-random matrices") {
    for (unsigned long seed = 1; seed <= 20; ++seed) {
        DetRng rng(seed);
        std::size_t r = (std::size_t)rng.next(1, 5), c = (std::size_t)rng.next(1, 5);
        QMat m(r, c);
        for (auto& e : m.entries()) e = rat(rng.next(-4, 4), rng.next(1, 3));
        CHECK(m.rank() + m.kernel_basis().size() == c);
        for (const auto& k : m.kernel_basis()) {
            for (const auto& v : m.apply(k)) CHECK(v == 0);
        }
        QVec x(c);
        for (auto& e : x) e = Rat(rng.next(-3, 3));
        QVec b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("elimination is deterministic") {
    QMat m = mat(3, 3, {0, 1, 2, 1, 1, 1, 2, 3, 4});
    auto k1 = m.kernel_basis();
    auto k2 = m.kernel_basis();
    CHECK(k1 == k2);
    QMat a = m;
    a.rref();
    QMat b = m;
    b.rref();
    CHECK(a == b);
}

TEST_CASE("inverse") {
    QMat m = mat(2, 2, {1, 2, 3, 5});
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv) == QMat::identity(2));
    CHECK_FALSE(mat(2, 2, {1, 2, 2, 4}).inverse().has_value());
}
