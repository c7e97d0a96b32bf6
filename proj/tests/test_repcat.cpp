#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace siltlab;
using namespace siltlab::testutil;

TEST_CASE("standard modules on A_2") {
    auto q = a2();
    auto sm = standard_modules(q);
    CHECK(sm.proj[1].dim() == DimVec{1, 1});  // P_2
    CHECK(sm.proj[0].dim() == DimVec{1, 0});
    CHECK(sm.simp[0].dim() == DimVec{1, 0});
    CHECK(sm.simp[1].dim() == DimVec{0, 1});
    CHECK(sm.inj[0].dim() == DimVec{1, 1});  // I_1 = P_2
    CHECK(sm.inj[1].dim() == DimVec{0, 1});
}

TEST_CASE("standard modules on the rank-3 triangle quiver") {
    auto q = triangle();
    auto sm = standard_modules(q);
    // two paths 3 => 1 (direct arrow and 3->2->1)
    CHECK(sm.proj[2].dim() == DimVec{2, 1, 1});
    CHECK(sm.proj[1].dim() == DimVec{1, 1, 0});
    CHECK(sm.proj[0].dim() == DimVec{1, 0, 0});
}

TEST_CASE("hom dimensions on A_2") {
    auto q = a2();
    auto sm = standard_modules(q);
    const Rep &p2 = sm.proj[1], &s1 = sm.simp[0], &s2 = sm.simp[1];
    CHECK(hom_dim(p2, p2) == 1);
    CHECK(hom_dim(s1, p2) == 1);
    CHECK(hom_dim(p2, s1) == 0);
    CHECK(hom_dim(p2, s2) == 1);
    CHECK(hom_dim(s2, p2) == 0);
    CHECK(hom_dim(s1, s2) == 0);
}

TEST_CASE("ext dimensions on A_2") {
    auto q = a2();
    auto sm = standard_modules(q);
    const Rep &p1 = sm.proj[0], &p2 = sm.proj[1], &s1 = sm.simp[0], &s2 = sm.simp[1];
    CHECK(ext1_dim(s2, s1) == 1);
    CHECK(ext1_dim(s1, s2) == 0);
    for (const Rep& x : {p1, p2, s1, s2}) {
        CHECK(ext1_dim(p1, x) == 0);
        CHECK(ext1_dim(p2, x) == 0);
    }
}

TEST_CASE("Euler-identity Ext agrees with resolution-based Ext") {
    for (auto q : {a2(), a3(), a3_alt()}) {
        auto sm = standard_modules(q);
        auto indecs = enumerate_indecomposables(q);
        for (const auto& x : indecs)
            for (const auto& y : indecs) CHECK(ext1_dim(x, y) == ext1_dim_via_resolution(sm, x, y));
    }
}

TEST_CASE("kernel and cokernel") {
    auto q = a2();
    auto sm = standard_modules(q);
    const Rep &p2 = sm.proj[1], &s1 = sm.simp[0];

    SECTION("zero map") {
        Morphism z = Morphism::zero(s1, p2);
        auto [ker, ki] = morphism_kernel(z);
        CHECK(ker.dim() == s1.dim());
        auto [cok, cp] = morphism_cokernel(z);
        CHECK(cok.dim() == p2.dim());
    }

    SECTION("embedding S_1 -> P_2") {
        auto maps = hom_basis(s1, p2);
        REQUIRE(maps.size() == 1);
        auto [ker, ki] = morphism_kernel(maps[0]);
        CHECK(ker.is_zero());
        auto [cok, cp] = morphism_cokernel(maps[0]);
        CHECK(cok.dim() == DimVec{0, 1});  // S_2
    }

    SECTION("P_2 -> P_3 on the triangle quiver has cokernel of dim (1,0,1)") {
        auto tq = triangle();
        auto tsm = standard_modules(tq);
        auto maps = hom_basis(tsm.proj[1], tsm.proj[2]);
        REQUIRE(maps.size() == 1);
        auto [cok, cp] = morphism_cokernel(maps[0]);
        CHECK(cok.dim() == DimVec{1, 0, 1});
    }
}

TEST_CASE("decompose") {
    auto q = a2();
    auto sm = standard_modules(q);
    CHECK(decompose(Rep::zero(q)).empty());

    auto parts = decompose(sm.proj[1]);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].second == 1);

    Rep p1p1 = power(sm.proj[0], 2);
    auto dd = decompose(p1p1);
    REQUIRE(dd.size() == 1);
    CHECK(dd[0].first.dim() == DimVec{1, 0});
    CHECK(dd[0].second == 2);

    Rep mix = direct_sum({sm.proj[1], sm.simp[1], sm.proj[1]}, q).sum;
    auto dm = decompose(mix);
    REQUIRE(dm.size() == 2);
    long tot = 0;
    for (auto& [r, m] : dm) tot += (long)m * r.total();
    CHECK(tot == mix.total());
}

TEST_CASE("decompose summands are indecomposable with consistent dims (D_4)") {
    auto q = d4();
    auto indecs = enumerate_indecomposables(q);
    REQUIRE(indecs.size() == 12);
    DetRng rng(3);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rep> parts;
        for (int k = 0; k < 3; ++k) parts.push_back(indecs[(std::size_t)rng.next(0, 11)]);
        Rep x = direct_sum(parts, q).sum;
        auto dec = decompose(x);
        DimVec total(4, 0);
        for (auto& [r, m] : dec) {
            CHECK(hom_dim(r, r) == 1);
            for (int v = 0; v < 4; ++v) total[v] += (long)m * r.dim()[v];
        }
        CHECK(total == x.dim());
    }
}

TEST_CASE("enumerate indecomposables") {
    CHECK(enumerate_indecomposables(a2()).size() == 3);
    CHECK(enumerate_indecomposables(a3()).size() == 6);
    CHECK(enumerate_indecomposables(d4()).size() == 12);
    CHECK_THROWS_AS(enumerate_indecomposables(triangle()), RepInfinite);
}

TEST_CASE("indecomposables are determined by their dimension vectors") {
    for (auto q : {a3(), d4()}) {
        auto indecs = enumerate_indecomposables(q);
        for (std::size_t i = 0; i < indecs.size(); ++i)
            for (std::size_t j = i + 1; j < indecs.size(); ++j) CHECK(indecs[i].dim() != indecs[j].dim());
        // brute-force cross-check: every indecomposable found by small search
        // has a positive-root dimension vector
        for (const auto& x : indecs) CHECK(q->tits_form(x.dim()) == 1);
    }
}

TEST_CASE("is_exceptional") {
    auto q = a2();
    auto sm = standard_modules(q);
    CHECK(is_exceptional(sm.proj[0]));
    CHECK(is_exceptional(sm.proj[1]));
    CHECK(is_exceptional(sm.simp[1]));
    CHECK_FALSE(is_exceptional(Rep::zero(q)));
    CHECK_FALSE(is_exceptional(power(sm.simp[0], 2)));
}

TEST_CASE("AR translate on A_2") {
    auto q = a2();
    auto sm = standard_modules(q);
    auto t = ar_translate(sm.simp[1]);  // tau S_2 = S_1
    CHECK(t.degree == 0);
    CHECK(t.module.dim() == DimVec{1, 0});

    auto tp = ar_translate(sm.proj[0]);  // tau P_1 = I_1[-1] = P_2[-1]
    CHECK(tp.degree == -1);
    CHECK(tp.module.dim() == DimVec{1, 1});

    auto ti = ar_translate(sm.simp[1], true);  // tau^{-1} S_2 = tau^{-1} I_2 = P_2[1]
    CHECK(ti.degree == 1);
    CHECK(ti.module.dim() == DimVec{1, 1});

    CHECK_THROWS_AS(ar_translate(power(sm.simp[0], 2)), NotIndecomposable);
}

TEST_CASE("AR/Serre duality: dim Ext^1(X,Y) = dim Hom(Y, tau X) for non-projective X") {
    for (auto q : {a3(), d4()}) {
        auto indecs = enumerate_indecomposables(q);
        const auto& cache = indec_cache(q);
        for (const auto& x : indecs) {
            if (cache.projective_vertex(x.dim()) != 0) continue;
            Stalk tx = ar_translate(x);
            REQUIRE(tx.degree == 0);
            for (const auto& y : indecs) CHECK(ext1_dim(x, y) == hom_dim(y, tx.module));
        }
    }
}

TEST_CASE("projective resolution") {
    auto q = a3();
    auto sm = standard_modules(q);
    for (const auto& x : enumerate_indecomposables(q)) {
        Resolution res = projective_resolution(sm, x);
        CHECK(res.eps.is_epi());
        CHECK(res.d.is_mono());
        CHECK(res.eps.compose_after(res.d).is_zero());
        // dim X = dim P0 - dim P1
        for (int v = 1; v <= 3; ++v) CHECK(res.p0.dim_at(v) - res.p1.dim_at(v) == x.dim_at(v));
    }
}

TEST_CASE("morphism validation") {
    auto q = a2();
    auto sm = standard_modules(q);
    // a non-commuting square must be rejected
    std::vector<QMat> comps = {QMat(0, 1), QMat::identity(1)};
    CHECK_THROWS_AS(Morphism(sm.simp[0], sm.simp[1], comps, true), DimensionMismatch);
}
