#include <catch2/catch_amalgamated.hpp>

#include "siltlab/cluster.hpp"
#include "test_helpers.hpp"

using namespace siltlab;
using namespace siltlab::testutil;

namespace {

// all (n-1)-summand m-rigid domain objects
std::vector<ClusterObject> almost_complete_objects(const std::shared_ptr<const Quiver>& q, int m) {
    auto dom = fundamental_domain(q, m);
    std::vector<ClusterObject> out;
    std::vector<std::size_t> idx(q->n() - 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == idx.size()) {
            std::vector<Stalk> stalks;
            for (auto k : idx) stalks.push_back(dom[k]);
            ClusterObject t = make_cluster_object(q, std::move(stalks), m);
            if (is_m_rigid(t)) out.push_back(std::move(t));
            return;
        }
        for (std::size_t k = start; k < dom.size(); ++k) {
            idx[pos] = k;
            rec(pos + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("fundamental domain sizes and membership") {
    auto q2 = a2();
    CHECK(fundamental_domain(q2, 1).size() == 5);
    CHECK(fundamental_domain(q2, 2).size() == 8);
    CHECK(fundamental_domain(a3(), 1).size() == 9);

    const auto& sm = standard_modules_cached(q2);
    CHECK(in_fundamental_domain(Stalk{sm.simp[0], 0}, 1));
    CHECK(in_fundamental_domain(Stalk{sm.proj[1], 1}, 1));       // projective at m
    CHECK_FALSE(in_fundamental_domain(Stalk{sm.simp[1], 1}, 1));  // non-projective at m
    CHECK_FALSE(in_fundamental_domain(Stalk{sm.simp[0], -1}, 1));
}

TEST_CASE("cluster shift moves degrees by at least m and inverts") {
    for (auto q : {a2(), a3(), d4()}) {
        for (int m : {1, 2}) {
            for (const auto& x : enumerate_indecomposables(q)) {
                Stalk s{x, 0};
                Stalk up = cluster_shift(s, m, false);
                CHECK(up.degree >= m);
                Stalk back = cluster_shift(up, m, true);
                CHECK(back.degree == 0);
                CHECK(back.module.dim() == x.dim());
            }
        }
    }
}

TEST_CASE("normalization into the fundamental domain") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);

    // already in the domain: unchanged
    DomainStalk d0 = normalize_to_domain_tracked(Stalk{sm.simp[0], 0}, 1);
    CHECK(d0.fpower == 0);
    CHECK(d0.stalk.degree == 0);

    // S_2[1] at m=1 normalizes to S_1[0]
    Stalk n1 = normalize_to_domain(Stalk{sm.simp[1], 1}, 1);
    CHECK(n1.module.dim() == DimVec{1, 0});
    CHECK(n1.degree == 0);

    // P_2[m+1] normalizes within one application
    for (int m : {1, 2, 3}) {
        DomainStalk nd = normalize_to_domain_tracked(Stalk{sm.proj[1], m + 1}, m);
        CHECK(nd.fpower == -1);
        CHECK(in_fundamental_domain(nd.stalk, m));
    }
}

TEST_CASE("orbit-sum Ext in C_1 on A_2") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);
    Stalk s1{sm.simp[0], 0}, s2{sm.simp[1], 0}, p2{sm.proj[1], 0};
    CHECK(ext_cm_dim(s1, p2, 1, 1) == 0);
    CHECK(ext_cm_dim(s1, s2, 1, 1) == 1);
    CHECK(ext_cm_dim(s2, s1, 1, 1) == 1);

    // the j = -1 component carries Ext^1_{C_1}(S_1, S_2)
    auto comps = hom_cm_components(s1, Stalk{sm.simp[1], 1}, 1);
    REQUIRE(comps.size() == 1);
    CHECK(comps.begin()->first == -1);
    CHECK(classify_map(comps.begin()->first) == MapClass::FMap);
    CHECK(classify_map(0) == MapClass::DMap);
}

TEST_CASE("2-Calabi-Yau symmetry of Ext^1 in C_1") {
    for (auto q : {a2(), a3()}) {
        auto dom = fundamental_domain(q, 1);
        for (const auto& x : dom)
            for (const auto& y : dom) CHECK(ext_cm_dim(x, y, 1, 1) == ext_cm_dim(y, x, 1, 1));
    }
}

TEST_CASE("self-Ext vanishing in D iff in C_m, on all domain pairs") {
    auto run = [](const std::shared_ptr<const Quiver>& q, int m) {
        auto dom = fundamental_domain(q, m);
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = i; j < dom.size(); ++j) {
                if (i == j) continue;
                std::vector<Stalk> pair = {dom[i], dom[j]};
                if (pair[0].degree == pair[1].degree && is_isomorphic(pair[0].module, pair[1].module))
                    continue;
                bool d_side = true;
                for (const auto& a : pair)
                    for (const auto& b : pair)
                        for (int k = 1; k <= m; ++k)
                            if (hom_d_dim(a.module, a.degree, b.module, b.degree + k) != 0) d_side = false;
                bool c_side = is_m_rigid(make_cluster_object(q, pair, m));
                CHECK(d_side == c_side);
            }
    };
    for (int m : {1, 2, 3}) run(a2(), m);
    for (int m : {1, 2}) run(a3(), m);
}

TEST_CASE("silting iff m-cluster tilting for domain candidates") {
    auto run = [](const std::shared_ptr<const Quiver>& q, int m) {
        auto dom = fundamental_domain(q, m);
        int n = q->n();
        std::vector<std::size_t> idx((std::size_t)n);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == idx.size()) {
                std::vector<Stalk> stalks;
                for (auto k : idx) stalks.push_back(dom[k]);
                bool silt = is_silting(make_candidate(q, stalks));
                bool tilt = is_m_cluster_tilting(make_cluster_object(q, stalks, m));
                CHECK(silt == tilt);
                return;
            }
            for (std::size_t k = start; k < dom.size(); ++k) {
                idx[pos] = k;
                rec(pos + 1, k + 1);
            }
        };
        rec(0, 0);
    };
    for (int m : {1, 2, 3}) run(a2(), m);
    for (int m : {1, 2}) run(a3(), m);
}

TEST_CASE("partial silting iff m-rigid on domain pairs") {
    auto run = [](const std::shared_ptr<const Quiver>& q, int m) {
        auto dom = fundamental_domain(q, m);
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = i + 1; j < dom.size(); ++j) {
                if (dom[i].degree == dom[j].degree && is_isomorphic(dom[i].module, dom[j].module)) continue;
                std::vector<Stalk> pair = {dom[i], dom[j]};
                CHECK(is_partial_silting(make_candidate(q, pair)) ==
                      is_m_rigid(make_cluster_object(q, pair, m)));
            }
    };
    for (int m : {1, 2, 3}) run(a2(), m);
    for (int m : {1, 2}) run(a3(), m);
}

TEST_CASE("S_1 + P_2 is cluster tilting in C_1 on A_2") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);
    ClusterObject t = make_cluster_object(q, {Stalk{sm.simp[0], 0}, Stalk{sm.proj[1], 0}}, 1);
    CHECK(is_m_cluster_tilting(t));
    ClusterObject single = make_cluster_object(q, {Stalk{sm.simp[0], 0}}, 1);
    CHECK(is_m_rigid(single));
    CHECK_FALSE(is_m_cluster_tilting(single));
}

TEST_CASE("complements of P_2 on A_2") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);

    ClusterObject tb1 = make_cluster_object(q, {Stalk{sm.proj[1], 0}}, 1);
    auto c1 = cluster_complements(tb1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].module.dim() == DimVec{1, 0});
    CHECK(c1[0].degree == 0);
    CHECK(c1[1].module.dim() == DimVec{0, 1});
    CHECK(c1[1].degree == 0);

    ClusterObject tb2 = make_cluster_object(q, {Stalk{sm.proj[1], 0}}, 2);
    CHECK(cluster_complements(tb2).size() == 3);
}

TEST_CASE("exchange chain for P_2 on A_2 at m=1") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);
    ClusterObject tbar = make_cluster_object(q, {Stalk{sm.proj[1], 0}}, 1);
    ExchangeChain chain = exchange_triangles(tbar);
    REQUIRE(chain.complements.size() == 2);
    REQUIRE(chain.triangles.size() == 2);

    // S_1 -> P_2 -> S_2 in D
    const auto& tri = chain.triangles[0];
    CHECK(tri.d_triangle);
    REQUIRE(tri.middle.size() == 1);
    CHECK(tri.middle[0].module.dim() == DimVec{1, 1});
    CHECK(tri.orbit_indices[0] == 0);
    CHECK(tri.mstar.module.dim() == DimVec{1, 0});

    // wrap-around S_2 -> 0 -> S_1 with the connecting iso S_1 = S_2[1] in C_1
    const auto& wrap = chain.triangles[1];
    CHECK_FALSE(wrap.d_triangle);
    CHECK(wrap.middle.empty());
    CHECK(wrap.shift != 0);
    CHECK(wrap.mstar_d.degree == -1);  // S_1[-1] before normalization
    CHECK(wrap.mstar.module.dim() == DimVec{0, 1});
    CHECK(wrap.mstar.degree == 0);
}

TEST_CASE("complement laws and exchange chains across small categories") {
    auto run = [](const std::shared_ptr<const Quiver>& q, int m) {
        for (const auto& tbar : almost_complete_objects(q, m)) {
            ExchangeChain chain = exchange_triangles(tbar);  // asserts count, degrees, chain
            REQUIRE((int)chain.complements.size() == m + 1);
            for (const auto& tri : chain.triangles) {
                CHECK(dmap_criterion_holds(tri, m));
                // middle terms lie in add T-bar up to the orbit identification
                for (const auto& b : tri.middle) {
                    Stalk rep = normalize_to_domain(b, m);
                    bool found = false;
                    for (const auto& s : tbar.summands)
                        if (s.degree == rep.degree && s.module.dim() == rep.module.dim()) found = true;
                    CHECK(found);
                }
            }
        }
    };
    for (int m : {1, 2, 3}) run(a2(), m);
    for (int m : {1, 2}) run(a3(), m);
    run(d4(), 1);
}

TEST_CASE("cluster object validation") {
    auto q = a2();
    const auto& sm = standard_modules_cached(q);
    CHECK_THROWS_AS(make_cluster_object(q, {Stalk{sm.simp[1], 1}}, 1), BadIndex);
    CHECK_THROWS_AS(make_cluster_object(q, {Stalk{sm.simp[0], 0}, Stalk{sm.simp[0], 0}}, 1),
                    DimensionMismatch);
    CHECK_THROWS_AS(fundamental_domain(q, 0), BadIndex);
}
