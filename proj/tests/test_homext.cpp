#include <catch2/catch_amalgamated.hpp>

#include "siltlab/homext.hpp"
#include "test_helpers.hpp"

using namespace siltlab;
using namespace siltlab::testutil;

TEST_CASE("decorations on A_2") {
    auto q = a2();
    auto sm = standard_modules(q);
    const Rep &p2 = sm.proj[1], &s1 = sm.simp[0], &s2 = sm.simp[1];

    HomExtQuiver g1 = build_homext({s1, p2});
    REQUIRE(g1.arrows.size() == 1);
    CHECK(g1.has_arrow(0, 1, Decoration::Mono));

    HomExtQuiver g2 = build_homext({p2, s2});
    REQUIRE(g2.arrows.size() == 1);
    CHECK(g2.has_arrow(0, 1, Decoration::Epi));

    // (S_2, S_1): Homs vanish; Ext^1(S_2,S_1) = 1 gives an x-arrow S_1 -> S_2
    HomExtQuiver g3 = build_homext({s2, s1});
    REQUIRE(g3.arrows.size() == 1);
    CHECK(g3.has_arrow(1, 0, Decoration::Ext));
}

TEST_CASE("acyclicity and connectedness on all complete sequences") {
    for (auto q : {a2(), a3(), d4()}) {
        for (const auto& s : enumerate_complete_sequences(q)) {
            HomExtQuiver g = build_homext(s);
            CHECK(is_acyclic(g));
            CHECK(is_connected(g));
        }
    }
}

TEST_CASE("disconnected algebra gives a disconnected Hom-Ext quiver") {
    auto q = a1a1();
    auto sm = standard_modules(q);
    HomExtQuiver g = build_homext({sm.simp[0], sm.simp[1]});
    CHECK(g.arrows.empty());
    CHECK_FALSE(is_connected(g));
    CHECK(is_acyclic(g));
}

TEST_CASE("artificial cycle is detected") {
    auto q = a2();
    auto sm = standard_modules(q);
    HomExtQuiver g{{sm.simp[0], sm.simp[1]}, {{0, 1, Decoration::Mono}, {1, 0, Decoration::Ext}}};
    CHECK_FALSE(is_acyclic(g));
}

TEST_CASE("no pair carries arrows of both Hom and Ext origin in both directions") {
    for (auto q : {a2(), a3()}) {
        for (const auto& s : enumerate_complete_sequences(q))
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (i == j) continue;
                    bool hom_ij = hom_dim(s[i], s[j]) != 0;
                    bool ext_ij = ext1_dim(s[i], s[j]) != 0;
                    CHECK_FALSE((hom_ij && ext_ij));
                }
    }
}

TEST_CASE("composition rules over all triples of all sequences") {
    for (auto q : {a2(), a3(), d4()}) {
        for (const auto& s : enumerate_complete_sequences(q)) {
            HomExtQuiver g = build_homext(s);
            std::size_t n = s.size();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) {
                        if (a == b || b == c || a == c) continue;
                        // (a) an e-arrow followed by an m-arrow never happens
                        CHECK_FALSE((g.has_arrow(a, b, Decoration::Epi) && g.has_arrow(b, c, Decoration::Mono)));
                        // (b) m-arrows compose to m-arrows
                        if (g.has_arrow(a, b, Decoration::Mono) && g.has_arrow(b, c, Decoration::Mono))
                            CHECK(g.has_arrow(a, c, Decoration::Mono));
                        // (c) e-arrows compose to e-arrows
                        if (g.has_arrow(a, b, Decoration::Epi) && g.has_arrow(b, c, Decoration::Epi))
                            CHECK(g.has_arrow(a, c, Decoration::Epi));
                        // (d) e then x gives x
                        if (g.has_arrow(a, b, Decoration::Epi) && g.has_arrow(b, c, Decoration::Ext))
                            CHECK(g.has_arrow(a, c, Decoration::Ext));
                        // (e) x then m gives x
                        if (g.has_arrow(a, b, Decoration::Ext) && g.has_arrow(b, c, Decoration::Mono))
                            CHECK(g.has_arrow(a, c, Decoration::Ext));
                        // (f) any arrow followed by an m-arrow gives an arrow
                        if (g.has_any_arrow(a, b) && g.has_arrow(b, c, Decoration::Mono))
                            CHECK(g.has_any_arrow(a, c));
                    }
        }
    }
}

TEST_CASE("dot output is deterministic and well formed") {
    auto q = a2();
    auto sm = standard_modules(q);
    HomExtQuiver g = build_homext({sm.simp[0], sm.proj[1]});
    std::string d1 = emit_dot(g), d2 = emit_dot(g);
    CHECK(d1 == d2);
    CHECK(d1.find("digraph") != std::string::npos);
    CHECK(d1.find("label=\"m\"") != std::string::npos);
    CHECK(emit_dot(HomExtQuiver{{}, {}}) == "digraph homext {\n}\n");
}
