#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "siltlab/cluster.hpp"
#include "siltlab/homext.hpp"

namespace siltlab {

// Placement of an almost complete exceptional sequence (A_0, ..., A_{n-2})
// and its complements C_0, ..., C_{n-1} into the standard domain S_{n-1}:
// A_i goes to A_i[u_i], C_i to C_i[t_i], chosen level by level through the
// rules P1 (Hom(C_i, A_i) != 0), P2 (Ext^1(C_i, A_i) != 0) and P3 (orthogonal).

struct PlacementResult {
    std::shared_ptr<const Quiver> qp;
    ExcSeq seq;                   // A_0, ..., A_{n-2}
    std::vector<Rep> complements;  // C_0, ..., C_{n-1}
    std::vector<int> u;           // degrees of the A_i
    std::vector<int> t;           // degrees of the C_i
    std::vector<char> rules;      // '1', '2' or '3' per level
    std::vector<MutationTriangle> triangles;  // C_i -> A_i^{r_i}[v] -> C_{i+1}[w]
};

inline PlacementResult place_almost_complete(const std::shared_ptr<const Quiver>& qp, const ExcSeq& e) {
    int n = qp->n();
    if ((int)e.size() != n - 1) throw DimensionMismatch("need an almost complete sequence");
    if (!is_exceptional_sequence(e)) throw DimensionMismatch("not an exceptional sequence");

    PlacementResult out;
    out.qp = qp;
    out.seq = e;
    if (n == 1) {  // empty sequence: the unique complement is placed at degree 0
        out.complements = {standard_modules_cached(qp).proj[0]};
        out.t = {0};
        return out;
    }
    for (const auto& [pos, c] : complements_almost_complete(e)) out.complements.push_back(c);

    out.t.assign((std::size_t)n, 0);
    out.u.assign((std::size_t)n - 1, 0);
    for (int i = 0; i < n - 1; ++i) {
        const Rep& a = e[(std::size_t)i];
        const Rep& c = out.complements[(std::size_t)i];
        MutationTriangle tri = mutation_triangle(c, a);
        int ti = out.t[(std::size_t)i];
        char rule;
        if (hom_dim(c, a) != 0) {
            rule = '1';
            out.u[(std::size_t)i] = ti;
        } else if (ext1_dim(c, a) != 0) {
            rule = '2';
            out.u[(std::size_t)i] = ti + 1;
        } else {
            rule = '3';
            // minimal degree >= max(level-3, t_i) respecting the Ext constraints
            int d = std::max(i - 1, ti);
            auto blocked = [&](int cand) {
                if (i >= 1 && ext1_dim(e[(std::size_t)i - 1], a) != 0 && cand <= out.u[(std::size_t)i - 1])
                    return true;
                if (i >= 2 && ext1_dim(e[(std::size_t)i - 2], a) != 0 && cand <= out.u[(std::size_t)i - 2])
                    return true;
                return false;
            };
            while (blocked(d)) {
                ++d;
                if (d > n + 1) throw InternalInconsistency("P3 degree search exceeded its bound");
            }
            // minimality: one step lower violates the floor or a constraint
            if (d > std::max(i - 1, ti) && !blocked(d - 1))
                throw InternalInconsistency("P3 degree is not minimal");
            out.u[(std::size_t)i] = d;
        }
        if (rule == '3') {
            if (tri.r != 0 || tri.w != 1) throw InternalInconsistency("orthogonal level has a nonzero triangle");
        } else {
            if (out.u[(std::size_t)i] != ti + tri.v)
                throw InternalInconsistency("triangle shift disagrees with the placement rule");
        }
        out.t[(std::size_t)i + 1] = ti + tri.w;
        if (!is_isomorphic(tri.cprime, out.complements[(std::size_t)i + 1]))
            throw InternalInconsistency("mutation triangle does not reach the next complement");
        out.rules.push_back(rule);
        out.triangles.push_back(std::move(tri));
    }
    return out;
}

struct PlacementLedger {
    bool u = false;  // placed stalks lie in S_{n-1}
    bool v = false;  // almost complete silting object
    bool w = false;  // complements inside S_{n-1} are exactly the C_i, in order
    bool x = false;  // directed Hom-Ext path when the top degrees agree
    bool y = false;  // degree chain t_{i+1} >= u_i >= t_i at every level
    bool triangles = false;  // exchange triangles are the shifted mutation triangles
    std::vector<std::string> failures;
    bool all() const { return u && v && w && x && y && triangles; }
};

inline PlacementLedger verify_placement(const PlacementResult& p) {
    PlacementLedger led;
    int n = p.qp->n();
    int m = n - 1;
    auto fail = [&](const std::string& msg) { led.failures.push_back(msg); };

    if (n == 1) {
        led = PlacementLedger{true, true, true, true, true, true, {}};
        return led;
    }

    // U: domain membership of every placed stalk
    led.u = true;
    for (int i = 0; i < n - 1; ++i)
        if (!in_fundamental_domain(Stalk{p.seq[(std::size_t)i], p.u[(std::size_t)i]}, m)) {
            led.u = false;
            fail("A_" + std::to_string(i) + " placed outside the domain");
        }
    for (int i = 0; i < n; ++i)
        if (!in_fundamental_domain(Stalk{p.complements[(std::size_t)i], p.t[(std::size_t)i]}, m)) {
            led.u = false;
            fail("C_" + std::to_string(i) + " placed outside the domain");
        }

    // V: almost complete silting object
    std::vector<Stalk> astalks;
    for (int i = 0; i < n - 1; ++i) astalks.push_back(Stalk{p.seq[(std::size_t)i], p.u[(std::size_t)i]});
    try {
        led.v = is_partial_silting(make_candidate(p.qp, astalks));
        if (!led.v) fail("placed sequence is not partial silting");
    } catch (const Error& err) {
        fail(std::string("silting check failed: ") + err.what());
    }

    // W + triangles: complements and exchange triangles in C_{n-1}
    if (led.u && led.v) {
        try {
            ClusterObject tbar = make_cluster_object(p.qp, astalks, m);
            ExchangeChain chain = exchange_triangles(tbar);
            led.w = (int)chain.complements.size() == n;
            for (int i = 0; led.w && i < n; ++i) {
                const Stalk& got = chain.complements[(std::size_t)i];
                if (got.degree != p.t[(std::size_t)i] ||
                    got.module.dim() != p.complements[(std::size_t)i].dim())
                    led.w = false;
            }
            if (!led.w) fail("cluster complements differ from the placed C_i");

            led.triangles = led.w;
            for (int i = 0; led.triangles && i < n - 1; ++i) {
                const MutationTriangle& tri = p.triangles[(std::size_t)i];
                const ClusterExchange& ex = chain.triangles[(std::size_t)i];  // at C_{i+1}
                if (ex.middle.size() != tri.r) led.triangles = false;
                for (const auto& b : ex.middle)
                    if (b.degree != p.u[(std::size_t)i] || b.module.dim() != p.seq[(std::size_t)i].dim())
                        led.triangles = false;
                if (p.t[(std::size_t)i + 1] != p.t[(std::size_t)i] + tri.w) led.triangles = false;
            }
            if (!led.triangles) fail("exchange triangles do not match the shifted mutation triangles");
        } catch (const Error& err) {
            fail(std::string("complement chain failed: ") + err.what());
        }
    }

    // X: directed path in the Hom-Ext quiver when the top degrees agree
    led.x = true;
    if (p.u[(std::size_t)n - 2] == p.t[(std::size_t)n - 1]) {
        ExcSeq full = p.seq;
        full.push_back(p.complements[(std::size_t)n - 1]);
        HomExtQuiver g = build_homext(full);
        // DFS for a path from A_{n-2} to C_{n-1} ending in an m- or e-arrow
        std::size_t src = (std::size_t)n - 2, tgt = (std::size_t)n - 1;
        std::vector<char> seen(full.size(), 0);
        std::function<bool(std::size_t)> dfs = [&](std::size_t at) -> bool {
            if (seen[at]) return false;
            seen[at] = 1;
            for (const auto& ar : g.arrows) {
                if (ar.from != at) continue;
                if (ar.to == tgt && ar.decoration != Decoration::Ext) return true;
                if (ar.to != tgt && dfs(ar.to)) return true;
            }
            return false;
        };
        led.x = dfs(src);
        if (!led.x) fail("no directed Hom-Ext path with a morphism as last arrow");
    }

    // Y: degree chain at every level
    led.y = true;
    for (int i = 0; i < n - 1; ++i)
        if (!(p.t[(std::size_t)i + 1] >= p.u[(std::size_t)i] && p.u[(std::size_t)i] >= p.t[(std::size_t)i])) {
            led.y = false;
            fail("degree chain broken at level " + std::to_string(i));
        }
    return led;
}

// ---------------------------------------------------------------------------
// Bongartz complements

inline Rep bongartz_complement(const Rep& y) {
    auto qp = y.quiver_ptr();
    if (!is_exceptional(y)) throw NotIndecomposable("need an exceptional module");
    if (is_projective_module(y)) throw IsProjective("projective modules need no complement");
    Perp perp = perpendicular_subcategory(y);
    const std::vector<Rep>& parts = perp.ext_projectives;
    if ((int)parts.size() != qp->n() - 1)
        throw InternalInconsistency("perpendicular category has the wrong number of Ext-projectives");

    std::vector<Rep> all = parts;
    all.push_back(y);
    Rep sum = direct_sum(all, qp).sum;
    if (ext1_dim(sum, sum) != 0) throw InternalInconsistency("Bongartz candidate is not rigid");
    for (const auto& w : parts) {
        if (hom_dim(y, w) != 0) throw InternalInconsistency("Bongartz complement receives maps from Y");
        for (const auto& u : enumerate_indecomposables(qp))
            if (ext1_dim(y, u) == 0 && ext1_dim(w, u) != 0)
                throw InternalInconsistency("Bongartz complement has extra extensions");
    }
    return direct_sum(parts, qp).sum;
}

// ---------------------------------------------------------------------------
// Global placement searches

// Searches degree assignments (one per module, matched by dimension vector)
// in [0, bound] making every listed sequence a silting object.
inline std::optional<std::map<DimVec, int>> search_global_placement(
    const std::shared_ptr<const Quiver>& qp, const std::vector<ExcSeq>& seqs, int bound) {
    std::vector<DimVec> mods;
    for (const auto& s : seqs)
        for (const auto& x : s)
            if (std::find(mods.begin(), mods.end(), x.dim()) == mods.end()) mods.push_back(x.dim());
    std::vector<int> deg(mods.size(), 0);
    auto degree_of = [&](const Rep& x) {
        for (std::size_t k = 0; k < mods.size(); ++k)
            if (mods[k] == x.dim()) return deg[k];
        throw BadIndex("module not in assignment");
    };
    while (true) {
        bool ok = true;
        for (const auto& s : seqs) {
            std::vector<Stalk> stalks;
            for (const auto& x : s) stalks.push_back(Stalk{x, degree_of(x)});
            if (!is_silting(make_candidate(qp, std::move(stalks)))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::map<DimVec, int> out;
            for (std::size_t k = 0; k < mods.size(); ++k) out[mods[k]] = deg[k];
            return out;
        }
        std::size_t k = 0;
        while (k < deg.size() && deg[k] == bound) deg[k++] = 0;
        if (k == deg.size()) return std::nullopt;
        ++deg[k];
    }
}

// Searches degrees a, b, c in [0, bound] with Hom(X[a], Y[b]) != 0,
// Hom(X[a], Z[c]) = 0 and Hom(Y[b], Z[c]) != 0 — the compatibility conditions
// for mutating a placed triple first past Y and then past Z.
inline std::optional<std::array<int, 3>> search_compatible_degrees(const Rep& x, const Rep& y,
                                                                   const Rep& z, int bound) {
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                if (hom_d_dim(x, a, y, b) != 0 && hom_d_dim(x, a, z, c) == 0 &&
                    hom_d_dim(y, b, z, c) != 0)
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

}  // namespace siltlab
