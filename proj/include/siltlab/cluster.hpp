#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "siltlab/silting.hpp"

namespace siltlab {

// The m-cluster category C_m = D / F with F = tau^{-1}[m], computed through
// its fundamental domain: all indecomposables at degrees 0..m-1 plus the
// projectives at degree m.

enum class MapClass { DMap, FMap };

// A morphism component at orbit index j is induced by a map in the standard
// domain exactly when j = 0.
inline MapClass classify_map(int orbit_index) {
    return orbit_index == 0 ? MapClass::DMap : MapClass::FMap;
}

inline bool is_projective_module(const Rep& x) {
    return indec_cache(x.quiver_ptr()).projective_vertex(x.dim()) != 0;
}

inline bool in_fundamental_domain(const Stalk& s, int m) {
    if (m < 1) throw BadIndex("m must be at least 1");
    if (s.degree >= 0 && s.degree <= m - 1) return true;
    return s.degree == m && is_projective_module(s.module);
}

// F (inverse = false) sends X[d] to tau^{-1}X[d+m]; on injectives I_i this is
// P_i[d+m+1].  F^{-1} sends X[d] to tauX[d-m]; on projectives P_i this is
// I_i[d-m-1].  Each application moves the degree by at least m.
inline Stalk cluster_shift(const Stalk& s, int m, bool inverse = false) {
    if (m < 1) throw BadIndex("m must be at least 1");
    Stalk t = ar_translate(s.module, !inverse);
    return Stalk{t.module, s.degree + (inverse ? -m : m) + t.degree};
}

struct DomainStalk {
    Stalk stalk;  // = F^fpower applied to the input
    int fpower;
};

inline DomainStalk normalize_to_domain_tracked(Stalk s, int m) {
    int power = 0;
    for (int guard = 0; guard < 1000; ++guard) {
        if (in_fundamental_domain(s, m)) return {std::move(s), power};
        if (s.degree < 0) {
            s = cluster_shift(s, m, false);
            ++power;
        } else {
            s = cluster_shift(s, m, true);
            --power;
        }
    }
    throw InternalInconsistency("normalization into the fundamental domain did not terminate");
}

inline Stalk normalize_to_domain(const Stalk& s, int m) { return normalize_to_domain_tracked(s, m).stalk; }

inline std::vector<Stalk> fundamental_domain(const std::shared_ptr<const Quiver>& qp, int m) {
    if (m < 1) throw BadIndex("m must be at least 1");
    std::vector<Stalk> out;
    auto indecs = enumerate_indecomposables(qp);
    for (int d = 0; d < m; ++d)
        for (const auto& x : indecs) out.push_back(Stalk{x, d});
    std::vector<Rep> projs = standard_modules_cached(qp).proj;
    std::sort(projs.begin(), projs.end(), [](const Rep& a, const Rep& b) { return a.dim() < b.dim(); });
    for (const auto& p : projs) out.push_back(Stalk{p, m});
    return out;
}

struct ClusterObject {
    std::shared_ptr<const Quiver> qp;
    std::vector<Stalk> summands;  // canonical order: (degree, dim lex)
    int m;
};

inline ClusterObject make_cluster_object(const std::shared_ptr<const Quiver>& qp, std::vector<Stalk> stalks,
                                         int m) {
    for (const auto& s : stalks)
        if (!in_fundamental_domain(s, m)) throw BadIndex("stalk outside the fundamental domain");
    std::sort(stalks.begin(), stalks.end(), [](const Stalk& a, const Stalk& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.module.dim() < b.module.dim();
    });
    for (std::size_t i = 0; i + 1 < stalks.size(); ++i)
        if (stalks[i].degree == stalks[i + 1].degree && is_isomorphic(stalks[i].module, stalks[i + 1].module))
            throw DimensionMismatch("cluster object is not basic");
    return ClusterObject{qp, std::move(stalks), m};
}

// Hom_{C_m}(X, Y) decomposed by orbit index: j -> dim Hom_D(X, F^j(Y)).
// The sum has finite support since each F application moves the degree by at
// least m while Hom_D needs a degree gap in {0, 1}; the first excluded term in
// each direction is checked to vanish.
inline std::map<int, std::size_t> hom_cm_components(const Stalk& x, const Stalk& y, int m) {
    std::map<int, std::size_t> out;
    Stalk z = y;
    for (int j = 0;; ++j) {
        if (z.degree > x.degree + 1) {
            if (hom_d_dim(x.module, x.degree, z.module, z.degree) != 0)
                throw InternalInconsistency("orbit sum truncation dropped a nonzero term");
            break;
        }
        if (j > 500) throw InternalInconsistency("orbit scan did not terminate");
        std::size_t d = hom_d_dim(x.module, x.degree, z.module, z.degree);
        if (d != 0) out[j] = d;
        z = cluster_shift(z, m, false);
    }
    z = cluster_shift(y, m, true);
    for (int j = -1;; --j) {
        if (z.degree < x.degree) {
            if (hom_d_dim(x.module, x.degree, z.module, z.degree) != 0)
                throw InternalInconsistency("orbit sum truncation dropped a nonzero term");
            break;
        }
        if (j < -500) throw InternalInconsistency("orbit scan did not terminate");
        std::size_t d = hom_d_dim(x.module, x.degree, z.module, z.degree);
        if (d != 0) out[j] = d;
        z = cluster_shift(z, m, true);
    }
    return out;
}

inline std::size_t hom_cm_dim(const Stalk& x, const Stalk& y, int m) {
    std::size_t total = 0;
    for (const auto& [j, d] : hom_cm_components(x, y, m)) total += d;
    return total;
}

inline std::size_t ext_cm_dim(const Stalk& x, const Stalk& y, int i, int m) {
    return hom_cm_dim(x, Stalk{y.module, y.degree + i}, m);
}

inline bool is_m_rigid(const ClusterObject& t) {
    for (const auto& a : t.summands)
        for (const auto& b : t.summands)
            for (int i = 1; i <= t.m; ++i)
                if (ext_cm_dim(a, b, i, t.m) != 0) return false;
    return true;
}

inline bool is_m_cluster_tilting(const ClusterObject& t) {
    return (int)t.summands.size() == t.qp->n() && is_m_rigid(t);
}

// ---------------------------------------------------------------------------
// Complements of almost complete cluster tilting objects

namespace detail {

inline bool same_stalk(const Stalk& a, const Stalk& b) {
    return a.degree == b.degree && a.module.dim() == b.module.dim();
}

}  // namespace detail

// Brute-force scan of the fundamental domain, cross-checked against the
// silting complement chain in D restricted to the domain; returns the m+1
// complements in exchange-chain order M_0, ..., M_m.
inline std::vector<Stalk> cluster_complements(const ClusterObject& tbar) {
    if ((int)tbar.summands.size() != tbar.qp->n() - 1)
        throw DimensionMismatch("need n-1 summands for a complement scan");
    if (!is_m_rigid(tbar)) throw DimensionMismatch("cluster object is not rigid");

    std::vector<Stalk> brute;
    for (const auto& c : fundamental_domain(tbar.qp, tbar.m)) {
        bool duplicate = false;
        for (const auto& s : tbar.summands)
            if (s.degree == c.degree && is_isomorphic(s.module, c.module)) duplicate = true;
        if (duplicate) continue;
        std::vector<Stalk> sum = tbar.summands;
        sum.push_back(c);
        if (is_m_cluster_tilting(make_cluster_object(tbar.qp, std::move(sum), tbar.m))) brute.push_back(c);
    }

    // independent route: D-silting complements in the window, kept if in domain
    SiltingCandidate sc = make_candidate(tbar.qp, tbar.summands);
    ComplementScan ws = silting_complements_in_window(sc, -1, tbar.m + 1);
    std::vector<Stalk> chain;
    for (const auto& s : ws.complements)
        if (in_fundamental_domain(s, tbar.m)) chain.push_back(s);

    auto key = [](const Stalk& s) { return std::make_pair(s.degree, s.module.dim()); };
    std::set<std::pair<int, DimVec>> bset, cset;
    for (const auto& s : brute) bset.insert(key(s));
    for (const auto& s : chain) cset.insert(key(s));
    if (bset != cset)
        throw InternalInconsistency("orbit-category complements disagree with the silting chain");

    if ((int)chain.size() != tbar.m + 1)
        throw InternalInconsistency("complement count is not m+1");
    for (int i = 0; i <= tbar.m; ++i) {
        if (i > 0 && chain[i - 1].degree > chain[i].degree)
            throw InternalInconsistency("complement degrees are not weakly increasing");
        if (chain[i].degree < i - 1 || chain[i].degree > i)
            throw InternalInconsistency("complement degree bounds violated");
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Exchange triangles

struct ClusterExchange {
    Stalk at;                       // the complement exchanged at
    std::vector<Stalk> middle;      // bundle summands as D-lifts F^{-j}(T_k)
    std::vector<int> orbit_indices;  // orbit index j of each middle summand
    Stalk mstar_d;                  // cone result in D before normalization
    Stalk mstar;                    // domain representative
    int shift;                      // F-power applied to reach the domain
    bool d_triangle;                // lifts to a triangle in D
};

// Exchange triangle M* -> B -> M in C_m at a complement M of T-bar.  The
// minimal right add(T-bar)-approximation in C_m is assembled from D-lifts
// F^{-j}(T_k) -> M of the orbit components; the cone is taken in D and the
// third term normalized back into the domain.
inline ClusterExchange cluster_exchange(const ClusterObject& tbar, const Stalk& at) {
    struct Lift {
        Stalk stalk;
        int j;
    };
    std::vector<Lift> lifts;
    auto consider = [&](const Stalk& lift, int j) {
        if (hom_d_dim(lift.module, lift.degree, at.module, at.degree) != 0) lifts.push_back({lift, j});
    };
    for (const auto& t : tbar.summands) {
        Stalk z = t;
        for (int j = 0;; ++j) {  // F^{-j}(t), degrees strictly decreasing
            if (z.degree < at.degree - 1) break;
            if (j > 500) throw InternalInconsistency("orbit scan did not terminate");
            consider(z, j);
            z = cluster_shift(z, tbar.m, true);
        }
        z = cluster_shift(t, tbar.m, false);
        for (int j = -1;; --j) {  // F^{-j} = F^{|j|}, degrees strictly increasing
            if (z.degree > at.degree) break;
            if (j < -500) throw InternalInconsistency("orbit scan did not terminate");
            consider(z, j);
            z = cluster_shift(z, tbar.m, false);
        }
    }

    std::vector<ProjComplex> gens;
    for (const auto& l : lifts) gens.push_back(stalk_complex(l.stalk));
    DerivedApprox ap = minimal_right_approximation_derived(gens, stalk_complex(at));
    auto stalks = normalize_stalks(cone(ap.map).shifted(-1));
    if (stalks.size() != 1) throw InternalInconsistency("exchange cone is not an indecomposable stalk");
    DomainStalk nd = normalize_to_domain_tracked(stalks[0], tbar.m);

    ClusterExchange out{at, {}, {}, stalks[0], nd.stalk, nd.fpower, nd.fpower == 0};
    for (auto gi : ap.chosen) {
        out.middle.push_back(lifts[gi].stalk);
        out.orbit_indices.push_back(lifts[gi].j);
        if (lifts[gi].j != 0) out.d_triangle = false;
    }
    return out;
}

// d(M*) <= d(M) iff both exchange maps are D-maps, for m >= 2 and B != 0.
inline bool dmap_criterion_holds(const ClusterExchange& ex, int m) {
    if (m < 2 || ex.middle.empty()) return true;
    return (ex.mstar.degree <= ex.at.degree) == ex.d_triangle;
}

struct ExchangeChain {
    std::vector<Stalk> complements;        // M_0, ..., M_m
    std::vector<ClusterExchange> triangles;  // m D-triangles, then the wrap-around
};

// The m consecutive exchange triangles M_{i-1} -> B_i -> M_i lift to D; the
// wrap-around M_m -> B_0 -> M_0 closes the chain in C_m only.
inline ExchangeChain exchange_triangles(const ClusterObject& tbar) {
    ExchangeChain out;
    out.complements = cluster_complements(tbar);
    for (int i = 1; i <= tbar.m; ++i) {
        ClusterExchange ex = cluster_exchange(tbar, out.complements[i]);
        if (!detail::same_stalk(ex.mstar, out.complements[i - 1]))
            throw InternalInconsistency("exchange chain disagrees with the brute-force complements");
        if (!ex.d_triangle) throw InternalInconsistency("interior exchange triangle does not lift to D");
        out.triangles.push_back(std::move(ex));
    }
    ClusterExchange wrap = cluster_exchange(tbar, out.complements[0]);
    if (!detail::same_stalk(wrap.mstar, out.complements[tbar.m]))
        throw InternalInconsistency("wrap-around triangle does not reach the last complement");
    if (wrap.d_triangle) throw InternalInconsistency("wrap-around triangle unexpectedly lifts to D");
    out.triangles.push_back(std::move(wrap));
    return out;
}

}  // namespace siltlab
