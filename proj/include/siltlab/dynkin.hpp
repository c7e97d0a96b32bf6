#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "siltlab/modcat.hpp"
#include "siltlab/rep.hpp"

namespace siltlab {

// A shifted module X[degree] in the derived category.
struct Stalk {
    Rep module;
    int degree = 0;
};

// Positive roots of the Tits form, generated by closing the simple roots
// under addition of simples.
inline std::vector<DimVec> positive_roots(const Quiver& q) {
    if (!q.dynkin_type().is_finite()) throw RepInfinite("positive roots need a Dynkin quiver");
    std::set<DimVec> roots;
    std::vector<DimVec> frontier;
    for (int i = 1; i <= q.n(); ++i) {
        DimVec e = unit_dim(q.n(), i);
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<DimVec> next;
        for (const auto& r : frontier)
            for (int i = 1; i <= q.n(); ++i) {
                DimVec s = r;
                s[i - 1] += 1;
                if (roots.count(s)) continue;
                if (q.tits_form(s) == 1) {
                    roots.insert(s);
                    next.push_back(std::move(s));
                }
            }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};  // lexicographic
}

// The canonical indecomposables of a representation-finite quiver, one per
// positive root, with cached Hom/Ext dimension tables.
struct IndecCache {
    std::shared_ptr<const Quiver> qp;
    StdModules std_mods;
    std::vector<Rep> indecs;               // sorted by dimension vector, lex
    std::map<DimVec, std::size_t> by_dim;
    std::vector<std::vector<std::size_t>> hom;  // hom[i][j] = dim Hom(indec_i, indec_j)
    std::vector<std::vector<std::size_t>> ext;
    QMat coxeter;      // dim tau X = coxeter * dim X for non-projective X
    QMat coxeter_inv;

    std::size_t index_of(const DimVec& d) const {
        auto it = by_dim.find(d);
        if (it == by_dim.end()) throw InternalInconsistency("dimension vector is not a positive root");
        return it->second;
    }
    const Rep& canonical(const DimVec& d) const { return indecs[index_of(d)]; }
    bool is_root(const DimVec& d) const { return by_dim.count(d) > 0; }

    // vertex i with dim indec == dim P_i / I_i, or 0
    int projective_vertex(const DimVec& d) const {
        for (int i = 1; i <= qp->n(); ++i)
            if (std_mods.proj[i - 1].dim() == d) return i;
        return 0;
    }
    int injective_vertex(const DimVec& d) const {
        for (int i = 1; i <= qp->n(); ++i)
            if (std_mods.inj[i - 1].dim() == d) return i;
        return 0;
    }
};

// Builds the generic (hence indecomposable) representation for a positive
// root by a deterministic coefficient search.
inline Rep generic_indecomposable(const std::shared_ptr<const Quiver>& qp, const DimVec& d) {
    const Quiver& q = *qp;
    for (unsigned long trial = 0; trial < 256; ++trial) {
        DetRng rng(trial + 7);
        std::vector<QMat> maps;
        for (const auto& a : q.arrows()) {
            QMat m(d[a.target - 1], d[a.source - 1]);
            for (auto& e : m.entries()) e = Rat(rng.next(trial == 0 ? 1 : -5, 5));
            maps.push_back(std::move(m));
        }
        Rep x(qp, d, std::move(maps));
        if (hom_dim(x, x) == 1) return x;
    }
    throw InternalInconsistency("generic representation search failed for a root");
}

inline std::shared_ptr<IndecCache> build_indec_cache(const std::shared_ptr<const Quiver>& qp) {
    auto cache = std::make_shared<IndecCache>();
    cache->qp = qp;
    cache->std_mods = standard_modules(qp);
    for (const auto& d : positive_roots(*qp)) {
        cache->by_dim[d] = cache->indecs.size();
        // reuse the standard construction when the root is projective,
        // injective or simple; generic search otherwise
        Rep rep = [&]() {
            for (int i = 1; i <= qp->n(); ++i) {
                if (cache->std_mods.simp[i - 1].dim() == d) return cache->std_mods.simp[i - 1];
                if (cache->std_mods.proj[i - 1].dim() == d) return cache->std_mods.proj[i - 1];
                if (cache->std_mods.inj[i - 1].dim() == d) return cache->std_mods.inj[i - 1];
            }
            return generic_indecomposable(qp, d);
        }();
        if (hom_dim(rep, rep) != 1) throw InternalInconsistency("standard module is not a brick");
        cache->indecs.push_back(std::move(rep));
    }
    std::size_t n = cache->indecs.size();
    cache->hom.assign(n, std::vector<std::size_t>(n));
    cache->ext.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cache->hom[i][j] = hom_dim(cache->indecs[i], cache->indecs[j]);
            long e = (long)cache->hom[i][j] -
                     qp->euler_form(cache->indecs[i].dim(), cache->indecs[j].dim());
            if (e < 0) throw InternalInconsistency("negative Ext in indec table");
            cache->ext[i][j] = (std::size_t)e;
        }
    QMat c = qp->euler_matrix();
    auto cinv = c.inverse();
    if (!cinv) throw InternalInconsistency("Euler matrix not invertible");
    cache->coxeter = (*cinv * c.transpose()) * Rat(-1);
    auto phi_inv = cache->coxeter.inverse();
    if (!phi_inv) throw InternalInconsistency("Coxeter matrix not invertible");
    cache->coxeter_inv = *phi_inv;
    return cache;
}

// Memoized per-quiver cache (keyed by quiver identity).
inline const IndecCache& indec_cache(const std::shared_ptr<const Quiver>& qp) {
    static std::map<const Quiver*, std::shared_ptr<IndecCache>> memo;
    auto it = memo.find(qp.get());
    if (it == memo.end()) it = memo.emplace(qp.get(), build_indec_cache(qp)).first;
    return *it->second;
}

inline std::vector<Rep> enumerate_indecomposables(const std::shared_ptr<const Quiver>& qp) {
    return indec_cache(qp).indecs;
}

// ---------------------------------------------------------------------------
// Decomposition

inline QVec apply_int_matrix(const QMat& m, const DimVec& d) {
    QVec v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) v[i] = Rat(d[i]);
    return m.apply(v);
}

inline DimVec to_dimvec(const QVec& v) {
    DimVec d;
    for (const auto& x : v) {
        if (x.get_den() != 1) throw InternalInconsistency("non-integral dimension vector");
        d.push_back((long)x.get_num().get_si());
    }
    return d;
}

// Summand multiplicities for a module over a representation-finite quiver,
// solved from the Hom-dimension table (which is unitriangular in a directing
// order, hence invertible).
inline std::vector<std::pair<Rep, std::size_t>> decompose_dynkin(const Rep& x) {
    const auto& cache = indec_cache(x.quiver_ptr());
    if (x.is_zero()) return {};
    std::size_t n = cache.indecs.size();
    QMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = Rat((long)cache.hom[i][j]);
    QVec h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = Rat((long)hom_dim(cache.indecs[i], x));
    auto sol = g.solve(h);
    if (!sol) throw InternalInconsistency("decomposition system inconsistent");
    std::vector<std::pair<Rep, std::size_t>> out;
    DimVec check(x.quiver().n(), 0);
    for (std::size_t j = 0; j < n; ++j) {
        const Rat& m = (*sol)[j];
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0) throw InternalInconsistency("non-integral summand multiplicity");
        std::size_t mult = (std::size_t)m.get_num().get_ui();
        out.emplace_back(cache.indecs[j], mult);
        for (int v = 0; v < x.quiver().n(); ++v) check[v] += (long)mult * cache.indecs[j].dim()[v];
    }
    if (check != x.dim()) throw InternalInconsistency("decomposition does not add up");
    return out;
}

inline std::vector<std::pair<Rep, std::size_t>> decompose(const Rep& x);

namespace detail {

// Fitting splitting along powers of a non-scalar endomorphism.
inline bool fitting_split(const Rep& x, std::vector<Rep>& pieces) {
    auto ends = hom_basis(x, x);
    if (ends.size() <= 1) return false;
    long total = x.total();
    std::vector<Morphism> candidates;
    for (const auto& e : ends) candidates.push_back(e);
    for (unsigned long t = 1; t <= 32; ++t) {
        DetRng rng(t * 31);
        Morphism f = Morphism::zero(x, x);
        for (const auto& e : ends) f = f + e.scale(Rat(rng.next(-2, 2)));
        candidates.push_back(f);
    }
    for (const auto& phi0 : candidates) {
        for (long lam : {0L, 1L, -1L, 2L, -2L}) {
            Morphism phi = phi0 - Morphism::identity(x).scale(Rat(lam));
            Morphism p = phi;
            for (long k = 1; k < total; ++k) p = p.compose_after(phi);
            auto [ker, ki] = morphism_kernel(p);
            if (ker.is_zero() || ker.total() == x.total()) continue;
            auto [img, ii] = morphism_image(p);
            if (ker.total() + img.total() != x.total()) continue;
            pieces = {ker, img};
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline std::vector<std::pair<Rep, std::size_t>> decompose(const Rep& x) {
    if (x.is_zero()) return {};
    if (x.quiver().dynkin_type().is_finite()) return decompose_dynkin(x);
    if (hom_dim(x, x) == 1) return {{x, 1}};
    std::vector<Rep> pieces;
    if (!detail::fitting_split(x, pieces))
        throw Unsupported("could not split a module with non-trivial endomorphisms");
    std::vector<std::pair<Rep, std::size_t>> out;
    for (const auto& p : pieces)
        for (auto& [s, m] : decompose(p)) {
            bool merged = false;
            for (auto& [t, mt] : out)
                if (is_isomorphic(s, t)) {
                    mt += m;
                    merged = true;
                    break;
                }
            if (!merged) out.emplace_back(s, m);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.dim() < b.first.dim(); });
    return out;
}

inline bool is_indecomposable(const Rep& x) {
    if (x.is_zero()) return false;
    if (hom_dim(x, x) == 1) return true;
    if (x.quiver().dynkin_type().is_finite()) return false;  // indecomposables are bricks here
    auto parts = decompose(x);
    return parts.size() == 1 && parts[0].second == 1;
}

inline bool is_exceptional(const Rep& x) {
    if (x.is_zero()) return false;
    if (!is_indecomposable(x)) return false;
    return ext1_dim(x, x) == 0;
}

// ---------------------------------------------------------------------------
// AR translate (representation-finite scope)

inline Stalk ar_translate(const Rep& x, bool inverse = false) {
    const auto& cache = indec_cache(x.quiver_ptr());
    if (!is_indecomposable(x)) throw NotIndecomposable("ar_translate needs an indecomposable module");
    const DimVec d = x.dim();
    if (!inverse) {
        if (int i = cache.projective_vertex(d); i != 0) return {cache.std_mods.inj[i - 1], -1};
        DimVec td = to_dimvec(apply_int_matrix(cache.coxeter, d));
        return {cache.canonical(td), 0};
    }
    if (int i = cache.injective_vertex(d); i != 0) return {cache.std_mods.proj[i - 1], +1};
    DimVec td = to_dimvec(apply_int_matrix(cache.coxeter_inv, d));
    return {cache.canonical(td), 0};
}

}  // namespace siltlab
