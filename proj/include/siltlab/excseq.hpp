#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "siltlab/dynkin.hpp"
#include "siltlab/modcat.hpp"
#include "siltlab/rep.hpp"

namespace siltlab {

using ExcSeq = std::vector<Rep>;

inline bool is_exceptional_sequence(const ExcSeq& terms) {
    if (terms.empty()) return true;
    if ((int)terms.size() > terms[0].quiver().n()) return false;
    for (const auto& e : terms)
        if (!is_exceptional(e)) return false;
    for (std::size_t j = 0; j < terms.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (hom_dim(terms[j], terms[i]) != 0) return false;
            if (ext1_dim(terms[j], terms[i]) != 0) return false;
        }
    return true;
}

namespace detail {

// block-diagonal power of a morphism: f^(+ s) : X^s -> Y^s
inline Morphism power_morphism(const Morphism& f, std::size_t s, const DirectSum& src, const DirectSum& tgt) {
    Morphism out = Morphism::zero(src.sum, tgt.sum);
    for (std::size_t k = 0; k < s; ++k)
        out = out + tgt.inclusions[k].compose_after(f).compose_after(src.projections[k]);
    return out;
}

}  // namespace detail

// The universal extension 0 -> A^s -> E -> C -> 0, s = dim Ext^1(C, A).
inline Rep universal_extension(const Rep& c, const Rep& a) {
    auto qp = c.quiver_ptr();
    const StdModules& sm = standard_modules_cached(qp);
    Ext1Basis eb = ext1_class_basis(sm, c, a);
    std::size_t s = eb.classes.size();
    if (s == 0) throw InternalInconsistency("universal extension of an Ext-orthogonal pair");
    std::vector<Rep> copies(s, a);
    DirectSum w = direct_sum(copies, qp);
    Morphism e = Morphism::zero(eb.res.p1, w.sum);
    for (std::size_t k = 0; k < s; ++k) e = e + w.inclusions[k].compose_after(eb.classes[k]);
    ExtensionSES ses = extension_middle(eb.res, c, w.sum, e);
    if (ext1_dim(ses.middle, a) != 0) throw InternalInconsistency("universal extension not universal");
    return ses.middle;
}

// The universal coextension 0 -> G -> E -> F^s -> 0, s = dim Ext^1(F, G).
inline Rep universal_coextension(const Rep& f, const Rep& g) {
    auto qp = f.quiver_ptr();
    const StdModules& sm = standard_modules_cached(qp);
    Ext1Basis eb = ext1_class_basis(sm, f, g);
    std::size_t s = eb.classes.size();
    if (s == 0) throw InternalInconsistency("universal coextension of an Ext-orthogonal pair");
    // resolution of F^s as the s-fold block sum of the resolution of F
    std::vector<Rep> fs(s, f), p0s(s, eb.res.p0), p1s(s, eb.res.p1);
    DirectSum dsf = direct_sum(fs, qp), dsp0 = direct_sum(p0s, qp), dsp1 = direct_sum(p1s, qp);
    Resolution res_s{dsp0.sum, dsp1.sum, detail::power_morphism(eb.res.d, s, dsp1, dsp0),
                     detail::power_morphism(eb.res.eps, s, dsp0, dsf)};
    Morphism e = Morphism::zero(dsp1.sum, g);
    for (std::size_t k = 0; k < s; ++k) e = e + eb.classes[k].compose_after(dsp1.projections[k]);
    ExtensionSES ses = extension_middle(res_s, dsf.sum, g, e);
    if (ext1_dim(f, ses.middle) != 0) throw InternalInconsistency("universal coextension not universal");
    return ses.middle;
}

// Right mutation of the exceptional pair (C, A): the module C* such that
// (A, C*) replaces (C, A).
inline Rep mutate_pair(const Rep& c, const Rep& a) {
    if (hom_dim(a, a) != 1 || hom_dim(c, c) != 1) throw Unsupported("mutation needs End = k");
    if (hom_dim(c, a) != 0) {
        Approximation ap = minimal_left_approximation(c, a);
        if (ap.map.is_epi()) return morphism_kernel(ap.map).first;
        if (ap.map.is_mono()) return morphism_cokernel(ap.map).first;
        throw ApproximationNeitherMonoNorEpi("minimal left approximation is neither mono nor epi");
    }
    if (ext1_dim(c, a) != 0) return universal_extension(c, a);
    return c;
}

// Left mutation of the exceptional pair (F, G): the module G* such that
// (G*, F) replaces (F, G). Exact inverse of mutate_pair.
inline Rep mutate_pair_inverse(const Rep& f, const Rep& g) {
    if (hom_dim(f, f) != 1 || hom_dim(g, g) != 1) throw Unsupported("mutation needs End = k");
    if (hom_dim(f, g) != 0) {
        Approximation ap = minimal_right_approximation(f, g);
        if (ap.map.is_epi()) return morphism_kernel(ap.map).first;
        if (ap.map.is_mono()) return morphism_cokernel(ap.map).first;
        throw ApproximationNeitherMonoNorEpi("minimal right approximation is neither mono nor epi");
    }
    if (ext1_dim(f, g) != 0) return universal_coextension(f, g);
    return g;
}

inline ExcSeq mutate(const ExcSeq& seq, std::size_t i) {  // 1-based, swaps (E_i, E_{i+1})
    if (i < 1 || i >= seq.size()) throw BadIndex("mutation index out of range");
    ExcSeq out = seq;
    Rep star = mutate_pair(seq[i - 1], seq[i]);
    out[i - 1] = seq[i];
    out[i] = std::move(star);
    if (!is_exceptional_sequence(out)) throw InternalInconsistency("mutation broke the sequence");
    return out;
}

inline ExcSeq mutate_inverse(const ExcSeq& seq, std::size_t i) {
    if (i < 1 || i >= seq.size()) throw BadIndex("mutation index out of range");
    ExcSeq out = seq;
    Rep star = mutate_pair_inverse(seq[i - 1], seq[i]);
    out[i - 1] = std::move(star);
    out[i] = seq[i - 1];
    if (!is_exceptional_sequence(out)) throw InternalInconsistency("inverse mutation broke the sequence");
    return out;
}

// ---------------------------------------------------------------------------
// Complements and enumeration (representation-finite scope)

// For an almost complete sequence (length n-1): the unique indecomposable
// complement at every insertion position 0..n-1.
inline std::vector<std::pair<std::size_t, Rep>> complements_almost_complete(const ExcSeq& seq) {
    if (seq.empty()) throw BadIndex("empty sequence");
    auto qp = seq[0].quiver_ptr();
    if ((int)seq.size() != qp->n() - 1) throw DimensionMismatch("need an almost complete sequence");
    const auto& indecs = enumerate_indecomposables(qp);
    std::vector<std::pair<std::size_t, Rep>> out;
    for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
        std::vector<Rep> found;
        for (const auto& m : indecs) {
            ExcSeq trial = seq;
            trial.insert(trial.begin() + (long)pos, m);
            if (is_exceptional_sequence(trial)) found.push_back(m);
        }
        if (found.size() != 1) throw InternalInconsistency("complement at a position is not unique");
        out.emplace_back(pos, found[0]);
    }
    return out;
}

inline std::vector<ExcSeq> enumerate_complete_sequences(const std::shared_ptr<const Quiver>& qp) {
    const auto& indecs = enumerate_indecomposables(qp);  // RepInfinite if not Dynkin
    std::vector<ExcSeq> out;
    ExcSeq cur;
    auto extend_ok = [&](const Rep& e) {
        if (ext1_dim(e, e) != 0) return false;
        for (const auto& prev : cur)
            if (hom_dim(e, prev) != 0 || ext1_dim(e, prev) != 0) return false;
        return true;
    };
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == qp->n()) {
            out.push_back(cur);
            return;
        }
        for (const auto& m : indecs) {
            if (!extend_ok(m)) continue;
            cur.push_back(m);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;  // lex order by dimension-vector tuples, from the indec order
}

// The simples ordered into an exceptional sequence (sources first).
inline ExcSeq simple_sequence(const std::shared_ptr<const Quiver>& qp) {
    const StdModules& sm = standard_modules_cached(qp);
    ExcSeq out;
    for (int v : qp->topo_order()) out.push_back(sm.simp[v - 1]);
    if (!is_exceptional_sequence(out)) throw InternalInconsistency("simple sequence is not exceptional");
    return out;
}

// Closure of a sequence under mutations and inverse mutations at all indices.
inline std::vector<ExcSeq> mutation_orbit(const ExcSeq& start) {
    auto key = [](const ExcSeq& s) {
        std::vector<DimVec> k;
        for (const auto& e : s) k.push_back(e.dim());
        return k;
    };
    std::set<std::vector<DimVec>> seen = {key(start)};
    std::vector<ExcSeq> out = {start}, frontier = {start};
    while (!frontier.empty()) {
        std::vector<ExcSeq> next;
        for (const auto& s : frontier)
            for (std::size_t i = 1; i < s.size(); ++i)
                for (const ExcSeq& t : {mutate(s, i), mutate_inverse(s, i)})
                    if (seen.insert(key(t)).second) {
                        out.push_back(t);
                        next.push_back(t);
                    }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [&](const ExcSeq& a, const ExcSeq& b) { return key(a) < key(b); });
    return out;
}

// A^perp = { U : Hom(A,U) = Ext^1(A,U) = 0 } and its Ext-projectives.
struct Perp {
    std::vector<Rep> indecs;
    std::vector<Rep> ext_projectives;
};

inline Perp perpendicular_subcategory(const Rep& a) {
    auto qp = a.quiver_ptr();
    Perp out;
    for (const auto& u : enumerate_indecomposables(qp)) {
        if (hom_dim(a, u) != 0 || ext1_dim(a, u) != 0) continue;
        out.indecs.push_back(u);
    }
    for (const auto& u : out.indecs) {
        bool projective = true;
        for (const auto& v : out.indecs)
            if (ext1_dim(u, v) != 0) {
                projective = false;
                break;
            }
        if (projective) out.ext_projectives.push_back(u);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mutation triangle C -> A^r[v] -> C'[w]

struct MutationTriangle {
    Rep c;
    std::size_t r = 0;
    Rep a;
    int v = 0;
    Rep cprime;
    int w = 0;
};

inline MutationTriangle mutation_triangle(const Rep& c, const Rep& a) {
    MutationTriangle out;
    out.c = c;
    out.a = a;
    if (hom_dim(c, a) != 0) {
        Approximation ap = minimal_left_approximation(c, a);
        out.r = ap.multiplicity;
        out.v = 0;
        if (ap.map.is_epi()) {
            out.cprime = morphism_kernel(ap.map).first;
            out.w = 1;
        } else if (ap.map.is_mono()) {
            out.cprime = morphism_cokernel(ap.map).first;
            out.w = 0;
        } else {
            throw ApproximationNeitherMonoNorEpi("approximation is neither mono nor epi");
        }
        return out;
    }
    if (ext1_dim(c, a) != 0) {
        out.r = ext1_dim(c, a);
        out.v = 1;
        out.cprime = universal_extension(c, a);
        out.w = 1;
        return out;
    }
    out.r = 0;
    out.cprime = c;
    out.w = 1;
    return out;
}

}  // namespace siltlab
