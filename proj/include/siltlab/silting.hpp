#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "siltlab/complex.hpp"
#include "siltlab/excseq.hpp"

namespace siltlab {

// dim Hom_D(X[a], Y[b]) for module stalks over a hereditary algebra.
inline std::size_t hom_d_dim(const Rep& x, int a, const Rep& y, int b) {
    if (b == a) return hom_dim(x, y);
    if (b == a + 1) return ext1_dim(x, y);
    return 0;
}

struct SiltingCandidate {
    std::shared_ptr<const Quiver> qp;
    std::vector<Stalk> summands;  // canonical order: (degree, dim lex)
};

inline SiltingCandidate make_candidate(const std::shared_ptr<const Quiver>& qp, std::vector<Stalk> stalks) {
    std::sort(stalks.begin(), stalks.end(), [](const Stalk& a, const Stalk& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.module.dim() < b.module.dim();
    });
    for (std::size_t i = 0; i + 1 < stalks.size(); ++i)
        if (stalks[i].degree == stalks[i + 1].degree && is_isomorphic(stalks[i].module, stalks[i + 1].module))
            throw DimensionMismatch("candidate is not basic");
    return SiltingCandidate{qp, std::move(stalks)};
}

// Partial silting: no positive-shift self-maps. For stalks this reduces to
// per-slice rigidity and Hom/Ext vanishing from higher to lower degrees.
inline bool is_partial_silting(const SiltingCandidate& t) {
    for (const auto& s : t.summands)
        if (!is_exceptional(s.module)) return false;
    for (const auto& si : t.summands)
        for (const auto& sj : t.summands) {
            if (si.degree == sj.degree) {
                if (ext1_dim(si.module, sj.module) != 0) return false;
            } else if (si.degree > sj.degree) {
                if (hom_dim(si.module, sj.module) != 0) return false;
                if (ext1_dim(si.module, sj.module) != 0) return false;
            }
        }
    return true;
}

inline bool is_silting(const SiltingCandidate& t) {
    return (int)t.summands.size() == t.qp->n() && is_partial_silting(t);
}

// Lemma-style staircase: term i of the sequence placed at degree i.
inline SiltingCandidate staircase(const ExcSeq& seq) {
    if (seq.empty()) throw BadIndex("empty sequence");
    std::vector<Stalk> stalks;
    for (std::size_t i = 0; i < seq.size(); ++i) stalks.push_back(Stalk{seq[i], (int)i});
    SiltingCandidate t = make_candidate(seq[0].quiver_ptr(), std::move(stalks));
    if (!is_partial_silting(t)) throw InternalInconsistency("staircase of a sequence is not partial silting");
    return t;
}

// Orders the summands into an exceptional sequence: degrees ascending, and
// within a degree slice by a topological order of the slice's Hom quiver.
inline std::optional<ExcSeq> silting_order(const SiltingCandidate& t) {
    if (!is_partial_silting(t)) return std::nullopt;
    std::map<int, std::vector<Rep>> slices;
    for (const auto& s : t.summands) slices[s.degree].push_back(s.module);
    ExcSeq out;
    for (auto& [deg, mods] : slices) {
        // topological order: X precedes Y when Hom(X, Y) != 0
        std::vector<Rep> rest = mods;
        std::vector<Rep> ordered;
        while (!rest.empty()) {
            bool progressed = false;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                bool source = true;
                for (std::size_t l = 0; l < rest.size(); ++l)
                    if (l != k && hom_dim(rest[l], rest[k]) != 0) {
                        source = false;
                        break;
                    }
                if (source) {
                    ordered.push_back(rest[k]);
                    rest.erase(rest.begin() + (long)k);
                    progressed = true;
                    break;
                }
            }
            if (!progressed) return std::nullopt;  // Hom cycle in a slice
        }
        out.insert(out.end(), ordered.begin(), ordered.end());
    }
    if (!is_exceptional_sequence(out)) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Complexes for candidates and derived approximations

inline ProjComplex stalk_complex(const Stalk& s) {
    return ProjComplex::stalk(standard_modules_cached(s.module.quiver_ptr()), s.module, s.degree);
}

inline ProjComplex candidate_complex(const SiltingCandidate& t) {
    std::vector<ProjComplex> parts;
    for (const auto& s : t.summands) parts.push_back(stalk_complex(s));
    return direct_sum_complex(parts, t.qp);
}

struct DerivedApprox {
    std::vector<std::size_t> chosen;  // generator index per kept copy
    ProjComplex bundle;
    ChainMap map;  // bundle -> x (right approximation)
};

// Minimal right add(gens)-approximation of x in D: stack all Hom_D bases,
// then greedily delete copies while every map still factors (mod homotopy).
inline DerivedApprox minimal_right_approximation_derived(const std::vector<ProjComplex>& gens,
                                                         const ProjComplex& x) {
    auto qp = x.quiver_ptr();
    std::vector<std::pair<std::size_t, ChainMap>> basis;  // (gen index, map gen -> x)
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (const auto& f : hom_complex_basis(gens[gi], x)) basis.emplace_back(gi, f);

    auto build = [&](const std::vector<std::size_t>& idx) {
        std::vector<ProjComplex> parts;
        for (auto k : idx) parts.push_back(gens[basis[k].first]);
        ComplexSum ds = direct_sum_complexes(parts, qp);
        ChainMap f = zero_chain_map(ds.sum, x);
        for (std::size_t k = 0; k < idx.size(); ++k)
            f = f + compose_chain(basis[idx[k]].second, ds.projections[k]);
        return std::make_pair(std::move(ds), std::move(f));
    };

    auto factors = [&](const ChainMap& f) {
        // every basis map gen_j -> x factors through f modulo homotopy
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const ProjComplex& g = gens[gi];
            int lo = std::max(g.lo(), x.lo()), hi = std::min(g.hi(), x.hi());
            std::vector<QVec> span = detail::boundary_flats(g, x, lo, hi);
            for (const auto& h : hom_complex_basis(g, f.src)) {
                QVec v = detail::flatten_chain(compose_chain(f, h), lo, hi);
                if (!in_span(span, v)) span.push_back(std::move(v));
            }
            for (const auto& [bgi, b] : basis) {
                if (bgi != gi) continue;
                if (!in_span(span, detail::flatten_chain(b, lo, hi))) return false;
            }
        }
        return true;
    };

    std::vector<std::size_t> keep(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) keep[i] = i;
    bool shrunk = true;
    while (shrunk && !keep.empty()) {
        shrunk = false;
        for (std::size_t drop = 0; drop < keep.size(); ++drop) {
            std::vector<std::size_t> trial = keep;
            trial.erase(trial.begin() + (long)drop);
            auto [ds, f] = build(trial);
            if (factors(f)) {
                keep = std::move(trial);
                shrunk = true;
                break;
            }
        }
    }
    auto [ds, f] = build(keep);
    std::vector<std::size_t> chosen;
    for (auto k : keep) chosen.push_back(basis[k].first);
    return DerivedApprox{std::move(chosen), ds.sum, std::move(f)};
}

// ---------------------------------------------------------------------------
// Complements of almost complete silting objects

struct SiltingExchange {
    Stalk m;                    // the complement being exchanged
    std::vector<Stalk> middle;  // summands of the approximation bundle
    Stalk mstar;                // the next complement
};

// The irredundant exchange step of an almost complete silting object at a
// complement M: triangle M* -> B -> M with B -> M the minimal right
// add(T-bar)-approximation in D.
inline SiltingExchange silting_exchange(const SiltingCandidate& tbar, const Stalk& m) {
    std::vector<ProjComplex> gens;
    for (const auto& s : tbar.summands) gens.push_back(stalk_complex(s));
    ProjComplex x = stalk_complex(m);
    DerivedApprox ap = minimal_right_approximation_derived(gens, x);
    ProjComplex mstar = cone(ap.map).shifted(-1);
    auto stalks = normalize_stalks(mstar);
    if (stalks.size() != 1) throw InternalInconsistency("exchanged complement is not an indecomposable stalk");
    SiltingExchange out{m, {}, stalks[0]};
    for (auto gi : ap.chosen) out.middle.push_back(tbar.summands[gi]);
    return out;
}

struct ComplementScan {
    std::vector<Stalk> complements;        // degree-ascending
    std::vector<SiltingExchange> exchanges;  // linking consecutive complements
};

// Scans the window for all stalk complements of an almost complete silting
// object and links consecutive ones by exchange triangles.
inline ComplementScan silting_complements_in_window(const SiltingCandidate& tbar, int lo, int hi) {
    if ((int)tbar.summands.size() != tbar.qp->n() - 1)
        throw DimensionMismatch("need n-1 summands for a complement scan");
    if (!is_partial_silting(tbar)) throw DimensionMismatch("candidate is not partial silting");
    ComplementScan out;
    for (int d = lo; d <= hi; ++d)
        for (const auto& m : enumerate_indecomposables(tbar.qp)) {
            bool duplicate = false;
            for (const auto& s : tbar.summands)
                if (s.degree == d && is_isomorphic(s.module, m)) duplicate = true;
            if (duplicate) continue;
            std::vector<Stalk> sum = tbar.summands;
            sum.push_back(Stalk{m, d});
            if (is_silting(make_candidate(tbar.qp, std::move(sum)))) out.complements.push_back(Stalk{m, d});
        }
    if (out.complements.empty()) return out;

    // order by the exchange chain: each complement's exchange triangle ends at
    // its predecessor, so the unique stalk that is nobody's predecessor is the
    // top of the chain
    auto key = [](const Stalk& s) { return std::make_pair(s.degree, s.module.dim()); };
    std::map<std::pair<int, DimVec>, SiltingExchange> ex_at;
    std::set<std::pair<int, DimVec>> in_set, preds;
    for (const auto& m : out.complements) in_set.insert(key(m));
    for (const auto& m : out.complements) {
        SiltingExchange ex = silting_exchange(tbar, m);
        preds.insert(key(ex.mstar));
        ex_at.emplace(key(m), std::move(ex));
    }
    std::vector<Stalk> chain;
    for (const auto& m : out.complements)
        if (!preds.count(key(m))) chain.push_back(m);
    if (chain.size() != 1) throw InternalInconsistency("exchange chain has no unique top complement");
    while (true) {
        const SiltingExchange& ex = ex_at.at(key(chain.back()));
        if (!in_set.count(key(ex.mstar))) break;
        chain.push_back(ex.mstar);
    }
    if (chain.size() != out.complements.size())
        throw InternalInconsistency("exchange chain does not cover the complement set");
    std::reverse(chain.begin(), chain.end());
    out.complements = std::move(chain);
    for (std::size_t k = 0; k + 1 < out.complements.size(); ++k)
        out.exchanges.push_back(ex_at.at(key(out.complements[k + 1])));
    return out;
}

}  // namespace siltlab
