#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "siltlab/dynkin.hpp"
#include "siltlab/modcat.hpp"
#include "siltlab/rep.hpp"

namespace siltlab {

// Bounded complex of projective representations, cohomological convention:
// differentials raise the degree by one and compose to zero.
class ProjComplex {
  public:
    explicit ProjComplex(std::shared_ptr<const Quiver> qp) : qp_(std::move(qp)), lo_(0) {}

    ProjComplex(std::shared_ptr<const Quiver> qp, int lo, std::vector<Rep> terms, std::vector<Morphism> diffs,
                bool check = true)
        : qp_(std::move(qp)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
        if (!terms_.empty() && diffs_.size() + 1 != terms_.size())
            throw DimensionMismatch("complex: need one differential between consecutive terms");
        if (check) {
            for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
                if (!diffs_[k + 1].compose_after(diffs_[k]).is_zero())
                    throw InternalInconsistency("complex: d o d != 0");
        }
        trim();
    }

    static ProjComplex zero(std::shared_ptr<const Quiver> qp) { return ProjComplex(std::move(qp)); }

    // X[shift] as a complex of projectives: the resolution of X placed so the
    // only cohomology is H^{-shift} = X.
    static ProjComplex stalk(const StdModules& sm, const Rep& x, int shift) {
        auto qp = x.quiver_ptr();
        if (x.is_zero()) return zero(qp);
        Resolution res = projective_resolution(sm, x);
        if (res.p1.is_zero()) return ProjComplex(qp, -shift, {res.p0}, {});
        return ProjComplex(qp, -shift - 1, {res.p1, res.p0}, {res.d});
    }

    const std::shared_ptr<const Quiver>& quiver_ptr() const { return qp_; }
    bool is_zero_complex() const { return terms_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + (int)terms_.size() - 1; }  // < lo() when zero

    Rep term(int i) const {
        if (i < lo_ || i > hi()) return Rep::zero(qp_);
        return terms_[(std::size_t)(i - lo_)];
    }

    Morphism diff(int i) const {  // term(i) -> term(i+1)
        if (i >= lo_ && i + 1 <= hi()) return diffs_[(std::size_t)(i - lo_)];
        return Morphism::zero(term(i), term(i + 1));
    }

    // X[k]: degrees shift down by k, differentials pick up (-1)^k.
    ProjComplex shifted(int k) const {
        std::vector<Morphism> d = diffs_;
        if (k % 2 != 0)
            for (auto& m : d) m = m.scale(Rat(-1));
        return ProjComplex(qp_, lo_ - k, terms_, std::move(d), false);
    }

    long total() const {
        long t = 0;
        for (const auto& r : terms_) t += r.total();
        return t;
    }

  private:
    void trim() {
        while (!terms_.empty() && terms_.front().is_zero()) {
            terms_.erase(terms_.begin());
            if (!diffs_.empty()) diffs_.erase(diffs_.begin());
            ++lo_;
        }
        while (!terms_.empty() && terms_.back().is_zero()) {
            terms_.pop_back();
            if (!diffs_.empty()) diffs_.pop_back();
        }
        if (terms_.empty()) {
            diffs_.clear();
            lo_ = 0;
        }
    }

    std::shared_ptr<const Quiver> qp_;
    int lo_;
    std::vector<Rep> terms_;
    std::vector<Morphism> diffs_;
};

inline ProjComplex direct_sum_complex(const std::vector<ProjComplex>& parts,
                                      const std::shared_ptr<const Quiver>& qp) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& p : parts) {
        if (p.is_zero_complex()) continue;
        if (!any) {
            lo = p.lo();
            hi = p.hi();
            any = true;
        } else {
            lo = std::min(lo, p.lo());
            hi = std::max(hi, p.hi());
        }
    }
    if (!any) return ProjComplex::zero(qp);
    std::vector<Rep> terms;
    std::vector<DirectSum> sums;
    for (int i = lo; i <= hi; ++i) {
        std::vector<Rep> slice;
        for (const auto& p : parts) slice.push_back(p.term(i));
        sums.push_back(direct_sum(slice, qp));
        terms.push_back(sums.back().sum);
    }
    std::vector<Morphism> diffs;
    for (int i = lo; i < hi; ++i) {
        const DirectSum& a = sums[(std::size_t)(i - lo)];
        const DirectSum& b = sums[(std::size_t)(i + 1 - lo)];
        Morphism d = Morphism::zero(a.sum, b.sum);
        for (std::size_t k = 0; k < parts.size(); ++k)
            d = d + b.inclusions[k].compose_after(parts[k].diff(i)).compose_after(a.projections[k]);
        diffs.push_back(std::move(d));
    }
    return ProjComplex(qp, lo, std::move(terms), std::move(diffs), false);
}

// ---------------------------------------------------------------------------
// Chain maps

struct ChainMap {
    ProjComplex src, tgt;
    std::map<int, Morphism> comps;  // degreewise components on the overlap

    Morphism comp(int i) const {
        auto it = comps.find(i);
        if (it != comps.end()) return it->second;
        return Morphism::zero(src.term(i), tgt.term(i));
    }

    bool is_zero() const {
        for (const auto& [i, m] : comps)
            if (!m.is_zero()) return false;
        return true;
    }

    ChainMap scale(const Rat& c) const {
        ChainMap out = *this;
        for (auto& [i, m] : out.comps) m = m.scale(c);
        return out;
    }

    ChainMap operator+(const ChainMap& o) const {
        ChainMap out = *this;
        for (const auto& [i, m] : o.comps) {
            auto it = out.comps.find(i);
            if (it == out.comps.end())
                out.comps.emplace(i, m);
            else
                it->second = it->second + m;
        }
        return out;
    }
};

inline ChainMap zero_chain_map(const ProjComplex& c, const ProjComplex& d) { return ChainMap{c, d, {}}; }

inline ChainMap identity_chain_map(const ProjComplex& c) {
    ChainMap out{c, c, {}};
    for (int i = c.lo(); i <= c.hi(); ++i) out.comps.emplace(i, Morphism::identity(c.term(i)));
    return out;
}

inline ChainMap compose_chain(const ChainMap& g, const ChainMap& f) {  // g o f
    ChainMap out{f.src, g.tgt, {}};
    for (const auto& [i, m] : f.comps) out.comps.emplace(i, g.comp(i).compose_after(m));
    return out;
}

inline void check_chain_map(const ChainMap& f) {
    for (int i = std::min(f.src.lo(), f.tgt.lo()) - 1; i <= std::max(f.src.hi(), f.tgt.hi()); ++i) {
        Morphism lhs = f.tgt.diff(i).compose_after(f.comp(i));
        Morphism rhs = f.comp(i + 1).compose_after(f.src.diff(i));
        if (!(lhs - rhs).is_zero()) throw InternalInconsistency("not a chain map");
    }
}

namespace detail {

// Concatenated flattened coordinates of the degreewise components, over the
// overlap range of the two complexes.
inline QVec flatten_chain(const ChainMap& f, int lo, int hi) {
    QVec out;
    for (int i = lo; i <= hi; ++i) {
        QVec v = f.comp(i).flatten();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// Span of the null-homotopic chain maps C -> D in flattened coordinates over
// the degree range [lo, hi].
inline std::vector<QVec> boundary_flats(const ProjComplex& c, const ProjComplex& d, int lo, int hi) {
    std::vector<QVec> span;
    for (int i = lo; i <= hi + 1; ++i)
        for (const auto& h : hom_basis(c.term(i), d.term(i - 1))) {
            ChainMap nh{c, d, {}};
            Morphism top = d.diff(i - 1).compose_after(h);
            Morphism bot = h.compose_after(c.diff(i - 1));
            if (i >= lo && i <= hi && !top.is_zero()) nh.comps.emplace(i, top);
            if (i - 1 >= lo && i - 1 <= hi && !bot.is_zero()) nh.comps.emplace(i - 1, bot);
            QVec v = flatten_chain(nh, lo, hi);
            if (!in_span(span, v)) span.push_back(std::move(v));
        }
    return span;
}

}  // namespace detail

// Basis of Hom_D(C, D) = chain maps modulo homotopy, as representative chain
// maps. Deterministic: hom bases per degree, fixed elimination.
inline std::vector<ChainMap> hom_complex_basis(const ProjComplex& c, const ProjComplex& d) {
    if (c.is_zero_complex() || d.is_zero_complex()) return {};
    int lo = std::max(c.lo(), d.lo()), hi = std::min(c.hi(), d.hi());
    if (lo > hi) return {};

    // coordinates: hom_basis(C^i, D^i) per overlap degree
    std::vector<std::vector<Morphism>> bases;
    std::vector<std::size_t> offset = {0};
    for (int i = lo; i <= hi; ++i) {
        bases.push_back(hom_basis(c.term(i), d.term(i)));
        offset.push_back(offset.back() + bases.back().size());
    }
    std::size_t nvars = offset.back();
    if (nvars == 0) return {};

    // chain condition d_D o f_i = f_{i+1} o d_C as linear equations
    std::vector<QVec> rows_by_eq;  // transposed assembly
    std::size_t neq = 0;
    std::vector<std::pair<int, std::size_t>> eq_layout;  // (degree i, flat size)
    for (int i = lo - 1; i <= hi; ++i) {
        std::size_t sz = 0;
        for (int v = 1; v <= c.quiver_ptr()->n(); ++v)
            sz += (std::size_t)(d.term(i + 1).dim_at(v) * c.term(i).dim_at(v));
        eq_layout.emplace_back(i, sz);
        neq += sz;
    }
    QMat sys(neq, nvars);
    std::size_t row0 = 0;
    for (auto [i, sz] : eq_layout) {
        if (sz != 0) {
            if (i >= lo && i <= hi) {
                for (std::size_t k = 0; k < bases[(std::size_t)(i - lo)].size(); ++k) {
                    QVec v = d.diff(i).compose_after(bases[(std::size_t)(i - lo)][k]).flatten();
                    for (std::size_t r = 0; r < sz; ++r) sys(row0 + r, offset[(std::size_t)(i - lo)] + k) += v[r];
                }
            }
            if (i + 1 >= lo && i + 1 <= hi) {
                for (std::size_t k = 0; k < bases[(std::size_t)(i + 1 - lo)].size(); ++k) {
                    QVec v = bases[(std::size_t)(i + 1 - lo)][k].compose_after(c.diff(i)).flatten();
                    for (std::size_t r = 0; r < sz; ++r) sys(row0 + r, offset[(std::size_t)(i + 1 - lo)] + k) -= v[r];
                }
            }
        }
        row0 += sz;
    }

    auto coords_to_chain = [&](const QVec& x) {
        ChainMap f{c, d, {}};
        for (int i = lo; i <= hi; ++i) {
            Morphism m = Morphism::zero(c.term(i), d.term(i));
            const auto& bs = bases[(std::size_t)(i - lo)];
            for (std::size_t k = 0; k < bs.size(); ++k)
                if (x[offset[(std::size_t)(i - lo)] + k] != 0) m = m + bs[k].scale(x[offset[(std::size_t)(i - lo)] + k]);
            if (!m.is_zero()) f.comps.emplace(i, std::move(m));
        }
        return f;
    };

    std::vector<ChainMap> cycles;
    for (const auto& x : sys.kernel_basis()) cycles.push_back(coords_to_chain(x));

    // null-homotopic maps: dh + hd over all homotopies h_i : C^i -> D^{i-1}
    std::vector<ChainMap> out;
    std::vector<QVec> span = detail::boundary_flats(c, d, lo, hi);
    for (const auto& z : cycles) {
        QVec v = detail::flatten_chain(z, lo, hi);
        if (!in_span(span, v)) {
            span.push_back(std::move(v));
            out.push_back(z);
        }
    }
    return out;
}

inline std::size_t hom_complex_dim(const ProjComplex& c, const ProjComplex& d) {
    return hom_complex_basis(c, d).size();
}

// Is a chain map null-homotopic (zero in D)?
inline bool is_null_homotopic(const ChainMap& f) {
    if (f.is_zero()) return true;
    const ProjComplex &c = f.src, &d = f.tgt;
    int lo = std::max(c.lo(), d.lo()), hi = std::min(c.hi(), d.hi());
    auto span = detail::boundary_flats(c, d, lo, hi);
    return in_span(span, detail::flatten_chain(f, lo, hi));
}

// Direct sum of complexes with inclusion/projection chain maps.
struct ComplexSum {
    ProjComplex sum;
    std::vector<ChainMap> inclusions, projections;
};

inline ComplexSum direct_sum_complexes(const std::vector<ProjComplex>& parts,
                                       const std::shared_ptr<const Quiver>& qp) {
    ProjComplex sum = direct_sum_complex(parts, qp);
    ComplexSum out{sum, {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out.inclusions.push_back(ChainMap{parts[k], sum, {}});
        out.projections.push_back(ChainMap{sum, parts[k], {}});
    }
    for (int i = sum.lo(); i <= sum.hi(); ++i) {
        std::vector<Rep> slice;
        for (const auto& p : parts) slice.push_back(p.term(i));
        DirectSum ds = direct_sum(slice, qp);
        // ds.sum equals sum.term(i) by construction (same block layout)
        for (std::size_t k = 0; k < parts.size(); ++k) {
            Morphism inc(parts[k].term(i), sum.term(i), ds.inclusions[k].components(), false);
            Morphism prj(sum.term(i), parts[k].term(i), ds.projections[k].components(), false);
            if (!inc.is_zero()) out.inclusions[k].comps.emplace(i, std::move(inc));
            if (!prj.is_zero()) out.projections[k].comps.emplace(i, std::move(prj));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cone

// cone(f : A -> B): degree i term A^{i+1} (+) B^i, d = [[-d_A, 0], [f, d_B]].
inline ProjComplex cone(const ChainMap& f) {
    const ProjComplex &a = f.src, &b = f.tgt;
    auto qp = a.quiver_ptr();
    if (a.is_zero_complex() && b.is_zero_complex()) return ProjComplex::zero(qp);
    int lo = std::min(a.lo() - 1, b.lo());
    int hi = std::max(a.hi() - 1, b.hi());
    std::vector<DirectSum> sums;
    std::vector<Rep> terms;
    for (int i = lo; i <= hi; ++i) {
        sums.push_back(direct_sum({a.term(i + 1), b.term(i)}, qp));
        terms.push_back(sums.back().sum);
    }
    std::vector<Morphism> diffs;
    for (int i = lo; i < hi; ++i) {
        const DirectSum& s = sums[(std::size_t)(i - lo)];
        const DirectSum& t = sums[(std::size_t)(i + 1 - lo)];
        Morphism d = t.inclusions[0].compose_after(a.diff(i + 1).scale(Rat(-1))).compose_after(s.projections[0]) +
                     t.inclusions[1].compose_after(f.comp(i + 1)).compose_after(s.projections[0]) +
                     t.inclusions[1].compose_after(b.diff(i)).compose_after(s.projections[1]);
        diffs.push_back(std::move(d));
    }
    return ProjComplex(qp, lo, std::move(terms), std::move(diffs), true);
}

// ---------------------------------------------------------------------------
// Cohomology and stalk normalization

inline Rep cohomology_at(const ProjComplex& c, int i) {
    auto [ker, incl] = morphism_kernel(c.diff(i));
    // factor d^{i-1} through the kernel inclusion, then quotient
    Morphism dprev = c.diff(i - 1);
    const Quiver& q = *c.quiver_ptr();
    std::vector<QMat> spans;
    for (int v = 1; v <= q.n(); ++v) {
        const QMat& iv = incl.at(v);
        const QMat& dv = dprev.at(v);
        QMat s(ker.dim_at(v), dv.cols());
        for (std::size_t j = 0; j < dv.cols(); ++j) {
            auto sol = iv.solve(dv.column(j));
            if (!sol) throw InternalInconsistency("image of d not inside kernel of d");
            for (std::size_t r = 0; r < sol->size(); ++r) s(r, j) = (*sol)[r];
        }
        spans.push_back(std::move(s));
    }
    return quotient_by_spans(ker, spans).first;
}

// Hereditary splitting: the object is isomorphic to the sum of its cohomology
// stalks. Returns indecomposable stalks (module, shift), shift = -degree,
// expanded by multiplicity and canonically ordered.
inline std::vector<Stalk> normalize_stalks(const ProjComplex& c) {
    std::vector<Stalk> out;
    long total_h = 0;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        Rep h = cohomology_at(c, i);
        total_h += h.total();
        for (const auto& [m, mult] : decompose(h))
            for (std::size_t k = 0; k < mult; ++k) out.push_back(Stalk{m, -i});
    }
    // Euler characteristic consistency
    long euler_terms = 0, euler_h = 0;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        long sgn = (i % 2 == 0) ? 1 : -1;
        euler_terms += sgn * c.term(i).total();
    }
    for (const auto& s : out) euler_h += ((s.degree % 2 == 0) ? 1 : -1) * s.module.total();
    if (euler_terms != euler_h) throw InternalInconsistency("cohomology Euler characteristic mismatch");
    (void)total_h;
    std::sort(out.begin(), out.end(), [](const Stalk& a, const Stalk& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.module.dim() < b.module.dim();
    });
    return out;
}

// Equality of stalk lists up to isomorphism of the modules.
inline bool same_stalks(const std::vector<Stalk>& a, const std::vector<Stalk>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].degree != b[i].degree) return false;
        if (!is_isomorphic(a[i].module, b[i].module)) return false;
    }
    return true;
}

inline bool iso_in_derived(const ProjComplex& a, const ProjComplex& b) {
    return same_stalks(normalize_stalks(a), normalize_stalks(b));
}

}  // namespace siltlab
