#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "siltlab/matrix.hpp"
#include "siltlab/quiver.hpp"

namespace siltlab {

// Finite dimensional representation: one vector space per vertex, one matrix
// per arrow (target-dim x source-dim).
class Rep {
  public:
    Rep() = default;
    Rep(std::shared_ptr<const Quiver> q, DimVec dim, std::vector<QMat> maps)
        : q_(std::move(q)), dim_(std::move(dim)), maps_(std::move(maps)) {
        if ((int)dim_.size() != q_->n()) throw DimensionMismatch("rep: dim vector length");
        if (maps_.size() != q_->arrows().size()) throw DimensionMismatch("rep: one matrix per arrow");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& ar = q_->arrows()[a];
            if ((long)maps_[a].rows() != dim_[ar.target - 1] || (long)maps_[a].cols() != dim_[ar.source - 1])
                throw DimensionMismatch("rep: matrix shape at arrow");
        }
    }

    static Rep zero(std::shared_ptr<const Quiver> q) {
        DimVec d(q->n(), 0);
        std::vector<QMat> maps(q->arrows().size());
        return Rep(std::move(q), std::move(d), std::move(maps));
    }

    const std::shared_ptr<const Quiver>& quiver_ptr() const { return q_; }
    const Quiver& quiver() const { return *q_; }
    const DimVec& dim() const { return dim_; }
    long dim_at(int v) const { return dim_[v - 1]; }
    long total() const { return total_dim(dim_); }
    bool is_zero() const { return total() == 0; }
    const QMat& map(std::size_t arrow_idx) const { return maps_[arrow_idx]; }
    const std::vector<QMat>& maps() const { return maps_; }

  private:
    std::shared_ptr<const Quiver> q_;
    DimVec dim_;
    std::vector<QMat> maps_;
};

// Morphism of representations: one matrix per vertex, commuting with all
// arrow maps.
class Morphism {
  public:
    Morphism() = default;
    Morphism(Rep source, Rep target, std::vector<QMat> comps, bool check = true)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
        const auto& q = source_.quiver();
        if ((int)comps_.size() != q.n()) throw DimensionMismatch("morphism: one matrix per vertex");
        for (int v = 1; v <= q.n(); ++v)
            if ((long)comps_[v - 1].rows() != target_.dim_at(v) || (long)comps_[v - 1].cols() != source_.dim_at(v))
                throw DimensionMismatch("morphism: component shape");
        if (check) {
            for (std::size_t a = 0; a < q.arrows().size(); ++a) {
                const auto& ar = q.arrows()[a];
                QMat lhs = target_.map(a) * comps_[ar.source - 1];
                QMat rhs = comps_[ar.target - 1] * source_.map(a);
                if (!(lhs == rhs)) throw DimensionMismatch("morphism: commuting square fails");
            }
        }
    }

    static Morphism zero(const Rep& x, const Rep& y) {
        std::vector<QMat> comps;
        for (int v = 1; v <= x.quiver().n(); ++v) comps.emplace_back(y.dim_at(v), x.dim_at(v));
        return Morphism(x, y, std::move(comps), false);
    }

    static Morphism identity(const Rep& x) {
        std::vector<QMat> comps;
        for (int v = 1; v <= x.quiver().n(); ++v) comps.push_back(QMat::identity(x.dim_at(v)));
        return Morphism(x, x, std::move(comps), false);
    }

    const Rep& source() const { return source_; }
    const Rep& target() const { return target_; }
    const QMat& at(int v) const { return comps_[v - 1]; }
    const std::vector<QMat>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_mono() const {
        for (const auto& c : comps_)
            if (c.kernel_basis().size() != 0) return false;
        return true;
    }

    bool is_epi() const {
        for (const auto& c : comps_)
            if (c.rank() != c.rows()) return false;
        return true;
    }

    bool is_iso() const { return is_mono() && is_epi(); }

    Morphism compose_after(const Morphism& g) const {  // this o g
        std::vector<QMat> comps;
        for (int v = 1; v <= source_.quiver().n(); ++v) comps.push_back(at(v) * g.at(v));
        return Morphism(g.source(), target_, std::move(comps), false);
    }

    Morphism operator+(const Morphism& o) const {
        std::vector<QMat> comps;
        for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] + o.comps_[i]);
        return Morphism(source_, target_, std::move(comps), false);
    }

    Morphism operator-(const Morphism& o) const {
        std::vector<QMat> comps;
        for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] - o.comps_[i]);
        return Morphism(source_, target_, std::move(comps), false);
    }

    Morphism scale(const Rat& c) const {
        std::vector<QMat> comps;
        for (const auto& m : comps_) comps.push_back(m * c);
        return Morphism(source_, target_, std::move(comps), false);
    }

    bool operator==(const Morphism& o) const { return comps_ == o.comps_; }

    // Flattened coordinates: vertices in order, entries row-major.
    QVec flatten() const {
        QVec out;
        for (const auto& c : comps_) out.insert(out.end(), c.entries().begin(), c.entries().end());
        return out;
    }

    static Morphism unflatten(const Rep& x, const Rep& y, const QVec& v) {
        std::vector<QMat> comps;
        std::size_t pos = 0;
        for (int w = 1; w <= x.quiver().n(); ++w) {
            QMat m(y.dim_at(w), x.dim_at(w));
            for (auto& e : m.entries()) e = v[pos++];
            comps.push_back(std::move(m));
        }
        return Morphism(x, y, std::move(comps), false);
    }

  private:
    Rep source_, target_;
    std::vector<QMat> comps_;
};

// ---------------------------------------------------------------------------
// Hom and Ext

// Exact basis of Hom(X, Y): solutions of the commuting-square linear system.
inline std::vector<Morphism> hom_basis(const Rep& x, const Rep& y) {
    const Quiver& q = x.quiver();
    // unknown layout = flattened morphism coordinates
    std::vector<std::size_t> offset(q.n() + 1, 0);
    for (int v = 1; v <= q.n(); ++v) offset[v] = offset[v - 1] + (std::size_t)(y.dim_at(v) * x.dim_at(v));
    std::size_t nvars = offset[q.n()];
    std::size_t neq = 0;
    for (const auto& a : q.arrows()) neq += (std::size_t)(y.dim_at(a.target) * x.dim_at(a.source));
    QMat sys(neq, nvars);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrows()[ai];
        long ys = y.dim_at(a.source), yt = y.dim_at(a.target);
        long xs = x.dim_at(a.source), xt = x.dim_at(a.target);
        const QMat& ya = y.map(ai);
        const QMat& xa = x.map(ai);
        // equation (Ya * f_s - f_t * Xa)[i][j] = 0
        for (long i = 0; i < yt; ++i)
            for (long j = 0; j < xs; ++j) {
                for (long k = 0; k < ys; ++k)
                    if (ya(i, k) != 0) sys(row, offset[a.source - 1] + (std::size_t)(k * xs + j)) += ya(i, k);
                for (long k = 0; k < xt; ++k)
                    if (xa(k, j) != 0) sys(row, offset[a.target - 1] + (std::size_t)(i * xt + k)) -= xa(k, j);
                ++row;
            }
    }
    std::vector<Morphism> out;
    for (const auto& v : sys.kernel_basis()) out.push_back(Morphism::unflatten(x, y, v));
    return out;
}

inline std::size_t hom_dim(const Rep& x, const Rep& y) { return hom_basis(x, y).size(); }

// dim Ext^1 via the hereditary Euler identity.
inline std::size_t ext1_dim(const Rep& x, const Rep& y) {
    long h = (long)hom_dim(x, y);
    long e = h - x.quiver().euler_form(x.dim(), y.dim());
    if (e < 0) throw InternalInconsistency("negative Ext^1 dimension");
    return (std::size_t)e;
}

// ---------------------------------------------------------------------------
// Sub/quotient machinery

// Subrepresentation spanned (vertexwise) by the given column spans, which must
// be closed under the arrow maps. Returns (sub, inclusion).
inline std::pair<Rep, Morphism> subrep_from_spans(const Rep& x, const std::vector<QMat>& spans) {
    const Quiver& q = x.quiver();
    std::vector<QMat> bases;
    DimVec dim;
    for (int v = 1; v <= q.n(); ++v) {
        QMat b = spans[v - 1].column_space_basis();
        dim.push_back((long)b.cols());
        bases.push_back(std::move(b));
    }
    std::vector<QMat> maps;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrows()[ai];
        const QMat& bs = bases[a.source - 1];
        const QMat& bt = bases[a.target - 1];
        QMat m(bt.cols(), bs.cols());
        for (std::size_t j = 0; j < bs.cols(); ++j) {
            QVec img = x.map(ai).apply(bs.column(j));
            auto sol = bt.solve(img);
            if (!sol) throw InternalInconsistency("subrep spans not closed under maps");
            for (std::size_t i = 0; i < bt.cols(); ++i) m(i, j) = (*sol)[i];
        }
        maps.push_back(std::move(m));
    }
    Rep sub(x.quiver_ptr(), dim, std::move(maps));
    Morphism incl(sub, x, bases, false);
    return {std::move(sub), std::move(incl)};
}

// Quotient of x by the subspace spanned (vertexwise) by the given columns.
// Returns (quotient, projection).
inline std::pair<Rep, Morphism> quotient_by_spans(const Rep& x, const std::vector<QMat>& spans) {
    const Quiver& q = x.quiver();
    std::vector<QMat> proj;   // dim_q x dim_x per vertex
    std::vector<QMat> sect;   // dim_x x dim_q per vertex (linear section)
    DimVec dim;
    for (int v = 1; v <= q.n(); ++v) {
        long d = x.dim_at(v);
        QMat s = spans[v - 1].column_space_basis();
        // complement = standard coordinates missing from the pivot set of s^T
        QMat st = s.transpose();
        auto pivots = st.rref();
        std::vector<bool> piv(d, false);
        for (auto p : pivots) piv[p] = true;
        std::vector<std::size_t> comp;
        for (long i = 0; i < d; ++i)
            if (!piv[i]) comp.push_back((std::size_t)i);
        QMat full(d, s.cols() + comp.size());
        for (std::size_t j = 0; j < s.cols(); ++j)
            for (long i = 0; i < d; ++i) full(i, j) = s(i, j);
        for (std::size_t j = 0; j < comp.size(); ++j) full(comp[j], s.cols() + j) = 1;
        auto inv = full.inverse();
        if (!inv) throw InternalInconsistency("quotient basis completion failed");
        QMat p(comp.size(), d);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (long j = 0; j < d; ++j) p(i, j) = (*inv)(s.cols() + i, j);
        QMat c(d, comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) c(comp[j], j) = 1;
        dim.push_back((long)comp.size());
        proj.push_back(std::move(p));
        sect.push_back(std::move(c));
    }
    std::vector<QMat> maps;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrows()[ai];
        maps.push_back(proj[a.target - 1] * x.map(ai) * sect[a.source - 1]);
    }
    Rep quo(x.quiver_ptr(), dim, std::move(maps));
    Morphism pr(x, quo, proj, false);
    return {std::move(quo), std::move(pr)};
}

inline std::pair<Rep, Morphism> morphism_kernel(const Morphism& f) {
    const Quiver& q = f.source().quiver();
    std::vector<QMat> spans;
    for (int v = 1; v <= q.n(); ++v) {
        auto kb = f.at(v).kernel_basis();
        QMat s(f.source().dim_at(v), kb.size());
        for (std::size_t j = 0; j < kb.size(); ++j)
            for (std::size_t i = 0; i < kb[j].size(); ++i) s(i, j) = kb[j][i];
        spans.push_back(std::move(s));
    }
    return subrep_from_spans(f.source(), spans);
}

inline std::pair<Rep, Morphism> morphism_image(const Morphism& f) {
    const Quiver& q = f.source().quiver();
    std::vector<QMat> spans;
    for (int v = 1; v <= q.n(); ++v) spans.push_back(f.at(v));
    return subrep_from_spans(f.target(), spans);
}

inline std::pair<Rep, Morphism> morphism_cokernel(const Morphism& f) {
    const Quiver& q = f.source().quiver();
    std::vector<QMat> spans;
    for (int v = 1; v <= q.n(); ++v) spans.push_back(f.at(v));
    return quotient_by_spans(f.target(), spans);
}

// ---------------------------------------------------------------------------
// Direct sums

struct DirectSum {
    Rep sum;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};

inline DirectSum direct_sum(const std::vector<Rep>& parts, std::shared_ptr<const Quiver> q) {
    const int n = q->n();
    DimVec dim(n, 0);
    for (const auto& p : parts)
        for (int v = 0; v < n; ++v) dim[v] += p.dim()[v];
    std::vector<QMat> maps;
    for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
        const auto& a = q->arrows()[ai];
        QMat m(dim[a.target - 1], dim[a.source - 1]);
        long ro = 0, co = 0;
        for (const auto& p : parts) {
            const QMat& pm = p.map(ai);
            for (std::size_t i = 0; i < pm.rows(); ++i)
                for (std::size_t j = 0; j < pm.cols(); ++j) m(ro + i, co + j) = pm(i, j);
            ro += p.dim_at(a.target);
            co += p.dim_at(a.source);
        }
        maps.push_back(std::move(m));
    }
    DirectSum out{Rep(q, dim, std::move(maps)), {}, {}};
    DimVec off(n, 0);
    for (const auto& p : parts) {
        std::vector<QMat> ic, pc;
        for (int v = 0; v < n; ++v) {
            QMat inc(dim[v], p.dim()[v]);
            QMat prj(p.dim()[v], dim[v]);
            for (long i = 0; i < p.dim()[v]; ++i) {
                inc(off[v] + i, i) = 1;
                prj(i, off[v] + i) = 1;
            }
            ic.push_back(std::move(inc));
            pc.push_back(std::move(prj));
        }
        out.inclusions.emplace_back(p, out.sum, std::move(ic), false);
        out.projections.emplace_back(out.sum, p, std::move(pc), false);
        for (int v = 0; v < n; ++v) off[v] += p.dim()[v];
    }
    return out;
}

inline Rep power(const Rep& x, std::size_t k) {
    std::vector<Rep> parts(k, x);
    return direct_sum(parts, x.quiver_ptr()).sum;
}

// Deterministic search for an isomorphism X -> Y inside the Hom space.
inline std::optional<Morphism> find_isomorphism(const Rep& x, const Rep& y) {
    if (x.dim() != y.dim()) return std::nullopt;
    if (x.is_zero()) return Morphism::zero(x, y);
    auto basis = hom_basis(x, y);
    if (basis.empty()) return std::nullopt;
    for (const auto& f : basis)
        if (f.is_iso()) return f;
    for (unsigned long trial = 1; trial <= 64; ++trial) {
        DetRng rng(trial);
        Morphism f = Morphism::zero(x, y);
        for (const auto& b : basis) f = f + b.scale(Rat(rng.next(-3, 3)));
        if (f.is_iso()) return f;
    }
    return std::nullopt;
}

inline bool is_isomorphic(const Rep& x, const Rep& y) {
    if (x.dim() != y.dim()) return false;
    if (x.is_zero()) return true;
    // quick necessary checks before the witness search
    if (hom_dim(x, y) != hom_dim(y, x)) return false;
    return find_isomorphism(x, y).has_value();
}

}  // namespace siltlab
