#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "siltlab/excseq.hpp"
#include "siltlab/rep.hpp"

namespace siltlab {

enum class Decoration { Mono, Epi, Ext };

inline char decoration_char(Decoration d) {
    switch (d) {
        case Decoration::Mono: return 'm';
        case Decoration::Epi: return 'e';
        default: return 'x';
    }
}

struct HomExtArrow {
    std::size_t from, to;  // 0-based indices into the sequence
    Decoration decoration;
};

struct HomExtQuiver {
    ExcSeq terms;
    std::vector<HomExtArrow> arrows;

    bool has_arrow(std::size_t i, std::size_t j, Decoration d) const {
        for (const auto& a : arrows)
            if (a.from == i && a.to == j && a.decoration == d) return true;
        return false;
    }
    bool has_any_arrow(std::size_t i, std::size_t j) const {
        for (const auto& a : arrows)
            if (a.from == i && a.to == j) return true;
        return false;
    }
};

namespace detail {

// Is some element of the Hom space a mono (resp. epi)? Basis first, then a
// fixed deterministic list of small integer combinations.
inline bool hom_space_has(const std::vector<Morphism>& basis, bool mono) {
    auto good = [&](const Morphism& f) { return mono ? f.is_mono() : f.is_epi(); };
    for (const auto& f : basis)
        if (good(f)) return true;
    for (unsigned long t = 1; t <= 64; ++t) {
        DetRng rng(t * 13);
        Morphism f = basis[0].scale(Rat(0));
        for (const auto& b : basis) f = f + b.scale(Rat(rng.next(-3, 3)));
        if (good(f)) return true;
    }
    return false;
}

}  // namespace detail

inline HomExtQuiver build_homext(const ExcSeq& seq) {
    HomExtQuiver g{seq, {}};
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j < seq.size(); ++j) {
            if (i == j) continue;
            auto basis = hom_basis(seq[i], seq[j]);
            if (!basis.empty()) {
                bool mono = detail::hom_space_has(basis, true);
                bool epi = detail::hom_space_has(basis, false);
                if (mono && epi) throw InternalInconsistency("both a mono and an epi between distinct exceptionals");
                if (!mono && !epi) throw DecorationUndecidable("no mono or epi witness in the Hom space");
                g.arrows.push_back({i, j, mono ? Decoration::Mono : Decoration::Epi});
            }
            if (ext1_dim(seq[j], seq[i]) != 0) g.arrows.push_back({i, j, Decoration::Ext});
        }
    return g;
}

inline bool is_acyclic(const HomExtQuiver& g) {
    std::size_t n = g.terms.size();
    std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        state[v] = 1;
        for (const auto& a : g.arrows) {
            if (a.from != v) continue;
            if (state[a.to] == 1) return false;
            if (state[a.to] == 0 && !dfs(a.to)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

inline bool is_connected(const HomExtQuiver& g) {
    std::size_t n = g.terms.size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& a : g.arrows) {
            if (a.from == v && !seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
            if (a.to == v && !seen[a.from]) {
                seen[a.from] = true;
                stack.push_back(a.from);
            }
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

inline std::string emit_dot(const HomExtQuiver& g) {
    std::ostringstream os;
    os << "digraph homext {\n";
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
        os << "  E" << i + 1 << " [label=\"E" << i + 1 << " (";
        const auto& d = g.terms[i].dim();
        for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
        os << ")\"];\n";
    }
    for (const auto& a : g.arrows)
        os << "  E" << a.from + 1 << " -> E" << a.to + 1 << " [label=\"" << decoration_char(a.decoration)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace siltlab
