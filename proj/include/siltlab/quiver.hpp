#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "siltlab/errors.hpp"
#include "siltlab/matrix.hpp"

namespace siltlab {

using DimVec = std::vector<long>;

struct Arrow {
    int source;  // 1-based
    int target;
};

enum class DynkinSeries { A, D, E, RepInfinite };

struct DynkinType {
    DynkinSeries series = DynkinSeries::RepInfinite;
    int rank = 0;
    bool is_finite() const { return series != DynkinSeries::RepInfinite; }
    std::string name() const {
        switch (series) {
            case DynkinSeries::A: return "A" + std::to_string(rank);
            case DynkinSeries::D: return "D" + std::to_string(rank);
            case DynkinSeries::E: return "E" + std::to_string(rank);
            default: return "RepInfinite";
        }
    }
};

// Finite acyclic quiver with 1-based vertices. Immutable after construction;
// construction validates acyclicity and computes a topological order.
class Quiver {
  public:
    Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
        if (n_ < 1) throw BadIndex("quiver needs at least one vertex");
        for (const auto& a : arrows_) {
            if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
                throw BadIndex("arrow endpoint out of range");
        }
        topo_ = topological_order();
    }

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<int>& topo_order() const { return topo_; }

    bool operator==(const Quiver& o) const {
        if (n_ != o.n_ || arrows_.size() != o.arrows_.size()) return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].source != o.arrows_[i].source || arrows_[i].target != o.arrows_[i].target) return false;
        return true;
    }

    // Euler matrix: C[i][j] = <e_i, e_j> = delta_ij - #arrows(i -> j).
    QMat euler_matrix() const {
        QMat c = QMat::identity(n_);
        for (const auto& a : arrows_) c(a.source - 1, a.target - 1) -= 1;
        return c;
    }

    long euler_form(const DimVec& d, const DimVec& e) const {
        if ((int)d.size() != n_ || (int)e.size() != n_) throw DimensionMismatch("euler_form vector length");
        long out = 0;
        for (int i = 0; i < n_; ++i) out += d[i] * e[i];
        for (const auto& a : arrows_) out -= d[a.source - 1] * e[a.target - 1];
        return out;
    }

    // Symmetrized Tits form q(d) = <d,d>.
    long tits_form(const DimVec& d) const { return euler_form(d, d); }

    DynkinType dynkin_type() const {
        // simply-laced Dynkin <=> underlying undirected graph is a tree with
        // no multi-edges and of shape A/D/E
        std::vector<std::vector<int>> adj(n_ + 1);
        for (const auto& a : arrows_) {
            if (a.source == a.target) return {};
            adj[a.source].push_back(a.target);
            adj[a.target].push_back(a.source);
        }
        if ((int)arrows_.size() != n_ - 1) return {};  // tree edge count
        // multi-edge check
        {
            std::vector<std::pair<int, int>> edges;
            for (const auto& a : arrows_) edges.emplace_back(std::min(a.source, a.target), std::max(a.source, a.target));
            std::sort(edges.begin(), edges.end());
            if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return {};
        }
        // connectivity
        std::vector<bool> seen(n_ + 1, false);
        std::vector<int> stack = {1};
        seen[1] = true;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        if (count != n_) return {};
        // degree profile
        std::vector<int> deg(n_ + 1);
        for (int v = 1; v <= n_; ++v) deg[v] = (int)adj[v].size();
        int deg3 = 0, branch = 0;
        for (int v = 1; v <= n_; ++v) {
            if (deg[v] > 3) return {};
            if (deg[v] == 3) {
                ++deg3;
                branch = v;
            }
        }
        if (deg3 == 0) return {DynkinSeries::A, n_};
        if (deg3 > 1) return {};
        // arm lengths from the branch vertex
        std::vector<int> arms;
        for (int w : adj[branch]) {
            int len = 1, prev = branch, cur = w;
            while (deg[cur] == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return {DynkinSeries::D, n_};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {DynkinSeries::E, n_};
        return {};
    }

  private:
    std::vector<int> topological_order() const {
        std::vector<int> indeg(n_ + 1, 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<int> order, ready;
        for (int v = 1; v <= n_; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        std::vector<int> work = indeg;
        while (!ready.empty()) {
            // smallest-first for stability
            auto it = std::min_element(ready.begin(), ready.end());
            int v = *it;
            ready.erase(it);
            order.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --work[a.target] == 0) ready.push_back(a.target);
        }
        if ((int)order.size() != n_) throw CyclicQuiver("quiver has an oriented cycle");
        return order;
    }

    int n_;
    std::vector<Arrow> arrows_;
    std::vector<int> topo_;
};

inline DimVec unit_dim(int n, int i) {
    DimVec d(n, 0);
    d[i - 1] = 1;
    return d;
}

inline long total_dim(const DimVec& d) { return std::accumulate(d.begin(), d.end(), 0L); }

inline bool dim_leq(const DimVec& a, const DimVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace siltlab
