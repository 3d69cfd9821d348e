// graph.hpp — immutable simple undirected graph with exact-integer
// degree-based index computations (M1, M2, F, HM).
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hz/error.hpp"

namespace hz {

using Edge = std::pair<int, int>;

// Simple undirected graph over dense 0-based vertex ids. No self-loops,
// no multi-edges; adjacency is symmetric by construction. Connectivity is
// deliberately not an invariant (isolated vertices are legal components).
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, const std::vector<Edge>& edges) {
        if (vertex_count < 0)
            throw error(errc::bad_parameter, "vertex_count must be nonnegative");
        n_ = vertex_count;
        adj_.assign(static_cast<std::size_t>(n_), {});
        std::vector<Edge> norm;
        norm.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw error(errc::out_of_range,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside [0," + std::to_string(n_) + ")");
            if (u == v)
                throw error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
            norm.emplace_back(std::min(u, v), std::max(u, v));
        }
        // Duplicate edges collapse silently: set semantics.
        std::sort(norm.begin(), norm.end());
        norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
        m_ = static_cast<std::int64_t>(norm.size());
        for (const auto& [u, v] : norm) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int u) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    int degree(int u) const {
        check_vertex(u);
        return static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Visits each undirected edge once, with u < v, in sorted order.
    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) f(u, v);
    }

    // Edge set in canonical (u<v, sorted) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw error(errc::out_of_range,
                        "vertex " + std::to_string(u) + " outside [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

inline Graph new_graph(int vertex_count, const std::vector<Edge>& edges) {
    return Graph(vertex_count, edges);
}

// delta(u): sum of the degrees of u's neighbors.
inline std::int64_t neighbor_degree_sum(const Graph& g, int u) {
    std::int64_t s = 0;
    for (int x : g.neighbors(u)) s = detail::checked_add(s, g.degree(x));
    return s;
}

// Sum over vertices of degree^2. Computed both vertex-wise and edge-wise;
// the two routes must agree exactly.
inline std::int64_t first_zagreb(const Graph& g) {
    std::int64_t by_vertex = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        by_vertex = detail::checked_add(by_vertex, detail::checked_sq(g.degree(u)));
    std::int64_t by_edge = 0;
    g.for_each_edge([&](int u, int v) {
        by_edge = detail::checked_add(by_edge, detail::checked_add(g.degree(u), g.degree(v)));
    });
    if (by_vertex != by_edge)
        throw error(errc::internal_identity_violation,
                    "vertex-wise and edge-wise first Zagreb sums disagree");
    return by_vertex;
}

// Sum over edges of degree(u)*degree(v).
inline std::int64_t second_zagreb(const Graph& g) {
    std::int64_t s = 0;
    g.for_each_edge([&](int u, int v) {
        s = detail::checked_add(s, detail::checked_mul(g.degree(u), g.degree(v)));
    });
    return s;
}

// Sum over vertices of degree^3.
inline std::int64_t forgotten_index(const Graph& g) {
    std::int64_t s = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::int64_t d = g.degree(u);
        s = detail::checked_add(s, detail::checked_mul(d, detail::checked_sq(d)));
    }
    return s;
}

// Sum over edges of (degree(u)+degree(v))^2.
inline std::int64_t hyper_zagreb(const Graph& g) {
    std::int64_t s = 0;
    g.for_each_edge([&](int u, int v) {
        s = detail::checked_add(s, detail::checked_sq(g.degree(u) + g.degree(v)));
    });
    return s;
}

struct IndexReport {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    std::int64_t f = 0;
    std::int64_t hm = 0;

    bool operator==(const IndexReport&) const = default;
};

inline IndexReport index_report(const Graph& g) {
    IndexReport r{first_zagreb(g), second_zagreb(g), forgotten_index(g), hyper_zagreb(g)};
    // hm = f + 2*m2 holds for every graph; a violation is an implementation bug.
    if (r.hm != detail::checked_add(r.f, detail::checked_mul(2, r.m2)))
        throw error(errc::internal_identity_violation, "hm != f + 2*m2");
    return r;
}

// Not a Graph invariant; provided for callers that need it.
inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == g.vertex_count();
}

} // namespace hz
