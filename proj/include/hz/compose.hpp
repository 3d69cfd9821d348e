// compose.hpp — bridge (B1, B2) and chain composition of anchored components.
//
// B1:    join consecutive single anchors v_i - v_{i+1} by new edges.
// B2:    join the out-anchor w_i to the next in-anchor v_{i+1} by new edges.
// Chain: identify w_i with v_{i+1} (vertex amalgamation), no new edges.
//
// Every builder validates the predicted degree pattern of the result:
// B1: end anchors +1, interior anchors +2; B2: w_1..w_{d-1} and v_2..v_d +1;
// Chain: merged vertices have degree w_i + v_{i+1}. All other vertices keep
// their component degree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

// A component graph plus its designated attachment vertices. When both
// anchors are present they must be distinct and non-adjacent (the two-anchor
// compositions assume it).
struct AnchoredComponent {
    Graph graph;
    int anchor_v = 0;
    std::optional<int> anchor_w;

    AnchoredComponent(Graph g, int v) : graph(std::move(g)), anchor_v(v) { validate(); }
    AnchoredComponent(Graph g, int v, int w) : graph(std::move(g)), anchor_v(v), anchor_w(w) {
        validate();
    }

private:
    void validate() const {
        if (anchor_v < 0 || anchor_v >= graph.vertex_count())
            throw error(errc::out_of_range, "anchor v out of range");
        if (anchor_w) {
            if (*anchor_w < 0 || *anchor_w >= graph.vertex_count())
                throw error(errc::out_of_range, "anchor w out of range");
            if (*anchor_w == anchor_v)
                throw error(errc::adjacent_anchors, "anchors v and w must be distinct");
            if (graph.adjacent(anchor_v, *anchor_w))
                throw error(errc::adjacent_anchors, "anchors v and w must not be adjacent");
        }
    }
};

enum class CompositeKind { B1, B2, Chain };

inline const char* composite_kind_name(CompositeKind k) {
    switch (k) {
        case CompositeKind::B1:    return "b1";
        case CompositeKind::B2:    return "b2";
        case CompositeKind::Chain: return "chain";
    }
    return "?";
}

// Composed-graph ids of each component's anchors. For Chain, anchor_map[i].w
// and anchor_map[i+1].v are the same id.
struct AnchorIds {
    int v = 0;
    std::optional<int> w;
};

struct CompositeResult {
    Graph graph;
    std::vector<AnchorIds> anchor_map;
    CompositeKind kind = CompositeKind::B1;
};

namespace detail {

inline void require_nonempty(const std::vector<AnchoredComponent>& comps) {
    if (comps.empty())
        throw error(errc::empty_component_list, "need at least one component");
}

inline void require_two_anchors(const std::vector<AnchoredComponent>& comps) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!comps[i].anchor_w)
            throw error(errc::missing_second_anchor,
                        "component " + std::to_string(i) + " lacks a second anchor");
}

inline void check_degrees(const Graph& got, const std::vector<AnchoredComponent>& comps,
                          const std::vector<std::vector<int>>& idmap,
                          const std::vector<std::int64_t>& expected_bump) {
    // expected_bump is indexed by composed id; component degrees carry over.
    std::vector<std::int64_t> want(static_cast<std::size_t>(got.vertex_count()), 0);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int u = 0; u < comps[i].graph.vertex_count(); ++u)
            want[static_cast<std::size_t>(idmap[i][static_cast<std::size_t>(u)])] +=
                comps[i].graph.degree(u);
    for (int u = 0; u < got.vertex_count(); ++u)
        want[static_cast<std::size_t>(u)] += expected_bump[static_cast<std::size_t>(u)];
    for (int u = 0; u < got.vertex_count(); ++u)
        if (got.degree(u) != want[static_cast<std::size_t>(u)])
            throw error(errc::internal_identity_violation,
                        "composed degree at vertex " + std::to_string(u) +
                            " does not match the predicted pattern");
}

} // namespace detail

inline CompositeResult bridge_b1(const std::vector<AnchoredComponent>& comps) {
    detail::require_nonempty(comps);
    const std::size_t d = comps.size();
    std::vector<std::vector<int>> idmap(d);
    int next = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        const Graph& g = comps[i].graph;
        idmap[i].resize(static_cast<std::size_t>(g.vertex_count()));
        for (int u = 0; u < g.vertex_count(); ++u) idmap[i][static_cast<std::size_t>(u)] = next++;
        g.for_each_edge([&](int u, int v) {
            edges.emplace_back(idmap[i][static_cast<std::size_t>(u)],
                               idmap[i][static_cast<std::size_t>(v)]);
        });
    }
    std::vector<std::int64_t> bump(static_cast<std::size_t>(next), 0);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        int a = idmap[i][static_cast<std::size_t>(comps[i].anchor_v)];
        int b = idmap[i + 1][static_cast<std::size_t>(comps[i + 1].anchor_v)];
        edges.emplace_back(a, b);
        bump[static_cast<std::size_t>(a)] += 1;
        bump[static_cast<std::size_t>(b)] += 1;
    }
    CompositeResult r{Graph(next, edges), {}, CompositeKind::B1};
    detail::check_degrees(r.graph, comps, idmap, bump);
    for (std::size_t i = 0; i < d; ++i) {
        AnchorIds ids{idmap[i][static_cast<std::size_t>(comps[i].anchor_v)], std::nullopt};
        if (comps[i].anchor_w)
            ids.w = idmap[i][static_cast<std::size_t>(*comps[i].anchor_w)];
        r.anchor_map.push_back(ids);
    }
    return r;
}

inline CompositeResult bridge_b2(const std::vector<AnchoredComponent>& comps) {
    detail::require_nonempty(comps);
    detail::require_two_anchors(comps);
    const std::size_t d = comps.size();
    std::vector<std::vector<int>> idmap(d);
    int next = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        const Graph& g = comps[i].graph;
        idmap[i].resize(static_cast<std::size_t>(g.vertex_count()));
        for (int u = 0; u < g.vertex_count(); ++u) idmap[i][static_cast<std::size_t>(u)] = next++;
        g.for_each_edge([&](int u, int v) {
            edges.emplace_back(idmap[i][static_cast<std::size_t>(u)],
                               idmap[i][static_cast<std::size_t>(v)]);
        });
    }
    std::vector<std::int64_t> bump(static_cast<std::size_t>(next), 0);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        int a = idmap[i][static_cast<std::size_t>(*comps[i].anchor_w)];
        int b = idmap[i + 1][static_cast<std::size_t>(comps[i + 1].anchor_v)];
        edges.emplace_back(a, b);
        bump[static_cast<std::size_t>(a)] += 1;
        bump[static_cast<std::size_t>(b)] += 1;
    }
    CompositeResult r{Graph(next, edges), {}, CompositeKind::B2};
    detail::check_degrees(r.graph, comps, idmap, bump);
    for (std::size_t i = 0; i < d; ++i)
        r.anchor_map.push_back({idmap[i][static_cast<std::size_t>(comps[i].anchor_v)],
                                idmap[i][static_cast<std::size_t>(*comps[i].anchor_w)]});
    return r;
}

inline CompositeResult chain(const std::vector<AnchoredComponent>& comps) {
    detail::require_nonempty(comps);
    detail::require_two_anchors(comps);
    const std::size_t d = comps.size();
    std::vector<std::vector<int>> idmap(d);
    int next = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Graph& g = comps[i].graph;
        idmap[i].resize(static_cast<std::size_t>(g.vertex_count()));
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (i > 0 && u == comps[i].anchor_v) {
                // v_{i+1} inherits the id of the previous component's w_i.
                idmap[i][static_cast<std::size_t>(u)] =
                    idmap[i - 1][static_cast<std::size_t>(*comps[i - 1].anchor_w)];
            } else {
                idmap[i][static_cast<std::size_t>(u)] = next++;
            }
        }
    }
    std::vector<Edge> edges;
    std::size_t total = 0;
    for (std::size_t i = 0; i < d; ++i) {
        comps[i].graph.for_each_edge([&](int u, int v) {
            edges.emplace_back(idmap[i][static_cast<std::size_t>(u)],
                               idmap[i][static_cast<std::size_t>(v)]);
        });
        total += static_cast<std::size_t>(comps[i].graph.edge_count());
    }
    CompositeResult r{Graph(next, edges), {}, CompositeKind::Chain};
    // The identification must not have collapsed two component edges into one.
    if (static_cast<std::size_t>(r.graph.edge_count()) != total)
        throw error(errc::merged_multi_edge,
                    "identification would merge parallel edges between shared vertices");
    detail::check_degrees(r.graph, comps, idmap,
                          std::vector<std::int64_t>(static_cast<std::size_t>(next), 0));
    for (std::size_t i = 0; i < d; ++i)
        r.anchor_map.push_back({idmap[i][static_cast<std::size_t>(comps[i].anchor_v)],
                                idmap[i][static_cast<std::size_t>(*comps[i].anchor_w)]});
    return r;
}

} // namespace hz
