// families.hpp — parametric generators for the concrete structures the
// closed forms are exercised on, plus a seeded random connected-graph
// generator for property sweeps.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hz/closed_form.hpp"
#include "hz/compose.hpp"
#include "hz/graph.hpp"

namespace hz {

// SplitMix64: fixed, platform-independent 64-bit PRNG. All randomized
// generation goes through this so a seed reproduces byte-identical graphs
// everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw error(errc::bad_parameter, "next_below(0)");
        const std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

inline Graph cycle(int n) {
    if (n < 3) throw error(errc::bad_parameter, "cycle requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph path(int m) {
    if (m < 1) throw error(errc::bad_parameter, "path requires m >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph(m, edges);
}

// Comb-style lattice: d cycles C_n strung on single anchors.
inline CompositeResult comb_t(int d, int n) {
    if (d < 2) throw error(errc::bad_parameter, "comb_t requires d >= 2");
    if (n < 3) throw error(errc::bad_parameter, "comb_t requires n >= 3");
    std::vector<AnchoredComponent> comps(static_cast<std::size_t>(d), {cycle(n), 0});
    return bridge_b1(comps);
}

// d three-vertex paths bridged at their middle vertices.
inline CompositeResult bridge_b_family(int d) {
    if (d < 2) throw error(errc::bad_parameter, "bridge_b requires d >= 2");
    std::vector<AnchoredComponent> comps(static_cast<std::size_t>(d), {path(3), 1});
    return bridge_b1(comps);
}

// Square-comb style lattice: d paths P_m bridged at an end vertex.
inline CompositeResult comb_a(int d, int m) {
    if (d < 2) throw error(errc::bad_parameter, "comb_a requires d >= 2");
    if (m < 2) throw error(errc::bad_parameter, "comb_a requires m >= 2");
    std::vector<AnchoredComponent> comps(static_cast<std::size_t>(d), {path(m), 0});
    return bridge_b1(comps);
}

// Open-ended comb with ramped teeth: P_1, P_2, ..., P_n, ..., P_2, P_1
// bridged at first vertices.
inline CompositeResult van_hove(int n) {
    if (n < 1) throw error(errc::bad_parameter, "van_hove requires n >= 1");
    std::vector<AnchoredComponent> comps;
    for (int i = 1; i <= n; ++i) comps.emplace_back(path(i), 0);
    for (int i = n - 1; i >= 1; --i) comps.emplace_back(path(i), 0);
    return bridge_b1(comps);
}

enum class PolyKind { ortho, meta, para };

inline const char* poly_kind_name(PolyKind k) {
    switch (k) {
        case PolyKind::ortho: return "ortho";
        case PolyKind::meta:  return "meta";
        case PolyKind::para:  return "para";
    }
    return "?";
}

// Hexagon chains. meta/para join rings by an edge between anchors at cyclic
// distance 2/3; ortho is modeled as the single-anchor bridge (all rings
// attach at one shared vertex), which is the model its closed form follows.
inline CompositeResult polyphenyl(int h, PolyKind kind) {
    if (h < 1) throw error(errc::bad_parameter, "polyphenyl requires h >= 1");
    if (kind == PolyKind::ortho) {
        std::vector<AnchoredComponent> comps(static_cast<std::size_t>(h), {cycle(6), 0});
        return bridge_b1(comps);
    }
    const int w = kind == PolyKind::meta ? 2 : 3;
    std::vector<AnchoredComponent> comps(static_cast<std::size_t>(h), {cycle(6), 0, w});
    return bridge_b2(comps);
}

// Spiro chain: d cycles C_n amalgamated at positions k and l. A 3-cycle has
// no non-adjacent vertex pair, hence n >= 4.
inline CompositeResult spiro(int n, int k, int l, int d) {
    if (n < 4) throw error(errc::bad_parameter, "spiro requires n >= 4");
    if (d < 2) throw error(errc::bad_parameter, "spiro requires d >= 2");
    if (k < 0 || k >= n || l < 0 || l >= n)
        throw error(errc::bad_parameter, "spiro positions k,l must lie in [0,n)");
    if (k == l) throw error(errc::adjacent_anchors, "spiro positions k,l must differ");
    const int gap = (l - k + n) % n;
    if (gap == 1 || gap == n - 1)
        throw error(errc::adjacent_anchors, "spiro positions k,l must be non-adjacent on the cycle");
    std::vector<AnchoredComponent> comps(static_cast<std::size_t>(d), {cycle(n), k, l});
    return chain(comps);
}

// Uniform random labeled tree from a random Pruefer sequence, plus
// extra_edges distinct non-tree edges drawn without replacement.
inline Graph random_connected(int n, std::int64_t extra_edges, std::uint64_t seed) {
    if (n < 1) throw error(errc::bad_parameter, "random_connected requires n >= 1");
    const std::int64_t capacity =
        static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges < 0 || extra_edges > capacity)
        throw error(errc::bad_parameter,
                    "extra_edges must lie in [0," + std::to_string(capacity) + "] for n = " +
                        std::to_string(n));
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
    } else if (n >= 3) {
        std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
        for (auto& x : pruefer) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int x : pruefer) ++deg[static_cast<std::size_t>(x)];
        // Standard decode: repeatedly join the smallest leaf to the next code entry.
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        int leaf = -1;
        for (int i = 0; i < n; ++i)
            if (deg[static_cast<std::size_t>(i)] == 1) { leaf = i; break; }
        int ptr = leaf;
        for (int x : pruefer) {
            edges.emplace_back(leaf, x);
            if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                do { ++ptr; } while (deg[static_cast<std::size_t>(ptr)] != 1);
                leaf = ptr;
            }
        }
        edges.emplace_back(leaf, n - 1);
    }
    if (extra_edges > 0) {
        Graph tree(n, edges);
        std::vector<Edge> pool;
        pool.reserve(static_cast<std::size_t>(capacity));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!tree.adjacent(u, v)) pool.emplace_back(u, v);
        // Partial Fisher-Yates over the lexicographic pool.
        for (std::int64_t i = 0; i < extra_edges; ++i) {
            const auto j = static_cast<std::size_t>(i) +
                           static_cast<std::size_t>(rng.next_below(pool.size() - static_cast<std::size_t>(i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            edges.push_back(pool[static_cast<std::size_t>(i)]);
        }
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Closed-form values for the named structures, each with its empirically
// established validity range. Calling outside the range still returns the
// formula value, flagged, so sweeps can chart the gap.
// ---------------------------------------------------------------------------

struct FormulaValue {
    std::int64_t value = 0;
    bool in_validity_range = false;
};

inline FormulaValue comb_t_formula(std::int64_t d, std::int64_t n) {
    return {16 * n * d + 104 * d - 138, d >= 3};
}

inline FormulaValue bridge_b_formula(std::int64_t d) {
    return {114 * d - 130, d >= 3};
}

inline FormulaValue comb_a_formula(std::int64_t d, std::int64_t m) {
    return {16 * m * d + 22 * d - 76, d >= 3 && m >= 3};
}

inline FormulaValue van_hove_formula(std::int64_t n) {
    return {16 * n * n + 44 * n - 106, n >= 3};
}

inline FormulaValue polyphenyl_formula(std::int64_t h, PolyKind kind) {
    if (kind == PolyKind::ortho) return {200 * h - 138, h >= 3};
    return {168 * h - 72, h >= 1};
}

inline FormulaValue spiro_formula(std::int64_t n, std::int64_t d) {
    return {16 * n * d + 80 * d - 80, d >= 2 && n >= 4};
}

} // namespace hz
