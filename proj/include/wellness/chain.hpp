#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "wellness/checks.hpp"
#include "wellness/core.hpp"
#include "wellness/enumerate.hpp"

namespace wellness {

/// gamma <= iota <= alpha, gamma <= iota <= Gamma.
struct ChainParameters {
    std::size_t gamma = 0;  // minimum dominating set
    std::size_t Gamma = 0;  // largest minimal dominating set
    std::size_t iota = 0;   // smallest maximal independent set
    std::size_t alpha = 0;  // largest independent set

    friend bool operator==(const ChainParameters&, const ChainParameters&) = default;
};

inline ChainParameters chain_parameters(const Graph& g, const EnumerationOptions& opts = {}) {
    auto dom = enumerate_minimal_dominating_sets(g, opts).size_values();
    auto mis = enumerate_maximal_independent_sets(g, opts).size_values();
    return {*dom.begin(), *dom.rbegin(), *mis.begin(), *mis.rbegin()};
}

/// `gamma Gamma iota alpha`
inline std::string to_record(const ChainParameters& p) {
    return std::to_string(p.gamma) + ' ' + std::to_string(p.Gamma) + ' ' + std::to_string(p.iota) + ' ' +
           std::to_string(p.alpha);
}

/// Returns the base graph H when g = H o K1, i.e. every vertex of H carries
/// exactly one pendant leaf. K2 is accepted as K1 o K1 (base: vertex 0).
inline std::optional<Graph> is_corona_with_K1(const Graph& g) {
    const auto n = g.order();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    if (n == 2) {
        if (!g.has_edge(0, 1)) return std::nullopt;
        const Vertex base[] = {0};
        return g.induced(base);
    }
    VertexSet core;
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto d = g.degree(static_cast<Vertex>(v));
        if (d == 0) return std::nullopt;
        if (d == 1) {
            ++leaves;
        } else {
            core.push_back(static_cast<Vertex>(v));
        }
    }
    if (leaves * 2 != n) return std::nullopt;
    for (Vertex c : core) {
        std::size_t pendant = 0;
        for (Vertex w : g.neighbors(c)) pendant += g.degree(w) == 1;
        if (pendant != 1) return std::nullopt;
    }
    // Leaves hang off core vertices: with n > 2 two adjacent leaves would form a K2 component.
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(static_cast<Vertex>(v)) == 1 && g.degree(g.neighbors(static_cast<Vertex>(v))[0]) == 1) {
            return std::nullopt;
        }
    }
    auto base = g.induced(core);
    if (!is_connected(base)) return std::nullopt;
    return base;
}

/// H o K1: vertex i of H keeps id i, its pendant leaf gets id |H| + i.
inline Graph corona_with_K1(const Graph& h) {
    const auto n = h.order();
    auto edges = h.edges();
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(n + v));
    return Graph(2 * n, edges);
}

/// Polynomial recognition for connected bipartite graphs: C4, a corona
/// H o K1 of a connected H, or the single vertex.
inline bool recognize_bipartite_well_dominated(const Graph& g) {
    if (g.order() == 0) throw PreconditionViolated("graph has no vertices");
    if (!is_connected(g)) throw PreconditionViolated("graph is not connected");
    if (!is_bipartite(g)) throw PreconditionViolated("graph is not bipartite");
    if (g.order() == 1) return true;
    if (g.order() == 4 && g.size() == 4) {
        bool two_regular = true;
        for (Vertex v = 0; v < 4; ++v) two_regular = two_regular && g.degree(v) == 2;
        if (two_regular) return true;
    }
    return is_corona_with_K1(g).has_value();
}

namespace detail {

inline void require_no_isolated(const Graph& g) {
    if (g.order() == 0) throw PreconditionViolated("graph has no vertices");
    if (auto iso = g.isolated_vertex()) throw IsolatedVertex(*iso);
}

inline bool common_size_is_half(const WellnessReport& r, std::size_t n) {
    return r.well && n % 2 == 0 && *r.common_size == n / 2;
}

} // namespace detail

inline bool is_very_well_covered(const Graph& g, const EnumerationOptions& opts = {}) {
    detail::require_no_isolated(g);
    return detail::common_size_is_half(check_well_covered(g, {opts, true}), g.order());
}

inline bool is_very_well_dominated(const Graph& g, const EnumerationOptions& opts = {}) {
    detail::require_no_isolated(g);
    return detail::common_size_is_half(check_well_dominated(g, {opts, true}), g.order());
}

} // namespace wellness
