#pragma once

#include <string>
#include <vector>

#include "wellness/core.hpp"

namespace fixtures {

using wellness::Edge;
using wellness::Graph;
using wellness::Hypergraph;

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        auto a = static_cast<int>(i), b = static_cast<int>((i + 1) % n);
        e.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(n, e);
}

/// K1,leaves with centre 0.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<int>(i));
    return Graph(leaves + 1, e);
}

inline Hypergraph hyper(std::vector<std::string> universe, std::vector<std::vector<std::string>> sets) {
    return Hypergraph(std::move(universe), std::move(sets));
}

// F = {{a,b},{c,d}}
inline Hypergraph pairs() { return hyper({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }
// F = {{a,b},{b,c}}
inline Hypergraph path_edges() { return hyper({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
// F = {{a,b},{b,c},{a,c}}
inline Hypergraph triangle_edges() { return hyper({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
// F = {{a,b},{b,c},{a,c},{c,d}}
inline Hypergraph four_sets() {
    return hyper({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
}

} // namespace fixtures
