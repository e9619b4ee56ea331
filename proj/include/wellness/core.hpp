#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wellness/error.hpp"

namespace wellness {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorted, duplicate-free list of universe indices (universe order).
using ElementSet = std::vector<int>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency lists are sorted; labels are a
/// parallel array so gadget vertices can carry names like "s" or "v_a".
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n, std::span<const Edge> edges = {},
                   std::vector<std::string> labels = {})
        : adj_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n) {
            throw InvalidInstance("label count " + std::to_string(labels_.size()) +
                                  " does not match vertex count " + std::to_string(n));
        }
        for (auto [u, v] : edges) {
            check_vertex(u);
            check_vertex(v);
            if (u == v) {
                throw InvalidInstance("self-loop at vertex " + std::to_string(u));
            }
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto& list = adj_[v];
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
                throw InvalidInstance("duplicate edge at vertex " + std::to_string(v));
            }
            edge_count_ += list.size();
        }
        edge_count_ /= 2;
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        auto n = neighbors(u);
        check_vertex(v);
        return std::binary_search(n.begin(), n.end(), v);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
            }
        }
        return out;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Display name: the label when present, the decimal id otherwise.
    std::string label(Vertex v) const {
        check_vertex(v);
        return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }

    std::optional<Vertex> isolated_vertex() const {
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (adj_[v].empty()) return static_cast<Vertex>(v);
        }
        return std::nullopt;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& list : adj_) d = std::max(d, list.size());
        return d;
    }

    /// Copy of this graph without edge {u, v}.
    Graph without_edge(Vertex u, Vertex v) const {
        if (!has_edge(u, v)) {
            throw InvalidInstance("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        auto list = edges();
        std::erase(list, Edge{std::min(u, v), std::max(u, v)});
        return Graph(order(), list, labels_);
    }

    /// Subgraph induced by `keep` (sorted), relabelled 0..|keep|-1 in the given order.
    Graph induced(std::span<const Vertex> keep) const {
        std::vector<int> index(order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            check_vertex(keep[i]);
            index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        }
        std::vector<Edge> sub;
        for (auto [u, v] : edges()) {
            if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
        }
        std::vector<std::string> names;
        if (has_labels()) {
            for (Vertex v : keep) names.push_back(label(v));
        }
        return Graph(keep.size(), sub, std::move(names));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= adj_.size()) {
            throw InvalidInstance("vertex id " + std::to_string(v) + " out of range [0," +
                                  std::to_string(adj_.size()) + ")");
        }
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Universe of named elements plus an ordered family of nonempty subsets.
///
/// Sets store universe indices, sorted. Duplicate sets are allowed and
/// reported by validation_warnings(); an empty family is allowed.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::vector<std::string> universe, std::vector<std::vector<std::string>> sets,
               std::vector<std::string> set_names = {})
        : universe_(std::move(universe)), set_names_(std::move(set_names)) {
        index_universe();
        sets_.reserve(sets.size());
        for (const auto& members : sets) {
            std::vector<int> ids;
            ids.reserve(members.size());
            for (const auto& name : members) {
                auto it = index_.find(name);
                if (it == index_.end()) {
                    throw InvalidInstance("set member '" + name + "' is not in the universe");
                }
                ids.push_back(it->second);
            }
            sets_.push_back(std::move(ids));
        }
        normalize_sets();
    }

    static Hypergraph from_indices(std::vector<std::string> universe,
                                   std::vector<std::vector<int>> sets,
                                   std::vector<std::string> set_names = {}) {
        Hypergraph h;
        h.universe_ = std::move(universe);
        h.set_names_ = std::move(set_names);
        h.index_universe();
        for (const auto& s : sets) {
            for (int e : s) {
                if (e < 0 || static_cast<std::size_t>(e) >= h.universe_.size()) {
                    throw InvalidInstance("element index " + std::to_string(e) + " out of range");
                }
            }
        }
        h.sets_ = std::move(sets);
        h.normalize_sets();
        return h;
    }

    std::size_t universe_size() const noexcept { return universe_.size(); }
    std::size_t set_count() const noexcept { return sets_.size(); }

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }
    const std::vector<int>& set(std::size_t i) const { return sets_.at(i); }

    const std::string& element_name(int e) const { return universe_.at(static_cast<std::size_t>(e)); }

    std::optional<int> element_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_set_names() const noexcept { return !set_names_.empty(); }

    /// Set name when given, the decimal index otherwise.
    std::string set_name(std::size_t i) const {
        if (i >= sets_.size()) throw InvalidInstance("set index out of range");
        return set_names_.empty() ? std::to_string(i) : set_names_[i];
    }

    std::vector<std::string> names_of(std::span<const int> elements) const {
        std::vector<std::string> out;
        out.reserve(elements.size());
        for (int e : elements) out.push_back(element_name(e));
        return out;
    }

    std::vector<std::string> validation_warnings() const {
        std::vector<std::string> warnings;
        std::map<std::vector<int>, std::size_t> first;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            auto [it, inserted] = first.emplace(sets_[i], i);
            if (!inserted) {
                warnings.push_back("set " + set_name(i) + " duplicates set " + set_name(it->second));
            }
        }
        return warnings;
    }

    /// Elements that lie in no set.
    std::vector<int> uncovered_elements() const {
        std::vector<bool> seen(universe_.size(), false);
        for (const auto& s : sets_) {
            for (int e : s) seen[static_cast<std::size_t>(e)] = true;
        }
        std::vector<int> out;
        for (std::size_t e = 0; e < seen.size(); ++e) {
            if (!seen[e]) out.push_back(static_cast<int>(e));
        }
        return out;
    }

    /// Elements <-> sets swapped: universe = set names, one set per element.
    Hypergraph dual() const {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sets_.size(); ++i) names.push_back(set_name(i));
        std::vector<std::vector<int>> family(universe_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            for (int e : sets_[i]) family[static_cast<std::size_t>(e)].push_back(static_cast<int>(i));
        }
        if (auto missing = uncovered_elements(); !missing.empty()) {
            throw UncoverableElement(element_name(missing.front()));
        }
        return from_indices(std::move(names), std::move(family), universe_);
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.universe_ == b.universe_ && a.sets_ == b.sets_;
    }

private:
    void index_universe() {
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            if (universe_[i].empty()) throw InvalidInstance("empty element name");
            if (!index_.emplace(universe_[i], static_cast<int>(i)).second) {
                throw InvalidInstance("duplicate element name '" + universe_[i] + "'");
            }
        }
    }

    void normalize_sets() {
        if (!set_names_.empty() && set_names_.size() != sets_.size()) {
            throw InvalidInstance("set name count does not match family size");
        }
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            auto& s = sets_[i];
            if (s.empty()) {
                throw InvalidInstance("set " + std::to_string(i) + " is empty and admits no hitting set");
            }
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    }

    std::vector<std::string> universe_;
    std::vector<std::vector<int>> sets_;
    std::vector<std::string> set_names_;
    std::map<std::string, int> index_;
};

// Neighborhoods -----------------------------------------------------------

inline VertexSet open_neighborhood(const Graph& g, Vertex v) {
    auto n = g.neighbors(v);
    return VertexSet(n.begin(), n.end());
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    auto out = open_neighborhood(g, v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

// Structural predicates ---------------------------------------------------

struct Bipartition {
    VertexSet left;   // colour 0; contains the smallest vertex of every component
    VertexSet right;  // colour 1
};

/// Two-colouring by BFS from the smallest uncoloured vertex; nullopt on an odd cycle.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    const auto n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<Vertex> queue;
    for (std::size_t start = 0; start < n; ++start) {
        if (colour[start] >= 0) continue;
        colour[start] = 0;
        queue.assign(1, static_cast<Vertex>(start));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < n; ++v) {
        (colour[v] == 0 ? parts.left : parts.right).push_back(static_cast<Vertex>(v));
    }
    return parts;
}

/// Split recognition via the degree-sequence characterisation (Hammer-Simeone):
/// with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
/// G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
inline bool is_split(const Graph& g) {
    std::vector<std::size_t> deg;
    deg.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) deg.push_back(g.degree(static_cast<Vertex>(v)));
    std::sort(deg.rbegin(), deg.rend());
    std::size_t m = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] + 1 >= i + 1) m = i + 1;
    }
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) (i < m ? head : tail) += deg[i];
    return head == m * (m == 0 ? 0 : m - 1) + tail;
}

/// Largest minimum degree seen while repeatedly deleting a minimum-degree vertex.
inline std::size_t degeneracy(const Graph& g) {
    const auto n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
    std::size_t result = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        }
        result = std::max(result, deg[best]);
        removed[best] = true;
        for (Vertex w : g.neighbors(static_cast<Vertex>(best))) {
            if (!removed[w]) --deg[w];
        }
    }
    return result;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) throw PreconditionViolated("connectivity of the empty graph is undefined");
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) return false;
        }
    }
    return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.has_edge(vs[i], vs[j])) return false;
        }
    }
    return true;
}

// Incidence graph ---------------------------------------------------------

enum class IncidenceSide { element, set };

struct IncidenceGraph {
    Graph graph;
    std::vector<IncidenceSide> side;  // per vertex
    std::vector<int> source;          // element index or set index
};

/// Element vertices first (universe order), then one vertex per set (family order).
inline IncidenceGraph incidence_bipartite_graph(const Hypergraph& h) {
    const auto u = h.universe_size();
    IncidenceGraph out;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < u; ++e) {
        out.side.push_back(IncidenceSide::element);
        out.source.push_back(static_cast<int>(e));
        labels.push_back(h.element_name(static_cast<int>(e)));
    }
    for (std::size_t i = 0; i < h.set_count(); ++i) {
        out.side.push_back(IncidenceSide::set);
        out.source.push_back(static_cast<int>(i));
        labels.push_back("F" + h.set_name(i));
        for (int e : h.set(i)) edges.emplace_back(e, static_cast<Vertex>(u + i));
    }
    out.graph = Graph(u + h.set_count(), edges, std::move(labels));
    return out;
}

} // namespace wellness
