#pragma once

// Exhaustive enumeration of minimal (resp. maximal) solutions.
//
// Every solution kind reduces to minimal transversals of a set system over a
// ground set of at most 64 elements:
//
//   minimal vertex cover          edges of G
//   maximal independent set       complements of minimal vertex covers
//   minimal dominating set        closed neighbourhoods N[v]
//   minimal total dominating set  open neighbourhoods N(v)
//   minimal hitting set           the family F
//   minimal set cover             the dual family (one set per element)
//
// Two engines sit behind for_each_solution(): a branch-and-prune search in
// the style of MMCS (branch on the uncovered set with fewest candidates,
// prune as soon as some chosen element loses its last private set) and a
// plain scan over all 2^n subsets kept as a reference.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wellness/core.hpp"
#include "wellness/io.hpp"

namespace wellness {

enum class SolutionKind {
    maximal_independent_set,
    minimal_vertex_cover,
    minimal_dominating_set,
    minimal_total_dominating_set,
    minimal_hitting_set,
    minimal_set_cover,
};

inline constexpr SolutionKind all_solution_kinds[] = {
    SolutionKind::maximal_independent_set,   SolutionKind::minimal_vertex_cover,
    SolutionKind::minimal_dominating_set,    SolutionKind::minimal_total_dominating_set,
    SolutionKind::minimal_hitting_set,       SolutionKind::minimal_set_cover,
};

inline std::string_view to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::maximal_independent_set: return "maximal-independent-set";
        case SolutionKind::minimal_vertex_cover: return "minimal-vertex-cover";
        case SolutionKind::minimal_dominating_set: return "minimal-dominating-set";
        case SolutionKind::minimal_total_dominating_set: return "minimal-total-dominating-set";
        case SolutionKind::minimal_hitting_set: return "minimal-hitting-set";
        case SolutionKind::minimal_set_cover: return "minimal-set-cover";
    }
    return "?";
}

/// Accepts the tag with or without a trailing plural 's'.
inline std::optional<SolutionKind> parse_solution_kind(std::string_view text) {
    for (auto kind : all_solution_kinds) {
        auto name = to_string(kind);
        if (text == name) return kind;
        if (text.size() == name.size() + 1 && text.starts_with(name) && text.back() == 's') return kind;
    }
    return std::nullopt;
}

inline bool is_graph_kind(SolutionKind kind) {
    return kind != SolutionKind::minimal_hitting_set && kind != SolutionKind::minimal_set_cover;
}

enum class Engine { branch, subset_scan };

inline constexpr std::size_t default_enumeration_cap = 24;
inline constexpr std::size_t bitset_width = 64;
inline constexpr std::size_t subset_scan_limit = 24;

struct EnumerationOptions {
    std::size_t cap = default_enumeration_cap;
    Engine engine = Engine::branch;
};

/// Complete list of minimal (maximal) solutions for one instance, sorted by
/// (cardinality, lexicographic ids). Set-cover solutions list set indices.
struct SolutionFamily {
    SolutionKind kind{};
    std::uint64_t fingerprint = 0;
    std::vector<std::vector<int>> solutions;

    std::map<std::size_t, std::size_t> size_counts() const {
        std::map<std::size_t, std::size_t> out;
        for (const auto& s : solutions) ++out[s.size()];
        return out;
    }

    std::set<std::size_t> size_values() const {
        std::set<std::size_t> out;
        for (const auto& s : solutions) out.insert(s.size());
        return out;
    }

    bool contains(const std::vector<int>& s) const {
        return std::find(solutions.begin(), solutions.end(), s) != solutions.end();
    }
};

using Mask = std::uint64_t;

inline std::vector<int> mask_to_ids(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask ids_to_mask(std::span<const int> ids) {
    Mask m = 0;
    for (int i : ids) m |= Mask{1} << i;
    return m;
}

/// Ground set plus the sets a solution has to hit. When `complement` is set,
/// reported solutions are ground \ T for each minimal transversal T.
struct SetSystem {
    std::size_t ground = 0;
    std::vector<Mask> sets;
    bool complement = false;

    Mask full() const { return ground == 64 ? ~Mask{0} : (Mask{1} << ground) - 1; }
};

namespace detail {

inline void check_ground(std::size_t ground, const EnumerationOptions& opts) {
    if (opts.cap < 1) throw PreconditionViolated("enumeration cap must be at least 1");
    if (opts.cap > bitset_width) {
        throw PreconditionViolated("enumeration cap " + std::to_string(opts.cap) +
                                   " exceeds the 64-element bitset width");
    }
    if (ground > opts.cap) throw CapExceeded(ground, opts.cap);
    if (opts.engine == Engine::subset_scan && ground > subset_scan_limit) {
        throw CapExceeded(ground, subset_scan_limit);
    }
}

/// Inclusion-minimal sets, deduplicated. Transversals of the reduced family
/// are exactly the transversals of the original.
inline std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [s](Mask k) { return (k & s) == k; });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

template <class Visitor>
class TransversalSearch {
public:
    TransversalSearch(std::vector<Mask> sets, Visitor& visit) : sets_(std::move(sets)), visit_(visit) {}

    void run(Mask candidates) {
        std::vector<int> uncovered(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) uncovered[i] = static_cast<int>(i);
        recurse(0, candidates, uncovered);
    }

private:
    // Every member of `chosen` keeps a set hit by it alone.
    bool every_member_critical(Mask chosen) const {
        Mask critical = 0;
        for (Mask s : sets_) {
            Mask hit = s & chosen;
            if (hit && (hit & (hit - 1)) == 0) critical |= hit;
        }
        return critical == chosen;
    }

    bool recurse(Mask chosen, Mask candidates, const std::vector<int>& uncovered) {
        if (uncovered.empty()) return visit_(chosen);

        int pick = -1;
        int best = 65;
        for (int i : uncovered) {
            int c = std::popcount(sets_[i] & candidates);
            if (c < best) {
                best = c;
                pick = i;
                if (c == 0) break;
            }
        }
        Mask branch = sets_[pick] & candidates;
        if (!branch) return true;
        candidates &= ~branch;

        std::vector<int> rest;
        rest.reserve(uncovered.size());
        for (Mask left = branch; left; left &= left - 1) {
            Mask e = left & (~left + 1);
            Mask next = chosen | e;
            if (every_member_critical(next)) {
                rest.clear();
                for (int i : uncovered) {
                    if (!(sets_[i] & e)) rest.push_back(i);
                }
                if (!recurse(next, candidates, rest)) return false;
            }
            candidates |= e;
        }
        return true;
    }

    std::vector<Mask> sets_;
    Visitor& visit_;
};

template <class Visitor>
void scan_subsets(const SetSystem& sys, Visitor& visit) {
    const Mask limit = Mask{1} << sys.ground;
    auto hits_all = [&](Mask s) {
        return std::all_of(sys.sets.begin(), sys.sets.end(), [s](Mask f) { return (f & s) != 0; });
    };
    std::vector<Mask> found;
    for (Mask s = 0; s < limit; ++s) {
        if (!hits_all(s)) continue;
        bool minimal = true;
        for (Mask left = s; left && minimal; left &= left - 1) {
            if (hits_all(s & ~(left & (~left + 1)))) minimal = false;
        }
        if (minimal) found.push_back(s);
    }
    // Cardinality-ascending, then by integer value.
    std::stable_sort(found.begin(), found.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    for (Mask s : found) {
        if (!visit(s)) return;
    }
}

} // namespace detail

/// Streams every solution (as a bitmask over the ground set) to `visit`,
/// which returns false to stop early.
template <class Visitor>
void for_each_solution(const SetSystem& sys, const EnumerationOptions& opts, Visitor&& visit) {
    detail::check_ground(sys.ground, opts);
    auto emit = [&](Mask t) -> bool { return visit(sys.complement ? (sys.full() & ~t) : t); };
    if (std::any_of(sys.sets.begin(), sys.sets.end(), [](Mask s) { return s == 0; })) return;
    if (opts.engine == Engine::subset_scan) {
        detail::scan_subsets(sys, emit);
        return;
    }
    detail::TransversalSearch<decltype(emit)> search(detail::minimal_sets(sys.sets), emit);
    search.run(sys.full());
}

// Set systems per solution kind ----------------------------------------------

inline void require_width(std::size_t ground) {
    if (ground > bitset_width) throw CapExceeded(ground, bitset_width);
}

inline SetSystem set_system(const Graph& g, SolutionKind kind) {
    require_width(g.order());
    SetSystem sys;
    sys.ground = g.order();
    switch (kind) {
        case SolutionKind::maximal_independent_set:
        case SolutionKind::minimal_vertex_cover:
            for (auto [u, v] : g.edges()) sys.sets.push_back((Mask{1} << u) | (Mask{1} << v));
            sys.complement = kind == SolutionKind::maximal_independent_set;
            break;
        case SolutionKind::minimal_dominating_set:
            for (std::size_t v = 0; v < g.order(); ++v) {
                sys.sets.push_back(ids_to_mask(closed_neighborhood(g, static_cast<Vertex>(v))));
            }
            break;
        case SolutionKind::minimal_total_dominating_set:
            if (auto iso = g.isolated_vertex()) throw IsolatedVertex(*iso);
            for (std::size_t v = 0; v < g.order(); ++v) {
                sys.sets.push_back(ids_to_mask(open_neighborhood(g, static_cast<Vertex>(v))));
            }
            break;
        default:
            throw PreconditionViolated(std::string(to_string(kind)) + " is not a graph solution kind");
    }
    return sys;
}

inline SetSystem set_system(const Hypergraph& h, SolutionKind kind) {
    SetSystem sys;
    switch (kind) {
        case SolutionKind::minimal_hitting_set:
            require_width(h.universe_size());
            sys.ground = h.universe_size();
            for (const auto& s : h.sets()) sys.sets.push_back(ids_to_mask(s));
            break;
        case SolutionKind::minimal_set_cover: {
            if (auto missing = h.uncovered_elements(); !missing.empty()) {
                throw UncoverableElement(h.element_name(missing.front()));
            }
            require_width(h.set_count());
            sys.ground = h.set_count();
            std::vector<Mask> containing(h.universe_size(), 0);
            for (std::size_t i = 0; i < h.set_count(); ++i) {
                for (int e : h.set(i)) containing[static_cast<std::size_t>(e)] |= Mask{1} << i;
            }
            sys.sets = std::move(containing);
            break;
        }
        default:
            throw PreconditionViolated(std::string(to_string(kind)) + " is not a hypergraph solution kind");
    }
    return sys;
}

namespace detail {

inline bool by_size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

inline SolutionFamily collect(SolutionKind kind, std::uint64_t fp, const SetSystem& sys,
                              const EnumerationOptions& opts) {
    SolutionFamily fam{kind, fp, {}};
    for_each_solution(sys, opts, [&](Mask s) {
        fam.solutions.push_back(mask_to_ids(s));
        return true;
    });
    std::sort(fam.solutions.begin(), fam.solutions.end(), by_size_then_lex);
    return fam;
}

inline void require_vertices(const Graph& g) {
    if (g.order() == 0) throw PreconditionViolated("graph has no vertices");
}

} // namespace detail

inline SolutionFamily enumerate(const Graph& g, SolutionKind kind, const EnumerationOptions& opts = {}) {
    detail::require_vertices(g);
    detail::check_ground(g.order(), opts);
    return detail::collect(kind, io::fingerprint(g), set_system(g, kind), opts);
}

inline SolutionFamily enumerate(const Hypergraph& h, SolutionKind kind, const EnumerationOptions& opts = {}) {
    auto sys = set_system(h, kind);
    detail::check_ground(sys.ground, opts);
    return detail::collect(kind, io::fingerprint(h), sys, opts);
}

inline SolutionFamily enumerate_maximal_independent_sets(const Graph& g, const EnumerationOptions& opts = {}) {
    return enumerate(g, SolutionKind::maximal_independent_set, opts);
}

inline SolutionFamily enumerate_minimal_vertex_covers(const Graph& g, const EnumerationOptions& opts = {}) {
    return enumerate(g, SolutionKind::minimal_vertex_cover, opts);
}

inline SolutionFamily enumerate_minimal_dominating_sets(const Graph& g, const EnumerationOptions& opts = {}) {
    return enumerate(g, SolutionKind::minimal_dominating_set, opts);
}

inline SolutionFamily enumerate_minimal_total_dominating_sets(const Graph& g,
                                                              const EnumerationOptions& opts = {}) {
    return enumerate(g, SolutionKind::minimal_total_dominating_set, opts);
}

inline SolutionFamily enumerate_minimal_hitting_sets(const Hypergraph& h, const EnumerationOptions& opts = {}) {
    return enumerate(h, SolutionKind::minimal_hitting_set, opts);
}

inline SolutionFamily enumerate_minimal_set_covers(const Hypergraph& h, const EnumerationOptions& opts = {}) {
    return enumerate(h, SolutionKind::minimal_set_cover, opts);
}

} // namespace wellness
