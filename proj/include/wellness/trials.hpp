#pragma once

// Seeded random instances and the randomized verification campaigns that
// exercise the gadget correspondences end to end.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wellness/chain.hpp"
#include "wellness/checks.hpp"
#include "wellness/core.hpp"
#include "wellness/enumerate.hpp"
#include "wellness/io.hpp"
#include "wellness/reductions.hpp"

namespace wellness {

/// mt19937_64 with hand-rolled range reduction, so that a seed produces the
/// same instances with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(below(hi - lo + 1)); }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// a, b, ..., z, then e26, e27, ...
inline std::string element_name(std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i);
}

/// Each set is a uniform nonempty subset of the universe.
inline Hypergraph random_hypergraph(Rng& rng, std::size_t elements, std::size_t sets) {
    if (elements == 0 && sets > 0) throw PreconditionViolated("nonempty sets need a nonempty universe");
    if (elements > bitset_width) throw PreconditionViolated("at most 64 elements");
    std::vector<std::string> universe;
    for (std::size_t e = 0; e < elements; ++e) universe.push_back(element_name(e));
    std::vector<std::vector<int>> family;
    for (std::size_t i = 0; i < sets; ++i) {
        Mask m = 0;
        while (m == 0) {
            for (std::size_t e = 0; e < elements; ++e) {
                if (rng.below(2)) m |= Mask{1} << e;
            }
        }
        family.push_back(mask_to_ids(m));
    }
    return Hypergraph::from_indices(std::move(universe), std::move(family));
}

/// Every set has exactly two distinct elements (a vertex-cover instance).
inline Hypergraph random_pair_hypergraph(Rng& rng, std::size_t elements, std::size_t sets) {
    if (elements < 2) throw PreconditionViolated("pairs need at least two elements");
    std::vector<std::string> universe;
    for (std::size_t e = 0; e < elements; ++e) universe.push_back(element_name(e));
    std::vector<std::vector<int>> family;
    for (std::size_t i = 0; i < sets; ++i) {
        auto a = static_cast<int>(rng.below(elements));
        auto b = static_cast<int>(rng.below(elements - 1));
        if (b >= a) ++b;
        family.push_back({a, b});
    }
    return Hypergraph::from_indices(std::move(universe), std::move(family));
}

/// G(n, p): each of the n(n-1)/2 pairs independently, in lexicographic order.
inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return Graph(n, edges);
}

/// G(n, p) with every isolated vertex joined to a uniformly chosen other vertex.
inline Graph random_graph_without_isolated(Rng& rng, std::size_t n, double p) {
    if (n < 2) throw PreconditionViolated("need at least two vertices");
    auto edges = random_graph(rng, n, p).edges();
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v]) continue;
        auto w = static_cast<std::size_t>(rng.below(n - 1));
        if (w >= v) ++w;
        edges.emplace_back(static_cast<Vertex>(std::min(v, w)), static_cast<Vertex>(std::max(v, w)));
        ++deg[v], ++deg[w];
    }
    return Graph(n, edges);
}

/// Random bipartite graph with parts of size `left` and n - left, then made
/// connected by linking consecutive components through opposite-side vertices.
inline Graph random_connected_bipartite(Rng& rng, std::size_t n, double p) {
    if (n == 0) throw PreconditionViolated("need at least one vertex");
    if (n == 1) return Graph(1);
    std::size_t left = rng.between(1, n - 1);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t v = left; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    // Union-find over the current edges, then join components with a left-right edge.
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t v = left; v < n; ++v) {
            if (find(u) != find(v) && rng.chance(0.5)) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                parent[find(u)] = find(v);
            }
        }
    }
    for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t v = left; v < n; ++v) {
            if (find(u) != find(v)) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                parent[find(u)] = find(v);
            }
        }
    }
    return Graph(n, edges);
}

// Campaigns -----------------------------------------------------------------------

struct CampaignOptions {
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::size_t max_universe = 7;
    std::size_t max_sets = 6;
    EnumerationOptions enumeration;
    // Test hook: remove the first v_u w_F edge of every gadget before auditing.
    bool drop_incidence_edge = false;
    std::size_t max_redraws = 100000;
};

struct TrialRecord {
    std::size_t index = 0;
    Hypergraph instance;
    std::size_t k = 0;  // well-domination only
    std::string detail;
};

struct CampaignSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t rejected = 0;  // draws discarded by the precondition filter
    // Total domination: per-property tallies, each over `trials` (split and plain gadgets).
    std::size_t correspondence_ok = 0;
    std::size_t forced_vertices_ok = 0;
    std::size_t structure_ok = 0;
    std::size_t pair_instances = 0;  // trials whose family consisted of pairs only
    // Well domination.
    std::size_t yes_instances = 0;
    std::size_t sizes_ok = 0;
    std::optional<TrialRecord> first_failure;

    bool all_passed() const { return passed == trials; }
};

inline std::string summary_record(const std::string& name, const CampaignSummary& s) {
    std::ostringstream out;
    out << name << ' ' << s.passed << '/' << s.trials << " pass, " << s.rejected << " rejected";
    return out.str();
}

namespace detail {

inline bool some_element_hits_all(const Hypergraph& h) {
    for (std::size_t e = 0; e < h.universe_size(); ++e) {
        bool all = true;
        for (const auto& s : h.sets()) {
            all = all && std::binary_search(s.begin(), s.end(), static_cast<int>(e));
        }
        if (all) return true;
    }
    return false;
}

inline ReductionOutput drop_first_incidence_edge(ReductionOutput g) {
    for (auto [u, v] : g.instance.edges()) {
        if (g.roles[u].tag == RoleTag::element && g.roles[v].tag == RoleTag::set_vertex) {
            g.instance = g.instance.without_edge(u, v);
            break;
        }
    }
    return g;
}

inline Hypergraph draw_source(Rng& rng, const CampaignOptions& opt, bool pairs) {
    auto universe = rng.between(pairs ? 2 : 1, std::max<std::size_t>(opt.max_universe, 2));
    auto sets = rng.between(1, std::max<std::size_t>(opt.max_sets, 1));
    return pairs ? random_pair_hypergraph(rng, universe, sets) : random_hypergraph(rng, universe, sets);
}

inline std::string describe(const TotalDominationAudit& a, GadgetVariant v) {
    std::ostringstream out;
    out << (v == GadgetVariant::plain ? "plain" : "split") << " gadget: " << to_record(a.sizes);
    if (!a.s_in_every_solution) out << "; s missing from some minimal TDS";
    if (!a.t_in_no_solution) out << "; t in some minimal TDS";
    if (!a.set_vertices_in_no_solution) out << "; some w_F in a minimal TDS";
    if (!a.structure_holds) out << "; declared structure violated";
    return out.str();
}

} // namespace detail

/// Random hypergraphs (one in four restricted to pairs) filtered by the
/// gadget precondition; every trial audits both the plain and split gadget.
inline CampaignSummary run_total_domination_campaign(const CampaignOptions& opt) {
    Rng rng(opt.seed);
    CampaignSummary sum;
    std::size_t draws = 0;
    while (sum.trials < opt.trials) {
        const bool pairs = rng.below(4) == 0;
        auto h = detail::draw_source(rng, opt, pairs);
        if (detail::some_element_hits_all(h) || 2 + h.universe_size() + h.set_count() > opt.enumeration.cap) {
            ++sum.rejected;
            if (++draws > opt.max_redraws) throw Error("too many rejected draws");
            continue;
        }
        TrialRecord rec{sum.trials, h, 0, {}};
        ++sum.trials;
        sum.pair_instances += pairs;
        bool ok = true, corr = true, forced = true, structure = true;
        for (auto variant : {GadgetVariant::plain, GadgetVariant::split}) {
            try {
                auto gadget = hitting_set_to_total_domination(h, variant);
                if (opt.drop_incidence_edge) gadget = detail::drop_first_incidence_edge(std::move(gadget));
                auto audit = audit_total_domination_gadget(h, gadget, opt.enumeration);
                corr = corr && audit.sizes.match;
                forced = forced && audit.s_in_every_solution && audit.t_in_no_solution &&
                         audit.set_vertices_in_no_solution;
                structure = structure && audit.structure_holds;
                if (!audit.passed() && ok) rec.detail = detail::describe(audit, variant);
                ok = ok && audit.passed();
            } catch (const Error& e) {
                if (ok) rec.detail = e.what();
                ok = corr = forced = false;
            }
        }
        sum.correspondence_ok += corr;
        sum.forced_vertices_ok += forced;
        sum.structure_ok += structure;
        if (ok) {
            ++sum.passed;
        } else if (!sum.first_failure) {
            sum.first_failure = rec;
        }
    }
    return sum;
}

/// Random hypergraphs with a k >= 2 drawn uniformly among the sizes of their
/// minimal hitting sets; draws with no such size, or whose gadget exceeds
/// the enumeration cap, are rejected.
inline CampaignSummary run_well_domination_campaign(const CampaignOptions& opt) {
    Rng rng(opt.seed);
    CampaignSummary sum;
    std::size_t draws = 0;
    auto reject = [&] {
        ++sum.rejected;
        if (++draws > opt.max_redraws) throw Error("too many rejected draws");
    };
    while (sum.trials < opt.trials) {
        const bool pairs = rng.below(4) == 0;
        auto h = detail::draw_source(rng, opt, pairs);
        auto sizes = enumerate_minimal_hitting_sets(h, opt.enumeration).size_values();
        std::vector<std::size_t> choices;
        for (auto z : sizes) {
            if (z >= 2) choices.push_back(z);
        }
        if (choices.empty()) {
            reject();
            continue;
        }
        auto k = choices[rng.below(choices.size())];
        if (1 + h.universe_size() + (k - 1) * h.set_count() > opt.enumeration.cap) {
            reject();
            continue;
        }
        TrialRecord rec{sum.trials, h, k, {}};
        ++sum.trials;
        sum.pair_instances += pairs;
        try {
            auto audit = verify_well_domination_reduction(h, k, opt.enumeration);
            sum.yes_instances += audit.source_all_size_k;
            sum.sizes_ok += audit.sizes.match;
            if (audit.biconditional_holds()) {
                ++sum.passed;
            } else if (!sum.first_failure) {
                rec.detail = std::string("source all size k: ") + (audit.source_all_size_k ? "yes" : "no") +
                             ", gadget well-dominated: " + (audit.gadget_well_dominated ? "yes" : "no");
                sum.first_failure = rec;
            }
        } catch (const Error& e) {
            if (!sum.first_failure) {
                rec.detail = e.what();
                sum.first_failure = rec;
            }
        }
    }
    return sum;
}

} // namespace wellness
