#pragma once

// The six wellness deciders. A "not well" verdict always carries a pair of
// minimal solutions of different sizes, which anyone can re-check in
// polynomial time.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wellness/core.hpp"
#include "wellness/enumerate.hpp"

namespace wellness {

enum class Property {
    well_covered,
    well_dominated,
    well_totally_dominated,
    well_hitting_set,
    well_set_cover,
    well_hitting_set_cover,
};

inline constexpr Property all_properties[] = {
    Property::well_covered,     Property::well_dominated, Property::well_totally_dominated,
    Property::well_hitting_set, Property::well_set_cover, Property::well_hitting_set_cover,
};

inline std::string_view to_string(Property p) {
    switch (p) {
        case Property::well_covered: return "well-covered";
        case Property::well_dominated: return "well-dominated";
        case Property::well_totally_dominated: return "well-total-dominated";
        case Property::well_hitting_set: return "well-hitting-set";
        case Property::well_set_cover: return "well-set-cover";
        case Property::well_hitting_set_cover: return "well-hitting-set-cover";
    }
    return "?";
}

inline std::optional<Property> parse_property(std::string_view text) {
    if (text == "well-totally-dominated") return Property::well_totally_dominated;
    for (auto p : all_properties) {
        if (text == to_string(p)) return p;
    }
    return std::nullopt;
}

inline bool is_graph_property(Property p) {
    return p == Property::well_covered || p == Property::well_dominated ||
           p == Property::well_totally_dominated;
}

struct Witness {
    SolutionKind kind{};
    std::vector<int> members;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct WellnessReport {
    Property property{};
    bool well = false;
    std::optional<std::size_t> common_size;             // iff well
    std::optional<std::pair<Witness, Witness>> witness;  // iff not well; first is smaller
    std::size_t solution_count = 0;
};

struct CheckOptions {
    EnumerationOptions enumeration;
    // Stop at the first two solutions of different sizes instead of reporting
    // the lexicographically first smallest/largest pair.
    bool short_circuit = false;
};

namespace detail {

/// Tracks the smallest and largest solutions seen, preferring the earlier
/// stream and then lexicographic order on ties.
class SizeTracker {
public:
    // Returns false when the caller may stop (short-circuit mode and two sizes seen).
    bool add(SolutionKind kind, int stream, std::vector<int> s, bool short_circuit) {
        ++count_;
        Entry e{stream, std::move(s), kind};
        if (!min_ || better_min(e, *min_)) min_ = e;
        if (!max_ || better_max(e, *max_)) max_ = e;
        return !(short_circuit && min_->members.size() != max_->members.size());
    }

    WellnessReport report(Property p) const {
        WellnessReport r;
        r.property = p;
        r.solution_count = count_;
        if (!min_ || min_->members.size() == max_->members.size()) {
            r.well = true;
            r.common_size = min_ ? min_->members.size() : 0;
        } else {
            r.witness.emplace(Witness{min_->kind, min_->members}, Witness{max_->kind, max_->members});
        }
        return r;
    }

private:
    struct Entry {
        int stream;
        std::vector<int> members;
        SolutionKind kind;
    };

    static bool tie_break(const Entry& a, const Entry& b) {
        return a.stream != b.stream ? a.stream < b.stream : a.members < b.members;
    }
    static bool better_min(const Entry& a, const Entry& b) {
        return a.members.size() != b.members.size() ? a.members.size() < b.members.size() : tie_break(a, b);
    }
    static bool better_max(const Entry& a, const Entry& b) {
        return a.members.size() != b.members.size() ? a.members.size() > b.members.size() : tie_break(a, b);
    }

    std::optional<Entry> min_, max_;
    std::size_t count_ = 0;
};

inline bool stream_into(SizeTracker& t, const SetSystem& sys, SolutionKind kind, int stream,
                        const CheckOptions& opts) {
    bool keep_going = true;
    for_each_solution(sys, opts.enumeration, [&](Mask s) {
        keep_going = t.add(kind, stream, mask_to_ids(s), opts.short_circuit);
        return keep_going;
    });
    return keep_going;
}

inline WellnessReport check_graph(const Graph& g, Property p, SolutionKind kind, const CheckOptions& opts) {
    if (g.order() == 0) throw PreconditionViolated("graph has no vertices");
    detail::check_ground(g.order(), opts.enumeration);
    SizeTracker t;
    stream_into(t, set_system(g, kind), kind, 0, opts);
    return t.report(p);
}

inline WellnessReport check_hyper(const Hypergraph& h, Property p, SolutionKind kind, const CheckOptions& opts) {
    auto sys = set_system(h, kind);
    detail::check_ground(sys.ground, opts.enumeration);
    SizeTracker t;
    stream_into(t, sys, kind, 0, opts);
    return t.report(p);
}

} // namespace detail

inline WellnessReport check_well_covered(const Graph& g, const CheckOptions& opts = {}) {
    return detail::check_graph(g, Property::well_covered, SolutionKind::maximal_independent_set, opts);
}

inline WellnessReport check_well_dominated(const Graph& g, const CheckOptions& opts = {}) {
    return detail::check_graph(g, Property::well_dominated, SolutionKind::minimal_dominating_set, opts);
}

inline WellnessReport check_well_totally_dominated(const Graph& g, const CheckOptions& opts = {}) {
    return detail::check_graph(g, Property::well_totally_dominated,
                               SolutionKind::minimal_total_dominating_set, opts);
}

inline WellnessReport check_well_hitting_set(const Hypergraph& h, const CheckOptions& opts = {}) {
    return detail::check_hyper(h, Property::well_hitting_set, SolutionKind::minimal_hitting_set, opts);
}

inline WellnessReport check_well_set_cover(const Hypergraph& h, const CheckOptions& opts = {}) {
    return detail::check_hyper(h, Property::well_set_cover, SolutionKind::minimal_set_cover, opts);
}

/// Hitting sets and set covers pooled; on ties the hitting set is preferred as witness.
inline WellnessReport check_well_hitting_set_cover(const Hypergraph& h, const CheckOptions& opts = {}) {
    auto covers = set_system(h, SolutionKind::minimal_set_cover);
    auto hitting = set_system(h, SolutionKind::minimal_hitting_set);
    detail::check_ground(hitting.ground, opts.enumeration);
    detail::check_ground(covers.ground, opts.enumeration);
    detail::SizeTracker t;
    if (detail::stream_into(t, hitting, SolutionKind::minimal_hitting_set, 0, opts)) {
        detail::stream_into(t, covers, SolutionKind::minimal_set_cover, 1, opts);
    }
    return t.report(Property::well_hitting_set_cover);
}

inline WellnessReport check(const Graph& g, Property p, const CheckOptions& opts = {}) {
    switch (p) {
        case Property::well_covered: return check_well_covered(g, opts);
        case Property::well_dominated: return check_well_dominated(g, opts);
        case Property::well_totally_dominated: return check_well_totally_dominated(g, opts);
        default: throw PreconditionViolated(std::string(to_string(p)) + " expects a hypergraph instance");
    }
}

inline WellnessReport check(const Hypergraph& h, Property p, const CheckOptions& opts = {}) {
    switch (p) {
        case Property::well_hitting_set: return check_well_hitting_set(h, opts);
        case Property::well_set_cover: return check_well_set_cover(h, opts);
        case Property::well_hitting_set_cover: return check_well_hitting_set_cover(h, opts);
        default: throw PreconditionViolated(std::string(to_string(p)) + " expects a graph instance");
    }
}

// Rendering ---------------------------------------------------------------

/// Vertex ids and set indices print as {0,2}; hitting sets print element names.
inline std::string format_solution(const Hypergraph* h, SolutionKind kind, const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        if (h && kind == SolutionKind::minimal_hitting_set) {
            out += h->element_name(s[i]);
        } else if (h && kind == SolutionKind::minimal_set_cover) {
            out += 'S' + std::to_string(s[i]);
        } else {
            out += std::to_string(s[i]);
        }
    }
    return out + "}";
}

namespace detail {

inline std::string record(const WellnessReport& r, const Hypergraph* h) {
    std::ostringstream out;
    out << to_string(r.property) << ' ' << (r.well ? "well" : "not-well") << ' ';
    if (r.well) {
        out << *r.common_size;
    } else {
        const auto& [a, b] = *r.witness;
        out << a.members.size() << ',' << b.members.size() << ' ' << format_solution(h, a.kind, a.members)
            << ' ' << format_solution(h, b.kind, b.members);
    }
    return out.str();
}

inline std::string prose(const WellnessReport& r, const Hypergraph* h) {
    std::ostringstream out;
    out << "instance is " << (r.well ? "" : "not ") << to_string(r.property);
    if (r.well) {
        out << ": all " << r.solution_count << " minimal solutions have size " << *r.common_size;
    } else {
        const auto& [a, b] = *r.witness;
        out << ": " << to_string(a.kind) << ' ' << format_solution(h, a.kind, a.members) << " has size "
            << a.members.size() << ", " << to_string(b.kind) << ' ' << format_solution(h, b.kind, b.members)
            << " has size " << b.members.size();
        out << " (" << r.solution_count << " minimal solutions examined)";
    }
    return out.str();
}

} // namespace detail

/// `property verdict size|size1,size2 witness1 witness2`
inline std::string to_record(const WellnessReport& r) { return detail::record(r, nullptr); }
inline std::string to_record(const WellnessReport& r, const Hypergraph& h) { return detail::record(r, &h); }

inline std::string to_prose(const WellnessReport& r) { return detail::prose(r, nullptr); }
inline std::string to_prose(const WellnessReport& r, const Hypergraph& h) { return detail::prose(r, &h); }

} // namespace wellness
