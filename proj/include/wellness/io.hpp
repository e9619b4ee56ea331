#pragma once

// Text formats.
//
//   graph:      p graph <n> <m>
//               e <u> <v>            (m lines, 0-based ids)
//               l <v> <name>         (optional labels)
//
//   hypergraph: p hyper <|U|> <|F|>
//               <universe names, space separated>
//               <member names of set 0>
//               ...
//
// Lines starting with 'c' are comments. Writers emit sorted edges and
// sorted set members so output is byte-deterministic.

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wellness/core.hpp"

namespace wellness::io {

namespace detail {

inline bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c';
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline long long to_integer(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    }
}

} // namespace detail

inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skip_line(line)) continue;
        auto tok = detail::tokens(line);
        if (!header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "graph") {
                throw ParseError(lineno, "expected header 'p graph <n> <m>'");
            }
            n = static_cast<std::size_t>(detail::to_integer(tok[2], lineno));
            m = static_cast<std::size_t>(detail::to_integer(tok[3], lineno));
            header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            auto u = detail::to_integer(tok[1], lineno);
            auto v = detail::to_integer(tok[2], lineno);
            if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
                throw ParseError(lineno, "vertex id out of range");
            }
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (tok[0] == "l") {
            if (tok.size() != 3) throw ParseError(lineno, "expected 'l <v> <name>'");
            auto v = detail::to_integer(tok[1], lineno);
            if (static_cast<std::size_t>(v) >= n) throw ParseError(lineno, "vertex id out of range");
            if (labels.empty()) {
                labels.resize(n);
                for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
            }
            labels[static_cast<std::size_t>(v)] = tok[2];
        } else {
            throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
        }
    }
    if (!header) throw ParseError(lineno, "missing 'p graph' header");
    if (edges.size() != m) {
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    }
    try {
        return Graph(n, edges, std::move(labels));
    } catch (const InvalidInstance& e) {
        throw ParseError(lineno, e.what());
    }
}

inline Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool header = false, have_universe = false;
    std::size_t universe_size = 0, family_size = 0;
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> sets;
    while (std::getline(in, line)) {
        ++lineno;
        if (!header) {
            if (detail::skip_line(line)) continue;
            auto tok = detail::tokens(line);
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "hyper") {
                throw ParseError(lineno, "expected header 'p hyper <|U|> <|F|>'");
            }
            universe_size = static_cast<std::size_t>(detail::to_integer(tok[2], lineno));
            family_size = static_cast<std::size_t>(detail::to_integer(tok[3], lineno));
            header = true;
            continue;
        }
        // The universe line may be blank when the universe is empty.
        if (!have_universe) {
            universe = detail::tokens(line);
            if (universe.size() != universe_size) {
                throw ParseError(lineno, "header declares " + std::to_string(universe_size) +
                                             " elements, universe line has " +
                                             std::to_string(universe.size()));
            }
            have_universe = true;
            continue;
        }
        auto tok = detail::tokens(line);
        if (tok.empty()) continue;
        if (sets.size() == family_size) throw ParseError(lineno, "more sets than the header declares");
        sets.push_back(std::move(tok));
    }
    if (!header) throw ParseError(lineno, "missing 'p hyper' header");
    if (!have_universe && universe_size > 0) throw ParseError(lineno, "missing universe line");
    if (sets.size() != family_size) {
        throw ParseError(lineno, "header declares " + std::to_string(family_size) + " sets, found " +
                                     std::to_string(sets.size()));
    }
    try {
        return Hypergraph(std::move(universe), std::move(sets));
    } catch (const InvalidInstance& e) {
        throw ParseError(lineno, e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p graph " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    if (g.has_labels()) {
        for (std::size_t v = 0; v < g.order(); ++v) {
            out << "l " << v << ' ' << g.label(static_cast<Vertex>(v)) << '\n';
        }
    }
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "p hyper " << h.universe_size() << ' ' << h.set_count() << '\n';
    for (std::size_t e = 0; e < h.universe_size(); ++e) {
        if (e) out << ' ';
        out << h.element_name(static_cast<int>(e));
    }
    out << '\n';
    for (const auto& s : h.sets()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ' ';
            out << h.element_name(s[i]);
        }
        out << '\n';
    }
}

inline std::string to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline std::string to_string(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_graph(in);
}

inline Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_hypergraph(in);
}

/// Peeks at the header to tell graph files from hypergraph files.
enum class InstanceKind { graph, hypergraph };

inline InstanceKind sniff(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skip_line(line)) continue;
        auto tok = detail::tokens(line);
        if (tok.size() >= 2 && tok[0] == "p" && tok[1] == "graph") return InstanceKind::graph;
        if (tok.size() >= 2 && tok[0] == "p" && tok[1] == "hyper") return InstanceKind::hypergraph;
        break;
    }
    throw ParseError(lineno, "expected 'p graph' or 'p hyper' header");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// FNV-1a over the canonical text form; used as an instance fingerprint.
inline std::uint64_t fingerprint(std::string_view canonical) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fingerprint(const Graph& g) { return fingerprint(to_string(g)); }
inline std::uint64_t fingerprint(const Hypergraph& h) { return fingerprint(to_string(h)); }

} // namespace wellness::io
