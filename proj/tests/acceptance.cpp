// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wellness/chain.hpp"
#include "wellness/checks.hpp"
#include "wellness/io.hpp"
#include "wellness/reductions.hpp"
#include "wellness/trials.hpp"

using namespace wellness;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Corpus {
    std::map<std::string, Graph> graphs;
    std::map<std::string, Hypergraph> hypergraphs;
};

Corpus load_corpus(const fs::path& dir) {
    Corpus c;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        auto text = io::read_file(p.string());
        auto name = p.stem().string();
        if (io::sniff(text) == io::InstanceKind::graph)
            c.graphs.emplace(name, io::parse_graph(text));
        else
            c.hypergraphs.emplace(name, io::parse_hypergraph(text));
    }
    return c;
}

// Campaign results are shared between criteria 1, 2 and 4.
struct TotalDominationRun {
    CampaignSummary summary;
    double seconds = 0;
};

const TotalDominationRun& total_domination_run() {
    static const TotalDominationRun run = [] {
        CampaignOptions opt;
        opt.trials = 200;
        opt.seed = 2024;
        opt.max_universe = 7;
        opt.max_sets = 6;
        auto start = Clock::now();
        TotalDominationRun r;
        r.summary = run_total_domination_campaign(opt);
        r.seconds = seconds_since(start);
        return r;
    }();
    return run;
}

std::string failure_note(const CampaignSummary& s) {
    if (!s.first_failure) return "";
    return "; first failure at trial " + std::to_string(s.first_failure->index) + ": " + s.first_failure->detail;
}

Outcome criterion1() {
    const auto& r = total_domination_run();
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << r.summary.correspondence_ok << '/' << r.summary.trials << " size sets shifted by one, "
      << r.summary.rejected << " draws rejected, " << r.seconds << "s" << failure_note(r.summary);
    return {r.summary.trials == 200 && r.summary.correspondence_ok == 200 && r.seconds < 60, d.str()};
}

Outcome criterion2() {
    const auto& r = total_domination_run();
    std::ostringstream d;
    d << r.summary.forced_vertices_ok << '/' << r.summary.trials << " trials with s forced and t, w_F excluded";
    return {r.summary.forced_vertices_ok == r.summary.trials && r.summary.trials == 200, d.str()};
}

Outcome criterion3() {
    CampaignOptions opt;
    opt.trials = 200;
    opt.seed = 2025;
    opt.max_universe = 7;
    opt.max_sets = 6;
    opt.enumeration.cap = bitset_width;
    auto start = Clock::now();
    auto s = run_well_domination_campaign(opt);
    double secs = seconds_since(start);
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << s.passed << '/' << s.trials << " biconditional, " << s.yes_instances << " well instances, "
      << s.rejected << " draws rejected, " << secs << "s" << failure_note(s);
    return {s.trials == 200 && s.passed == 200 && secs < 120, d.str()};
}

Outcome criterion4() {
    const auto& r = total_domination_run();
    std::ostringstream d;
    d << r.summary.structure_ok << '/' << r.summary.trials << " trials with bipartite, split and degeneracy guarantees, "
      << r.summary.pair_instances << " all-pairs instances";
    return {r.summary.structure_ok == r.summary.trials && r.summary.trials == 200 && r.summary.pair_instances > 0,
            d.str()};
}

std::vector<Graph> chain_sample() {
    Rng rng(5150);
    std::vector<Graph> graphs;
    for (int i = 0; i < 500; ++i) {
        auto n = static_cast<std::size_t>(rng.between(1, 10));
        graphs.push_back(random_graph(rng, n, 0.1 + 0.1 * static_cast<double>(i % 8)));
    }
    return graphs;
}

Outcome criterion5() {
    std::size_t wd = 0, wc = 0, violations = 0;
    for (const auto& g : chain_sample()) {
        bool d = check_well_dominated(g).well;
        bool c = check_well_covered(g).well;
        wd += d;
        wc += c;
        violations += d && !c;
    }
    std::ostringstream out;
    out << "500 graphs, " << wd << " well-dominated, " << wc << " well-covered, " << violations << " violations";
    return {violations == 0, out.str()};
}

Outcome criterion6() {
    std::size_t mismatches = 0;
    for (const auto& g : chain_sample()) {
        auto p = chain_parameters(g);
        mismatches += check_well_dominated(g).well != (p.gamma == p.Gamma);
        mismatches += check_well_covered(g).well != (p.iota == p.alpha);
    }
    return {mismatches == 0, "500 graphs, " + std::to_string(mismatches) + " parameter mismatches"};
}

Outcome criterion7() {
    Rng rng(7007);
    std::size_t agree = 0, positive = 0, coronas = 0;
    const std::size_t total = 300;
    for (std::size_t i = 0; i < total; ++i) {
        Graph g;
        if (i % 25 == 0) {
            g = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        } else if (i % 5 == 0) {
            g = corona_with_K1(random_connected_bipartite(rng, static_cast<std::size_t>(rng.between(1, 4)), 0.5));
            ++coronas;
        } else {
            g = random_connected_bipartite(rng, static_cast<std::size_t>(rng.between(1, 8)), 0.15 + 0.05 * (i % 10));
        }
        bool fast = recognize_bipartite_well_dominated(g);
        positive += fast;
        agree += fast == check_well_dominated(g).well;
    }
    std::ostringstream d;
    d << agree << '/' << total << " agree (" << positive << " well-dominated, " << coronas << " coronas drawn)";
    return {agree == total, d.str()};
}

std::set<std::vector<std::string>> named(const Hypergraph& h, const SolutionFamily& fam, bool by_set) {
    std::set<std::vector<std::string>> out;
    for (const auto& s : fam.solutions) {
        std::vector<std::string> names;
        for (int x : s) names.push_back(by_set ? h.set_name(static_cast<std::size_t>(x)) : h.element_name(static_cast<std::size_t>(x)));
        std::sort(names.begin(), names.end());
        out.insert(names);
    }
    return out;
}

Outcome criterion8() {
    Rng rng(8008);
    std::size_t families_equal = 0, verdicts_equal = 0;
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph_without_isolated(rng, static_cast<std::size_t>(rng.between(2, 10)), 0.3);
        auto h = domination_to_hitting_set(g, NeighborhoodMode::closed);
        families_equal += named(h, enumerate_minimal_hitting_sets(h), false) == named(h, enumerate_minimal_set_covers(h), true);
        auto a = check_well_hitting_set_cover(h);
        auto b = check_well_dominated(g);
        verdicts_equal += a.well == b.well && a.common_size == b.common_size;
    }
    std::ostringstream d;
    d << families_equal << "/100 families coincide, " << verdicts_equal << "/100 verdicts equal";
    return {families_equal == 100 && verdicts_equal == 100, d.str()};
}

Outcome criterion9(const Corpus& c) {
    struct Case {
        std::string instance;
        Property property;
        bool well;
        std::optional<std::size_t> size;
        std::vector<std::size_t> witness_sizes;
    };
    const std::vector<Case> cases = {
        {"c4", Property::well_dominated, true, 2, {}},
        {"p4", Property::well_dominated, true, 2, {}},
        {"p3", Property::well_dominated, false, std::nullopt, {1, 2}},
        {"k13", Property::well_totally_dominated, true, 2, {}},
        {"k13", Property::well_dominated, false, std::nullopt, {1, 3}},
        {"c5", Property::well_covered, true, 2, {}},
    };
    std::size_t ok = 0;
    double slowest = 0;
    std::string failures;
    for (const auto& k : cases) {
        auto start = Clock::now();
        auto r = check(c.graphs.at(k.instance), k.property);
        double secs = seconds_since(start);
        slowest = std::max(slowest, secs);
        bool good = r.well == k.well && r.common_size == k.size && secs < 1.0;
        if (!k.witness_sizes.empty())
            good = good && r.witness && r.witness->first.members.size() == k.witness_sizes[0] &&
                   r.witness->second.members.size() == k.witness_sizes[1];
        ok += good;
        if (!good) failures += " " + k.instance + ":" + std::string(to_string(k.property));
    }
    auto start = Clock::now();
    bool c5_not_very = !is_very_well_covered(c.graphs.at("c5"));
    slowest = std::max(slowest, seconds_since(start));
    ok += c5_not_very && seconds_since(start) < 1.0;
    if (!c5_not_very) failures += " c5:very-well-covered";
    std::ostringstream d;
    d << std::setprecision(3) << ok << '/' << cases.size() + 1 << " known answers, slowest check " << slowest << "s";
    if (!failures.empty()) d << ", failed:" << failures;
    return {ok == cases.size() + 1, d.str()};
}

Outcome criterion10(const Corpus& c) {
    EnumerationOptions branch{default_enumeration_cap, Engine::branch};
    EnumerationOptions scan{default_enumeration_cap, Engine::subset_scan};
    std::size_t compared = 0, equal = 0;
    std::string failures;
    auto compare = [&](const std::string& name, SolutionKind kind, auto&& run) {
        ++compared;
        if (run(branch).solutions == run(scan).solutions)
            ++equal;
        else
            failures += " " + name + ":" + std::string(to_string(kind));
    };
    for (const auto& [name, g] : c.graphs) {
        if (g.order() > 12) continue;
        for (auto kind : all_solution_kinds) {
            if (!is_graph_kind(kind)) continue;
            if (kind == SolutionKind::minimal_total_dominating_set && g.isolated_vertex()) continue;
            compare(name, kind, [&](const EnumerationOptions& o) { return enumerate(g, kind, o); });
        }
    }
    for (const auto& [name, h] : c.hypergraphs) {
        for (auto kind : all_solution_kinds) {
            if (is_graph_kind(kind)) continue;
            bool cover = kind == SolutionKind::minimal_set_cover;
            std::size_t ground = cover ? h.set_count() : h.universe_size();
            if (ground > 12 || (cover && !h.uncovered_elements().empty())) continue;
            compare(name, kind, [&](const EnumerationOptions& o) { return enumerate(h, kind, o); });
        }
    }
    std::ostringstream d;
    d << equal << '/' << compared << " (instance, kind) families identical across engines";
    if (!failures.empty()) d << ", differing:" << failures;
    return {compared > 0 && equal == compared, d.str()};
}

} // namespace

int main(int argc, char** argv) {
    fs::path corpus_dir = argc > 1 ? fs::path(argv[1]) : fs::path(WELLNESS_CORPUS_DIR);
    Corpus corpus;
    try {
        corpus = load_corpus(corpus_dir);
    } catch (const std::exception& e) {
        std::cerr << "cannot load corpus from " << corpus_dir << ": " << e.what() << '\n';
        return 2;
    }

    const std::vector<std::function<Outcome()>> criteria = {
        criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
        [&] { return criterion9(corpus); },
        [&] { return criterion10(corpus); },
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << ": " << o.detail << std::endl;
    }
    std::cout << (failed ? "acceptance FAILED" : "acceptance PASSED") << " (" << criteria.size() - failed << '/'
              << criteria.size() << ")\n";
    return failed ? 1 : 0;
}
