// wellness: command-line front end for the wellness library.
//
//   wellness check <property> <file>
//   wellness enumerate <kind> <file>
//   wellness params <file>
//   wellness reduce <reduction> <file> [--k K] [--variant plain|split] [--mode closed|open] [--out PATH]
//   wellness verify <theorem> [--random N] [--seed S] [--max-universe U] [--max-sets M]
//   wellness gen <hyper|graph> [--seed S] ...
//
// Exit status: 0 success / well / all trials pass, 1 not well / some trial
// failed, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wellness/chain.hpp"
#include "wellness/checks.hpp"
#include "wellness/enumerate.hpp"
#include "wellness/io.hpp"
#include "wellness/reductions.hpp"
#include "wellness/trials.hpp"

namespace {

using namespace wellness;

enum class OutputMode { human, record };

struct RunConfig {
    std::string property, kind, reduction, theorem, gen_kind;
    std::string input;
    std::string out_path;
    std::size_t cap = default_enumeration_cap;
    std::string output = "human";
    std::string engine = "branch";
    bool short_circuit = false;
    // reduce
    std::size_t k = 0;
    std::string variant = "plain";
    std::string mode = "closed";
    // verify / gen
    std::size_t random = 200;
    std::uint64_t seed = 1;
    std::size_t max_universe = 7;
    std::size_t max_sets = 6;
    bool drop_edge = false;
    std::size_t elements = 5;
    std::size_t sets = 4;
    std::size_t vertices = 6;
    double p = 0.5;

    OutputMode output_mode() const { return output == "record" ? OutputMode::record : OutputMode::human; }

    EnumerationOptions enumeration() const {
        return {cap, engine == "scan" ? Engine::subset_scan : Engine::branch};
    }
};

class Usage : public Error {
public:
    using Error::Error;
};

struct Instance {
    io::InstanceKind kind;
    Graph graph;
    Hypergraph hyper;
};

Instance load(const std::string& path) {
    auto text = io::read_file(path);
    Instance inst{io::sniff(text), {}, {}};
    if (inst.kind == io::InstanceKind::graph) {
        inst.graph = io::parse_graph(text);
    } else {
        inst.hyper = io::parse_hypergraph(text);
        for (const auto& w : inst.hyper.validation_warnings()) std::cerr << "warning: " << w << '\n';
    }
    return inst;
}

Graph load_graph(const std::string& path) {
    auto inst = load(path);
    if (inst.kind != io::InstanceKind::graph) throw Usage("'" + path + "' is a hypergraph; expected a graph");
    return inst.graph;
}

Hypergraph load_hypergraph(const std::string& path) {
    auto inst = load(path);
    if (inst.kind != io::InstanceKind::hypergraph) {
        throw Usage("'" + path + "' is a graph; expected a hypergraph");
    }
    return inst.hyper;
}

int cmd_check(const RunConfig& cfg) {
    auto property = parse_property(cfg.property);
    if (!property) throw Usage("unknown property '" + cfg.property + "'");
    CheckOptions opts{cfg.enumeration(), cfg.short_circuit};
    WellnessReport report;
    std::string record, prose;
    if (is_graph_property(*property)) {
        report = check(load_graph(cfg.input), *property, opts);
        record = to_record(report);
        prose = to_prose(report);
    } else {
        auto h = load_hypergraph(cfg.input);
        report = check(h, *property, opts);
        record = to_record(report, h);
        prose = to_prose(report, h);
    }
    std::cout << (cfg.output_mode() == OutputMode::record ? record : prose) << '\n';
    return report.well ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
    auto kind = parse_solution_kind(cfg.kind);
    if (!kind) throw Usage("unknown solution kind '" + cfg.kind + "'");
    SolutionFamily fam;
    std::optional<Hypergraph> h;
    if (is_graph_kind(*kind)) {
        fam = enumerate(load_graph(cfg.input), *kind, cfg.enumeration());
    } else {
        h = load_hypergraph(cfg.input);
        fam = enumerate(*h, *kind, cfg.enumeration());
    }
    const Hypergraph* hp = h ? &*h : nullptr;
    if (cfg.output_mode() == OutputMode::human) {
        std::cout << fam.solutions.size() << ' ' << to_string(*kind) << (fam.solutions.size() == 1 ? "" : "s")
                  << '\n';
    }
    for (const auto& s : fam.solutions) {
        std::cout << s.size() << ' ' << format_solution(hp, *kind, s) << '\n';
    }
    return 0;
}

int cmd_params(const RunConfig& cfg) {
    auto p = chain_parameters(load_graph(cfg.input), cfg.enumeration());
    if (cfg.output_mode() == OutputMode::human) {
        std::cout << "gamma Gamma iota alpha\n";
    }
    std::cout << to_record(p) << '\n';
    return 0;
}

void emit_reduction(const RunConfig& cfg, const ReductionOutput& g, const Hypergraph& source) {
    if (cfg.out_path.empty()) {
        io::write_graph(std::cout, g.instance);
        write_roles(std::cout, g, source);
        return;
    }
    std::ofstream graph(cfg.out_path, std::ios::binary), roles(cfg.out_path + ".roles", std::ios::binary);
    if (!graph || !roles) throw Error("cannot write '" + cfg.out_path + "'");
    io::write_graph(graph, g.instance);
    write_roles(roles, g, source);
    std::cerr << "wrote " << cfg.out_path << " (" << g.instance.order() << " vertices, " << g.instance.size()
              << " edges) and " << cfg.out_path << ".roles\n";
}

void emit_hypergraph(const RunConfig& cfg, const Hypergraph& h) {
    if (cfg.out_path.empty()) {
        io::write_hypergraph(std::cout, h);
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + cfg.out_path + "'");
    io::write_hypergraph(out, h);
}

int cmd_reduce(const RunConfig& cfg) {
    if (cfg.reduction == "hs-to-wtd") {
        auto h = load_hypergraph(cfg.input);
        auto variant = cfg.variant == "split" ? GadgetVariant::split : GadgetVariant::plain;
        emit_reduction(cfg, hitting_set_to_total_domination(h, variant), h);
    } else if (cfg.reduction == "hs-to-wd") {
        auto h = load_hypergraph(cfg.input);
        std::size_t k = cfg.k ? cfg.k : greedy_minimal_hitting_set(h).size();
        emit_reduction(cfg, hitting_set_to_domination(h, k), h);
    } else if (cfg.reduction == "vc-to-hs") {
        emit_hypergraph(cfg, vertex_cover_to_hitting_set(load_graph(cfg.input)));
    } else if (cfg.reduction == "dom-to-hs") {
        auto mode = cfg.mode == "open" ? NeighborhoodMode::open : NeighborhoodMode::closed;
        emit_hypergraph(cfg, domination_to_hitting_set(load_graph(cfg.input), mode));
    } else {
        throw Usage("unknown reduction '" + cfg.reduction + "'");
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    CampaignOptions opt;
    opt.trials = cfg.random;
    opt.seed = cfg.seed;
    opt.max_universe = cfg.max_universe;
    opt.max_sets = cfg.max_sets;
    opt.enumeration = cfg.enumeration();
    opt.drop_incidence_edge = cfg.drop_edge;
    CampaignSummary sum;
    if (cfg.theorem == "total-domination") {
        sum = run_total_domination_campaign(opt);
    } else if (cfg.theorem == "well-domination") {
        if (cfg.drop_edge) throw Usage("--drop-edge applies to total-domination only");
        sum = run_well_domination_campaign(opt);
    } else {
        throw Usage("unknown theorem '" + cfg.theorem + "'");
    }
    std::cout << summary_record(cfg.theorem, sum) << '\n';
    if (cfg.output_mode() == OutputMode::human) {
        if (cfg.theorem == "total-domination") {
            std::cout << "  size correspondence " << sum.correspondence_ok << '/' << sum.trials
                      << ", forced vertices " << sum.forced_vertices_ok << '/' << sum.trials
                      << ", structure " << sum.structure_ok << '/' << sum.trials << ", pair instances "
                      << sum.pair_instances << '\n';
        } else {
            std::cout << "  yes-instances " << sum.yes_instances << '/' << sum.trials << ", size sets equal "
                      << sum.sizes_ok << '/' << sum.trials << '\n';
        }
        if (sum.first_failure) {
            const auto& f = *sum.first_failure;
            std::cout << "first counterexample: trial " << f.index;
            if (f.k) std::cout << ", k = " << f.k;
            std::cout << ": " << f.detail << '\n' << io::to_string(f.instance);
        }
    }
    return sum.all_passed() ? 0 : 1;
}

int cmd_gen(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    if (cfg.gen_kind == "hyper") {
        io::write_hypergraph(std::cout, random_hypergraph(rng, cfg.elements, cfg.sets));
    } else if (cfg.gen_kind == "graph") {
        if (cfg.p < 0.0 || cfg.p > 1.0) throw Usage("--p must lie in [0, 1]");
        io::write_graph(std::cout, random_graph(rng, cfg.vertices, cfg.p));
    } else {
        throw Usage("unknown generator '" + cfg.gen_kind + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wellness problems: enumeration, checkers, gadget reductions and their verification"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--cap", cfg.cap, "Enumeration cap (ground elements, at most 64)")
            ->check(CLI::Range(std::size_t{1}, bitset_width));
        sub->add_option("--output", cfg.output, "Output mode")->check(CLI::IsMember({"human", "record"}));
        sub->add_option("--engine", cfg.engine, "Enumeration engine")->check(CLI::IsMember({"branch", "scan"}));
    };

    auto* check = app.add_subcommand("check", "Decide a wellness property");
    check->add_option("property", cfg.property, "well-covered | well-dominated | well-total-dominated | "
                                                 "well-hitting-set | well-set-cover | well-hitting-set-cover")
        ->required();
    check->add_option("file", cfg.input, "Instance file")->required();
    check->add_flag("--short-circuit", cfg.short_circuit, "Stop at the first two sizes seen");
    common(check);

    auto* en = app.add_subcommand("enumerate", "List all minimal (maximal) solutions");
    en->add_option("kind", cfg.kind, "Solution kind, e.g. minimal-dominating-sets")->required();
    en->add_option("file", cfg.input, "Instance file")->required();
    common(en);

    auto* params = app.add_subcommand("params", "Print gamma Gamma iota alpha");
    params->add_option("file", cfg.input, "Graph file")->required();
    common(params);

    auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget");
    reduce->add_option("reduction", cfg.reduction, "hs-to-wtd | hs-to-wd | vc-to-hs | dom-to-hs")->required();
    reduce->add_option("file", cfg.input, "Source instance")->required();
    reduce->add_option("--k", cfg.k, "Hitting-set size for hs-to-wd (default: greedy)");
    reduce->add_option("--variant", cfg.variant, "hs-to-wtd variant")->check(CLI::IsMember({"plain", "split"}));
    reduce->add_option("--mode", cfg.mode, "dom-to-hs neighbourhood")->check(CLI::IsMember({"closed", "open"}));
    reduce->add_option("--out", cfg.out_path, "Output path (graph gadgets also write PATH.roles)");
    common(reduce);

    auto* verify = app.add_subcommand("verify", "Randomized check of a gadget correspondence");
    verify->add_option("theorem", cfg.theorem, "total-domination | well-domination")->required();
    verify->add_option("--random", cfg.random, "Number of valid trials");
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_option("--max-universe", cfg.max_universe, "Largest universe drawn")->check(CLI::Range(1, 64));
    verify->add_option("--max-sets", cfg.max_sets, "Largest family drawn")->check(CLI::Range(1, 64));
    verify->add_flag("--drop-edge", cfg.drop_edge, "Test hook: drop one v_u w_F edge from every gadget");
    common(verify);

    auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
    gen->add_option("kind", cfg.gen_kind, "hyper | graph")->required();
    gen->add_option("--seed", cfg.seed, "Random seed");
    gen->add_option("--elements", cfg.elements, "Universe size (hyper)")->check(CLI::Range(1, 64));
    gen->add_option("--sets", cfg.sets, "Family size (hyper)");
    gen->add_option("--vertices", cfg.vertices, "Vertex count (graph)");
    gen->add_option("--p", cfg.p, "Edge probability (graph)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(cfg);
        if (en->parsed()) return cmd_enumerate(cfg);
        if (params->parsed()) return cmd_params(cfg);
        if (reduce->parsed()) return cmd_reduce(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (gen->parsed()) return cmd_gen(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
