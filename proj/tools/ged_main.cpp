#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ged/bench.hpp"
#include "ged/bipartite.hpp"
#include "ged/exact.hpp"
#include "ged/qap.hpp"
#include "ged/synth.hpp"

namespace {

struct CostFlags {
    ged::ConstantCosts costs;
    bool clamp = false;

    ged::CostModel model() const {
        ged::CostModel m = ged::make_constant_model(costs);
        return clamp ? ged::clamp_substitutions(m) : m;
    }
};

void add_cost_flags(CLI::App* cmd, CostFlags& f) {
    cmd->add_option("--cvs", f.costs.cvs, "node substitution cost (differing labels)");
    cmd->add_option("--cvd", f.costs.cvd, "node removal cost");
    cmd->add_option("--cvi", f.costs.cvi, "node insertion cost");
    cmd->add_option("--ces", f.costs.ces, "edge substitution cost (differing labels)");
    cmd->add_option("--ced", f.costs.ced, "edge removal cost");
    cmd->add_option("--cei", f.costs.cei, "edge insertion cost");
    cmd->add_flag("--clamp-sub", f.clamp,
                  "clamp substitution costs by removal+insertion");
}

struct PairArgs {
    std::string file1, file2;
    bool emit_path = false;
    bool emit_idmap = false;
};

void add_pair_args(CLI::App* cmd, PairArgs& a) {
    cmd->add_option("g1", a.file1, "source graph (.gedg)")->required();
    cmd->add_option("g2", a.file2, "target graph (.gedg)")->required();
    cmd->add_flag("--emit-path", a.emit_path, "print the induced edit path");
    cmd->add_flag("--emit-idmap", a.emit_idmap,
                  "print original-to-dense node id maps");
}

void emit_idmap(const char* name, const ged::ParseResult& parsed) {
    for (std::size_t dense = 0; dense < parsed.original_ids.size(); ++dense)
        std::cout << "# idmap " << name << " " << parsed.original_ids[dense] << " -> " << dense
                  << "\n";
}

int fail(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph edit distance toolkit: exact search, bipartite and QAP bounds"};
    app.set_help_flag("--help", "print help");  // frees -h for the exact --h toggle
    app.require_subcommand(1);

    // --- bipartite ---
    auto* bip = app.add_subcommand("bipartite", "bipartite GED upper bound (node LSAP)");
    PairArgs bip_pair;
    CostFlags bip_costs;
    std::string strategy = "edges";
    bip->add_option("--strategy", strategy, "bag strategy: node|edges")
        ->check(CLI::IsMember({"node", "edges"}));
    add_pair_args(bip, bip_pair);
    add_cost_flags(bip, bip_costs);

    // --- qap ---
    auto* qap = app.add_subcommand("qap", "QAP bound minimized by projected fixed-point iteration");
    PairArgs qap_pair;
    CostFlags qap_costs;
    std::string init = "bedges";
    int restarts = 1, kmax = 40;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    qap->add_option("--init", init, "initialization: random|bnode|bedges")
        ->check(CLI::IsMember({"random", "bnode", "bedges"}));
    qap->add_option("--restarts", restarts, "number of starts (extra ones are random)");
    qap->add_option("--kmax", kmax, "iteration cap");
    qap->add_option("--seed", seed, "random restart seed");
    qap->add_option("--tol", tol, "fixed-point tolerance");
    add_pair_args(qap, qap_pair);
    add_cost_flags(qap, qap_costs);

    // --- exact ---
    auto* exact = app.add_subcommand("exact", "exact GED by best-first search");
    PairArgs exact_pair;
    CostFlags exact_costs;
    std::uint64_t budget = 10'000'000;
    std::string heuristic = "lsap";
    exact->add_option("--budget", budget, "maximum expanded search nodes");
    exact->add_option("--h", heuristic, "completion bound: lsap|none")
        ->check(CLI::IsMember({"lsap", "none"}));
    add_pair_args(exact, exact_pair);
    add_cost_flags(exact, exact_costs);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate synthetic source/target pairs");
    int gen_n = 10, gen_count = 10;
    std::uint64_t gen_seed = 0;
    std::string out_dir;
    ged::SynthSpec gen_spec;
    gen->add_option("--n", gen_n, "source node count")->required();
    gen->add_option("--count", gen_count, "number of pairs");
    gen->add_option("--seed", gen_seed, "base seed");
    gen->add_option("--out", out_dir, "output directory")->required();
    gen->add_option("--node-alpha", gen_spec.node_alphabet, "node label alphabet size");
    gen->add_option("--edge-alpha", gen_spec.edge_alphabet, "edge label alphabet size");
    gen->add_option("--rho", gen_spec.rho, "edges per node");

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "batch benchmark over a pair directory");
    CostFlags bench_costs;
    std::string bench_dir, bench_out = "results.csv", methods_csv = "bipartite-edges,qap";
    std::string synth_sizes;
    int bench_count = 10, bench_threads = 1, bench_restarts = 1, bench_kmax = 40;
    std::uint64_t bench_seed = 0, bench_budget = 10'000'000;
    bench->add_option("--dir", bench_dir, "directory of pair####_{src,tgt}.gedg files");
    bench->add_option("--synth-n", synth_sizes,
                      "comma-separated node counts; generate pairs instead of reading --dir");
    bench->add_option("--count", bench_count, "pairs per synthetic size");
    bench->add_option("--methods", methods_csv,
                      "comma-separated: exact,bipartite-node,bipartite-edges,qap");
    bench->add_option("--out", bench_out, "CSV output path");
    bench->add_option("--threads", bench_threads, "worker threads");
    bench->add_option("--restarts", bench_restarts, "IPFP starts per pair");
    bench->add_option("--kmax", bench_kmax, "IPFP iteration cap");
    bench->add_option("--seed", bench_seed, "seed for synthetic pairs and restarts");
    bench->add_option("--budget", bench_budget, "exact search budget");
    add_cost_flags(bench, bench_costs);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bip->parsed()) {
            auto p1 = ged::load_graph_file(bip_pair.file1);
            auto p2 = ged::load_graph_file(bip_pair.file2);
            if (bip_pair.emit_idmap) {
                emit_idmap("g1", p1);
                emit_idmap("g2", p2);
            }
            auto strat = strategy == "node" ? ged::BagStrategy::NodeOnly
                                            : ged::BagStrategy::IncidentEdges;
            ged::BipartiteResult res =
                ged::bipartite_ged(p1.graph, p2.graph, bip_costs.model(), strat);
            std::cout << "value " << res.value << "\n";
            std::cout << "lsap_value " << res.lsap_value << "\n";
            if (bip_pair.emit_path) std::cout << ged::serialize_path(res.path);
        } else if (qap->parsed()) {
            auto p1 = ged::load_graph_file(qap_pair.file1);
            auto p2 = ged::load_graph_file(qap_pair.file2);
            if (qap_pair.emit_idmap) {
                emit_idmap("g1", p1);
                emit_idmap("g2", p2);
            }
            ged::QapGedOptions opts;
            opts.init = init == "random"  ? ged::QapInit::Random
                        : init == "bnode" ? ged::QapInit::BipartiteNode
                                          : ged::QapInit::BipartiteEdges;
            opts.restarts = restarts;
            opts.seed = seed;
            opts.ipfp.k_max = kmax;
            opts.ipfp.tol = tol;
            ged::QapGedResult res = ged::qap_ged(p1.graph, p2.graph, qap_costs.model(), opts);
            std::cout << "value " << res.value << "\n";
            std::cout << "iterations " << res.total_iterations << "\n";
            std::cout << "runs " << res.runs << "\n";
            if (qap_pair.emit_path) std::cout << ged::serialize_path(res.path);
        } else if (exact->parsed()) {
            auto p1 = ged::load_graph_file(exact_pair.file1);
            auto p2 = ged::load_graph_file(exact_pair.file2);
            if (exact_pair.emit_idmap) {
                emit_idmap("g1", p1);
                emit_idmap("g2", p2);
            }
            ged::ExactOptions opts;
            opts.max_expanded = budget;
            opts.lsap_heuristic = heuristic == "lsap";
            ged::ExactResult res = ged::astar_ged(p1.graph, p2.graph, exact_costs.model(), opts);
            std::cout << "value " << res.value << "\n";
            std::cout << "optimal " << (res.optimal ? 1 : 0) << "\n";
            std::cout << "expanded " << res.expanded << "\n";
            if (exact_pair.emit_path) std::cout << ged::serialize_path(res.path);
        } else if (gen->parsed()) {
            std::filesystem::create_directories(out_dir);
            gen_spec.n = gen_n;
            for (int id = 0; id < gen_count; ++id) {
                gen_spec.seed = gen_seed + static_cast<std::uint64_t>(id);
                auto [src, tgt] = ged::gen_synth_pair(gen_spec);
                std::ofstream(std::filesystem::path(out_dir) / ged::pair_src_name(id))
                    << ged::serialize_graph(src);
                std::ofstream(std::filesystem::path(out_dir) / ged::pair_tgt_name(id))
                    << ged::serialize_graph(tgt);
            }
            std::cout << "wrote " << gen_count << " pairs to " << out_dir << "\n";
        } else if (bench->parsed()) {
            ged::BenchOptions opts;
            opts.model = bench_costs.model();
            opts.threads = bench_threads;
            opts.qap.restarts = bench_restarts;
            opts.qap.ipfp.k_max = bench_kmax;
            opts.qap.seed = bench_seed;
            opts.exact.max_expanded = bench_budget;
            std::stringstream ms(methods_csv);
            std::string method;
            while (std::getline(ms, method, ','))
                if (!method.empty()) opts.methods.push_back(method);

            std::vector<ged::GraphPair> pairs;
            if (!synth_sizes.empty()) {
                std::stringstream ss(synth_sizes);
                std::string tok;
                int id = 0;
                while (std::getline(ss, tok, ',')) {
                    ged::SynthSpec spec;
                    spec.n = std::stoi(tok);
                    for (int c = 0; c < bench_count; ++c) {
                        spec.seed = bench_seed + static_cast<std::uint64_t>(id);
                        auto [src, tgt] = ged::gen_synth_pair(spec);
                        pairs.push_back({id++, std::move(src), std::move(tgt)});
                    }
                }
            } else if (!bench_dir.empty()) {
                std::vector<std::string> errors;
                pairs = ged::load_pair_dir(bench_dir, &errors);
                for (const std::string& e : errors) std::cerr << "skipped: " << e << "\n";
            } else {
                std::cerr << "error: bench needs --dir or --synth-n\n";
                return 1;
            }

            auto records = ged::run_benchmark(pairs, opts);
            std::ofstream out(bench_out);
            if (!out) throw std::runtime_error("cannot write " + bench_out);
            ged::write_csv(out, records);
            ged::print_summary(std::cout, ged::summarize(records));
            std::cout << "wrote " << records.size() << " records to " << bench_out << "\n";
        }
    } catch (const std::exception& e) {
        return fail(e);
    }
    return 0;
}
