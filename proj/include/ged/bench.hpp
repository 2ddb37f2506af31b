#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ged/cost_model.hpp"
#include "ged/exact.hpp"
#include "ged/graph.hpp"
#include "ged/qap.hpp"

namespace ged {

struct GraphPair {
    int id = 0;
    Graph g1, g2;
};

/// One (pair, method) measurement. e = d - exact when an exact value is
/// available for the pair, t is solver wall time in seconds (parsing
/// excluded), iters is IPFP-only, exact_hit says the method matched the
/// exact value.
struct BenchRecord {
    int pair_id = 0;
    std::string method;
    double d = 0.0;
    std::optional<double> e;
    double t_seconds = 0.0;
    std::optional<int> iters;
    std::optional<bool> exact_hit;
};

struct BenchOptions {
    /// Any of: exact, bipartite-node, bipartite-edges, qap.
    std::vector<std::string> methods;
    CostModel model;
    ExactOptions exact;
    QapGedOptions qap;
    int threads = 1;
};

struct MethodSummary {
    int count = 0;
    double avg_d = 0.0;
    std::optional<double> avg_e;
    double avg_t = 0.0;
    /// Fraction of pairs whose value matched the exact one, when exact
    /// values were computed.
    std::optional<double> exact_hit_rate;
};

/// Runs every requested method on every pair (pairs dispatched to a
/// small worker pool) and returns records sorted by pair id then by
/// the method order given in the options.
std::vector<BenchRecord> run_benchmark(const std::vector<GraphPair>& pairs,
                                       const BenchOptions& opts);

/// CSV schema: pair,method,d,e,t,iters,exact_hit with empty fields when
/// unavailable. d and e keep full double precision, t microseconds.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_csv(std::istream& in);

std::map<std::string, MethodSummary> summarize(const std::vector<BenchRecord>& records);
void print_summary(std::ostream& out, const std::map<std::string, MethodSummary>& summary);

/// Loads pair####_src.gedg / pair####_tgt.gedg files from a directory.
/// Malformed files are reported to errors and the pair is skipped.
std::vector<GraphPair> load_pair_dir(const std::string& dir, std::vector<std::string>* errors);

/// File names used by the generator and the loader.
std::string pair_src_name(int id);
std::string pair_tgt_name(int id);

}  // namespace ged
