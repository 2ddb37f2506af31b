#pragma once

#include <cstdint>
#include <utility>

#include "ged/graph.hpp"

namespace ged {

/// Synthetic pair generation: random undirected source graphs with a
/// fixed edge/node ratio, targets derived by removing one node (with
/// its incident edges) and relabeling one other node. Defaults mimic
/// molecular graphs: node alphabet {C,N,O}, edge alphabet {1,2}, 1.05
/// edges per node.
struct SynthSpec {
    int n = 10;
    int node_alphabet = 3;  // >= 2, a relabel needs a different label
    int edge_alphabet = 2;  // >= 1
    double rho = 1.05;      // edges per node, count rounded
    std::uint64_t seed = 0;
};

/// (source, target); deterministic in the seed. Requires n >= 3.
std::pair<Graph, Graph> gen_synth_pair(const SynthSpec& spec);

Label synth_node_label(int index);
Label synth_edge_label(int index);

}  // namespace ged
