#include "ged/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ged {

Label synth_node_label(int index) {
    static const char* named[] = {"C", "N", "O", "S", "P", "F", "Cl", "Br", "I", "Si"};
    if (index < 10) return named[index];
    return "A" + std::to_string(index);
}

Label synth_edge_label(int index) { return std::to_string(index + 1); }

std::pair<Graph, Graph> gen_synth_pair(const SynthSpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("gen_synth_pair: n must be at least 3");
    if (spec.node_alphabet < 2)
        throw std::invalid_argument("gen_synth_pair: node alphabet needs at least 2 labels");
    if (spec.edge_alphabet < 1)
        throw std::invalid_argument("gen_synth_pair: edge alphabet needs at least 1 label");

    std::mt19937_64 rng(spec.seed);
    auto pick = [&rng](int bound) {
        return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng));
    };

    Graph source(false);
    for (int i = 0; i < spec.n; ++i) source.add_node(synth_node_label(pick(spec.node_alphabet)));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) pairs.emplace_back(i, j);
    for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
        std::swap(pairs[i], pairs[pick(i + 1)]);
    int edge_count = std::min(static_cast<int>(std::lround(spec.rho * spec.n)),
                              static_cast<int>(pairs.size()));
    for (int e = 0; e < edge_count; ++e)
        source.add_edge(pairs[e].first, pairs[e].second, synth_edge_label(pick(spec.edge_alphabet)));

    // Target: drop one node with its incident edges, relabel another.
    int removed = pick(spec.n);
    int relabeled = pick(spec.n - 1);
    if (relabeled >= removed) ++relabeled;

    Graph target(false);
    std::vector<int> dense(spec.n, -1);
    for (int i = 0; i < spec.n; ++i) {
        if (i == removed) continue;
        Label label = source.node_label(i);
        if (i == relabeled) {
            int shift = 1 + pick(spec.node_alphabet - 1);
            int current = 0;
            while (synth_node_label(current) != label) ++current;
            label = synth_node_label((current + shift) % spec.node_alphabet);
        }
        dense[i] = target.add_node(label);
    }
    for (const Arc& e : source.edges())
        if (e.src != removed && e.dst != removed)
            target.add_edge(dense[e.src], dense[e.dst], e.label);

    return {std::move(source), std::move(target)};
}

}  // namespace ged
