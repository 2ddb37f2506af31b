#pragma once

#include <limits>
#include <random>
#include <vector>

#include "ged/cost_model.hpp"
#include "ged/edit_path.hpp"
#include "ged/graph.hpp"

namespace ged::testutil {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int bound) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng));
}

inline double pick_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Label node_label(int i) {
    static const char* alphabet[] = {"A", "B", "C", "D"};
    return alphabet[i % 4];
}

inline Label edge_label(int i) {
    static const char* alphabet[] = {"x", "y", "z"};
    return alphabet[i % 3];
}

inline Graph random_graph_sized(Rng& rng, int n, bool directed, double density = 0.4) {
    Graph g(directed);
    for (int i = 0; i < n; ++i) g.add_node(node_label(pick(rng, 3)));
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i + 1; j < n; ++j) {
            if (j == i) continue;
            if (pick_real(rng, 0.0, 1.0) < density) g.add_edge(i, j, edge_label(pick(rng, 2)));
        }
    return g;
}

inline Graph random_graph(Rng& rng, int max_n, bool directed, double density = 0.4) {
    return random_graph_sized(rng, pick(rng, max_n + 1), directed, density);
}

inline ConstantCosts random_costs(Rng& rng) {
    ConstantCosts k;
    k.cvs = pick_real(rng, 0.2, 2.5);
    k.cvd = pick_real(rng, 0.2, 2.5);
    k.cvi = pick_real(rng, 0.2, 2.5);
    k.ces = pick_real(rng, 0.2, 2.5);
    k.ced = pick_real(rng, 0.2, 2.5);
    k.cei = pick_real(rng, 0.2, 2.5);
    return k;
}

/// Label-pair cost table filled from the rng; zero-cost identity
/// substitutions preserved. Exercises non-constant models.
inline CostModel random_table_model(Rng& rng) {
    auto table2 = [&rng] {
        std::vector<std::vector<double>> t(4, std::vector<double>(4));
        for (auto& row : t)
            for (double& v : row) v = pick_real(rng, 0.1, 3.0);
        return t;
    };
    auto table1 = [&rng] {
        std::vector<double> t(4);
        for (double& v : t) v = pick_real(rng, 0.1, 3.0);
        return t;
    };
    auto index = [](const Label& l) {
        if (l.empty()) return 0;
        char c = l[0];
        if (c >= 'A' && c <= 'D') return c - 'A';
        if (c >= 'x' && c <= 'z') return c - 'x';
        return 0;
    };
    CostModel m;
    m.node_sub = [t = table2(), index](const Label& a, const Label& b) {
        return a == b ? 0.0 : t[index(a)][index(b)];
    };
    m.edge_sub = [t = table2(), index](const Label& a, const Label& b) {
        return a == b ? 0.0 : t[index(a)][index(b)];
    };
    m.node_del = [t = table1(), index](const Label& l) { return t[index(l)]; };
    m.node_ins = [t = table1(), index](const Label& l) { return t[index(l)]; };
    m.edge_del = [t = table1(), index](const Label& l) { return t[index(l)]; };
    m.edge_ins = [t = table1(), index](const Label& l) { return t[index(l)]; };
    return m;
}

/// Uniformish random partial injection V1 -> V2.
inline EpsAssignment random_eps(Rng& rng, int n, int m) {
    EpsAssignment a = EpsAssignment::empty(n, m);
    std::vector<int> targets(m);
    for (int k = 0; k < m; ++k) targets[k] = k;
    for (int k = m - 1; k > 0; --k) std::swap(targets[k], targets[pick(rng, k + 1)]);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i)
        if (next < targets.size() && pick(rng, 2) == 0) a.map[i] = targets[next++];
    return a;
}

/// Minimum path cost over every assignment: the reference for values
/// the spec derives by brute force. Independent of the search modules.
inline double min_over_assignments(const Graph& g1, const Graph& g2, const CostModel& m) {
    const int n = g1.node_count(), m2 = g2.node_count();
    EpsAssignment a = EpsAssignment::empty(n, m2);
    std::vector<char> used(m2, 0);
    double best = std::numeric_limits<double>::infinity();
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            best = std::min(best, path_cost(assignment_to_path(a, g1, g2), m, g1, g2));
            return;
        }
        a.map[i] = EpsAssignment::kRemoved;
        self(self, i + 1);
        for (int k = 0; k < m2; ++k) {
            if (used[k]) continue;
            used[k] = 1;
            a.map[i] = k;
            self(self, i + 1);
            a.map[i] = EpsAssignment::kRemoved;
            used[k] = 0;
        }
    };
    recurse(recurse, 0);
    return best;
}

/// Calls fn once per assignment.
template <typename Fn>
void for_each_assignment(int n, int m, Fn&& fn) {
    EpsAssignment a = EpsAssignment::empty(n, m);
    std::vector<char> used(m, 0);
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            fn(a);
            return;
        }
        a.map[i] = EpsAssignment::kRemoved;
        self(self, i + 1);
        for (int k = 0; k < m; ++k) {
            if (used[k]) continue;
            used[k] = 1;
            a.map[i] = k;
            self(self, i + 1);
            a.map[i] = EpsAssignment::kRemoved;
            used[k] = 0;
        }
    };
    recurse(recurse, 0);
}

inline Graph parse_text(const std::string& text) { return parse_graph(text).graph; }

}  // namespace ged::testutil
