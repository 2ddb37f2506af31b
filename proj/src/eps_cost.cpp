#include "ged/eps_cost.hpp"

namespace ged {

double bag_assignment_cost(const std::vector<Label>& from, const std::vector<Label>& to,
                           const std::function<double(const Label&, const Label&)>& sub,
                           const std::function<double(const Label&)>& del,
                           const std::function<double(const Label&)>& ins) {
    const int a = static_cast<int>(from.size());
    const int b = static_cast<int>(to.size());
    if (a == 0 && b == 0) return 0.0;
    if (a == 0) {
        double total = 0.0;
        for (const Label& l : to) total += ins(l);
        return total;
    }
    if (b == 0) {
        double total = 0.0;
        for (const Label& l : from) total += del(l);
        return total;
    }

    MaskedCostMatrix c(a + b);
    for (int i = 0; i < a; ++i)
        for (int k = 0; k < b; ++k) c.set(i, k, sub(from[i], to[k]));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            if (j == i)
                c.set(i, b + j, del(from[i]));
            else
                c.forbid(i, b + j);
        }
    for (int k = 0; k < b; ++k)
        for (int l = 0; l < b; ++l) {
            if (k == l)
                c.set(a + k, l, ins(to[k]));
            else
                c.forbid(a + k, l);
        }
    return solve_lsap(c).total_cost;
}

namespace {

std::vector<Label> out_bag(const Graph& g, int node) {
    std::vector<Label> bag;
    for (int ai : g.out_arcs(node)) bag.push_back(g.arcs()[ai].label);
    return bag;
}

std::vector<Label> in_bag(const Graph& g, int node) {
    std::vector<Label> bag;
    for (int ai : g.in_arcs(node)) bag.push_back(g.arcs()[ai].label);
    return bag;
}

double bag_total(const std::vector<Label>& bag, const std::function<double(const Label&)>& f) {
    double total = 0.0;
    for (const Label& l : bag) total += f(l);
    return total;
}

}  // namespace

MaskedCostMatrix build_eps_cost_matrix(const Graph& g1, const Graph& g2, const CostModel& m,
                                       BagStrategy strategy) {
    const int n = g1.node_count(), mm = g2.node_count();
    const bool edges = strategy == BagStrategy::IncidentEdges;
    // For undirected graphs the out-arcs already list every incident
    // edge exactly once; a separate in-bag pass would double them.
    const bool use_in_bags = g1.directed() || g2.directed();

    MaskedCostMatrix c(n + mm);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < mm; ++k) {
            double cost = m.node_sub(g1.node_label(i), g2.node_label(k));
            if (edges) {
                cost += bag_assignment_cost(out_bag(g1, i), out_bag(g2, k), m.edge_sub,
                                            m.edge_del, m.edge_ins);
                if (use_in_bags)
                    cost += bag_assignment_cost(in_bag(g1, i), in_bag(g2, k), m.edge_sub,
                                                m.edge_del, m.edge_ins);
            }
            c.set(i, k, cost);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                c.forbid(i, mm + j);
                continue;
            }
            double cost = m.node_del(g1.node_label(i));
            if (edges) {
                cost += bag_total(out_bag(g1, i), m.edge_del);
                if (use_in_bags) cost += bag_total(in_bag(g1, i), m.edge_del);
            }
            c.set(i, mm + i, cost);
        }
    }
    for (int k = 0; k < mm; ++k) {
        for (int l = 0; l < mm; ++l) {
            if (l != k) {
                c.forbid(n + k, l);
                continue;
            }
            double cost = m.node_ins(g2.node_label(k));
            if (edges) {
                cost += bag_total(out_bag(g2, k), m.edge_ins);
                if (use_in_bags) cost += bag_total(in_bag(g2, k), m.edge_ins);
            }
            c.set(n + k, k, cost);
        }
    }
    // Dummy-dummy block stays zero and unforbidden.
    return c;
}

}  // namespace ged
