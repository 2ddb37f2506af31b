#include "ged/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "ged/lsap.hpp"

namespace ged {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SearchState {
    int parent = -1;
    int choice = EpsAssignment::kRemoved;  // decision for order[depth-1]
    int depth = 0;
    double g = 0.0;
};

class AstarSearch {
public:
    AstarSearch(const Graph& g1, const Graph& g2, const CostModel& m, const ExactOptions& opts)
        : g1_(g1), g2_(g2), model_(m), opts_(opts), n_(g1.node_count()), m2_(g2.node_count()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g1.degree(a) > g1.degree(b); });
    }

    ExactResult run() {
        pool_.push_back({});
        push(0, opts_.lsap_heuristic ? heuristic(mapping_of(0), 0) : 0.0);

        double best = kInf;
        std::vector<int> best_mapping;
        std::uint64_t expanded = 0;
        int frontier = 0;

        while (!open_.empty()) {
            auto [f, seq, idx] = open_.top();
            open_.pop();
            if (f >= best) break;  // nothing left can improve the incumbent
            if (expanded >= opts_.max_expanded)
                return finish(best, best_mapping, expanded, false, idx);
            ++expanded;
            frontier = idx;

            const int depth = pool_[idx].depth;
            const int u = order_[depth];
            std::vector<int> mapping = mapping_of(idx);
            std::vector<char> used(m2_, 0);
            for (int q = 0; q < depth; ++q)
                if (mapping[order_[q]] != EpsAssignment::kRemoved) used[mapping[order_[q]]] = 1;

            for (int v = EpsAssignment::kRemoved; v < m2_; ++v) {
                if (v >= 0 && used[v]) continue;
                double g = pool_[idx].g + extend_cost(mapping, depth, v);
                mapping[u] = v;
                if (depth + 1 == n_) {
                    double total = g + completion_cost(mapping);
                    if (total < best) {
                        best = total;
                        best_mapping = mapping;
                    }
                } else {
                    double h = opts_.lsap_heuristic ? heuristic(mapping, depth + 1) : 0.0;
                    if (g + h < best) {
                        pool_.push_back({idx, v, depth + 1, g});
                        push(static_cast<int>(pool_.size()) - 1, h);
                    }
                }
                mapping[u] = EpsAssignment::kRemoved;
            }
        }
        return finish(best, best_mapping, expanded, true, frontier);
    }

private:
    using QueueEntry = std::tuple<double, std::uint64_t, int>;

    void push(int idx, double h) {
        // Deeper states first among equal f, then FIFO.
        std::uint64_t seq = (static_cast<std::uint64_t>(n_ - pool_[idx].depth) << 48) | seq_++;
        open_.push({pool_[idx].g + h, seq, idx});
    }

    std::vector<int> mapping_of(int idx) const {
        std::vector<int> mapping(n_, EpsAssignment::kRemoved);
        for (int cur = idx; cur > 0; cur = pool_[cur].parent)
            mapping[order_[pool_[cur].depth - 1]] = pool_[cur].choice;
        return mapping;
    }

    // Cost of deciding order_[depth] -> choice given earlier decisions:
    // the node operation plus every edge operation that becomes
    // determined by this decision.
    double extend_cost(const std::vector<int>& mapping, int depth, int choice) {
        int u = order_[depth];
        double cost = choice == EpsAssignment::kRemoved
                          ? model_.node_del(g1_.node_label(u))
                          : model_.node_sub(g1_.node_label(u), g2_.node_label(choice));
        for (int q = 0; q < depth; ++q) {
            int w = order_[q];
            int x = mapping[w];
            cost += arc_pair_cost(u, w, choice, x);
            if (g1_.directed()) cost += arc_pair_cost(w, u, x, choice);
        }
        return cost;
    }

    // Edge operation implied by the simultaneous decisions u->v, w->x;
    // for undirected graphs one call covers the unordered pair {u,w}.
    double arc_pair_cost(int u, int w, int v, int x) {
        bool e1 = g1_.has_arc(u, w);
        bool e2 = v != EpsAssignment::kRemoved && x != EpsAssignment::kRemoved &&
                  g2_.has_arc(v, x);
        if (e1 && e2) return model_.edge_sub(g1_.arc_label(u, w), g2_.arc_label(v, x));
        if (e1) return model_.edge_del(g1_.arc_label(u, w));
        if (e2) return model_.edge_ins(g2_.arc_label(v, x));
        return 0.0;
    }

    // All V1 nodes decided: insert the unused V2 nodes and every G2
    // edge touching them.
    double completion_cost(const std::vector<int>& mapping) const {
        std::vector<char> used(m2_, 0);
        for (int i = 0; i < n_; ++i)
            if (mapping[i] != EpsAssignment::kRemoved) used[mapping[i]] = 1;
        double cost = 0.0;
        for (int k = 0; k < m2_; ++k)
            if (!used[k]) cost += model_.node_ins(g2_.node_label(k));
        for (const Arc& e : g2_.edges())
            if (!used[e.src] || !used[e.dst]) cost += model_.edge_ins(e.label);
        return cost;
    }

    // Node-only assignment bound over the undecided V1 nodes and unused
    // V2 nodes; admissible since it relaxes every edge interaction.
    double heuristic(const std::vector<int>& mapping, int depth) const {
        std::vector<int> rest(order_.begin() + depth, order_.end());
        std::vector<char> used(m2_, 0);
        for (int q = 0; q < depth; ++q)
            if (mapping[order_[q]] != EpsAssignment::kRemoved) used[mapping[order_[q]]] = 1;
        std::vector<int> free2;
        for (int k = 0; k < m2_; ++k)
            if (!used[k]) free2.push_back(k);

        const int a = static_cast<int>(rest.size());
        const int b = static_cast<int>(free2.size());
        if (a + b == 0) return 0.0;
        MaskedCostMatrix c(a + b);
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < b; ++k)
                c.set(i, k, model_.node_sub(g1_.node_label(rest[i]), g2_.node_label(free2[k])));
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) {
                if (j == i)
                    c.set(i, b + i, model_.node_del(g1_.node_label(rest[i])));
                else
                    c.forbid(i, b + j);
            }
        for (int k = 0; k < b; ++k)
            for (int l = 0; l < b; ++l) {
                if (k == l)
                    c.set(a + k, k, model_.node_ins(g2_.node_label(free2[k])));
                else
                    c.forbid(a + k, l);
            }
        return solve_lsap(c).total_cost;
    }

    ExactResult finish(double best, const std::vector<int>& best_mapping, std::uint64_t expanded,
                       bool exhausted, int frontier_idx) const {
        ExactResult out;
        out.expanded = expanded;
        EpsAssignment a = EpsAssignment::empty(n_, m2_);
        if (best < kInf) {
            a.map = best_mapping;
            out.optimal = exhausted;
        } else {
            // Budget ran out before any leaf: the last frontier prefix
            // completed with removals/insertions is a valid upper bound.
            a.map = mapping_of(frontier_idx);
            out.optimal = false;
        }
        out.assignment = a;
        out.path = assignment_to_path(a, g1_, g2_);
        out.value = path_cost(out.path, model_, g1_, g2_);
        return out;
    }

    const Graph& g1_;
    const Graph& g2_;
    const CostModel& model_;
    ExactOptions opts_;
    int n_, m2_;
    std::vector<int> order_;
    std::vector<SearchState> pool_;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open_;
    std::uint64_t seq_ = 0;
};

}  // namespace

ExactResult astar_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                      const ExactOptions& opts) {
    if (g1.directed() != g2.directed())
        throw std::invalid_argument("graphs must share directedness");
    if (g1.node_count() == 0) {
        ExactResult out;
        out.assignment = EpsAssignment::empty(0, g2.node_count());
        out.path = assignment_to_path(out.assignment, g1, g2);
        out.value = path_cost(out.path, m, g1, g2);
        out.optimal = true;
        return out;
    }
    return AstarSearch(g1, g2, m, opts).run();
}

double brute_force_ged(const Graph& g1, const Graph& g2, const CostModel& m) {
    const int n = g1.node_count(), m2 = g2.node_count();
    if (n > 8 || m2 > 8) throw std::invalid_argument("brute_force_ged: graphs too large");
    if (g1.directed() != g2.directed())
        throw std::invalid_argument("graphs must share directedness");

    EpsAssignment a = EpsAssignment::empty(n, m2);
    double best = kInf;
    std::vector<char> used(m2, 0);
    // Depth-first over all partial injections: each V1 node maps to an
    // unused V2 node or is removed.
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

}  // namespace ged
