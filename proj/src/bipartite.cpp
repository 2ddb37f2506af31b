#include "ged/bipartite.hpp"

namespace ged {

BipartiteResult bipartite_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                              BagStrategy strategy) {
    if (g1.directed() != g2.directed())
        throw std::invalid_argument("graphs must share directedness");

    MaskedCostMatrix c = build_eps_cost_matrix(g1, g2, m, strategy);
    Assignment lsap = solve_lsap(c);  // the eps structure is always feasible

    BipartiteResult result;
    result.lsap_value = lsap.total_cost;
    result.assignment = assignment_from_permutation(lsap.perm, g1.node_count(), g2.node_count());
    result.path = assignment_to_path(result.assignment, g1, g2);
    result.value = path_cost(result.path, m, g1, g2);
    return result;
}

}  // namespace ged
