#pragma once

#include "ged/edit_path.hpp"
#include "ged/eps_cost.hpp"

namespace ged {

/// Upper bound on the GED from the edit path induced by the optimal
/// node assignment. value is the true induced-path cost, not the LSAP
/// objective (lsap_value), and is never below the exact GED.
struct BipartiteResult {
    double value = 0.0;
    double lsap_value = 0.0;
    EpsAssignment assignment;
    RestrictedEditPath path;
};

BipartiteResult bipartite_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                              BagStrategy strategy);

}  // namespace ged
