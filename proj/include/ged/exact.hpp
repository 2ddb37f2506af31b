#pragma once

#include <cstdint>

#include "ged/edit_path.hpp"

namespace ged {

struct ExactOptions {
    /// Search stops after this many expanded nodes and returns the
    /// incumbent with optimal=false.
    std::uint64_t max_expanded = 10'000'000;
    /// Lower bound for the completion: an assignment of the undecided
    /// nodes with node-only costs (admissible since it drops edge
    /// interactions). Disable for plain branch-and-bound.
    bool lsap_heuristic = true;
};

struct ExactResult {
    double value = 0.0;
    EpsAssignment assignment;
    RestrictedEditPath path;
    bool optimal = false;
    std::uint64_t expanded = 0;
};

/// Best-first search over partial node mappings, V1 visited in
/// decreasing-degree order, children = every unused V2 node plus
/// removal. Exact when it completes within budget; otherwise the best
/// upper bound found.
ExactResult astar_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                      const ExactOptions& opts = {});

/// Ground-truth oracle: enumerates every injective partial mapping from
/// V1 into V2 and minimizes the induced path cost. Requires n, m <= 8;
/// pass a clamp_substitutions-processed model when the optimum over all
/// edit paths (not just restricted ones) is wanted.
double brute_force_ged(const Graph& g1, const Graph& g2, const CostModel& m);

}  // namespace ged
