#pragma once

#include "ged/cost_model.hpp"
#include "ged/graph.hpp"
#include "ged/lsap.hpp"

namespace ged {

/// What a node's bag of patterns contains when pricing the node LSAP.
enum class BagStrategy {
    NodeOnly,       // node label costs alone
    IncidentEdges,  // node costs plus an optimal assignment of the incident edge bags
};

/// Optimal assignment cost between two label bags under substitution /
/// removal / insertion costs: a nested LSAP over the augmented sets.
double bag_assignment_cost(const std::vector<Label>& from, const std::vector<Label>& to,
                           const std::function<double(const Label&, const Label&)>& sub,
                           const std::function<double(const Label&)>& del,
                           const std::function<double(const Label&)>& ins);

/// The (n+m)x(n+m) node assignment cost matrix in block form:
/// substitution block [i,k], removal block with node_del on the
/// diagonal and forbidden elsewhere, the symmetric insertion block, and
/// an all-zero dummy-dummy block. With IncidentEdges, substitution
/// entries add the optimal edge-bag assignment cost (for directed
/// graphs the out- and in-edge bags are matched separately and summed)
/// and removal/insertion entries add the cost of dropping/creating
/// every incident edge.
MaskedCostMatrix build_eps_cost_matrix(const Graph& g1, const Graph& g2, const CostModel& m,
                                       BagStrategy strategy);

}  // namespace ged
