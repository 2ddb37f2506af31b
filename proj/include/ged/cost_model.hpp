#pragma once

#include <functional>

#include "ged/graph.hpp"

namespace ged {

/// The six elementary edit-cost functions. All costs are finite
/// non-negative reals; substituting a label by itself must cost 0.
/// Forbidden assignments are represented by masks downstream, never by
/// large sentinel costs.
struct CostModel {
    std::function<double(const Label&, const Label&)> node_sub;
    std::function<double(const Label&)> node_del;
    std::function<double(const Label&)> node_ins;
    std::function<double(const Label&, const Label&)> edge_sub;
    std::function<double(const Label&)> edge_del;
    std::function<double(const Label&)> edge_ins;
};

/// Constant per-operation costs, applied when labels differ
/// (substitutions) or unconditionally (removals/insertions).
/// Substitution of equal labels still costs 0.
struct ConstantCosts {
    double cvs = 1.0;
    double cvd = 1.0;
    double cvi = 1.0;
    double ces = 1.0;
    double ced = 1.0;
    double cei = 1.0;
};

CostModel make_constant_model(const ConstantCosts& k);

/// Returns a model with node_sub'(a,b) = min(node_sub(a,b),
/// node_del(a)+node_ins(b)) and the analogous edge clamp. With clamped
/// substitutions the optimum over restricted edit paths equals the
/// optimum over all independent edit paths.
CostModel clamp_substitutions(const CostModel& m);

/// Cardinals describing a restricted edit path under a constant model:
/// sizes of the original and preserved node/edge sets on both sides,
/// plus the numbers of non-zero-cost node (vf) and edge (ef)
/// substitutions. Edge counts use the graph's edge convention (arcs
/// when directed, unordered pairs when undirected).
struct PathCardinals {
    int v1 = 0, v1_hat = 0;
    int e1 = 0, e1_hat = 0;
    int vf = 0, ef = 0;
    int v2 = 0, v2_hat = 0;
    int e2 = 0, e2_hat = 0;
};

/// (|V1|-|V1^|)cvd + (|E1|-|E1^|)ced + vf*cvs + ef*ces
/// + (|V2|-|V2^|)cvi + (|E2|-|E2^|)cei.
/// Throws std::invalid_argument on inconsistent cardinals.
double path_cost_constant(const PathCardinals& c, const ConstantCosts& k);

/// The quantity whose maximization is equivalent to minimizing the
/// constant-cost path cost:
/// |V1^|(cvd+cvi) + |E1^|(ced+cei) - vf*cvs - ef*ces.
double merit_constant(const PathCardinals& c, const ConstantCosts& k);

}  // namespace ged
