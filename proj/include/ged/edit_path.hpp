#pragma once

#include <string>
#include <vector>

#include "ged/cost_model.hpp"
#include "ged/graph.hpp"

namespace ged {

/// Bijection on the augmented node sets, stored as its equivalence-class
/// representative: the partial injective mapping from a subset of V1
/// into V2. Removed and inserted nodes are exactly the complements; the
/// cost-free dummy-dummy completion block is never stored.
struct EpsAssignment {
    static constexpr int kRemoved = -1;

    int n = 0;  // |V1|
    int m = 0;  // |V2|
    /// map[i] = target node in V2, or kRemoved.
    std::vector<int> map;

    static EpsAssignment empty(int n, int m) {
        EpsAssignment a;
        a.n = n;
        a.m = m;
        a.map.assign(n, kRemoved);
        return a;
    }
    static EpsAssignment identity(int n) {
        EpsAssignment a = empty(n, n);
        for (int i = 0; i < n; ++i) a.map[i] = i;
        return a;
    }

    bool mapped(int i) const { return map[i] != kRemoved; }
    std::vector<int> removed() const;
    std::vector<int> inserted() const;
    /// Inverse lookup: V1 node mapped onto k, or kRemoved if k is inserted.
    int preimage(int k) const;

    /// Empty list iff map is injective with entries in [0,m).
    std::vector<std::string> validate() const;

    bool operator==(const EpsAssignment&) const = default;
};

/// Reads the sub/rem/ins blocks of a full (n+m)-permutation: row i<n to
/// column k<m is a substitution, row i to column m+i a removal; any
/// other pairing of a real row is rejected.
EpsAssignment assignment_from_permutation(const std::vector<int>& perm, int n, int m);

/// Full (n+m)-permutation for the class representative, with the
/// dummy-dummy block completed in ascending order.
std::vector<int> assignment_to_permutation(const EpsAssignment& a);

struct NodeSubOp {
    int from = 0, to = 0;
    friend bool operator==(const NodeSubOp&, const NodeSubOp&) = default;
};
struct EdgeRef {
    int src = 0, dst = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};
struct EdgeSubOp {
    EdgeRef from, to;
    friend bool operator==(const EdgeSubOp&, const EdgeSubOp&) = default;
};

/// Restricted edit path in canonical (R,S,I) order: edge removals, node
/// removals, node substitutions, edge substitutions, node insertions,
/// edge insertions. Edge operations on undirected graphs are recorded
/// once per undirected edge with src<dst on the source side, which
/// makes the 1/2 arc-pair factor structural. Zero-cost identity
/// substitutions are stored explicitly for every mapped node and edge.
struct RestrictedEditPath {
    std::vector<EdgeRef> edge_removals;   // edges of G1
    std::vector<int> node_removals;       // nodes of G1
    std::vector<NodeSubOp> node_subs;     // V1 -> V2
    std::vector<EdgeSubOp> edge_subs;     // E1 -> E2
    std::vector<int> node_inserts;        // nodes of G2
    std::vector<EdgeRef> edge_inserts;    // edges of G2

    bool operator==(const RestrictedEditPath&) const = default;
};

/// Expands an assignment into the restricted edit path it induces:
/// edges with both endpoints substituted and a matching target edge are
/// substituted, the rest of E1 is removed, the rest of E2 inserted.
RestrictedEditPath assignment_to_path(const EpsAssignment& a, const Graph& g1, const Graph& g2);

/// Inverse of assignment_to_path. Throws std::invalid_argument if the
/// node operations do not describe a partial injection.
EpsAssignment path_to_assignment(const RestrictedEditPath& p);

/// gamma(P): the sum of all operation costs, each undirected edge
/// counted once.
double path_cost(const RestrictedEditPath& p, const CostModel& m, const Graph& g1,
                 const Graph& g2);

/// Cardinals of the path for the constant-cost formulas; vf/ef count
/// substitutions with non-zero cost under the given model.
PathCardinals path_cardinals(const RestrictedEditPath& p, const CostModel& m, const Graph& g1,
                             const Graph& g2);

/// Simulates the operation sequence on g1 and reports every violation:
/// bad references, edges removed after their endpoints, duplicated or
/// self-loop insertions, independence and restrictedness violations,
/// and any mismatch between the final graph and g2.
std::vector<std::string> validate_path(const RestrictedEditPath& p, const Graph& g1,
                                       const Graph& g2);

/// One op per line in (R,S,I) order:
/// re i j / rn i / sn i k / se i j k l / in k / ie k l.
std::string serialize_path(const RestrictedEditPath& p);

}  // namespace ged
