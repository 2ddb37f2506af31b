#pragma once

#include <cstdint>
#include <optional>

#include "ged/bipartite.hpp"
#include "ged/edit_path.hpp"
#include "ged/eps_cost.hpp"

namespace ged {

/// Point in the assignment polytope, stored as a convex combination of
/// binary assignments (each a full (n+m)-permutation). Every iterate of
/// the fixed-point solver has this form, so the quadratic operator can
/// work on supports instead of dense vectors. The cost-free dummy-dummy
/// block is ignored by comparisons.
struct SparseEpsPoint {
    struct Component {
        std::vector<int> perm;
        double weight = 1.0;
    };
    std::vector<Component> comps;

    static SparseEpsPoint from_assignment(const EpsAssignment& a);
    static SparseEpsPoint from_permutation(std::vector<int> perm);

    bool binary() const { return comps.size() == 1; }

    /// Entry value x[row,col]: sum of weights of components mapping
    /// row to col.
    double value(int row, int col) const;

    /// Max absolute entry difference over the sub/rem/ins blocks
    /// (dummy-dummy entries are equivalence-class padding).
    double infinity_distance(const SparseEpsPoint& other, int n, int m) const;
};

/// GED as the quadratic program (1/2) x^T Delta x + c^T x over the
/// assignment polytope. The quadratic cost matrix is never materialized:
/// entries come from the edge sets on demand, and matrix-vector
/// products iterate over supports and adjacency lists.
class QapInstance {
public:
    QapInstance(const Graph& g1, const Graph& g2, const CostModel& m);

    const Graph& g1() const { return *g1_; }
    const Graph& g2() const { return *g2_; }
    const CostModel& model() const { return *model_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int side() const { return n_ + m_; }

    /// True when Delta = D + D^T is needed (directed pair); for
    /// undirected pairs D is already symmetric and Delta = D.
    bool symmetrize() const { return symmetrize_; }

    /// Node-operation costs with the structural forbidden mask: the
    /// linear term of the objective.
    const MaskedCostMatrix& linear_cost() const { return c_; }

    bool mapping_allowed(int row, int col) const { return !c_.forbidden(row, col); }

    /// Entry d[ik,jl] of the quadratic cost: the edge operation implied
    /// by mapping i->k and j->l simultaneously, or nullopt when either
    /// single mapping is forbidden. Zero on the diagonal and whenever
    /// neither (i,j) in E1 nor (k,l) in E2.
    std::optional<double> quad_cost(int i, int k, int j, int l) const;

    /// (1/2) x^T Delta x + c^T x. Throws std::invalid_argument if x has
    /// support on a forbidden entry.
    double objective(const SparseEpsPoint& x) const;
    double objective(const EpsAssignment& a) const;

    /// Gradient-cost matrix (x^T Delta + c^T) reshaped to the
    /// (n+m)x(n+m) grid with the structural mask, computed from
    /// supports and adjacency lists without materializing D.
    MaskedCostMatrix linearize(const SparseEpsPoint& x) const;

    double linear_term(const SparseEpsPoint& x) const;
    double linear_term(const std::vector<int>& perm) const;

private:
    double delta_entry(int i, int k, int j, int l) const;

    const Graph* g1_;
    const Graph* g2_;
    const CostModel* model_;
    int n_, m_;
    bool symmetrize_;
    MaskedCostMatrix c_;
};

struct IpfpOptions {
    int k_max = 40;
    double tol = 1e-9;
};

struct IpfpResult {
    EpsAssignment assignment;
    /// Objective at the returned binary assignment.
    double s_final = 0.0;
    /// Objective at the fixed point before any projection; equals
    /// s_final when the iterate was already binary.
    double s_continuous = 0.0;
    bool projected = false;
    int iterations = 0;
    /// S_k for k = 0..iterations, non-increasing.
    std::vector<double> trace;
};

/// Fixed-point minimization: repeat an LSAP projection of the
/// linearized cost and an exact quadratic line search on the segment to
/// the projected vertex, then map a non-binary fixed point to the
/// closest assignment (inner-product maximization).
IpfpResult ipfp_min(const QapInstance& inst, const SparseEpsPoint& x0,
                    const IpfpOptions& opts = {});

enum class QapInit {
    Random,
    BipartiteNode,
    BipartiteEdges,
};

struct QapGedOptions {
    QapInit init = QapInit::BipartiteEdges;
    int restarts = 1;
    std::uint64_t seed = 0;
    IpfpOptions ipfp;
};

struct QapGedResult {
    double value = 0.0;
    EpsAssignment assignment;
    RestrictedEditPath path;
    int total_iterations = 0;
    int runs = 0;
    /// Trace of the run that produced the best value.
    std::vector<double> best_trace;
    /// All traces, one per run, for descent diagnostics.
    std::vector<std::vector<double>> traces;
};

/// Runs ipfp_min from each initialization (the bipartite inits reuse
/// the bipartite assignment; further restarts draw seeded random
/// assignments) and keeps the best realizable value. The initial
/// assignment itself stays a candidate, so the result never exceeds the
/// bipartite bound it started from.
QapGedResult qap_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                     const QapGedOptions& opts = {});

/// Seeded random assignment: a uniform permutation of the augmented
/// sets with dummy-block violations repaired into removals/insertions.
EpsAssignment random_assignment(int n, int m, std::uint64_t seed);

}  // namespace ged
