#include "ged/qap.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace ged {

SparseEpsPoint SparseEpsPoint::from_assignment(const EpsAssignment& a) {
    return from_permutation(assignment_to_permutation(a));
}

SparseEpsPoint SparseEpsPoint::from_permutation(std::vector<int> perm) {
    SparseEpsPoint x;
    x.comps.push_back({std::move(perm), 1.0});
    return x;
}

double SparseEpsPoint::value(int row, int col) const {
    double v = 0.0;
    for (const Component& c : comps)
        if (c.perm[row] == col) v += c.weight;
    return v;
}

double SparseEpsPoint::infinity_distance(const SparseEpsPoint& other, int n, int m) const {
    // Collect the union of support cells outside the dummy-dummy block.
    auto cell_key = [n, m](int row, int col) {
        return static_cast<std::uint64_t>(row) * (n + m) + col;
    };
    std::unordered_map<std::uint64_t, double> diff;
    for (const Component& c : comps)
        for (int row = 0; row < static_cast<int>(c.perm.size()); ++row) {
            int col = c.perm[row];
            if (row >= n && col >= m) continue;
            diff[cell_key(row, col)] += c.weight;
        }
    for (const Component& c : other.comps)
        for (int row = 0; row < static_cast<int>(c.perm.size()); ++row) {
            int col = c.perm[row];
            if (row >= n && col >= m) continue;
            diff[cell_key(row, col)] -= c.weight;
        }
    double d = 0.0;
    for (const auto& [key, v] : diff) d = std::max(d, std::fabs(v));
    return d;
}

QapInstance::QapInstance(const Graph& g1, const Graph& g2, const CostModel& m)
    : g1_(&g1), g2_(&g2), model_(&m), n_(g1.node_count()), m_(g2.node_count()),
      symmetrize_(g1.directed() || g2.directed()),
      c_(build_eps_cost_matrix(g1, g2, m, BagStrategy::NodeOnly)) {}

std::optional<double> QapInstance::quad_cost(int i, int k, int j, int l) const {
    const int side = n_ + m_;
    if (i < 0 || i >= side || j < 0 || j >= side || k < 0 || k >= side || l < 0 || l >= side)
        throw std::out_of_range("quad_cost index out of range");
    if (!mapping_allowed(i, k) || !mapping_allowed(j, l)) return std::nullopt;

    const bool e1 = i < n_ && j < n_ && g1_->has_arc(i, j);
    const bool e2 = k < m_ && l < m_ && g2_->has_arc(k, l);
    if (e1 && e2) return model_->edge_sub(g1_->arc_label(i, j), g2_->arc_label(k, l));
    if (e1) return model_->edge_del(g1_->arc_label(i, j));
    if (e2) return model_->edge_ins(g2_->arc_label(k, l));
    return 0.0;
}

double QapInstance::delta_entry(int i, int k, int j, int l) const {
    auto d = quad_cost(i, k, j, l);
    if (!d) throw std::invalid_argument("support on a forbidden entry");
    if (!symmetrize_) return *d;
    auto dt = quad_cost(j, l, i, k);
    return *d + *dt;
}

double QapInstance::linear_term(const std::vector<int>& perm) const {
    double total = 0.0;
    for (int row = 0; row < static_cast<int>(perm.size()); ++row) {
        if (c_.forbidden(row, perm[row]))
            throw std::invalid_argument("support on a forbidden entry");
        total += c_.at(row, perm[row]);
    }
    return total;
}

double QapInstance::linear_term(const SparseEpsPoint& x) const {
    double total = 0.0;
    for (const auto& comp : x.comps) total += comp.weight * linear_term(comp.perm);
    return total;
}

double QapInstance::objective(const SparseEpsPoint& x) const {
    double quad = 0.0;
    for (const auto& ca : x.comps)
        for (const auto& cb : x.comps) {
            double pair_sum = 0.0;
            for (int i = 0; i < side(); ++i)
                for (int j = 0; j < side(); ++j)
                    pair_sum += delta_entry(i, ca.perm[i], j, cb.perm[j]);
            quad += ca.weight * cb.weight * pair_sum;
        }
    return 0.5 * quad + linear_term(x);
}

double QapInstance::objective(const EpsAssignment& a) const {
    return objective(SparseEpsPoint::from_assignment(a));
}

MaskedCostMatrix QapInstance::linearize(const SparseEpsPoint& x) const {
    const int side = n_ + m_;
    MaskedCostMatrix grad = c_;
    std::vector<double> row_add(side, 0.0), col_add(side, 0.0);

    // Per support cell (i,k) with weight w, the quadratic row
    // w * Delta[(i,k), .] decomposes into a constant over row j for
    // every arc (i,j) of G1 (removal cost, upgraded to substitution
    // where (k,l) is an arc of G2), a constant over column l for every
    // arc (k,l) of G2 (insertion cost, cancelled where the source edge
    // exists), and zero elsewhere.
    auto accumulate = [&](int i, int k, double w, bool transpose) {
        const Graph& h1 = *g1_;
        const Graph& h2 = *g2_;
        if (i < n_) {
            const auto& arcs1 = transpose ? h1.in_arcs(i) : h1.out_arcs(i);
            for (int ai : arcs1) {
                const Arc& a1 = h1.arcs()[ai];
                int j = transpose ? a1.src : a1.dst;
                double ced = model_->edge_del(a1.label);
                row_add[j] += w * ced;
                if (k < m_) {
                    const auto& arcs2 = transpose ? h2.in_arcs(k) : h2.out_arcs(k);
                    for (int bi : arcs2) {
                        const Arc& a2 = h2.arcs()[bi];
                        int l = transpose ? a2.src : a2.dst;
                        grad.add(j, l, w * (model_->edge_sub(a1.label, a2.label) - ced));
                    }
                }
            }
        }
        if (k < m_) {
            const auto& arcs2 = transpose ? h2.in_arcs(k) : h2.out_arcs(k);
            for (int bi : arcs2) {
                const Arc& a2 = h2.arcs()[bi];
                int l = transpose ? a2.src : a2.dst;
                double cei = model_->edge_ins(a2.label);
                col_add[l] += w * cei;
                if (i < n_) {
                    const auto& arcs1 = transpose ? h1.in_arcs(i) : h1.out_arcs(i);
                    for (int ai : arcs1) {
                        const Arc& a1 = h1.arcs()[ai];
                        int j = transpose ? a1.src : a1.dst;
                        grad.add(j, l, -w * cei);
                    }
                }
            }
        }
    };

    for (const auto& comp : x.comps) {
        for (int row = 0; row < side; ++row) {
            int col = comp.perm[row];
            if (c_.forbidden(row, col))
                throw std::invalid_argument("support on a forbidden entry");
            accumulate(row, col, comp.weight, false);
            if (symmetrize_) accumulate(row, col, comp.weight, true);
        }
    }

    for (int j = 0; j < side; ++j)
        for (int l = 0; l < side; ++l) {
            if (grad.forbidden(j, l)) continue;
            double extra = (j < n_ ? row_add[j] : 0.0) + (l < m_ ? col_add[l] : 0.0);
            if (extra != 0.0) grad.add(j, l, extra);
        }
    return grad;
}

namespace {

EpsAssignment assignment_from_point(const SparseEpsPoint& x, int n, int m) {
    return assignment_from_permutation(x.comps.front().perm, n, m);
}

}  // namespace

IpfpResult ipfp_min(const QapInstance& inst, const SparseEpsPoint& x0, const IpfpOptions& opts) {
    if (opts.k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    if (x0.comps.empty()) throw std::invalid_argument("empty starting point");

    SparseEpsPoint x = x0;
    double L = inst.linear_term(x);
    double S = inst.objective(x);  // throws on forbidden support

    IpfpResult result;
    result.trace.push_back(S);

    for (int k = 0; k < opts.k_max; ++k) {
        MaskedCostMatrix grad = inst.linearize(x);
        Assignment b = solve_lsap(grad);
        double r_b = b.total_cost;  // R(b) = (x^T Delta + c^T) b
        double l_b = inst.linear_term(b.perm);
        double s_b = inst.objective(SparseEpsPoint::from_permutation(b.perm));

        double alpha = r_b - 2.0 * S + L;
        double beta = s_b + S - r_b - L;

        if (alpha >= 0.0) {
            // The LSAP cannot improve the linearization: fixed point.
            ++result.iterations;
            result.trace.push_back(S);
            break;
        }

        SparseEpsPoint x_next;
        double s_next, l_next;
        if (beta <= 0.0 || -alpha / (2.0 * beta) >= 1.0) {
            x_next = SparseEpsPoint::from_permutation(b.perm);
            s_next = s_b;
            l_next = l_b;
        } else {
            double t0 = -alpha / (2.0 * beta);
            x_next = x;
            for (auto& comp : x_next.comps) comp.weight *= 1.0 - t0;
            x_next.comps.push_back({b.perm, t0});
            s_next = S - alpha * alpha / (4.0 * beta);
            l_next = L + t0 * (l_b - L);
        }

        double step = x_next.infinity_distance(x, inst.n(), inst.m());
        x = std::move(x_next);
        S = s_next;
        L = l_next;
        ++result.iterations;
        result.trace.push_back(S);
        if (step <= opts.tol) break;
    }

    result.s_continuous = S;
    if (x.binary()) {
        result.assignment = assignment_from_point(x, inst.n(), inst.m());
        result.s_final = inst.objective(result.assignment);
    } else {
        // Project to the closest assignment: maximize <x, b> over the
        // polytope vertices, i.e. minimize -x entrywise.
        MaskedCostMatrix proj(inst.side());
        for (int row = 0; row < inst.side(); ++row)
            for (int col = 0; col < inst.side(); ++col) {
                if (inst.linear_cost().forbidden(row, col)) {
                    proj.forbid(row, col);
                    continue;
                }
                proj.set(row, col, -x.value(row, col));
            }
        Assignment nearest = solve_lsap(proj);
        result.assignment = assignment_from_permutation(nearest.perm, inst.n(), inst.m());
        result.s_final = inst.objective(result.assignment);
        result.projected = true;
    }
    return result;
}

EpsAssignment random_assignment(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n + m);
    for (int i = 0; i < n + m; ++i) perm[i] = i;
    for (int i = n + m - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(perm[i], perm[pick(rng)]);
    }
    // Keep the real->real fragment as substitutions; every dummy-block
    // violation collapses into a removal or an insertion.
    EpsAssignment a = EpsAssignment::empty(n, m);
    for (int i = 0; i < n; ++i)
        if (perm[i] < m) a.map[i] = perm[i];
    return a;
}

QapGedResult qap_ged(const Graph& g1, const Graph& g2, const CostModel& m,
                     const QapGedOptions& opts) {
    if (opts.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (g1.directed() != g2.directed())
        throw std::invalid_argument("graphs must share directedness");

    QapInstance inst(g1, g2, m);

    std::vector<EpsAssignment> inits;
    if (opts.init == QapInit::BipartiteNode || opts.init == QapInit::BipartiteEdges) {
        BagStrategy strategy = opts.init == QapInit::BipartiteNode ? BagStrategy::NodeOnly
                                                                   : BagStrategy::IncidentEdges;
        inits.push_back(bipartite_ged(g1, g2, m, strategy).assignment);
        for (int r = 1; r < opts.restarts; ++r)
            inits.push_back(random_assignment(inst.n(), inst.m(), opts.seed + r));
    } else {
        for (int r = 0; r < opts.restarts; ++r)
            inits.push_back(random_assignment(inst.n(), inst.m(), opts.seed + r));
    }

    QapGedResult best;
    bool have_best = false;
    for (const EpsAssignment& init : inits) {
        IpfpResult run = ipfp_min(inst, SparseEpsPoint::from_assignment(init), opts.ipfp);
        best.total_iterations += run.iterations;
        ++best.runs;
        best.traces.push_back(run.trace);

        // The start vertex is itself a realizable candidate; a
        // projection is allowed to land above it.
        double s_init = run.trace.front();
        const EpsAssignment& pick = run.s_final <= s_init ? run.assignment : init;
        double s_pick = std::min(run.s_final, s_init);
        if (!have_best || s_pick < best.value) {
            best.value = s_pick;
            best.assignment = pick;
            best.best_trace = run.trace;
            have_best = true;
        }
    }

    best.path = assignment_to_path(best.assignment, g1, g2);
    best.value = path_cost(best.path, m, g1, g2);
    return best;
}

}  // namespace ged
