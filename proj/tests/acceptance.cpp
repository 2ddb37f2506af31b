// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Random instances are seeded so reruns are comparable.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "ged/bipartite.hpp"
#include "ged/exact.hpp"
#include "ged/qap.hpp"
#include "ged/synth.hpp"
#include "test_util.hpp"

using namespace ged;
namespace tu = ged::testutil;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// ---- criterion 1: LSAP solver equals the exhaustive oracle ----
void criterion_lsap() {
    tu::Rng rng(11);
    auto start = Clock::now();
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        bool integer_costs = trial % 2 == 0;
        MaskedCostMatrix c(7);
        std::vector<int> safe(7);
        for (int i = 0; i < 7; ++i) safe[i] = i;
        for (int i = 6; i > 0; --i) std::swap(safe[i], safe[tu::pick(rng, i + 1)]);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                c.set(i, j, integer_costs ? tu::pick(rng, 25) : tu::pick_real(rng, 0.0, 12.0));
                if (j != safe[i] && tu::pick_real(rng, 0.0, 1.0) < 0.2) c.forbid(i, j);
            }
        Assignment fast = solve_lsap(c);
        Assignment slow = brute_force_lsap(c);
        bool ok = integer_costs ? fast.total_cost == slow.total_cost
                                : std::fabs(fast.total_cost - slow.total_cost) <= 1e-9;
        if (!ok) ++bad;
    }
    double t = elapsed(start);
    report(1, bad == 0 && t < 1.0,
           fmt("lsap vs brute force on 200 masked 7x7 instances, %d mismatches, %.3f s", bad, t));
}

// ---- criterion 2: objective equals induced path cost ----
void criterion_qap_path_theorem() {
    tu::Rng rng(22);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        bool directed = trial % 2 == 0;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);
        CostModel m = trial % 3 == 0 ? tu::random_table_model(rng)
                                     : make_constant_model(tu::random_costs(rng));
        QapInstance inst(g1, g2, m);
        EpsAssignment x = tu::random_eps(rng, g1.node_count(), g2.node_count());
        double s = inst.objective(x);
        double gamma = path_cost(assignment_to_path(x, g1, g2), m, g1, g2);
        if (std::fabs(s - gamma) > 1e-9) ++bad;
    }
    report(2, bad == 0, fmt("quadratic objective vs path cost on 500 triples, %d mismatches", bad));
}

// ---- criterion 3: quadratic cost symmetry on undirected pairs ----
void criterion_symmetry() {
    tu::Rng rng(33);
    long long violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Graph g1 = tu::random_graph(rng, 5, false);
        Graph g2 = tu::random_graph(rng, 5, false);
        CostModel m = make_constant_model(tu::random_costs(rng));
        QapInstance inst(g1, g2, m);
        const int side = inst.side();
        for (int i = 0; i < side; ++i)
            for (int k = 0; k < side; ++k)
                for (int j = 0; j < side; ++j)
                    for (int l = 0; l < side; ++l) {
                        auto d = inst.quad_cost(i, k, j, l);
                        auto dt = inst.quad_cost(j, l, i, k);
                        if (d.has_value() != dt.has_value() || (d && *d != *dt)) ++violations;
                    }
    }
    report(3, violations == 0,
           fmt("exhaustive d[ik,jl]=d[jl,ik] scan on 50 undirected pairs, %lld violations",
               violations));
}

// ---- criterion 4: assignment/path bijection round trip ----
void criterion_bijection() {
    tu::Rng rng(44);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        bool directed = trial % 2 == 0;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);
        EpsAssignment a = tu::random_eps(rng, g1.node_count(), g2.node_count());
        RestrictedEditPath p = assignment_to_path(a, g1, g2);
        if (!(path_to_assignment(p) == a) || !(assignment_to_path(path_to_assignment(p), g1, g2) == p))
            ++bad;
    }
    report(4, bad == 0, fmt("assignment<->path round trip on 500 assignments, %d mismatches", bad));
}

// ---- criteria 5 and 6: ordering bounds and descent traces ----
void criterion_bounds_and_descent() {
    tu::Rng rng(55);
    auto start = Clock::now();
    int bad_bounds = 0, bad_astar = 0;
    long long trace_violations = 0;
    CostModel clamped = clamp_substitutions(make_constant_model(ConstantCosts{}));
    for (int trial = 0; trial < 300; ++trial) {
        bool directed = trial % 2 == 0;
        Graph g1 = tu::random_graph(rng, 6, directed);
        Graph g2 = tu::random_graph(rng, 6, directed);

        double exact = brute_force_ged(g1, g2, clamped);
        ExactResult astar = astar_ged(g1, g2, clamped);
        if (!astar.optimal || std::fabs(astar.value - exact) > 1e-9) ++bad_astar;

        BipartiteResult bip = bipartite_ged(g1, g2, clamped, BagStrategy::IncidentEdges);
        QapGedOptions opts;
        opts.init = QapInit::BipartiteEdges;
        QapGedResult qap = qap_ged(g1, g2, clamped, opts);

        if (!(exact - 1e-9 <= qap.value && qap.value <= bip.value + 1e-9)) ++bad_bounds;
        for (const auto& trace : qap.traces)
            for (std::size_t k = 1; k < trace.size(); ++k)
                if (trace[k] > trace[k - 1] + 1e-12) ++trace_violations;
    }
    double t = elapsed(start);
    report(5, bad_bounds == 0 && bad_astar == 0 && t < 60.0,
           fmt("exact <= qap <= bipartite and astar = brute force on 300 pairs, "
               "%d bound / %d search mismatches, %.1f s",
               bad_bounds, bad_astar, t));
    report(6, trace_violations == 0,
           fmt("IPFP descent traces from criterion-5 runs, %lld increases", trace_violations));
}

// ---- criterion 7: exact-hit rate on synthetic pairs ----
void criterion_exact_hit() {
    auto start = Clock::now();
    int hits = 0;
    const int pairs = 100;
    CostModel clamped = clamp_substitutions(make_constant_model(ConstantCosts{}));
    for (int id = 0; id < pairs; ++id) {
        SynthSpec spec;
        spec.n = 8;
        spec.seed = 7000 + static_cast<std::uint64_t>(id);
        auto [src, tgt] = gen_synth_pair(spec);
        double exact = brute_force_ged(src, tgt, clamped);
        QapGedOptions opts;
        opts.init = QapInit::BipartiteEdges;
        opts.restarts = 11;  // bipartite init + 10 random restarts
        opts.seed = spec.seed;
        QapGedResult qap = qap_ged(src, tgt, clamped, opts);
        if (std::fabs(qap.value - exact) <= 1e-9) ++hits;
    }
    double rate = 100.0 * hits / pairs;
    report(7, hits >= 70,
           fmt("IPFP matched the exact value on %d/%d synthetic n=8 pairs (%.0f%%), %.1f s",
               hits, pairs, rate, elapsed(start)));
}

// ---- criterion 8: polynomial scaling shape ----
void criterion_scaling() {
    auto start = Clock::now();
    CostModel unit = make_constant_model(ConstantCosts{});
    std::vector<double> log_size, log_time;
    std::string detail = "per-pair time:";
    for (int n : {10, 20, 30, 40, 50}) {
        const int pairs = 8;
        double total_seconds = 0.0;
        long long total_iters = 0;
        for (int id = 0; id < pairs; ++id) {
            SynthSpec spec;
            spec.n = n;
            spec.seed = 8000 + static_cast<std::uint64_t>(n) * 131 + id;
            auto [src, tgt] = gen_synth_pair(spec);
            auto t0 = Clock::now();
            QapGedOptions opts;
            opts.init = QapInit::BipartiteEdges;
            QapGedResult r = qap_ged(src, tgt, unit, opts);
            total_seconds += elapsed(t0);
            total_iters += r.total_iterations;
        }
        double per_iter = total_seconds / std::max(1ll, total_iters);
        log_size.push_back(std::log(static_cast<double>(n + (n - 1))));
        log_time.push_back(std::log(per_iter));
        detail += fmt(" n=%d %.4fs/pair", n, total_seconds / pairs);
    }
    // Least-squares slope of log(time per iteration) vs log(n+m).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int count = static_cast<int>(log_size.size());
    for (int i = 0; i < count; ++i) {
        sx += log_size[i];
        sy += log_time[i];
        sxx += log_size[i] * log_size[i];
        sxy += log_size[i] * log_time[i];
    }
    double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    double t = elapsed(start);
    report(8, slope <= 3.5 && t < 600.0,
           fmt("log-log slope %.2f (cap 3.5), %s, total %.1f s", slope, detail.c_str(), t));
}

}  // namespace

int main() {
    criterion_lsap();
    criterion_qap_path_theorem();
    criterion_symmetry();
    criterion_bijection();
    criterion_bounds_and_descent();
    criterion_exact_hit();
    criterion_scaling();
    std::printf(
        "criterion 9: NOTE — reference-table absolute distances are out of scope "
        "(dataset cost constants unpublished); criteria 1-8 stand in.\n");
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
