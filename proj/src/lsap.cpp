#include "ged/lsap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ged {

Assignment solve_lsap(const MaskedCostMatrix& c) {
    const int n = c.size();
    const double inf = std::numeric_limits<double>::infinity();

    // Column potentials live at 1..n; index 0 is the virtual start
    // column of each augmenting search.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0);  // match[j] = row occupying column j, 1-based, 0 = free
    std::vector<int> way(n + 1, 0);
    std::vector<double> minv(n + 1);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            int i0 = match[j0], j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (!c.forbidden(i0 - 1, j - 1)) {
                    double cur = c.at(i0 - 1, j - 1) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 < 0 || delta == inf) throw InfeasibleError();
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment result;
    result.perm.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (match[j] != 0) result.perm[match[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) result.total_cost += c.at(i, result.perm[i]);
    return result;
}

Assignment brute_force_lsap(const MaskedCostMatrix& c) {
    const int n = c.size();
    if (n > 9) throw std::invalid_argument("brute_force_lsap: n too large");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    Assignment best;
    bool found = false;
    do {
        double total = 0.0;
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            if (c.forbidden(i, perm[i]))
                feasible = false;
            else
                total += c.at(i, perm[i]);
        }
        if (feasible && (!found || total < best.total_cost)) {
            best.perm = perm;
            best.total_cost = total;
            found = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!found && n > 0) throw InfeasibleError();
    return best;
}

}  // namespace ged
