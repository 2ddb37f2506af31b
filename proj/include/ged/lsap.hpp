#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ged {

/// Square cost matrix with per-entry forbidden flags. Forbidden entries
/// are skipped structurally by the solvers; they carry no cost value.
class MaskedCostMatrix {
public:
    MaskedCostMatrix() = default;
    explicit MaskedCostMatrix(int n)
        : n_(n), cost_(static_cast<std::size_t>(n) * n, 0.0),
          forbidden_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }

    double at(int i, int j) const { return cost_[idx(i, j)]; }
    void set(int i, int j, double c) { cost_[idx(i, j)] = c; }
    void add(int i, int j, double c) { cost_[idx(i, j)] += c; }

    bool forbidden(int i, int j) const { return forbidden_[idx(i, j)] != 0; }
    void forbid(int i, int j) { forbidden_[idx(i, j)] = 1; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> cost_;
    std::vector<std::uint8_t> forbidden_;
};

/// A feasible permutation with its total cost: perm[i] is the column
/// assigned to row i, no (i, perm[i]) is forbidden, and total_cost is
/// the sum of the selected entries.
struct Assignment {
    std::vector<int> perm;
    double total_cost = 0.0;
};

/// Thrown when no complete matching avoids the forbidden entries.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError() : std::runtime_error("no feasible assignment") {}
};

/// O(n^3) Hungarian algorithm (shortest augmenting paths with
/// potentials). Forbidden entries are never read. Handles negative
/// costs. Deterministic: ties are broken by the lowest column index
/// met in the augmenting search, rows processed in ascending order.
Assignment solve_lsap(const MaskedCostMatrix& c);

/// Exhaustive n! oracle for n <= 9. Same optimum value as solve_lsap.
Assignment brute_force_lsap(const MaskedCostMatrix& c);

}  // namespace ged
