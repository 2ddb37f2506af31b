#include "ged/edit_path.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ged {

std::vector<int> EpsAssignment::removed() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!mapped(i)) out.push_back(i);
    return out;
}

std::vector<int> EpsAssignment::inserted() const {
    std::vector<char> hit(m, 0);
    for (int i = 0; i < n; ++i)
        if (mapped(i)) hit[map[i]] = 1;
    std::vector<int> out;
    for (int k = 0; k < m; ++k)
        if (!hit[k]) out.push_back(k);
    return out;
}

int EpsAssignment::preimage(int k) const {
    for (int i = 0; i < n; ++i)
        if (map[i] == k) return i;
    return kRemoved;
}

std::vector<std::string> EpsAssignment::validate() const {
    std::vector<std::string> violations;
    if (static_cast<int>(map.size()) != n) violations.push_back("map size differs from n");
    std::vector<char> hit(m, 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        int k = map[i];
        if (k == kRemoved) continue;
        if (k < 0 || k >= m)
            violations.push_back("node " + std::to_string(i) + " mapped out of range");
        else if (hit[k]++)
            violations.push_back("target " + std::to_string(k) + " used twice");
    }
    return violations;
}

EpsAssignment assignment_from_permutation(const std::vector<int>& perm, int n, int m) {
    if (static_cast<int>(perm.size()) != n + m)
        throw std::invalid_argument("permutation size differs from n+m");
    EpsAssignment a = EpsAssignment::empty(n, m);
    for (int i = 0; i < n; ++i) {
        int k = perm[i];
        if (k < m)
            a.map[i] = k;
        else if (k != m + i)
            throw std::invalid_argument("real node mapped to a foreign dummy");
    }
    for (int j = 0; j < m; ++j) {
        int k = perm[n + j];
        if (k < m && k != j) throw std::invalid_argument("foreign dummy used for insertion");
    }
    return a;
}

std::vector<int> assignment_to_permutation(const EpsAssignment& a) {
    const int n = a.n, m = a.m;
    std::vector<int> perm(n + m, -1);
    std::vector<char> col_used(m + n, 0);
    for (int i = 0; i < n; ++i) {
        perm[i] = a.mapped(i) ? a.map[i] : m + i;
        col_used[perm[i]] = 1;
    }
    for (int k : a.inserted()) {
        perm[n + k] = k;
        col_used[k] = 1;
    }
    // Dummy-dummy completion: free dummy rows to free dummy columns in
    // ascending order. Cost-free by construction.
    int next_col = m;
    for (int r = 0; r < m; ++r) {
        if (perm[n + r] != -1) continue;
        while (col_used[next_col]) ++next_col;
        perm[n + r] = next_col;
        col_used[next_col] = 1;
    }
    return perm;
}

RestrictedEditPath assignment_to_path(const EpsAssignment& a, const Graph& g1, const Graph& g2) {
    if (a.n != g1.node_count() || a.m != g2.node_count())
        throw std::invalid_argument("assignment inconsistent with graph node sets");
    if (g1.directed() != g2.directed())
        throw std::invalid_argument("graphs must share directedness");
    if (auto v = a.validate(); !v.empty())
        throw std::invalid_argument("invalid assignment: " + v.front());

    RestrictedEditPath p;
    for (int i = 0; i < a.n; ++i) {
        if (a.mapped(i))
            p.node_subs.push_back({i, a.map[i]});
        else
            p.node_removals.push_back(i);
    }
    p.node_inserts = a.inserted();

    for (const Arc& e : g1.edges()) {
        int k = a.map[e.src], l = a.map[e.dst];
        if (k != EpsAssignment::kRemoved && l != EpsAssignment::kRemoved && g2.has_arc(k, l))
            p.edge_subs.push_back({{e.src, e.dst}, {k, l}});
        else
            p.edge_removals.push_back({e.src, e.dst});
    }
    std::vector<int> pre(a.m, EpsAssignment::kRemoved);
    for (int i = 0; i < a.n; ++i)
        if (a.mapped(i)) pre[a.map[i]] = i;
    for (const Arc& e : g2.edges()) {
        int i = pre[e.src], j = pre[e.dst];
        if (i != EpsAssignment::kRemoved && j != EpsAssignment::kRemoved && g1.has_arc(i, j))
            continue;  // produced by an edge substitution
        p.edge_inserts.push_back({e.src, e.dst});
    }
    return p;
}

EpsAssignment path_to_assignment(const RestrictedEditPath& p) {
    EpsAssignment a;
    a.n = static_cast<int>(p.node_removals.size() + p.node_subs.size());
    a.m = static_cast<int>(p.node_inserts.size() + p.node_subs.size());
    a.map.assign(a.n, EpsAssignment::kRemoved);
    for (const NodeSubOp& s : p.node_subs) {
        if (s.from < 0 || s.from >= a.n || s.to < 0 || s.to >= a.m)
            throw std::invalid_argument("node substitution out of range");
        if (a.map[s.from] != EpsAssignment::kRemoved)
            throw std::invalid_argument("node substituted twice");
        a.map[s.from] = s.to;
    }
    for (int i : p.node_removals) {
        if (i < 0 || i >= a.n) throw std::invalid_argument("node removal out of range");
        if (a.map[i] != EpsAssignment::kRemoved)
            throw std::invalid_argument("node both substituted and removed");
    }
    if (auto v = a.validate(); !v.empty()) throw std::invalid_argument("invalid path: " + v.front());
    return a;
}

double path_cost(const RestrictedEditPath& p, const CostModel& m, const Graph& g1,
                 const Graph& g2) {
    double total = 0.0;
    for (const EdgeRef& e : p.edge_removals) total += m.edge_del(g1.arc_label(e.src, e.dst));
    for (int i : p.node_removals) total += m.node_del(g1.node_label(i));
    for (const NodeSubOp& s : p.node_subs)
        total += m.node_sub(g1.node_label(s.from), g2.node_label(s.to));
    for (const EdgeSubOp& s : p.edge_subs)
        total += m.edge_sub(g1.arc_label(s.from.src, s.from.dst),
                            g2.arc_label(s.to.src, s.to.dst));
    for (int k : p.node_inserts) total += m.node_ins(g2.node_label(k));
    for (const EdgeRef& e : p.edge_inserts) total += m.edge_ins(g2.arc_label(e.src, e.dst));
    return total;
}

PathCardinals path_cardinals(const RestrictedEditPath& p, const CostModel& m, const Graph& g1,
                             const Graph& g2) {
    PathCardinals c;
    c.v1 = g1.node_count();
    c.v2 = g2.node_count();
    c.e1 = g1.edge_count();
    c.e2 = g2.edge_count();
    c.v1_hat = c.v2_hat = static_cast<int>(p.node_subs.size());
    c.e1_hat = c.e2_hat = static_cast<int>(p.edge_subs.size());
    for (const NodeSubOp& s : p.node_subs)
        if (m.node_sub(g1.node_label(s.from), g2.node_label(s.to)) > 0.0) ++c.vf;
    for (const EdgeSubOp& s : p.edge_subs)
        if (m.edge_sub(g1.arc_label(s.from.src, s.from.dst),
                       g2.arc_label(s.to.src, s.to.dst)) > 0.0)
            ++c.ef;
    return c;
}

namespace {

std::string edge_name(const EdgeRef& e) {
    return "(" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")";
}

// Unordered key for undirected edges, ordered for directed ones.
std::pair<int, int> edge_key(const EdgeRef& e, bool directed) {
    if (directed || e.src < e.dst) return {e.src, e.dst};
    return {e.dst, e.src};
}

}  // namespace

std::vector<std::string> validate_path(const RestrictedEditPath& p, const Graph& g1,
                                       const Graph& g2) {
    std::vector<std::string> out;
    auto note = [&](const std::string& v) { out.push_back(v); };
    if (g1.directed() != g2.directed()) {
        note("graphs differ in directedness");
        return out;
    }
    const bool directed = g1.directed();
    const int n = g1.node_count(), m = g2.node_count();

    // G1-side bookkeeping.
    std::set<std::pair<int, int>> g1_edges, g1_removed_edges, g1_sub_edges;
    for (const Arc& e : g1.edges()) g1_edges.insert(edge_key({e.src, e.dst}, directed));
    std::vector<char> g1_node_removed(n, 0), g1_node_subbed(n, 0);
    std::vector<int> node_image(n, EpsAssignment::kRemoved);

    for (const EdgeRef& e : p.edge_removals) {
        auto k = edge_key(e, directed);
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n || !g1_edges.count(k)) {
            note("edge removal " + edge_name(e) + ": no such edge in G1");
            continue;
        }
        if (!g1_removed_edges.insert(k).second)
            note("edge removal " + edge_name(e) + ": removed twice");
    }
    for (int i : p.node_removals) {
        if (i < 0 || i >= n) {
            note("node removal " + std::to_string(i) + ": no such node in G1");
            continue;
        }
        if (g1_node_removed[i]) note("node " + std::to_string(i) + ": removed twice");
        g1_node_removed[i] = 1;
        for (int ai : g1.out_arcs(i)) {
            auto k = edge_key({g1.arcs()[ai].src, g1.arcs()[ai].dst}, directed);
            if (!g1_removed_edges.count(k))
                note("node " + std::to_string(i) + ": removed before incident edge " +
                     edge_name({g1.arcs()[ai].src, g1.arcs()[ai].dst}));
        }
        for (int ai : g1.in_arcs(i)) {
            auto k = edge_key({g1.arcs()[ai].src, g1.arcs()[ai].dst}, directed);
            if (!g1_removed_edges.count(k))
                note("node " + std::to_string(i) + ": removed before incident edge " +
                     edge_name({g1.arcs()[ai].src, g1.arcs()[ai].dst}));
        }
    }

    // G2-side bookkeeping.
    std::vector<char> g2_node_covered(m, 0);
    for (const NodeSubOp& s : p.node_subs) {
        if (s.from < 0 || s.from >= n) {
            note("node substitution from " + std::to_string(s.from) + ": no such node in G1");
            continue;
        }
        if (s.to < 0 || s.to >= m) {
            note("node substitution to " + std::to_string(s.to) + ": no such node in G2");
            continue;
        }
        if (g1_node_removed[s.from])
            note("node " + std::to_string(s.from) + ": both substituted and removed");
        if (g1_node_subbed[s.from])
            note("node " + std::to_string(s.from) + ": substituted twice");
        g1_node_subbed[s.from] = 1;
        node_image[s.from] = s.to;
        if (g2_node_covered[s.to])
            note("G2 node " + std::to_string(s.to) + ": targeted twice");
        g2_node_covered[s.to] = 1;
    }

    std::set<std::pair<int, int>> g2_edges, g2_covered_edges;
    for (const Arc& e : g2.edges()) g2_edges.insert(edge_key({e.src, e.dst}, directed));

    for (const EdgeSubOp& s : p.edge_subs) {
        auto from_key = edge_key(s.from, directed);
        if (!g1_edges.count(from_key)) {
            note("edge substitution from " + edge_name(s.from) + ": no such edge in G1");
            continue;
        }
        if (g1_removed_edges.count(from_key))
            note("edge " + edge_name(s.from) + ": both substituted and removed");
        if (!g1_sub_edges.insert(from_key).second)
            note("edge " + edge_name(s.from) + ": substituted twice");
        auto to_key = edge_key(s.to, directed);
        if (!g2_edges.count(to_key)) {
            note("edge substitution to " + edge_name(s.to) + ": no such edge in G2");
            continue;
        }
        if (s.from.src < 0 || s.from.src >= n || s.from.dst < 0 || s.from.dst >= n) {
            note("edge substitution from " + edge_name(s.from) + ": endpoint out of range");
            continue;
        }
        bool endpoints_match = directed
            ? (node_image[s.from.src] == s.to.src && node_image[s.from.dst] == s.to.dst)
            : ((node_image[s.from.src] == s.to.src && node_image[s.from.dst] == s.to.dst) ||
               (node_image[s.from.src] == s.to.dst && node_image[s.from.dst] == s.to.src));
        if (!endpoints_match)
            note("edge substitution " + edge_name(s.from) + "->" + edge_name(s.to) +
                 ": endpoints not substituted accordingly");
        if (!g2_covered_edges.insert(to_key).second)
            note("G2 edge " + edge_name(s.to) + ": produced twice");
    }

    for (int k : p.node_inserts) {
        if (k < 0 || k >= m) {
            note("node insertion " + std::to_string(k) + ": no such node in G2");
            continue;
        }
        if (g2_node_covered[k])
            note("G2 node " + std::to_string(k) + ": both substituted and inserted");
        g2_node_covered[k] = 1;
    }
    for (const EdgeRef& e : p.edge_inserts) {
        if (e.src < 0 || e.src >= m || e.dst < 0 || e.dst >= m) {
            note("edge insertion " + edge_name(e) + ": endpoint out of range");
            continue;
        }
        if (e.src == e.dst) note("edge insertion " + edge_name(e) + ": self-loop");
        auto k = edge_key(e, directed);
        if (!g2_edges.count(k)) {
            note("edge insertion " + edge_name(e) + ": no such edge in G2");
            continue;
        }
        if (!g2_node_covered[e.src] || !g2_node_covered[e.dst])
            note("edge insertion " + edge_name(e) + ": endpoint does not exist yet");
        if (!g2_covered_edges.insert(k).second)
            note("edge insertion " + edge_name(e) + ": edge already present");
        // Restrictedness: the same mapped position may not be removed
        // and then re-inserted.
        int pi = EpsAssignment::kRemoved, pj = EpsAssignment::kRemoved;
        for (int i = 0; i < n; ++i) {
            if (node_image[i] == e.src) pi = i;
            if (node_image[i] == e.dst) pj = i;
        }
        if (pi != EpsAssignment::kRemoved && pj != EpsAssignment::kRemoved &&
            g1_removed_edges.count(edge_key({pi, pj}, directed)))
            note("edge " + edge_name({pi, pj}) + ": removed and then re-inserted as " +
                 edge_name(e));
    }

    // Completeness: G1 fully consumed, G2 fully produced.
    for (int i = 0; i < n; ++i)
        if (!g1_node_removed[i] && !g1_node_subbed[i])
            note("G1 node " + std::to_string(i) + ": neither removed nor substituted");
    for (const auto& k : g1_edges)
        if (!g1_removed_edges.count(k) && !g1_sub_edges.count(k))
            note("G1 edge (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                 "): neither removed nor substituted");
    for (int k = 0; k < m; ++k)
        if (!g2_node_covered[k])
            note("G2 node " + std::to_string(k) + ": never produced");
    for (const auto& k : g2_edges)
        if (!g2_covered_edges.count(k))
            note("G2 edge (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                 "): never produced");
    return out;
}

std::string serialize_path(const RestrictedEditPath& p) {
    std::ostringstream out;
    for (const EdgeRef& e : p.edge_removals) out << "re " << e.src << " " << e.dst << "\n";
    for (int i : p.node_removals) out << "rn " << i << "\n";
    for (const NodeSubOp& s : p.node_subs) out << "sn " << s.from << " " << s.to << "\n";
    for (const EdgeSubOp& s : p.edge_subs)
        out << "se " << s.from.src << " " << s.from.dst << " " << s.to.src << " " << s.to.dst
            << "\n";
    for (int k : p.node_inserts) out << "in " << k << "\n";
    for (const EdgeRef& e : p.edge_inserts) out << "ie " << e.src << " " << e.dst << "\n";
    return out.str();
}

}  // namespace ged
