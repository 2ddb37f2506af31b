#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ged {

/// Opaque label token drawn from a finite alphabet. Equality is exact
/// token equality; labels are never interpreted numerically.
using Label = std::string;

struct Arc {
    int src = 0;
    int dst = 0;
    Label label;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple labeled graph, directed or undirected. Node ids are dense
/// 0..n-1. Undirected graphs store every edge as the symmetric arc pair
/// (i,j)/(j,i) with a shared label, so edge lookups work on ordered
/// pairs in both modes. Instances are immutable once built and safe to
/// share across threads.
class Graph {
public:
    explicit Graph(bool directed = false) : directed_(directed) {}

    bool directed() const { return directed_; }
    int node_count() const { return static_cast<int>(node_labels_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Number of edges in the graph's own convention: arcs for a
    /// directed graph, unordered pairs for an undirected one.
    int edge_count() const { return directed_ ? arc_count() : arc_count() / 2; }

    int add_node(const Label& label);

    /// Appends one raw arc. Only the index range is enforced here;
    /// structural invariants (no self-loops, no duplicates, symmetry)
    /// are reported by validate() so that invalid graphs can be built
    /// and inspected in tests.
    void add_arc(int src, int dst, const Label& label);

    /// Adds an edge in the graph's convention: one arc if directed,
    /// the symmetric arc pair if undirected.
    void add_edge(int src, int dst, const Label& label);

    const Label& node_label(int id) const { return node_labels_.at(id); }
    const std::vector<Label>& node_labels() const { return node_labels_; }

    bool has_arc(int src, int dst) const;
    /// Label of arc (src,dst); throws if the arc does not exist.
    const Label& arc_label(int src, int dst) const;

    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Canonical edge list: all arcs when directed, arcs with src<dst
    /// when undirected (each undirected edge exactly once).
    std::vector<Arc> edges() const;

    /// Arc indices leaving / entering a node.
    const std::vector<int>& out_arcs(int node) const { return out_.at(node); }
    const std::vector<int>& in_arcs(int node) const { return in_.at(node); }

    int degree(int node) const {
        return static_cast<int>(out_.at(node).size() + (directed_ ? in_.at(node).size() : 0));
    }

    /// Empty list iff all invariants hold: no self-loops, at most one
    /// arc per ordered pair, labels non-empty, and (undirected) the arc
    /// set closed under (i,j) -> (j,i) with equal labels.
    std::vector<std::string> validate() const;

    bool operator==(const Graph& other) const;

private:
    static std::uint64_t key(int src, int dst) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(src)) << 32) |
               static_cast<std::uint32_t>(dst);
    }

    bool directed_;
    std::vector<Label> node_labels_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::uint64_t, int> arc_index_;  // first occurrence wins
    std::vector<std::vector<int>> out_, in_;
};

/// Parse failure; what() carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct ParseResult {
    Graph graph;
    /// Original file node ids in dense-id order, for traceability when
    /// the input ids were not already 0..n-1.
    std::vector<long long> original_ids;
};

/// Reads the GEDG text format:
///   graph directed|undirected
///   v <id> <label>
///   e <src> <dst> <label>
/// '#' starts a comment, blank lines are ignored, node lines must
/// precede edge lines referencing them. Node ids are densified to
/// 0..n-1 in file order. Undirected edges are stored as both arcs.
ParseResult parse_graph(std::istream& in);
ParseResult parse_graph(const std::string& text);

/// Canonical GEDG form: dense ids, nodes ascending, edges sorted with
/// src<dst for undirected graphs. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

ParseResult load_graph_file(const std::string& path);

}  // namespace ged
