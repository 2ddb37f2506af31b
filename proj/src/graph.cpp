#include "ged/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace ged {

int Graph::add_node(const Label& label) {
    node_labels_.push_back(label);
    out_.emplace_back();
    in_.emplace_back();
    return node_count() - 1;
}

void Graph::add_arc(int src, int dst, const Label& label) {
    if (src < 0 || src >= node_count() || dst < 0 || dst >= node_count())
        throw std::out_of_range("arc endpoint out of range");
    int idx = arc_count();
    arcs_.push_back(Arc{src, dst, label});
    arc_index_.emplace(key(src, dst), idx);
    out_[src].push_back(idx);
    in_[dst].push_back(idx);
}

void Graph::add_edge(int src, int dst, const Label& label) {
    add_arc(src, dst, label);
    if (!directed_ && src != dst) add_arc(dst, src, label);
}

bool Graph::has_arc(int src, int dst) const {
    return arc_index_.count(key(src, dst)) > 0;
}

const Label& Graph::arc_label(int src, int dst) const {
    auto it = arc_index_.find(key(src, dst));
    if (it == arc_index_.end()) throw std::out_of_range("no such arc");
    return arcs_[it->second].label;
}

std::vector<Arc> Graph::edges() const {
    std::vector<Arc> result;
    for (const Arc& a : arcs_)
        if (directed_ || a.src < a.dst) result.push_back(a);
    std::sort(result.begin(), result.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
    });
    return result;
}

std::vector<std::string> Graph::validate() const {
    std::vector<std::string> violations;
    auto note = [&](const std::string& v) { violations.push_back(v); };

    for (int i = 0; i < node_count(); ++i)
        if (node_labels_[i].empty()) note("node " + std::to_string(i) + ": empty label");

    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs_) {
        std::string name = "arc (" + std::to_string(a.src) + "," + std::to_string(a.dst) + ")";
        if (a.src == a.dst) note(name + ": self-loop");
        if (!seen.insert({a.src, a.dst}).second) note(name + ": duplicate");
        if (a.label.empty()) note(name + ": empty label");
    }
    if (!directed_) {
        for (const Arc& a : arcs_) {
            if (a.src == a.dst) continue;
            if (!has_arc(a.dst, a.src))
                note("arc (" + std::to_string(a.src) + "," + std::to_string(a.dst) +
                     "): missing symmetric arc");
            else if (arc_label(a.dst, a.src) != a.label)
                note("arc (" + std::to_string(a.src) + "," + std::to_string(a.dst) +
                     "): symmetric label mismatch");
        }
    }
    return violations;
}

bool Graph::operator==(const Graph& other) const {
    if (directed_ != other.directed_ || node_labels_ != other.node_labels_) return false;
    auto canonical = [](const Graph& g) {
        std::vector<Arc> v = g.arcs_;
        std::sort(v.begin(), v.end(), [](const Arc& a, const Arc& b) {
            return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
        });
        return v;
    };
    return canonical(*this) == canonical(other);
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, int lineno, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string("invalid ") + what + " '" + tok + "'");
    }
}

}  // namespace

ParseResult parse_graph(std::istream& in) {
    ParseResult result;
    std::unordered_map<long long, int> id_map;
    bool header_seen = false;
    bool edges_started = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        if (!header_seen) {
            if (tok.size() != 2 || tok[0] != "graph" ||
                (tok[1] != "directed" && tok[1] != "undirected"))
                throw ParseError(lineno, "expected 'graph directed' or 'graph undirected'");
            result.graph = Graph(tok[1] == "directed");
            header_seen = true;
            continue;
        }

        if (tok[0] == "v") {
            if (tok.size() != 3) throw ParseError(lineno, "node line needs 'v <id> <label>'");
            if (edges_started) throw ParseError(lineno, "node line after edge lines");
            long long orig = parse_int(tok[1], lineno, "node id");
            if (id_map.count(orig))
                throw ParseError(lineno, "duplicate node id " + tok[1]);
            id_map[orig] = result.graph.add_node(tok[2]);
            result.original_ids.push_back(orig);
        } else if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError(lineno, "edge line needs 'e <src> <dst> <label>'");
            edges_started = true;
            long long s = parse_int(tok[1], lineno, "edge endpoint");
            long long d = parse_int(tok[2], lineno, "edge endpoint");
            auto si = id_map.find(s), di = id_map.find(d);
            if (si == id_map.end()) throw ParseError(lineno, "edge references unknown node " + tok[1]);
            if (di == id_map.end()) throw ParseError(lineno, "edge references unknown node " + tok[2]);
            int src = si->second, dst = di->second;
            if (src == dst) throw ParseError(lineno, "self-loop on node " + tok[1]);
            Graph& g = result.graph;
            if (g.has_arc(src, dst) || (!g.directed() && g.has_arc(dst, src))) {
                const Label& prev = g.has_arc(src, dst) ? g.arc_label(src, dst)
                                                        : g.arc_label(dst, src);
                if (!g.directed() && prev != tok[3])
                    throw ParseError(lineno, "conflicting label for undirected edge " + tok[1] +
                                                 " " + tok[2]);
                throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
            }
            g.add_edge(src, dst, tok[3]);
        } else {
            throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
        }
    }
    if (!header_seen) throw ParseError(lineno, "missing 'graph' header");
    return result;
}

ParseResult parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << (g.directed() ? "directed" : "undirected") << "\n";
    for (int i = 0; i < g.node_count(); ++i)
        out << "v " << i << " " << g.node_label(i) << "\n";
    for (const Arc& a : g.edges())
        out << "e " << a.src << " " << a.dst << " " << a.label << "\n";
    return out.str();
}

ParseResult load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

}  // namespace ged
