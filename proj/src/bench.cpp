#include "ged/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "ged/bipartite.hpp"

namespace ged {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<BenchRecord> run_pair(const GraphPair& pair, const BenchOptions& opts) {
    std::vector<BenchRecord> records;
    std::optional<double> exact_value;

    // Exact first so the other methods can report errors against it.
    bool want_exact = std::find(opts.methods.begin(), opts.methods.end(), "exact") !=
                      opts.methods.end();
    if (want_exact) {
        BenchRecord rec;
        rec.pair_id = pair.id;
        rec.method = "exact";
        auto start = Clock::now();
        ExactResult res = astar_ged(pair.g1, pair.g2, opts.model, opts.exact);
        rec.t_seconds = seconds_since(start);
        rec.d = res.value;
        if (res.optimal) {
            exact_value = res.value;
            rec.e = 0.0;
        }
        records.push_back(std::move(rec));
    }

    for (const std::string& method : opts.methods) {
        if (method == "exact") continue;
        BenchRecord rec;
        rec.pair_id = pair.id;
        rec.method = method;
        auto start = Clock::now();
        if (method == "bipartite-node" || method == "bipartite-edges") {
            BagStrategy strategy = method == "bipartite-node" ? BagStrategy::NodeOnly
                                                              : BagStrategy::IncidentEdges;
            rec.d = bipartite_ged(pair.g1, pair.g2, opts.model, strategy).value;
        } else if (method == "qap") {
            QapGedOptions qopts = opts.qap;
            qopts.seed = opts.qap.seed + static_cast<std::uint64_t>(pair.id) * 1000003ull;
            QapGedResult res = qap_ged(pair.g1, pair.g2, opts.model, qopts);
            rec.d = res.value;
            rec.iters = res.total_iterations;
        } else {
            throw std::invalid_argument("unknown method '" + method + "'");
        }
        rec.t_seconds = seconds_since(start);
        if (exact_value) {
            rec.e = rec.d - *exact_value;
            rec.exact_hit = std::fabs(rec.d - *exact_value) <= 1e-9;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const std::vector<GraphPair>& pairs,
                                       const BenchOptions& opts) {
    for (const std::string& method : opts.methods)
        if (method != "exact" && method != "bipartite-node" && method != "bipartite-edges" &&
            method != "qap")
            throw std::invalid_argument("unknown method '" + method + "'");

    std::vector<std::vector<BenchRecord>> slots(pairs.size());
    int threads = std::max(1, opts.threads);
    if (threads == 1 || pairs.size() <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) slots[i] = run_pair(pairs[i], opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::string> worker_errors(threads);
        auto worker = [&](int slot) {
            try {
                for (std::size_t i = next++; i < pairs.size(); i = next++)
                    slots[i] = run_pair(pairs[i], opts);
            } catch (const std::exception& e) {
                worker_errors[slot] = e.what();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
        for (const std::string& err : worker_errors)
            if (!err.empty()) throw std::runtime_error(err);
    }

    std::vector<BenchRecord> records;
    for (auto& slot : slots)
        for (auto& rec : slot) records.push_back(std::move(rec));
    std::stable_sort(records.begin(), records.end(),
                     [](const BenchRecord& a, const BenchRecord& b) {
                         return a.pair_id < b.pair_id;
                     });
    return records;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "pair,method,d,e,t,iters,exact_hit\n";
    for (const BenchRecord& r : records) {
        char tbuf[64];
        std::snprintf(tbuf, sizeof(tbuf), "%.6f", r.t_seconds);
        out << r.pair_id << ',' << r.method << ',' << format_double(r.d) << ',';
        if (r.e) out << format_double(*r.e);
        out << ',' << tbuf << ',';
        if (r.iters) out << *r.iters;
        out << ',';
        if (r.exact_hit) out << (*r.exact_hit ? 1 : 0);
        out << '\n';
    }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
    std::vector<BenchRecord> records;
    std::string line;
    if (!std::getline(in, line)) return records;
    if (line != "pair,method,d,e,t,iters,exact_hit")
        throw std::runtime_error("unexpected CSV header: " + line);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        while (fields.size() < 7) fields.emplace_back();
        if (fields.size() != 7)
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad field count");
        BenchRecord r;
        r.pair_id = std::stoi(fields[0]);
        r.method = fields[1];
        r.d = std::stod(fields[2]);
        if (!fields[3].empty()) r.e = std::stod(fields[3]);
        r.t_seconds = std::stod(fields[4]);
        if (!fields[5].empty()) r.iters = std::stoi(fields[5]);
        if (!fields[6].empty()) r.exact_hit = fields[6] == "1";
        records.push_back(std::move(r));
    }
    return records;
}

std::map<std::string, MethodSummary> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::string, MethodSummary> out;
    std::map<std::string, std::pair<double, int>> e_acc;
    std::map<std::string, std::pair<int, int>> hit_acc;
    for (const BenchRecord& r : records) {
        MethodSummary& s = out[r.method];
        ++s.count;
        s.avg_d += r.d;
        s.avg_t += r.t_seconds;
        if (r.e) {
            e_acc[r.method].first += *r.e;
            ++e_acc[r.method].second;
        }
        if (r.exact_hit) {
            hit_acc[r.method].first += *r.exact_hit ? 1 : 0;
            ++hit_acc[r.method].second;
        }
    }
    for (auto& [method, s] : out) {
        s.avg_d /= s.count;
        s.avg_t /= s.count;
        if (auto it = e_acc.find(method); it != e_acc.end() && it->second.second > 0)
            s.avg_e = it->second.first / it->second.second;
        if (auto it = hit_acc.find(method); it != hit_acc.end() && it->second.second > 0)
            s.exact_hit_rate = static_cast<double>(it->second.first) / it->second.second;
    }
    return out;
}

void print_summary(std::ostream& out, const std::map<std::string, MethodSummary>& summary) {
    out << "method            pairs   avg-d        avg-e        avg-t(s)    exact-hit\n";
    for (const auto& [method, s] : summary) {
        char buf[256];
        std::string e = s.avg_e ? [&] {
            char b[32];
            std::snprintf(b, sizeof(b), "%-12.4f", *s.avg_e);
            return std::string(b);
        }() : std::string("-           ");
        std::string hit = s.exact_hit_rate ? [&] {
            char b[32];
            std::snprintf(b, sizeof(b), "%.1f%%", 100.0 * *s.exact_hit_rate);
            return std::string(b);
        }() : std::string("-");
        std::snprintf(buf, sizeof(buf), "%-17s %-7d %-12.4f %s %-11.6f %s\n", method.c_str(),
                      s.count, s.avg_d, e.c_str(), s.avg_t, hit.c_str());
        out << buf;
    }
}

std::string pair_src_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "pair%04d_src.gedg", id);
    return buf;
}

std::string pair_tgt_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "pair%04d_tgt.gedg", id);
    return buf;
}

std::vector<GraphPair> load_pair_dir(const std::string& dir, std::vector<std::string>* errors) {
    namespace fs = std::filesystem;
    std::vector<int> ids;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        int id = 0, consumed = 0;
        if (std::sscanf(name.c_str(), "pair%d_src.gedg%n", &id, &consumed) == 1 &&
            consumed == static_cast<int>(name.size()))
            ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<GraphPair> pairs;
    for (int id : ids) {
        try {
            GraphPair p;
            p.id = id;
            p.g1 = load_graph_file((fs::path(dir) / pair_src_name(id)).string()).graph;
            p.g2 = load_graph_file((fs::path(dir) / pair_tgt_name(id)).string()).graph;
            pairs.push_back(std::move(p));
        } catch (const std::exception& e) {
            if (errors) errors->push_back("pair " + std::to_string(id) + ": " + e.what());
        }
    }
    return pairs;
}

}  // namespace ged
