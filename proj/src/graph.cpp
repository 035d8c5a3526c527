#include "zdg/graph.hpp"

#include "zdg/ring.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

namespace zdg {

LoopGraph::LoopGraph(uint32_t n) : n_(n), rows_(n, Bitset(n)), loops_(n) {}

void LoopGraph::check_vertex(uint32_t v) const {
    if (v >= n_) throw InvalidParameterError("vertex index out of range");
}

void LoopGraph::add_edge(uint32_t u, uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidParameterError("diagonal edge; use set_loop");
    rows_[u].set(v);
    rows_[v].set(u);
}

void LoopGraph::set_loop(uint32_t v) {
    check_vertex(v);
    loops_.set(v);
}

bool LoopGraph::adjacent(uint32_t u, uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && rows_[u].test(v);
}

uint32_t LoopGraph::edge_count() const {
    uint32_t twice = 0;
    for (const Bitset& r : rows_) twice += r.count();
    return twice / 2;
}

Bitset LoopGraph::closed_neighborhood(uint32_t v) const {
    check_vertex(v);
    Bitset nb = rows_[v];
    nb.set(v);
    return nb;
}

Bitset LoopGraph::total_neighborhood(uint32_t v) const {
    check_vertex(v);
    Bitset nb = rows_[v];
    if (loops_.test(v)) nb.set(v);
    return nb;
}

void LoopGraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw InvalidParameterError("label count does not match vertex count");
    labels_ = std::move(labels);
}

std::string LoopGraph::vertex_name(uint32_t v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

LoopGraph build_zdg(const FiniteRing& ring) {
    auto verts = ring.zero_divisor_set().to_vector();
    if (verts.empty())
        throw EmptyGraphError("empty zero-divisor graph: " + ring.label() + " is a domain");

    const uint32_t n = static_cast<uint32_t>(verts.size());
    LoopGraph g(n);
    for (uint32_t i = 0; i < n; ++i) {
        if (ring.mul(verts[i], verts[i]) == 0) g.set_loop(i);
        for (uint32_t j = i + 1; j < n; ++j)
            if (ring.mul(verts[i], verts[j]) == 0) g.add_edge(i, j);
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Elem e : verts) labels.push_back(ring.element_label(e));
    g.set_labels(std::move(labels));
    return g;
}

namespace {

// BFS distances from root; UINT32_MAX marks unreachable.
std::vector<uint32_t> bfs_dist(const LoopGraph& g, uint32_t root) {
    std::vector<uint32_t> dist(g.size(), UINT32_MAX);
    std::deque<uint32_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        g.row(u).for_each([&](uint32_t w) {
            if (dist[w] == UINT32_MAX) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

} // namespace

bool is_connected(const LoopGraph& g) {
    if (g.size() == 0) return true;
    auto dist = bfs_dist(g, 0);
    return std::find(dist.begin(), dist.end(), UINT32_MAX) == dist.end();
}

std::optional<uint32_t> diameter(const LoopGraph& g) {
    uint32_t best = 0;
    for (uint32_t v = 0; v < g.size(); ++v) {
        auto dist = bfs_dist(g, v);
        for (uint32_t d : dist) {
            if (d == UINT32_MAX) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

std::optional<uint32_t> girth(const LoopGraph& g) {
    // Min over all roots of dist[u] + dist[w] + 1 over non-tree edges (u,w)
    // seen during BFS. Every candidate closes a walk containing a cycle, and
    // for a root on a shortest cycle some edge of that cycle is a candidate
    // of exactly the girth, so the global minimum is exact.
    const uint32_t n = g.size();
    uint32_t best = UINT32_MAX;
    std::vector<uint32_t> dist(n), parent(n);
    for (uint32_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        std::deque<uint32_t> queue{root};
        dist[root] = 0;
        parent[root] = UINT32_MAX;
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            if (dist[u] * 2 >= best) break; // deeper levels cannot improve
            g.row(u).for_each([&](uint32_t w) {
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    if (best == UINT32_MAX) return std::nullopt;
    return best;
}

std::optional<uint32_t> universal_vertex(const LoopGraph& g) {
    const uint32_t n = g.size();
    if (n == 1) return 0u;
    for (uint32_t v = 0; v < n; ++v)
        if (g.row(v).count() == n - 1) return v;
    return std::nullopt;
}

namespace {

bool dot_id_safe(const std::string& s) {
    if (s.empty()) return false;
    bool all_digits = std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    if (all_digits) return true;
    if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string dot_id(const LoopGraph& g, uint32_t v) {
    std::string name = g.vertex_name(v);
    if (dot_id_safe(name)) return name;
    std::string quoted = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

std::vector<std::pair<uint32_t, uint32_t>> sorted_edge_list(const LoopGraph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < g.size(); ++u) {
        if (g.has_loop(u)) edges.emplace_back(u, u);
        g.row(u).for_each([&](uint32_t w) {
            if (u < w) edges.emplace_back(u, w);
        });
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

std::string to_dot(const LoopGraph& g) {
    std::string out = "graph {\n";
    for (uint32_t v = 0; v < g.size(); ++v) out += "  " + dot_id(g, v) + ";\n";
    for (auto [u, w] : sorted_edge_list(g))
        out += "  " + dot_id(g, u) + " -- " + dot_id(g, w) + ";\n";
    out += "}\n";
    return out;
}

std::string to_json(const LoopGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.size();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, w] : sorted_edge_list(g))
        if (u != w) edges.push_back({u, w});
    j["edges"] = std::move(edges);
    auto loops = nlohmann::ordered_json::array();
    g.loop_set().for_each([&](uint32_t v) { loops.push_back(v); });
    j["loops"] = std::move(loops);
    auto labels = nlohmann::ordered_json::array();
    for (uint32_t v = 0; v < g.size(); ++v)
        if (!g.labels().empty()) labels.push_back(g.labels()[v]);
    j["labels"] = std::move(labels);
    return j.dump(2) + "\n";
}

LoopGraph read_graph_file(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    std::optional<LoopGraph> g;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;

        if (!g) {
            if (tok != "n") throw GraphFileError(lineno, "expected 'n <count>'");
            long long n = -1;
            if (!(ls >> n) || n < 1) throw GraphFileError(lineno, "vertex count must be a positive integer");
            if (n > 1000000) throw GraphFileError(lineno, "vertex count too large");
            std::string extra;
            if (ls >> extra) throw GraphFileError(lineno, "unexpected token after vertex count");
            g.emplace(static_cast<uint32_t>(n));
            continue;
        }

        long long u, v;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw GraphFileError(lineno, "expected 'u v'");
        std::string extra;
        if (es >> extra && extra[0] != '#') throw GraphFileError(lineno, "unexpected token after edge");
        if (u < 0 || v < 0 || u >= g->size() || v >= g->size())
            throw GraphFileError(lineno, "vertex index out of range");
        if (u == v)
            g->set_loop(static_cast<uint32_t>(u));
        else
            g->add_edge(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    }
    if (!g) throw GraphFileError(lineno, "missing 'n <count>' header");
    return std::move(*g);
}

LoopGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return read_graph_file(in);
}

} // namespace zdg
