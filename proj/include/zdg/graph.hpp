#pragma once

#include "zdg/bitset.hpp"
#include "zdg/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zdg {

class FiniteRing;

// Undirected graph with per-vertex loop flags. Adjacency rows are symmetric
// with a clear diagonal; loops are carried separately and only matter to
// total domination. Metric operations (distance, girth) ignore loops.
class LoopGraph {
public:
    LoopGraph() = default;
    explicit LoopGraph(uint32_t n);

    uint32_t size() const { return n_; }
    void add_edge(uint32_t u, uint32_t v);
    void set_loop(uint32_t v);
    bool adjacent(uint32_t u, uint32_t v) const;
    bool has_loop(uint32_t v) const { return loops_.test(v); }

    const Bitset& row(uint32_t v) const { return rows_[v]; }
    const Bitset& loop_set() const { return loops_; }
    uint32_t edge_count() const; // simple edges only
    uint32_t loop_count() const { return loops_.count(); }

    Bitset closed_neighborhood(uint32_t v) const;  // N[v] = N(v) + {v}
    Bitset total_neighborhood(uint32_t v) const;   // N_t(v) = N(v) + {v if looped}

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    // Label when present, decimal vertex index otherwise.
    std::string vertex_name(uint32_t v) const;

private:
    void check_vertex(uint32_t v) const;

    uint32_t n_ = 0;
    std::vector<Bitset> rows_;
    Bitset loops_;
    std::vector<std::string> labels_;
};

// Gamma(R): vertices are Z(R)* in element-index order, u-v edge iff uv = 0,
// loop at v iff v^2 = 0. Throws EmptyGraphError when R has no zero-divisors.
LoopGraph build_zdg(const FiniteRing& ring);

bool is_connected(const LoopGraph& g);
// nullopt encodes an infinite diameter (disconnected input).
std::optional<uint32_t> diameter(const LoopGraph& g);
// Length of the shortest simple cycle; nullopt when acyclic.
std::optional<uint32_t> girth(const LoopGraph& g);
// Least vertex adjacent to all others; for n = 1 the sole vertex.
std::optional<uint32_t> universal_vertex(const LoopGraph& g);

// DOT with undirected '--' edges, loops as 'v -- v', edges sorted
// lexicographically. Node identifiers are vertex labels when present.
std::string to_dot(const LoopGraph& g);
// {"n": ..., "edges": [[u,v]...], "loops": [v...], "labels": [...]}
std::string to_json(const LoopGraph& g);

// First significant line 'n <count>', then 'u v' per edge (0-based),
// 'u u' for a loop. Blank lines and '#' comments ignored.
LoopGraph read_graph_file(std::istream& in);
LoopGraph read_graph_file(const std::string& path);

} // namespace zdg
