#pragma once

#include "zdg/bitset.hpp"
#include "zdg/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zdg {

// Set-cover view of a domination problem: every vertex of `universe` must be
// hit, and selecting x covers exactly coverers[x]. Both domination flavors
// produce symmetric instances (u covers v iff v covers u).
struct CoverInstance {
    Bitset universe;
    std::vector<Bitset> coverers;
};

// coverers[v] = N[v]; loops never matter (v always covers itself).
CoverInstance domination_instance(const LoopGraph& g);
// coverers[v] = N_t(v); a vertex covers itself iff it is looped.
CoverInstance total_domination_instance(const LoopGraph& g);

struct MinimumSetEnumeration {
    std::vector<std::vector<uint32_t>> sets; // lexicographic order
    bool truncated = false;
};

struct DominationResult {
    std::optional<uint32_t> value;                       // nullopt = infinite
    std::vector<uint32_t> witness;                       // lex-least minimum set
    std::optional<MinimumSetEnumeration> all_minimum_sets;
    bool finite() const { return value.has_value(); }
};

struct SolveOptions {
    bool reduce_twins = true; // collapse equal-coverage vertex classes first
};

// Exact values via twin reduction, a greedy upper bound, packing/ratio lower
// bounds, and depth-first branch and bound on the uncovered vertex with the
// fewest candidate coverers. Witnesses are lexicographically least and
// deterministic.
DominationResult domination_number(const LoopGraph& g, const SolveOptions& opts = {});
DominationResult total_domination_number(const LoopGraph& g, const SolveOptions& opts = {});

bool is_dominating_set(const LoopGraph& g, const std::vector<uint32_t>& xs);
bool is_total_dominating_set(const LoopGraph& g, const std::vector<uint32_t>& xs);

// All minimum total dominating sets in lexicographic order, truncated at cap.
MinimumSetEnumeration enumerate_minimum_total_dominating_sets(const LoopGraph& g,
                                                              std::size_t cap = 10000);

// Collapses classes of vertices with identical total neighborhoods down to
// their least member. Preserves gamma_t; witnesses lift through
// representative[]. (The per-problem reductions used inside the solvers also
// preserve gamma.)
struct TwinReduction {
    LoopGraph graph;
    std::vector<uint32_t> class_of;       // original vertex -> class index
    std::vector<uint32_t> representative; // class index -> least original vertex
    std::vector<uint32_t> lift(const std::vector<uint32_t>& reduced) const;
};
TwinReduction twin_reduce(const LoopGraph& g);

} // namespace zdg
