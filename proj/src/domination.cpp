#include "zdg/domination.hpp"

#include <algorithm>
#include <map>

namespace zdg {

CoverInstance domination_instance(const LoopGraph& g) {
    CoverInstance inst;
    inst.universe = Bitset::full(g.size());
    inst.coverers.reserve(g.size());
    for (uint32_t v = 0; v < g.size(); ++v) inst.coverers.push_back(g.closed_neighborhood(v));
    return inst;
}

CoverInstance total_domination_instance(const LoopGraph& g) {
    CoverInstance inst;
    inst.universe = Bitset::full(g.size());
    inst.coverers.reserve(g.size());
    for (uint32_t v = 0; v < g.size(); ++v) inst.coverers.push_back(g.total_neighborhood(v));
    return inst;
}

namespace {

// Exact branch-and-bound minimum set cover on a symmetric instance.
class CoverSearch {
public:
    explicit CoverSearch(const CoverInstance& inst)
        : n_(inst.universe.size()), cover_(inst.coverers), universe_(inst.universe) {}

    uint32_t minimum() {
        best_ = greedy();
        if (best_ > 0) dfs(universe_, Bitset(n_), 0);
        return best_;
    }

    // Lexicographically least cover of size exactly k (k must be the minimum).
    std::vector<uint32_t> lex_minimum(uint32_t k) {
        std::vector<uint32_t> picked;
        Bitset uncovered = universe_;
        Bitset banned(n_);
        for (uint32_t v = 0; v < n_ && picked.size() < k; ++v) {
            Bitset unc2 = and_not(uncovered, cover_[v]);
            Bitset ban2 = banned;
            ban2.set(v);
            if (feasible(unc2, ban2, static_cast<uint32_t>(picked.size()) + 1, k)) {
                picked.push_back(v);
                uncovered = unc2;
            }
            banned.set(v);
        }
        return picked;
    }

private:
    uint32_t greedy() {
        Bitset uncovered = universe_;
        uint32_t chosen = 0;
        while (uncovered.any()) {
            uint32_t best_v = 0, best_cov = 0;
            for (uint32_t x = 0; x < n_; ++x) {
                uint32_t cov = (cover_[x] & uncovered).count();
                if (cov > best_cov) {
                    best_cov = cov;
                    best_v = x;
                }
            }
            uncovered.subtract(cover_[best_v]);
            ++chosen;
        }
        return chosen;
    }

    // max(ratio bound, disjoint-constraint packing); UINT32_MAX if some
    // uncovered vertex has no allowed coverer. Also reports the uncovered
    // vertex with the fewest candidates for branching.
    uint32_t lower_bound(const Bitset& uncovered, const Bitset& banned, Bitset& pivot_cands) {
        uint32_t fewest = UINT32_MAX;
        uint32_t packed = 0;
        bool infeasible = false;
        Bitset used(n_);
        uncovered.for_each([&](uint32_t v) {
            if (infeasible) return;
            Bitset cand = and_not(cover_[v], banned);
            uint32_t c = cand.count();
            if (c == 0) {
                infeasible = true;
                return;
            }
            if (c < fewest) {
                fewest = c;
                pivot_cands = cand;
            }
            if (!cand.intersects(used)) {
                ++packed;
                used |= cand;
            }
        });
        if (infeasible) return UINT32_MAX;

        uint32_t max_cov = 0;
        for (uint32_t x = 0; x < n_; ++x) {
            if (banned.test(x)) continue;
            max_cov = std::max(max_cov, (cover_[x] & uncovered).count());
        }
        if (max_cov == 0) return UINT32_MAX;
        uint32_t ratio = (uncovered.count() + max_cov - 1) / max_cov;
        return std::max(ratio, packed);
    }

    void dfs(const Bitset& uncovered, Bitset banned, uint32_t chosen) {
        if (uncovered.none()) {
            best_ = std::min(best_, chosen);
            return;
        }
        Bitset pivot_cands;
        uint32_t lb = lower_bound(uncovered, banned, pivot_cands);
        if (lb == UINT32_MAX || chosen + lb >= best_) return;
        pivot_cands.for_each([&](uint32_t c) {
            banned.set(c);
            dfs(and_not(uncovered, cover_[c]), banned, chosen + 1);
        });
    }

    bool feasible(const Bitset& uncovered, Bitset banned, uint32_t chosen, uint32_t k) {
        if (uncovered.none()) return chosen <= k;
        if (chosen >= k) return false;
        Bitset pivot_cands;
        uint32_t lb = lower_bound(uncovered, banned, pivot_cands);
        if (lb == UINT32_MAX || chosen + lb > k) return false;
        bool found = false;
        pivot_cands.for_each([&](uint32_t c) {
            if (found) return;
            banned.set(c);
            if (feasible(and_not(uncovered, cover_[c]), banned, chosen + 1, k)) found = true;
        });
        return found;
    }

    uint32_t n_;
    const std::vector<Bitset>& cover_;
    Bitset universe_;
    uint32_t best_ = 0;
};

// Collapses vertices with identical coverer sets onto the least member;
// constraints and candidates deduplicate together on symmetric instances.
struct InstanceReduction {
    CoverInstance inst;
    std::vector<uint32_t> kept; // reduced index -> original vertex
};

InstanceReduction reduce_instance(const CoverInstance& full) {
    const uint32_t n = full.universe.size();
    std::map<Bitset, uint32_t> first_seen;
    std::vector<uint32_t> kept;
    for (uint32_t v = 0; v < n; ++v)
        if (first_seen.emplace(full.coverers[v], v).second) kept.push_back(v);

    std::vector<uint32_t> new_index(n, UINT32_MAX);
    for (uint32_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = i;

    InstanceReduction red;
    const uint32_t m = static_cast<uint32_t>(kept.size());
    red.inst.universe = Bitset::full(m);
    red.inst.coverers.reserve(m);
    for (uint32_t old : kept) {
        Bitset row(m);
        full.coverers[old].for_each([&](uint32_t w) {
            if (new_index[w] != UINT32_MAX) row.set(new_index[w]);
        });
        red.inst.coverers.push_back(std::move(row));
    }
    red.kept = std::move(kept);
    return red;
}

DominationResult solve_cover(const CoverInstance& inst, const SolveOptions& opts) {
    DominationResult result;
    const uint32_t n = inst.universe.size();
    bool feasible = true;
    inst.universe.for_each([&](uint32_t v) {
        if (inst.coverers[v].none()) feasible = false;
    });
    if (!feasible) return result; // value stays nullopt: no cover exists
    if (n == 0) {
        result.value = 0;
        return result;
    }

    if (opts.reduce_twins) {
        InstanceReduction red = reduce_instance(inst);
        CoverSearch search(red.inst);
        uint32_t k = search.minimum();
        result.value = k;
        for (uint32_t v : search.lex_minimum(k)) result.witness.push_back(red.kept[v]);
    } else {
        CoverSearch search(inst);
        uint32_t k = search.minimum();
        result.value = k;
        result.witness = search.lex_minimum(k);
    }
    return result;
}

Bitset to_member_set(const LoopGraph& g, const std::vector<uint32_t>& xs) {
    Bitset members(g.size());
    for (uint32_t v : xs) {
        if (v >= g.size()) throw InvalidParameterError("vertex index out of range");
        members.set(v);
    }
    return members;
}

} // namespace

DominationResult domination_number(const LoopGraph& g, const SolveOptions& opts) {
    return solve_cover(domination_instance(g), opts);
}

DominationResult total_domination_number(const LoopGraph& g, const SolveOptions& opts) {
    return solve_cover(total_domination_instance(g), opts);
}

bool is_dominating_set(const LoopGraph& g, const std::vector<uint32_t>& xs) {
    Bitset members = to_member_set(g, xs);
    for (uint32_t v = 0; v < g.size(); ++v) {
        if (members.test(v)) continue;
        if (!g.row(v).intersects(members)) return false;
    }
    return true;
}

bool is_total_dominating_set(const LoopGraph& g, const std::vector<uint32_t>& xs) {
    Bitset members = to_member_set(g, xs);
    for (uint32_t v = 0; v < g.size(); ++v)
        if (!g.total_neighborhood(v).intersects(members)) return false;
    return true;
}

MinimumSetEnumeration enumerate_minimum_total_dominating_sets(const LoopGraph& g,
                                                              std::size_t cap) {
    MinimumSetEnumeration out;
    DominationResult base = total_domination_number(g);
    if (!base.finite()) return out;
    const uint32_t k = *base.value;
    const uint32_t n = g.size();

    CoverInstance inst = total_domination_instance(g);

    // suffix_cover[v]: union of coverage over all candidates >= v
    std::vector<Bitset> suffix_cover(n + 1, Bitset(n));
    for (uint32_t v = n; v-- > 0;) suffix_cover[v] = suffix_cover[v + 1] | inst.coverers[v];

    std::vector<uint32_t> partial;
    bool stop = false;
    auto dfs = [&](auto&& self, uint32_t start, const Bitset& uncovered) -> void {
        if (stop) return;
        if (partial.size() == k) {
            if (uncovered.none()) {
                if (out.sets.size() == cap) {
                    out.truncated = true;
                    stop = true;
                    return;
                }
                out.sets.push_back(partial);
            }
            return;
        }
        for (uint32_t v = start; v < n; ++v) {
            if (!suffix_cover[v].contains(uncovered)) return; // suffix can only shrink
            partial.push_back(v);
            self(self, v + 1, and_not(uncovered, inst.coverers[v]));
            partial.pop_back();
            if (stop) return;
        }
    };
    dfs(dfs, 0, inst.universe);
    return out;
}

TwinReduction twin_reduce(const LoopGraph& g) {
    const uint32_t n = g.size();
    TwinReduction red;
    red.class_of.resize(n);

    std::map<Bitset, uint32_t> classes;
    for (uint32_t v = 0; v < n; ++v) {
        auto [it, inserted] = classes.emplace(g.total_neighborhood(v),
                                              static_cast<uint32_t>(red.representative.size()));
        if (inserted) red.representative.push_back(v);
        red.class_of[v] = it->second;
    }

    const uint32_t m = static_cast<uint32_t>(red.representative.size());
    LoopGraph reduced(m);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t ri = red.representative[i];
        if (g.has_loop(ri)) reduced.set_loop(i);
        for (uint32_t j = i + 1; j < m; ++j)
            if (g.adjacent(ri, red.representative[j])) reduced.add_edge(i, j);
    }
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(m);
        for (uint32_t r : red.representative) labels.push_back(g.labels()[r]);
        reduced.set_labels(std::move(labels));
    }
    red.graph = std::move(reduced);
    return red;
}

std::vector<uint32_t> TwinReduction::lift(const std::vector<uint32_t>& reduced) const {
    std::vector<uint32_t> out;
    out.reserve(reduced.size());
    for (uint32_t v : reduced) out.push_back(representative[v]);
    return out;
}

} // namespace zdg
