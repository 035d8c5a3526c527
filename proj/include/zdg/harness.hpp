#pragma once

#include "zdg/domination.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zdg::harness {

inline constexpr const char* kArtifactVersion = "zdg-1";

struct CatalogBounds {
    uint32_t max_zn = 200;
    uint32_t max_product_factor = 13;
    bool include_special = true; // girth-infinity quotients, mixed products, Z2 powers
};

// Canonical, deduplicated spec strings in deterministic order:
// Z_n (2..max_zn), Z_a x Z_b (a <= b <= max_product_factor), then the
// special rings when enabled.
std::vector<std::string> catalog_default(const CatalogBounds& bounds = {});

struct InvariantRow {
    std::string spec;
    uint32_t order = 0;
    bool skipped = false;     // domain (empty graph) or compile failure
    std::string skip_reason;
    uint32_t z_star = 0;
    std::optional<uint32_t> gamma;
    std::optional<uint32_t> gamma_t;  // nullopt = infinite (never for rings)
    std::optional<uint32_t> girth;    // nullopt = infinite
    std::optional<uint32_t> diameter; // nullopt = infinite
    bool connected = false;
    std::optional<Elem> z2xd_witness;
    std::string z2xd_witness_label;
    std::optional<Elem> ann_witness;
    std::string ann_witness_label;
    std::optional<uint32_t> universal;
    std::string universal_label;
    std::vector<std::string> gamma_witness;   // element labels
    std::vector<std::string> gamma_t_witness; // element labels
};

enum class Verdict { kPass, kFail, kSkip };

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::kSkip;
    std::string detail; // counterexample payload on failure
};

// Theorem checks on a computed row. Skips encode unmet preconditions.
CheckResult check_main_theorem(const InvariantRow& row);
CheckResult check_gamma_one(const InvariantRow& row);
CheckResult check_total_one(const InvariantRow& row);
CheckResult check_metric_bounds(const InvariantRow& row);
CheckResult check_girth_consequences(const InvariantRow& row);
// Needs the ring to split off a Z_2 factor whose complement is Z_4 or
// Z_2[x]/(x^2) (girth-infinity case 2).
CheckResult check_girth_inf_cases(const InvariantRow& row, const FiniteRing& ring);
CheckResult check_clique_lemma(const FiniteRing& ring, const LoopGraph& graph,
                               std::size_t zstar_cap = 30, std::size_t enum_cap = 10000);

// True when some idempotent splits R as Z_2 x S with S of order 4 having
// exactly one nonzero zero-divisor (S = Z_4 or Z_2[x]/(x^2)).
bool splits_z2_times_order4_local(const FiniteRing& ring);

struct HarnessOptions {
    CatalogBounds bounds;
    uint32_t jobs = 1;
    std::size_t clique_zstar_cap = 30;
    std::size_t enum_cap = 10000;
};

struct RingReport {
    InvariantRow row;
    std::vector<CheckResult> checks;
};

struct VerificationReport {
    std::vector<RingReport> rings;

    std::size_t failed_checks() const;
    std::size_t passed_checks() const;
    std::size_t skipped_checks() const;
    std::size_t skipped_rows() const;
    // Spec string of the first ring with a failing check, if any.
    std::optional<std::string> first_failure() const;

    std::string to_csv() const;
    std::string to_json(int indent = 2) const;
};

// Computes the full row for one spec; domains and compile failures become
// skip rows rather than errors.
RingReport analyze_spec(const std::string& spec, const HarnessOptions& opts = {});

// Runs analyze_spec over the catalog with a worker pool; results are merged
// in catalog order, independent of scheduling.
VerificationReport run_all(const std::vector<std::string>& catalog,
                           const HarnessOptions& opts = {});

std::string row_to_csv_line(const InvariantRow& row, std::size_t checks_failed);
inline constexpr const char* kCsvHeader =
    "spec,order,z_star,gamma,gamma_t,girth,diameter,z2xD,ann_witness,checks_failed";

} // namespace zdg::harness
