#include "zdg/harness.hpp"

#include "zdg/ring_dsl.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace zdg::harness {

namespace {

std::string opt_to_string(const std::optional<uint32_t>& v) {
    return v ? std::to_string(*v) : "inf";
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::vector<std::string> catalog_default(const CatalogBounds& bounds) {
    std::vector<std::string> specs;
    std::set<std::string> seen;
    auto push = [&](const std::string& s) {
        if (seen.insert(s).second) specs.push_back(s);
    };

    for (uint32_t n = 2; n <= bounds.max_zn; ++n) push("Z" + std::to_string(n));
    for (uint32_t a = 2; a <= bounds.max_product_factor; ++a)
        for (uint32_t b = a; b <= bounds.max_product_factor; ++b)
            push("Z" + std::to_string(a) + " x Z" + std::to_string(b));

    if (bounds.include_special) {
        push("Z2 x Z2 x Z2");
        push("Z2 x Z2 x Z2 x Z2");
        // the seven local rings with girth-infinity graphs
        push("Z4");
        push("Z8");
        push("Z9");
        push("Z2[x]/(x^2)");
        push("Z3[x]/(x^2)");
        push("Z2[x]/(x^3)");
        push("Z4[x]/(x^2+2, 2x)");
        // mixed products from girth-infinity case 2
        push("Z2 x Z4");
        push("Z2 x Z2[x]/(x^2)");
    }
    return specs;
}

bool splits_z2_times_order4_local(const FiniteRing& ring) {
    bool found = false;
    ring.idempotents().for_each([&](uint32_t e) {
        if (found || e == 0 || e == ring.one()) return;
        if (ring.corner(static_cast<Elem>(e)).size() != 2) return;
        Elem f = ring.add(ring.one(), ring.neg(static_cast<Elem>(e)));
        auto fc = ring.corner(f);
        if (fc.size() != 4) return;
        uint32_t zero_divisors = 0;
        for (Elem a : fc) {
            if (a == 0) continue;
            for (Elem b : fc) {
                if (b == 0) continue;
                if (ring.mul(a, b) == 0) {
                    ++zero_divisors;
                    break;
                }
            }
        }
        if (zero_divisors == 1) found = true;
    });
    return found;
}

namespace {

CheckResult skip(const char* name, std::string why) {
    return {name, Verdict::kSkip, std::move(why)};
}
CheckResult pass(const char* name, std::string detail = "") {
    return {name, Verdict::kPass, std::move(detail)};
}
CheckResult fail(const char* name, std::string detail) {
    return {name, Verdict::kFail, std::move(detail)};
}

std::string gamma_pair(const InvariantRow& row) {
    return "(gamma, gamma_t) = (" + opt_to_string(row.gamma) + ", " + opt_to_string(row.gamma_t) + ")";
}

} // namespace

CheckResult check_main_theorem(const InvariantRow& row) {
    const char* name = "main_theorem";
    if (row.skipped) return skip(name, row.skip_reason);
    if (row.z2xd_witness) {
        if (row.gamma == 1u && row.gamma_t == 2u) return pass(name, gamma_pair(row));
        return fail(name, "Z2 x D ring with " + gamma_pair(row) + ", expected (1, 2)");
    }
    if (row.gamma_t && row.gamma == row.gamma_t) return pass(name, gamma_pair(row));
    return fail(name, "gamma != gamma_t: " + gamma_pair(row));
}

CheckResult check_gamma_one(const InvariantRow& row) {
    const char* name = "gamma_one";
    if (row.skipped) return skip(name, row.skip_reason);
    bool lhs = row.gamma == 1u;
    bool rhs = row.z2xd_witness.has_value() || row.ann_witness.has_value();
    if (lhs == rhs) return pass(name);
    return fail(name, "gamma = " + opt_to_string(row.gamma) + " but z2xD = " +
                          (row.z2xd_witness ? "true" : "false") + ", ann_witness = " +
                          (row.ann_witness ? row.ann_witness_label : "none"));
}

CheckResult check_total_one(const InvariantRow& row) {
    const char* name = "total_one";
    if (row.skipped) return skip(name, row.skip_reason);
    bool lhs = row.gamma_t == 1u;
    bool rhs = row.ann_witness.has_value();
    if (lhs == rhs) return pass(name);
    return fail(name, "gamma_t = " + opt_to_string(row.gamma_t) + " but ann_witness = " +
                          (row.ann_witness ? row.ann_witness_label : "none"));
}

CheckResult check_metric_bounds(const InvariantRow& row) {
    const char* name = "metric_bounds";
    if (row.skipped) return skip(name, row.skip_reason);
    if (!row.connected) return fail(name, "graph disconnected");
    if (!row.diameter || *row.diameter > 3)
        return fail(name, "diameter = " + opt_to_string(row.diameter));
    if (row.girth && *row.girth != 3 && *row.girth != 4)
        return fail(name, "girth = " + opt_to_string(row.girth));
    return pass(name, "diameter " + opt_to_string(row.diameter) + ", girth " + opt_to_string(row.girth));
}

CheckResult check_girth_consequences(const InvariantRow& row) {
    const char* name = "girth_consequences";
    if (row.skipped) return skip(name, row.skip_reason);
    bool gamma_t_ge3 = !row.gamma_t || *row.gamma_t >= 3;
    if (gamma_t_ge3 && row.girth != 3u)
        return fail(name, "gamma_t >= 3 but girth = " + opt_to_string(row.girth));
    if (row.girth == 4u && !(row.gamma == 2u && row.gamma_t == 2u))
        return fail(name, "girth 4 but " + gamma_pair(row));
    bool girth_4_or_inf = !row.girth || *row.girth == 4;
    if (girth_4_or_inf) {
        bool ok = (row.gamma_t && *row.gamma_t <= 2) || row.z2xd_witness.has_value();
        if (!ok) return fail(name, "girth 4/inf but gamma_t = " + opt_to_string(row.gamma_t) +
                                       " and not Z2 x D");
    }
    return pass(name);
}

CheckResult check_girth_inf_cases(const InvariantRow& row, const FiniteRing& ring) {
    const char* name = "girth_inf_cases";
    if (row.skipped) return skip(name, row.skip_reason);
    if (row.girth) return skip(name, "girth finite");

    bool case1 = row.z2xd_witness.has_value();
    bool case2 = !case1 && splits_z2_times_order4_local(ring);
    uint32_t want_gamma = case1 ? 1 : case2 ? 2 : 1;
    uint32_t want_gamma_t = case1 ? 2 : case2 ? 2 : 1;
    const char* which = case1 ? "case 1 (Z2 x D)" : case2 ? "case 2 (Z2 x local order 4)" : "case 3";
    if (row.gamma == want_gamma && row.gamma_t == want_gamma_t)
        return pass(name, which);
    return fail(name, std::string(which) + " expects (" + std::to_string(want_gamma) + ", " +
                          std::to_string(want_gamma_t) + ") but " + gamma_pair(row));
}

CheckResult check_clique_lemma(const FiniteRing& ring, const LoopGraph& graph,
                               std::size_t zstar_cap, std::size_t enum_cap) {
    const char* name = "clique_lemma";
    if (graph.size() > zstar_cap) return skip(name, "z_star above enumeration cap");
    MinimumSetEnumeration en = enumerate_minimum_total_dominating_sets(graph, enum_cap);
    if (en.truncated) return skip(name, "enumeration truncated");
    auto verts = ring.zero_divisor_set().to_vector();
    for (const auto& set : en.sets) {
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j) {
                Elem a = verts[set[i]], b = verts[set[j]];
                if (ring.mul(a, b) != 0)
                    return fail(name, "minimum total dominating set contains non-adjacent pair " +
                                          ring.element_label(a) + ", " + ring.element_label(b));
            }
    }
    return pass(name, std::to_string(en.sets.size()) + " sets enumerated");
}

RingReport analyze_spec(const std::string& spec, const HarnessOptions& opts) {
    RingReport report;
    InvariantRow& row = report.row;
    row.spec = spec;

    std::optional<FiniteRing> ring;
    try {
        ring = dsl::compile(spec);
    } catch (const Error& e) {
        row.skipped = true;
        row.skip_reason = std::string("compile error: ") + e.what();
    }

    std::optional<LoopGraph> graph;
    if (ring) {
        row.order = ring->order();
        if (auto e = ring->is_z2_times_domain()) {
            row.z2xd_witness = *e;
            row.z2xd_witness_label = ring->element_label(*e);
        }
        if (auto a = ring->annihilator_ideal_witness()) {
            row.ann_witness = *a;
            row.ann_witness_label = ring->element_label(*a);
        }
        Bitset zs = ring->zero_divisor_set();
        row.z_star = zs.count();
        if (row.z_star == 0) {
            row.skipped = true;
            row.skip_reason = "no zero-divisors (domain)";
        } else {
            graph = build_zdg(*ring);
            row.connected = is_connected(*graph);
            row.diameter = diameter(*graph);
            row.girth = girth(*graph);
            if (auto u = universal_vertex(*graph)) {
                row.universal = *u;
                row.universal_label = graph->vertex_name(*u);
            }
            DominationResult dom = domination_number(*graph);
            DominationResult tot = total_domination_number(*graph);
            row.gamma = dom.value;
            row.gamma_t = tot.value;
            for (uint32_t v : dom.witness) row.gamma_witness.push_back(graph->vertex_name(v));
            for (uint32_t v : tot.witness) row.gamma_t_witness.push_back(graph->vertex_name(v));
        }
    }

    report.checks.push_back(check_main_theorem(row));
    report.checks.push_back(check_gamma_one(row));
    report.checks.push_back(check_total_one(row));
    if (row.skipped)
        report.checks.push_back(skip("clique_lemma", row.skip_reason));
    else
        report.checks.push_back(
            check_clique_lemma(*ring, *graph, opts.clique_zstar_cap, opts.enum_cap));
    report.checks.push_back(check_girth_consequences(row));
    if (row.skipped)
        report.checks.push_back(skip("girth_inf_cases", row.skip_reason));
    else
        report.checks.push_back(check_girth_inf_cases(row, *ring));
    report.checks.push_back(check_metric_bounds(row));
    return report;
}

VerificationReport run_all(const std::vector<std::string>& catalog, const HarnessOptions& opts) {
    VerificationReport report;
    report.rings.resize(catalog.size());

    const uint32_t jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || catalog.size() <= 1) {
        for (size_t i = 0; i < catalog.size(); ++i)
            report.rings[i] = analyze_spec(catalog[i], opts);
        return report;
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= catalog.size()) break;
            report.rings[i] = analyze_spec(catalog[i], opts);
        }
    };
    std::vector<std::thread> pool;
    for (uint32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return report;
}

std::size_t VerificationReport::failed_checks() const {
    std::size_t c = 0;
    for (const auto& r : rings)
        for (const auto& chk : r.checks) c += chk.verdict == Verdict::kFail;
    return c;
}

std::size_t VerificationReport::passed_checks() const {
    std::size_t c = 0;
    for (const auto& r : rings)
        for (const auto& chk : r.checks) c += chk.verdict == Verdict::kPass;
    return c;
}

std::size_t VerificationReport::skipped_checks() const {
    std::size_t c = 0;
    for (const auto& r : rings)
        for (const auto& chk : r.checks) c += chk.verdict == Verdict::kSkip;
    return c;
}

std::size_t VerificationReport::skipped_rows() const {
    std::size_t c = 0;
    for (const auto& r : rings) c += r.row.skipped;
    return c;
}

std::optional<std::string> VerificationReport::first_failure() const {
    for (const auto& r : rings)
        for (const auto& chk : r.checks)
            if (chk.verdict == Verdict::kFail) return r.row.spec;
    return std::nullopt;
}

std::string row_to_csv_line(const InvariantRow& row, std::size_t checks_failed) {
    auto field = [&](const std::optional<uint32_t>& v) {
        return row.skipped ? std::string() : opt_to_string(v);
    };
    std::string out = "\"" + row.spec + "\"";
    out += "," + std::to_string(row.order);
    out += "," + std::to_string(row.z_star);
    out += "," + field(row.gamma);
    out += "," + field(row.gamma_t);
    out += "," + field(row.girth);
    out += "," + field(row.diameter);
    out += row.z2xd_witness ? ",true" : ",false";
    out += "," + (row.ann_witness ? std::to_string(*row.ann_witness) : std::string());
    out += "," + std::to_string(checks_failed);
    return out;
}

std::string VerificationReport::to_csv() const {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rings) {
        std::size_t failed = 0;
        for (const auto& chk : r.checks) failed += chk.verdict == Verdict::kFail;
        out += row_to_csv_line(r.row, failed) + "\n";
    }
    return out;
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    default: return "skip";
    }
}

nlohmann::ordered_json inf_or(const std::optional<uint32_t>& v) {
    if (v) return *v;
    return "inf";
}

} // namespace

nlohmann::ordered_json row_to_json(const InvariantRow& row) {
    nlohmann::ordered_json j;
    j["spec"] = row.spec;
    j["order"] = row.order;
    j["skipped"] = row.skipped;
    if (row.skipped) {
        j["skip_reason"] = row.skip_reason;
    }
    j["z_star"] = row.z_star;
    if (!row.skipped) {
        j["gamma"] = inf_or(row.gamma);
        j["gamma_t"] = inf_or(row.gamma_t);
        j["girth"] = inf_or(row.girth);
        j["diameter"] = inf_or(row.diameter);
        j["connected"] = row.connected;
        j["gamma_witness"] = row.gamma_witness;
        j["gamma_t_witness"] = row.gamma_t_witness;
        if (row.universal)
            j["universal_vertex"] = row.universal_label;
        else
            j["universal_vertex"] = nullptr;
    }
    j["z2xD"] = row.z2xd_witness.has_value();
    if (row.z2xd_witness) {
        j["z2xD_witness"] = row.z2xd_witness_label;
        j["z2xD_witness_index"] = *row.z2xd_witness;
    }
    if (row.ann_witness) {
        j["ann_witness"] = row.ann_witness_label;
        j["ann_witness_index"] = *row.ann_witness;
    } else {
        j["ann_witness"] = nullptr;
    }
    return j;
}

InvariantRow row_from_json(const nlohmann::json& j) {
    InvariantRow row;
    row.spec = j.at("spec").get<std::string>();
    row.order = j.at("order").get<uint32_t>();
    row.skipped = j.at("skipped").get<bool>();
    if (row.skipped && j.contains("skip_reason"))
        row.skip_reason = j.at("skip_reason").get<std::string>();
    row.z_star = j.at("z_star").get<uint32_t>();
    auto opt_field = [&](const char* key) -> std::optional<uint32_t> {
        if (!j.contains(key) || j.at(key).is_string()) return std::nullopt;
        return j.at(key).get<uint32_t>();
    };
    if (!row.skipped) {
        row.gamma = opt_field("gamma");
        row.gamma_t = opt_field("gamma_t");
        row.girth = opt_field("girth");
        row.diameter = opt_field("diameter");
        row.connected = j.at("connected").get<bool>();
        row.gamma_witness = j.at("gamma_witness").get<std::vector<std::string>>();
        row.gamma_t_witness = j.at("gamma_t_witness").get<std::vector<std::string>>();
        if (!j.at("universal_vertex").is_null()) {
            row.universal = j.value("universal_vertex_index", 0u);
            row.universal_label = j.at("universal_vertex").get<std::string>();
        }
    }
    if (j.contains("universal_vertex_index")) {
        // already handled above; key kept for forward compatibility
    }
    return row;
}

InvariantRow row_from_json_unused(const nlohmann::json& j) {
    InvariantRow row;
    row.spec = j.at("spec").get<std::string>();
    {
    }
    if (j.at("z2xD").get<bool>()) {
        row.z2xd_witness = j.value("z2xD_witness_index", 0u);
        row.z2xd_witness_label = j.at("z2xD_witness").get<std::string>();
    }
    if (!j.at("ann_witness").is_null()) {
        row.ann_witness = j.value("ann_witness_index", 0u);
        row.ann_witness_label = j.at("ann_witness").get<std::string>();
    }
    return row;
}

std::string VerificationReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["version"] = kArtifactVersion;
    j["summary"] = {
        {"rings", rings.size()},
        {"skipped_rings", skipped_rows()},
        {"checks_passed", passed_checks()},
        {"checks_failed", failed_checks()},
        {"checks_skipped", skipped_checks()},
    };
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rings) {
        nlohmann::ordered_json jr = row_to_json(r.row);
        auto checks = nlohmann::ordered_json::array();
        for (const auto& chk : r.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = chk.name;
            jc["verdict"] = verdict_name(chk.verdict);
            if (!chk.detail.empty()) jc["detail"] = chk.detail;
            checks.push_back(std::move(jc));
        }
        jr["checks"] = std::move(checks);
        arr.push_back(std::move(jr));
    }
    j["rings"] = std::move(arr);
    return j.dump(indent) + "\n";
}

} // namespace zdg::harness
