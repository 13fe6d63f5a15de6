#include "orientdom/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "orientdom/graph6.hpp"

namespace orientdom {

using ordered_json = nlohmann::ordered_json;

OptimizeOptions optimize_options(const RunConfig& cfg) {
    OptimizeOptions o;
    o.workers = cfg.workers;
    o.edge_cap = cfg.edge_cap;
    return o;
}

CheckBudget check_budget(const RunConfig& cfg) {
    CheckBudget b;
    b.workers = cfg.workers;
    b.node_budget = cfg.node_budget;
    b.seed = cfg.seed;
    return b;
}

std::string dir_bits_string(const std::vector<uint8_t>& dir) {
    std::string s;
    s.reserve(dir.size());
    for (uint8_t d : dir) s.push_back(d ? '1' : '0');
    return s;
}

std::vector<uint8_t> parse_dir_bits(const std::string& bits) {
    std::vector<uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            fail(ErrorCode::ParseError, "direction bits must be 0s and 1s");
        out.push_back(c == '1');
    }
    return out;
}

namespace {

const char* anchor_for(const std::string& quantity) {
    if (quantity == "dom_t") return "dom_t(G) = min{gamma_t(G_f) : f a valid orientation of G}";
    if (quantity == "DOM_t") return "DOM_t(G) = max{gamma_t(G_f) : f a valid orientation of G}";
    if (quantity == "DOM") return "DOM(G) = max{gamma(G_f) : f an orientation of G}";
    if (quantity == "gamma_t")
        return "gamma_t(D): minimum size of a set S with an arc from S into every vertex";
    if (quantity == "gamma")
        return "gamma(D): minimum size of a set S with an arc from S into every vertex outside S";
    if (quantity == "spectrum") return "{gamma_t(G_f) : f a valid orientation of G}";
    return "";
}

long long elapsed_ms(double seconds, const RunConfig& cfg) {
    return cfg.timing ? static_cast<long long>(std::llround(seconds * 1000.0)) : 0;
}

ordered_json witness_json(const Graph& g, const std::vector<uint8_t>& dir,
                          const std::vector<int>& set) {
    ordered_json w;
    w["graph6"] = encode_graph6(g);
    w["dirBits"] = dir_bits_string(dir);
    w["tdSet"] = set;
    return w;
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows)
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    return out.str();
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

} // namespace

std::string emit_extremum_report(const ExtremumReport& r, const RunConfig& cfg) {
    std::string quantity = quantity_name(r.quantity);
    if (cfg.format == RunConfig::Format::Dot) return to_dot(r.witness, r.witness_cert.set);
    if (cfg.format == RunConfig::Format::Text) {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"quantity", quantity},
            {"value", std::to_string(r.value)},
            {"exact", r.exact ? "true" : "false (best so far; budget ran out)"},
            {"witnessGraph6", encode_graph6(r.witness.base)},
            {"witnessDirBits", dir_bits_string(r.witness_dir)},
            {"witnessTdSet", join_ints(r.witness_cert.set)},
            {"orientations", std::to_string(r.orientations_considered)},
            {"pruned", std::to_string(r.pruned_subtrees)},
            {"elapsedMs", std::to_string(elapsed_ms(r.elapsed_seconds, cfg))},
        };
        return table(rows);
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["quantity"] = quantity;
    j["value"] = r.value;
    j["exact"] = r.exact;
    if (!r.exact) j["valueMeaning"] = quantity == "dom_t" ? "upper bound" : "lower bound";
    j["witness"] = witness_json(r.witness.base, r.witness_dir, r.witness_cert.set);
    j["stats"] = {{"nodes", r.orientations_considered},
                  {"pruned", r.pruned_subtrees},
                  {"elapsedMs", elapsed_ms(r.elapsed_seconds, cfg)}};
    j["paperAnchor"] = anchor_for(quantity);
    return j.dump(2) + "\n";
}

std::string emit_solve_report(const Orientation& o, const std::string& quantity,
                              const SolveResult& r, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Dot) return to_dot(o, r.cert.set);
    if (cfg.format == RunConfig::Format::Text) {
        return table({
            {"quantity", quantity},
            {"value", std::to_string(r.value)},
            {"exact", "true"},
            {"witnessGraph6", encode_graph6(o.base)},
            {"witnessDirBits", dir_bits_string(o.dir)},
            {"witnessTdSet", join_ints(r.cert.set)},
            {"nodes", std::to_string(r.stats.nodes_explored)},
            {"forced", std::to_string(r.stats.forced_vertices)},
            {"elapsedMs", std::to_string(elapsed_ms(r.stats.elapsed_seconds, cfg))},
        });
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["quantity"] = quantity;
    j["value"] = r.value;
    j["exact"] = true;
    j["witness"] = witness_json(o.base, o.dir, r.cert.set);
    j["dominatorOf"] = r.cert.dominator_of;
    j["stats"] = {{"nodes", r.stats.nodes_explored},
                  {"forced", r.stats.forced_vertices},
                  {"elapsedMs", elapsed_ms(r.stats.elapsed_seconds, cfg)}};
    j["paperAnchor"] = anchor_for(quantity);
    return j.dump(2) + "\n";
}

std::string emit_spectrum_report(const Graph& g, const Spectrum& sp, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Text) {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"quantity", "spectrum"},
            {"values", join_ints(sp.values)},
            {"contiguous", sp.contiguous ? "true" : "false"},
            {"exact", sp.exact ? "true" : "false (budget ran out)"},
            {"orientations", std::to_string(sp.orientations_considered)},
            {"elapsedMs", std::to_string(elapsed_ms(sp.elapsed_seconds, cfg))},
        };
        return table(rows);
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["quantity"] = "spectrum";
    j["graph6"] = encode_graph6(g);
    j["values"] = sp.values;
    j["contiguous"] = sp.contiguous;
    j["exact"] = sp.exact;
    ordered_json w = ordered_json::object();
    for (const auto& [value, dir] : sp.witnesses)
        w[std::to_string(value)] = dir_bits_string(dir);
    j["witnesses"] = w;
    j["stats"] = {{"nodes", sp.orientations_considered},
                  {"pruned", sp.pruned_subtrees},
                  {"elapsedMs", elapsed_ms(sp.elapsed_seconds, cfg)}};
    j["paperAnchor"] = anchor_for("spectrum");
    return j.dump(2) + "\n";
}

namespace {

const char* relation_name(PredictedRelation r) {
    switch (r) {
        case PredictedRelation::Equals: return "equals";
        case PredictedRelation::AtLeast: return "atLeast";
        case PredictedRelation::AtMost: return "atMost";
        case PredictedRelation::Between: return "between";
    }
    return "?";
}

const char* predicted_for_name(PredictedFor q) {
    switch (q) {
        case PredictedFor::DomT: return "dom_t";
        case PredictedFor::DOMT: return "DOM_t";
        case PredictedFor::GammaTOfWitness: return "gamma_t_of_witness";
    }
    return "?";
}

} // namespace

std::string emit_construction_report(const std::string& name, const ConstructionResult& c,
                                     const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Dot) return to_dot(c.orientation, c.candidate_set);
    if (cfg.format == RunConfig::Format::Text) {
        std::string predicted = std::string(predicted_for_name(c.predicted.quantity)) + " " +
                                relation_name(c.predicted.relation) + " " +
                                std::to_string(c.predicted.bound);
        if (c.predicted.relation == PredictedRelation::Between)
            predicted += " and " + std::to_string(c.predicted.bound_hi);
        return table({
            {"construction", name},
            {"graph6", encode_graph6(c.orientation.base)},
            {"dirBits", dir_bits_string(c.orientation.dir)},
            {"candidateSet", join_ints(c.candidate_set)},
            {"candidateSize", std::to_string(c.candidate_set.size())},
            {"predicted", predicted},
        });
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["construction"] = name;
    j["witness"] = witness_json(c.orientation.base, c.orientation.dir, c.candidate_set);
    ordered_json p;
    p["quantity"] = predicted_for_name(c.predicted.quantity);
    p["relation"] = relation_name(c.predicted.relation);
    p["bound"] = c.predicted.bound;
    if (c.predicted.relation == PredictedRelation::Between) p["boundHi"] = c.predicted.bound_hi;
    j["predicted"] = p;
    return j.dump(2) + "\n";
}

std::string emit_check_outcome(const CheckOutcome& oc, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Text) {
        const char* status = oc.status == CheckOutcome::Status::Verified  ? "verified"
                             : oc.status == CheckOutcome::Status::Refuted ? "REFUTED"
                                                                          : "skipped";
        return std::string(status) + "  " + oc.check_id + "  " + oc.target + "  " + oc.detail + "\n";
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["checkId"] = oc.check_id;
    j["target"] = oc.target;
    j["status"] = oc.status == CheckOutcome::Status::Verified  ? "verified"
                  : oc.status == CheckOutcome::Status::Refuted ? "refuted"
                                                               : "skipped";
    j["detail"] = oc.detail;
    if (oc.counterexample) {
        ordered_json ce;
        ce["graph6"] = encode_graph6(oc.counterexample->graph);
        if (oc.counterexample->dir) ce["dirBits"] = dir_bits_string(*oc.counterexample->dir);
        ce["set"] = oc.counterexample->vertex_set;
        j["counterexample"] = ce;
    } else {
        j["counterexample"] = nullptr;
    }
    if (!oc.measurements.empty()) {
        ordered_json ms = ordered_json::object();
        for (const auto& [k, v] : oc.measurements) ms[k] = v;
        j["measurements"] = ms;
    }
    for (const auto& info : list_checks())
        if (info.id == oc.check_id) j["paperAnchor"] = info.anchor;
    return j.dump() + "\n";
}

std::string emit_scan_summary(const ScanSummary& s, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Text) {
        return table({
            {"graphs", std::to_string(s.graphs_processed)},
            {"verified", std::to_string(s.verified)},
            {"refuted", std::to_string(s.refuted)},
            {"skipped", std::to_string(s.skipped)},
            {"parseErrors", std::to_string(s.parse_errors)},
            {"maxGap", std::to_string(s.max_gap_DOMt_minus_domt)},
            {"domtExtremal", std::to_string(s.domt_extremal.size()) + " graphs"},
            {"cursor", std::to_string(s.cursor)},
        });
    }
    ordered_json j;
    j["schemaVersion"] = 1;
    j["summary"] = true;
    j["graphs"] = s.graphs_processed;
    j["verified"] = s.verified;
    j["refuted"] = s.refuted;
    j["skipped"] = s.skipped;
    j["parseErrors"] = s.parse_errors;
    j["maxGapDOMtMinusDomt"] = s.max_gap_DOMt_minus_domt;
    j["domtExtremal"] = s.domt_extremal;
    j["DOMtExtremal"] = s.DOMt_extremal;
    j["equalExtrema"] = s.equal_extrema;
    j["cursor"] = s.cursor;
    return j.dump() + "\n";
}

} // namespace orientdom
