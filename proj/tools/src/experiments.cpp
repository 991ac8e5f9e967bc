#include "dmagic/app/experiments.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dmagic/claims.hpp"
#include "dmagic/constructions.hpp"
#include "dmagic/enumerate.hpp"
#include "dmagic/fracdom.hpp"
#include "dmagic/generators.hpp"
#include "dmagic/graph6.hpp"
#include "dmagic/parallel.hpp"
#include "dmagic/screeners.hpp"
#include "dmagic/trees.hpp"

#ifndef DMAGIC_VERSION
#define DMAGIC_VERSION "0.0.0"
#endif

namespace dmagic::app {

const char* tool_version() { return DMAGIC_VERSION; }

namespace {

using Params = std::map<std::string, std::string>;

std::size_t param_size(const Params& params, const std::string& key, std::size_t lo, std::size_t hi)
{
    const auto& text = params.at(key);
    std::size_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || value < lo || value > hi)
        throw std::invalid_argument("parameter " + key + "=" + text + " must be an integer in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return value;
}

std::string labels_text(const Labeling& f)
{
    std::string out;
    for (Label l : f.labels()) out += (out.empty() ? "" : " ") + std::to_string(l);
    return out;
}

std::string rules_text(const std::vector<Refutation>& refs)
{
    std::string out;
    for (const auto& r : refs) out += (out.empty() ? "" : "+") + std::string(rule_id(r.rule));
    return out;
}

/// Common per-instance fields: status, constant, labels, predicted constant,
/// screen rules and node count.
Json solve_fields(const Graph& g, const DistanceSet& set, const SearchOptions& budget, SearchOutcome* keep = nullptr)
{
    Json rec;
    auto outcome = solve(g, set, budget);
    rec["status"] = to_string(outcome.status);
    if (outcome.found()) {
        rec["constant"] = outcome.certificates.front().constant();
        rec["labels"] = labels_text(outcome.certificates.front().labeling());
    } else {
        rec["constant"] = nullptr;
        rec["labels"] = nullptr;
    }
    try {
        rec["predicted"] = predicted_constant(g, set).exact.to_string();
    } catch (const FracdomInfeasible&) {
        rec["predicted"] = nullptr;
    }
    rec["screen"] = rules_text(outcome.refutations);
    rec["nodes"] = outcome.stats.nodes;
    if (keep) *keep = std::move(outcome);
    return rec;
}

struct Tally {
    std::size_t found = 0, none = 0, aborted = 0;

    void add(const Json& rec)
    {
        const auto& s = rec["status"];
        if (s == "FOUND") ++found;
        else if (s == "ABORTED") ++aborted;
        else ++none;
    }
    Json json() const { return Json{{"found", found}, {"exhaustedNone", none}, {"aborted", aborted}}; }
};

/// Connected or not, every isomorphism class of order n that passes keep.
/// Orders up to 7 come from the enumerator; order 8 extends order-7
/// representatives by one vertex and deduplicates canonically.
std::vector<Graph> graphs_of_order(std::size_t n, const std::function<bool(const Graph&)>& keep)
{
    if (n <= kMaxEnumerationOrder) return enumerate_graphs(n, keep);
    if (n != kMaxEnumerationOrder + 1) throw std::invalid_argument("graph sweeps support orders up to 8");
    std::map<std::uint64_t, Graph> unique;
    for (auto& g : extend_by_vertex(enumerate_graphs(n - 1)))
        if (keep(g)) unique.emplace(canonical_form(g).code, canonical_graph(g));
    std::vector<Graph> out;
    for (auto& [code, g] : unique) out.push_back(std::move(g));
    return out;
}

Report make_report(const std::string& name, const Params& params)
{
    Report r;
    r.tool_version = tool_version();
    r.experiment = name;
    for (const auto& [k, v] : params) r.parameters[k] = v;
    return r;
}

void finish(Report& report, const std::vector<Json>& records)
{
    Tally t;
    for (const auto& rec : records) {
        if (rec.contains("status")) t.add(rec);
        if (rec.contains("status") && rec["status"] == "ABORTED") report.incomplete = true;
    }
    report.records = records;
    report.summary["instances"] = records.size();
    report.summary["outcomes"] = t.json();
}

std::string pair_key(std::size_t a, std::size_t b) { return std::to_string(a) + ":" + std::to_string(b); }

// ---------------------------------------------------------------------------

Report cycles_singleton(const Params& params, const SearchOptions& budget)
{
    const auto max_n = param_size(params, "max_n", 3, 40);
    struct Case { std::size_t n, k; };
    std::vector<Case> cases;
    for (std::size_t n = 3; n <= max_n; ++n)
        for (std::size_t k = 1; k <= n / 2; ++k) cases.push_back({n, k});

    auto report = make_report("cycles-singleton", params);
    auto records = parallel_map(cases.size(), [&](std::size_t i) {
        auto [n, k] = cases[i];
        DistanceSet set{static_cast<int>(k)};
        Json rec{{"n", n}, {"k", k}, {"D", set.to_string()}};
        rec.update(solve_fields(cycle(n), set, budget));
        rec["claimPredicts"] = predict_cycle_singleton(n, k);
        return rec;
    });
    std::vector<std::string> found;
    for (const auto& rec : records) {
        if (rec["status"] == "ABORTED") continue;
        const bool f = rec["status"] == "FOUND";
        const auto n = rec["n"].get<std::size_t>(), k = rec["k"].get<std::size_t>();
        if (f) found.push_back(pair_key(n, k));
        if (f != rec["claimPredicts"].get<bool>())
            report.discrepancies.push_back({{"n", n}, {"k", k}, {"issue", "existence differs from n = 4k"}});
        if (f && (rec["constant"] != static_cast<std::int64_t>(4 * k + 1) ||
                  rec["predicted"] != std::to_string(4 * k + 1)))
            report.discrepancies.push_back({{"n", n}, {"k", k}, {"issue", "constant differs from 4k+1"}});
    }
    finish(report, records);
    report.summary["foundAt"] = found;
    return report;
}

Report even_cycles(const Params& params, const SearchOptions&)
{
    const auto max_n = param_size(params, "max_n", 4, 60);
    auto report = make_report("even-cycles", params);
    std::vector<Json> records;
    for (std::size_t n = 4; n <= max_n; n += 2) {
        const auto v = static_cast<Weight>(n);
        auto cert = antipodal_labeling(cycle(n));
        auto dual = duality_transfer(cert);
        Json rec{{"n", n},
                 {"D", cert.distance_set().to_string()},
                 {"constant", cert.constant()},
                 {"expected", v * (v + 1) / 2 - (v + 1)},
                 {"dualD", dual ? dual->distance_set().to_string() : ""},
                 {"dualConstant", dual ? Json(dual->constant()) : Json(nullptr)},
                 {"dualExpected", v + 1},
                 {"labels", labels_text(cert.labeling())}};
        if (rec["constant"] != rec["expected"] || rec["dualConstant"] != rec["dualExpected"])
            report.discrepancies.push_back({{"n", n}, {"issue", "constant mismatch"}});
        records.push_back(std::move(rec));
    }
    finish(report, records);
    return report;
}

Report cycle_prefix_sets(const Params& params, const SearchOptions& budget)
{
    const auto max_n = param_size(params, "max_n", 3, 40);
    struct Case { std::size_t n, k; };
    std::vector<Case> cases;
    for (std::size_t n = 3; n <= max_n; ++n)
        for (std::size_t k = 1; k <= n / 2; ++k) cases.push_back({n, k});
    auto report = make_report("cycle-prefix-sets", params);
    auto records = parallel_map(cases.size(), [&](std::size_t i) {
        auto [n, k] = cases[i];
        auto set = DistanceSet::upto(static_cast<int>(k));
        Json rec{{"n", n}, {"k", k}, {"D", set.to_string()}};
        rec.update(solve_fields(cycle(n), set, budget));
        // {0..k} reaches the diameter exactly when n <= 2k+1 (trivially magic).
        rec["claimPredicts"] = n < 2 * k + 2;
        return rec;
    });
    for (const auto& rec : records)
        if (rec["status"] != "ABORTED" && (rec["status"] == "FOUND") != rec["claimPredicts"].get<bool>())
            report.discrepancies.push_back({{"n", rec["n"]}, {"k", rec["k"]}, {"issue", "existence differs from n < 2k+2"}});
    finish(report, records);
    return report;
}

/// Runs solve over a list of graphs with one fixed D; records every
/// instance, collects FOUND graph6 strings.
std::vector<Json> sweep(const std::vector<Graph>& graphs, const DistanceSet& set, const SearchOptions& budget)
{
    return parallel_map(graphs.size(), [&](std::size_t i) {
        const auto& g = graphs[i];
        Json rec{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"diameter", g.diameter()}, {"D", set.to_string()}};
        rec.update(solve_fields(g, set, budget));
        return rec;
    });
}

std::vector<std::string> found_graphs(const std::vector<Json>& records)
{
    std::vector<std::string> out;
    for (const auto& rec : records)
        if (rec["status"] == "FOUND") out.push_back(rec["graph6"].get<std::string>());
    return out;
}

std::vector<Graph> connected_up_to(std::size_t max_order, std::size_t min_order,
                                   const std::function<bool(const Graph&)>& keep)
{
    std::vector<Graph> out;
    for (std::size_t n = min_order; n <= max_order; ++n) {
        auto part = graphs_of_order(n, [&](const Graph& g) { return g.connected() && keep(g); });
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Report diameter2_conjecture(const Params& params, const SearchOptions& budget)
{
    const auto max_order = param_size(params, "max_order", 3, 8);
    auto report = make_report("diameter2-conjecture", params);
    auto graphs = connected_up_to(max_order, 3, [](const Graph& g) { return g.diameter() == 2; });
    auto records = sweep(graphs, DistanceSet{2}, budget);
    for (const auto& g6 : found_graphs(records))
        report.discrepancies.push_back({{"graph6", g6}, {"issue", "diameter-2 graph is {2}-magic: conjecture counterexample"}});
    finish(report, records);
    report.summary["counterexamples"] = report.discrepancies.size();
    return report;
}

Report claims_audit(const Params& params, const SearchOptions& budget)
{
    const auto max_order = param_size(params, "max_order", 2, 8);
    auto report = make_report("claims-audit", params);
    std::vector<Json> records;
    Json per_claim = Json::object();
    for (const auto& id : claim_ids()) {
        std::size_t agree = 0, disagree = 0, untested = 0;
        for (const auto& v : audit(id, AuditRange{max_order}, budget)) {
            auto rec = claim_to_json(v);
            if (!v.tested()) {
                ++untested;
                report.incomplete = true;
            } else if (v.agreement) {
                ++agree;
            } else {
                ++disagree;
                report.discrepancies.push_back(rec);
            }
            records.push_back(std::move(rec));
        }
        per_claim[id] = {{"tier", std::string(to_string(claim_tier(id)))},
                         {"agree", agree},
                         {"disagree", disagree},
                         {"untested", untested}};
    }
    report.records = std::move(records);
    report.summary["instances"] = report.records.size();
    report.summary["claims"] = per_claim;
    return report;
}

// Multisets of connected classes (as (order, index) pairs, non-increasing)
// whose orders sum to `left`.
void component_multisets(const std::vector<std::vector<Graph>>& connected, std::size_t left,
                         std::pair<std::size_t, std::size_t> bound,
                         std::vector<std::pair<std::size_t, std::size_t>>& current,
                         std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out)
{
    if (left == 0) {
        if (current.size() >= 2) out.push_back(current);
        return;
    }
    for (std::size_t n = std::min(left, bound.first); n >= 1; --n) {
        const std::size_t top = n == bound.first ? bound.second : connected[n].size() - 1;
        for (std::size_t i = 0; i <= top && i < connected[n].size(); ++i) {
            current.push_back({n, i});
            component_multisets(connected, left - n, {n, i}, current, out);
            current.pop_back();
        }
    }
}

Report op1_unequal_components(const Params& params, const SearchOptions& budget)
{
    const auto max_order = param_size(params, "max_order", 3, 8);
    auto report = make_report("op1-unequal-components", params);
    std::vector<std::vector<Graph>> connected(max_order);
    for (std::size_t n = 1; n < max_order; ++n)
        connected[n] = enumerate_graphs(n, [](const Graph& g) { return g.connected(); });

    std::vector<Graph> graphs;
    for (std::size_t total = 3; total <= max_order; ++total) {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sets;
        std::vector<std::pair<std::size_t, std::size_t>> current;
        component_multisets(connected, total, {total - 1, connected[total - 1].size() - 1}, current, sets);
        for (const auto& s : sets) {
            if (std::all_of(s.begin(), s.end(), [&](const auto& c) { return c.first == s.front().first; })) continue;
            std::vector<Graph> parts;
            for (auto [n, i] : s) parts.push_back(connected[n][i]);
            graphs.push_back(disjoint_union(parts));
        }
    }
    auto records = parallel_map(graphs.size(), [&](std::size_t i) {
        const auto& g = graphs[i];
        auto set = DistanceSet::upto(g.diameter());
        Json rec{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"components", g.components().size()},
                 {"D", set.to_string()}};
        rec.update(solve_fields(g, set, budget));
        return rec;
    });
    auto found = found_graphs(records);
    const auto k2k1 = emit_graph6(disjoint_union(std::vector<Graph>{complete(2), complete(1)}));
    if (std::find(found.begin(), found.end(), k2k1) == found.end())
        report.discrepancies.push_back({{"graph6", k2k1}, {"issue", "K2 u K1 expected to be {0,1}-magic"}});
    finish(report, records);
    report.summary["found"] = found;
    return report;
}

Report op2_two_regular(const Params& params, const SearchOptions& budget)
{
    const auto max_order = param_size(params, "max_order", 3, 16);
    auto report = make_report("op2-two-regular", params);
    std::vector<std::vector<std::size_t>> unions;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> grow =
        [&](std::size_t used, std::size_t min_len, std::vector<std::size_t>& cur) {
            if (!cur.empty()) unions.push_back(cur);
            for (std::size_t len = min_len; used + len <= max_order; ++len) {
                cur.push_back(len);
                grow(used + len, len, cur);
                cur.pop_back();
            }
        };
    std::vector<std::size_t> cur;
    grow(0, 3, cur);

    struct Case { std::vector<std::size_t> lengths; DistanceSet set; };
    std::vector<Case> cases;
    for (const auto& lengths : unions) {
        const auto d = static_cast<int>(*std::max_element(lengths.begin(), lengths.end()) / 2);
        for (auto& set : DistanceSet::all_subsets(d)) cases.push_back({lengths, std::move(set)});
    }
    auto records = parallel_map(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        std::string name;
        for (auto len : c.lengths) name += (name.empty() ? "C" : "+C") + std::to_string(len);
        auto g = cycle_union(c.lengths);
        Json rec{{"graph", name}, {"graph6", emit_graph6(g)}, {"order", g.order()}, {"D", c.set.to_string()}};
        rec.update(solve_fields(g, c.set, budget));
        return rec;
    });
    std::vector<std::string> found;
    for (const auto& rec : records)
        if (rec["status"] == "FOUND") found.push_back(rec["graph"].get<std::string>() + " " + rec["D"].get<std::string>());
    finish(report, records);
    report.summary["found"] = found;
    return report;
}

Report op3_trees(const Params& params, const SearchOptions& budget)
{
    const auto max_order = param_size(params, "max_order", 2, 10);
    auto report = make_report("op3-trees", params);
    struct Case { Graph tree; DistanceSet set; };
    std::vector<Case> cases;
    for (std::size_t n = 2; n <= max_order; ++n)
        for (auto& t : enumerate_trees(n))
            for (auto& set : DistanceSet::all_subsets(2)) cases.push_back({t, set});
    auto records = parallel_map(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        Json rec{{"graph6", emit_graph6(c.tree)}, {"order", c.tree.order()}, {"diameter", c.tree.diameter()},
                 {"D", c.set.to_string()}};
        auto norm = normalize(c.tree, c.set);
        rec["effectiveD"] = norm.effective ? norm.effective->to_string() : "";
        rec.update(solve_fields(c.tree, c.set, budget));
        return rec;
    });
    Json per_set = Json::object();
    for (const auto& set : DistanceSet::all_subsets(2)) per_set[set.to_string()] = 0;
    for (const auto& rec : records)
        if (rec["status"] == "FOUND") per_set[rec["D"].get<std::string>()] = per_set[rec["D"].get<std::string>()].get<int>() + 1;
    finish(report, records);
    report.summary["foundPerD"] = per_set;
    return report;
}

Report graph_sweep(const std::string& name, const Params& params, const SearchOptions& budget,
                   const DistanceSet& set, const std::function<bool(const Graph&)>& keep)
{
    const auto max_order = param_size(params, "max_order", 2, 8);
    auto report = make_report(name, params);
    auto records = sweep(connected_up_to(max_order, 2, keep), set, budget);
    finish(report, records);
    report.summary["found"] = found_graphs(records);
    return report;
}

Report op4_02_diameter(const Params& params, const SearchOptions& budget)
{
    auto report = graph_sweep("op4-02-diameter", params, budget, DistanceSet{0, 2},
                              [](const Graph& g) { return g.diameter() > 2; });
    const auto p4 = emit_graph6(canonical_graph(path(4)));
    bool p4_ok = false;
    for (const auto& rec : report.records)
        if (rec["graph6"] == p4) p4_ok = rec["status"] == "FOUND" && rec["constant"] == 5;
    if (param_size(params, "max_order", 2, 8) >= 4 && !p4_ok)
        report.discrepancies.push_back({{"graph6", p4}, {"issue", "P4 expected {0,2}-magic with constant 5"}});
    return report;
}

Report op5_nonregular_12(const Params& params, const SearchOptions& budget)
{
    return graph_sweep("op5-nonregular-12", params, budget, DistanceSet{1, 2},
                       [](const Graph& g) { return g.regularity() < 0; });
}

Report op6_12_diameter4(const Params& params, const SearchOptions& budget)
{
    return graph_sweep("op6-12-diameter4", params, budget, DistanceSet{1, 2},
                       [](const Graph& g) { return g.diameter() >= 4; });
}

Report op7_012_diameter3(const Params& params, const SearchOptions& budget)
{
    return graph_sweep("op7-012-diameter3", params, budget, DistanceSet{0, 1, 2},
                       [](const Graph& g) { return g.diameter() >= 3; });
}

using Runner = Report (*)(const Params&, const SearchOptions&);

struct Entry {
    ExperimentInfo info;
    Runner run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries{
        {{"cycles-singleton", "C_n with D={k}: FOUND exactly at n=4k, constant 4k+1", {{"max_n", "16"}}},
         cycles_singleton},
        {{"even-cycles", "antipodal certificates on even cycles and their duals", {{"max_n", "16"}}}, even_cycles},
        {{"cycle-prefix-sets", "C_n with D={0..k}: magic only when n < 2k+2", {{"max_n", "16"}}},
         cycle_prefix_sets},
        {{"diameter2-conjecture", "diameter-2 graphs with D={2}; any FOUND is flagged", {{"max_order", "7"}}},
         diameter2_conjecture},
        {{"claims-audit", "every encoded claim against the solver", {{"max_order", "8"}}}, claims_audit},
        {{"op1-unequal-components", "disconnected graphs with unequal component orders, D={0..d_max}",
          {{"max_order", "8"}}},
         op1_unequal_components},
        {{"op2-two-regular", "unions of cycles against every D", {{"max_order", "12"}}}, op2_two_regular},
        {{"op3-trees", "trees against every D in {0,1,2}", {{"max_order", "9"}}}, op3_trees},
        {{"op4-02-diameter", "connected graphs of diameter > 2 with D={0,2}", {{"max_order", "8"}}},
         op4_02_diameter},
        {{"op5-nonregular-12", "connected non-regular graphs with D={1,2}", {{"max_order", "8"}}},
         op5_nonregular_12},
        {{"op6-12-diameter4", "connected graphs of diameter >= 4 with D={1,2}", {{"max_order", "8"}}},
         op6_12_diameter4},
        {{"op7-012-diameter3", "connected graphs of diameter >= 3 with D={0,1,2}", {{"max_order", "8"}}},
         op7_012_diameter3},
    };
    return entries;
}

}  // namespace

const std::vector<ExperimentInfo>& experiments()
{
    static const std::vector<ExperimentInfo> infos = [] {
        std::vector<ExperimentInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

Report run_experiment(const ExperimentSpec& spec)
{
    for (const auto& e : registry()) {
        if (e.info.name != spec.name) continue;
        Params params = e.info.defaults;
        for (const auto& [k, v] : spec.parameters) {
            if (!params.contains(k))
                throw std::invalid_argument("experiment " + spec.name + " has no parameter '" + k + "'");
            params[k] = v;
        }
        return e.run(params, spec.budget);
    }
    throw std::invalid_argument("unknown experiment '" + spec.name + "'");
}

NormalizedSet normalize(const Graph& g, const DistanceSet& set)
{
    NormalizedSet out;
    out.effective = set.effective(g.diameter());
    if (!out.effective)
        out.warning = "no distance in D=" + set.to_string() + " occurs (diameter " + std::to_string(g.diameter()) +
                      "); every D-neighborhood is empty";
    else if (*out.effective != set)
        out.warning = "D=" + set.to_string() + " truncated to " + out.effective->to_string() + " (diameter " +
                      std::to_string(g.diameter()) + ")";
    return out;
}

Report run_batch(std::istream& corpus, const DistanceSet& set, const SearchOptions& budget)
{
    auto parsed = read_graph6_corpus(corpus);
    Report report;
    report.tool_version = tool_version();
    report.experiment = "batch";
    report.parameters["D"] = set.to_string();

    auto records = parallel_map(parsed.graphs.size(), [&](std::size_t i) {
        const auto& g = parsed.graphs[i];
        Json rec{{"line", parsed.line_numbers[i]}, {"graph6", emit_graph6(g)}, {"order", g.order()},
                 {"D", set.to_string()}};
        auto norm = normalize(g, set);
        rec["effectiveD"] = norm.effective ? norm.effective->to_string() : "";
        rec["warning"] = norm.warning ? Json(*norm.warning) : Json(nullptr);
        rec["screen"] = rules_text(screen_all(g, set));
        try {
            auto gamma = gamma_f(g, set);
            rec["gamma"] = gamma.gamma.to_string();
        } catch (const FracdomInfeasible&) {
            rec["gamma"] = nullptr;
        }
        auto fields = solve_fields(g, set, budget);
        fields.erase("screen");
        rec.update(fields);
        return rec;
    });
    finish(report, records);
    report.summary["skipped"] = parsed.skipped;
    return report;
}

Json to_json(const Report& report)
{
    return Json{{"tool", "dmagic"},
                {"version", report.tool_version},
                {"experiment", report.experiment},
                {"parameters", report.parameters},
                {"summary", report.summary},
                {"discrepancies", report.discrepancies},
                {"records", report.records}};
}

namespace {

std::string csv_cell(const Json& v)
{
    std::string text;
    if (v.is_null()) return "";
    if (v.is_string()) text = v.get<std::string>();
    else if (v.is_array()) {
        for (const auto& x : v) text += (text.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
    } else {
        text = v.dump();
    }
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

}  // namespace

std::string to_csv(const Report& report)
{
    std::vector<std::string> columns;
    for (const auto& rec : report.records)
        for (const auto& [key, value] : rec.items())
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& rec : report.records) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            if (rec.contains(columns[i])) {
                const auto& v = rec[columns[i]];
                out << csv_cell(v.is_object() ? Json(v.dump()) : v);
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dmagic::app
