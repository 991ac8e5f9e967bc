#include "dmagic/app/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "dmagic/app/experiments.hpp"
#include "dmagic/constructions.hpp"
#include "dmagic/enumerate.hpp"
#include "dmagic/fracdom.hpp"
#include "dmagic/graph6.hpp"
#include "dmagic/json_io.hpp"
#include "dmagic/screeners.hpp"
#include "dmagic/solver.hpp"
#include "dmagic/trees.hpp"

namespace dmagic::app {

namespace {

/// Input problems detected after CLI11 parsing; reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string distance_set = "1";
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_seconds;
    bool json = false;
    bool csv = false;
    std::string out;

    SearchOptions budget() const
    {
        SearchOptions opts;
        if (budget_nodes) opts.node_limit = *budget_nodes;
        if (budget_seconds)
            opts.time_limit = std::chrono::milliseconds(std::max<std::int64_t>(1, static_cast<std::int64_t>(*budget_seconds * 1000)));
        return opts;
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_set, bool with_budget)
{
    if (with_set) cmd->add_option("-D,--distance-set", c.distance_set, "distances, e.g. 0,2 or 1-3")->capture_default_str();
    if (with_budget) {
        cmd->add_option("--budget-nodes", c.budget_nodes, "search node limit per instance")->check(CLI::PositiveNumber);
        cmd->add_option("--budget-seconds", c.budget_seconds, "search time limit per instance")->check(CLI::PositiveNumber);
    }
    cmd->add_flag("--json", c.json, "emit JSON");
    cmd->add_option("--out", c.out, "write the result to this file instead of stdout");
}

Graph graph_arg(const std::string& text)
{
    try {
        return parse_graph6(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("graph6: ") + e.what());
    }
}

DistanceSet set_arg(const std::string& text)
{
    try {
        return DistanceSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("distance set: ") + e.what());
    }
}

std::vector<Label> labels_arg(const std::string& text)
{
    std::vector<Label> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InputError("labels: '" + token + "' is not an integer");
        }
    }
    return out;
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw InputError("cannot write " + c.out);
    file << text;
}

Json set_fields(const Graph& g, const DistanceSet& set)
{
    auto norm = normalize(g, set);
    Json j{{"graph6", emit_graph6(g)}, {"D", set.to_string()},
           {"effectiveD", norm.effective ? Json(norm.effective->to_string()) : Json(nullptr)}};
    if (norm.warning) j["warning"] = *norm.warning;
    return j;
}

std::string labels_text(const Labeling& f)
{
    std::string s;
    for (auto l : f.labels()) s += (s.empty() ? "" : ",") + std::to_string(l);
    return s;
}

std::string refutation_text(const Refutation& r)
{
    return std::string(rule_id(r.rule)) + ": " + r.explanation;
}

int cmd_verify(const Common& c, const std::string& g6, const std::string& labels, std::ostream& out)
{
    auto g = graph_arg(g6);
    auto set = set_arg(c.distance_set);
    auto raw = labels_arg(labels);
    if (raw.size() != g.order())
        throw InputError("labels: expected " + std::to_string(g.order()) + " values, got " + std::to_string(raw.size()));
    std::optional<Labeling> f;
    try {
        f.emplace(std::move(raw));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("labels: ") + e.what());
    }
    auto verdict = verify_magic(g, *f, set);
    if (c.json) {
        auto j = set_fields(g, set);
        j.update(verdict_to_json(verdict));
        emit(c, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        s << to_string(verdict.kind);
        if (verdict.magic()) s << " constant " << verdict.constant;
        if (verdict.kind == Verdict::Kind::NotMagic)
            s << " w(v" << verdict.witness.first << ")=" << verdict.first_weight << " != w(v" << verdict.witness.second
              << ")=" << verdict.second_weight;
        emit(c, s.str() + "\n", out);
    }
    return verdict.magic() ? kAffirmative : kNegative;
}

int cmd_solve(const Common& c, const std::string& g6, bool all, std::ostream& out)
{
    auto g = graph_arg(g6);
    auto set = set_arg(c.distance_set);
    if (g.order() > 63) throw InputError("solve supports orders up to 63");
    auto opts = c.budget();
    opts.enumerate_all = all;
    auto outcome = solve(g, set, opts);
    if (c.json) {
        auto j = set_fields(g, set);
        j.update(outcome_to_json(outcome, false));
        emit(c, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        s << to_string(outcome.status);
        if (outcome.found()) {
            s << " constant " << outcome.certificates.front().constant() << " labels "
              << labels_text(outcome.certificates.front().labeling());
            if (all) s << " solutions " << outcome.total_solutions;
        }
        if (!outcome.abort_reason.empty()) s << " (" << outcome.abort_reason << ")";
        for (const auto& r : outcome.refutations) s << "\n  " << refutation_text(r);
        s << "\n  nodes " << outcome.stats.nodes << "\n";
        emit(c, s.str(), out);
    }
    switch (outcome.status) {
    case SearchStatus::Found: return kAffirmative;
    case SearchStatus::ExhaustedNone: return kNegative;
    case SearchStatus::Aborted: return kBudgetAbort;
    }
    return kNegative;
}

int cmd_screen(const Common& c, const std::string& g6, std::ostream& out)
{
    auto g = graph_arg(g6);
    auto set = set_arg(c.distance_set);
    auto refs = screen_all(g, set);
    if (c.json) {
        auto j = set_fields(g, set);
        j["refuted"] = !refs.empty();
        j["refutations"] = Json::array();
        for (const auto& r : refs) j["refutations"].push_back(refutation_to_json(r));
        emit(c, j.dump(2) + "\n", out);
    } else {
        std::ostringstream s;
        if (refs.empty()) s << "no rule fires\n";
        for (const auto& r : refs) s << refutation_text(r) << "\n";
        emit(c, s.str(), out);
    }
    return refs.empty() ? kAffirmative : kNegative;
}

int cmd_gamma(const Common& c, const std::string& g6, std::ostream& out)
{
    auto g = graph_arg(g6);
    auto set = set_arg(c.distance_set);
    auto j = set_fields(g, set);
    try {
        auto result = gamma_f(g, set);
        j.update(gamma_to_json(result));
        j["certified"] = certify_gamma(g, set, result);
        if (c.json) emit(c, j.dump(2) + "\n", out);
        else
            emit(c, "gamma_f " + result.gamma.to_string() + " predicted constant " +
                        result.predicted_constant.to_string() +
                        (result.predicted_constant.is_integer() ? "" : " (not integral: no labeling)") + "\n",
                 out);
        return result.predicted_constant.is_integer() ? kAffirmative : kNegative;
    } catch (const FracdomInfeasible& e) {
        j["infeasible"] = true;
        j["vertex"] = e.vertex();
        emit(c, c.json ? j.dump(2) + "\n" : std::string("infeasible: ") + e.what() + "\n", out);
        return kNegative;
    }
}

struct ConstructArgs {
    std::string name;
    std::string graph;
    std::vector<std::string> parts;
    std::size_t k = 1;
    std::size_t copies = 1;
    std::size_t n = 3;
};

int cmd_construct(const Common& c, const ConstructArgs& a, std::ostream& out)
{
    auto need_graph = [&] {
        if (a.graph.empty()) throw InputError("construct " + a.name + " needs --graph");
        return graph_arg(a.graph);
    };
    std::optional<MagicCertificate> cert;
    try {
        if (a.name == "antipodal") cert = antipodal_labeling(need_graph());
        else if (a.name == "trivial") cert = trivial_labeling(need_graph());
        else if (a.name == "equal-components") {
            if (a.parts.empty()) throw InputError("construct equal-components needs --parts");
            std::vector<Graph> parts;
            for (const auto& p : a.parts) parts.push_back(graph_arg(p));
            cert = equal_components_labeling(parts);
        } else if (a.name == "c4k") cert = c4k_labeling(a.k);
        else if (a.name == "union-c4k") cert = union_c4k_labeling(a.copies, a.k);
        else if (a.name == "diam3") cert = diam3_family(a.n);
        else
            throw InputError("unknown construction '" + a.name +
                             "' (antipodal, trivial, equal-components, c4k, union-c4k, diam3)");
    } catch (const ConstructionRefused& e) {
        throw InputError(std::string("construction refused: ") + e.what());
    }
    if (c.json) emit(c, certificate_to_json(*cert).dump(2) + "\n", out);
    else
        emit(c, emit_graph6(cert->graph()) + " D=" + cert->distance_set().to_string() + " constant " +
                    std::to_string(cert->constant()) + " labels " + labels_text(cert->labeling()) + "\n",
             out);
    return kAffirmative;
}

int emit_report(const Common& c, const Report& report, std::ostream& out)
{
    emit(c, c.csv ? to_csv(report) : to_json(report).dump(2) + "\n", out);
    if (!c.out.empty())
        out << report.experiment << ": " << report.records.size() << " records, " << report.discrepancies.size()
            << " discrepancies -> " << c.out << "\n";
    return report.incomplete ? kBudgetAbort : kAffirmative;
}

int cmd_experiment(const Common& c, const std::string& name, const std::vector<std::string>& params, bool list,
                   std::ostream& out)
{
    if (list || name.empty()) {
        for (const auto& e : experiments()) {
            out << e.name << "  " << e.description;
            for (const auto& [k, v] : e.defaults) out << "  [" << k << "=" << v << "]";
            out << "\n";
        }
        return kAffirmative;
    }
    ExperimentSpec spec;
    spec.name = name;
    spec.output_path = c.out;
    spec.budget = c.budget();
    if (!spec.budget.node_limit && !spec.budget.time_limit) spec.budget.node_limit = 200'000'000;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw InputError("--param expects key=value, got '" + p + "'");
        spec.parameters[p.substr(0, eq)] = p.substr(eq + 1);
    }
    Report report;
    try {
        report = run_experiment(spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return emit_report(c, report, out);
}

int cmd_batch(const Common& c, const std::string& path, std::ostream& out)
{
    auto set = set_arg(c.distance_set);
    std::ifstream file(path);
    if (!file) throw InputError("cannot read " + path);
    return emit_report(c, run_batch(file, set, c.budget()), out);
}

int cmd_enumerate(const Common& c, std::size_t n, bool connected, bool trees, std::ostream& out)
{
    std::vector<Graph> graphs;
    try {
        if (trees) graphs = enumerate_trees(n);
        else graphs = enumerate_graphs(n, connected ? GraphPredicate([](const Graph& g) { return g.connected(); })
                                                    : GraphPredicate());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::string text;
    for (const auto& g : graphs) text += emit_graph6(g) + "\n";
    emit(c, text, out);
    return kAffirmative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"dmagic: D-distance magic labelings of small graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    Common common;
    std::string g6, labels, name, path;
    bool all = false, list = false, connected = false, trees = false;
    std::vector<std::string> params;
    ConstructArgs cons;
    std::size_t order = 0;
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "check a labeling; exit 0 iff MAGIC");
    verify->add_option("graph6", g6, "graph in graph6")->required();
    verify->add_option("-l,--labels", labels, "comma-separated labels f(v0),f(v1),...")->required();
    add_common(verify, common, true, false);
    verify->callback([&] { action = [&] { return cmd_verify(common, g6, labels, out); }; });

    auto* solve_cmd = app.add_subcommand("solve", "decide D-distance magicness by search");
    solve_cmd->add_option("graph6", g6, "graph in graph6")->required();
    solve_cmd->add_flag("--all", all, "enumerate every magic labeling");
    add_common(solve_cmd, common, true, true);
    solve_cmd->callback([&] { action = [&] { return cmd_solve(common, g6, all, out); }; });

    auto* screen = app.add_subcommand("screen", "run the necessary-condition screens");
    screen->add_option("graph6", g6, "graph in graph6")->required();
    add_common(screen, common, true, false);
    screen->callback([&] { action = [&] { return cmd_screen(common, g6, out); }; });

    auto* gamma = app.add_subcommand("gamma", "fractional domination number and forced constant");
    gamma->add_option("graph6", g6, "graph in graph6")->required();
    add_common(gamma, common, true, false);
    gamma->callback([&] { action = [&] { return cmd_gamma(common, g6, out); }; });

    auto* construct = app.add_subcommand("construct", "build a certified labeling from a known family");
    construct->add_option("name", cons.name, "antipodal, trivial, equal-components, c4k, union-c4k, diam3")->required();
    construct->add_option("--graph", cons.graph, "graph6 input for antipodal and trivial");
    construct->add_option("--parts", cons.parts, "graph6 components for equal-components")->delimiter(',');
    construct->add_option("--k", cons.k, "cycle parameter for c4k and union-c4k")->check(CLI::PositiveNumber);
    construct->add_option("--copies", cons.copies, "number of copies for union-c4k")->check(CLI::PositiveNumber);
    construct->add_option("--n", cons.n, "regularity for diam3");
    add_common(construct, common, false, false);
    construct->callback([&] { action = [&] { return cmd_construct(common, cons, out); }; });

    auto* experiment = app.add_subcommand("experiment", "run a named sweep and emit a report");
    experiment->add_option("name", name, "experiment name (see --list)");
    experiment->add_flag("--list", list, "list experiments and their parameters");
    experiment->add_option("--param", params, "override a parameter, key=value");
    experiment->add_flag("--csv", common.csv, "emit CSV instead of JSON");
    add_common(experiment, common, false, true);
    experiment->callback([&] { action = [&] { return cmd_experiment(common, name, params, list, out); }; });

    auto* batch = app.add_subcommand("batch", "screen, gamma and solve every graph in a graph6 file");
    batch->add_option("file", path, "newline-separated graph6 corpus")->required();
    batch->add_flag("--csv", common.csv, "emit CSV instead of JSON");
    add_common(batch, common, true, true);
    batch->callback([&] { action = [&] { return cmd_batch(common, path, out); }; });

    auto* enumerate = app.add_subcommand("enumerate", "print every graph of an order as graph6");
    enumerate->add_option("order", order, "graph order")->required();
    enumerate->add_flag("--connected", connected, "connected graphs only");
    enumerate->add_flag("--trees", trees, "trees only");
    add_common(enumerate, common, false, false);
    enumerate->callback([&] { action = [&] { return cmd_enumerate(common, order, connected, trees, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAffirmative;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kAffirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        return action ? action() : kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace dmagic::app
