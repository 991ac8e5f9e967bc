#include "dmagic/claims.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "dmagic/enumerate.hpp"
#include "dmagic/generators.hpp"
#include "dmagic/graph6.hpp"
#include "dmagic/parallel.hpp"

namespace dmagic {

std::string_view to_string(ClaimTier tier)
{
    return tier == ClaimTier::Hard ? "hard" : "report";
}

std::string ClaimVerdict::parameter_string() const
{
    std::string out;
    for (const auto& [key, value] : parameters) {
        if (!out.empty()) out += ';';
        out += key + "=" + value;
    }
    return out;
}

bool predict_hnp_02(std::size_t n, std::size_t p)
{
    if (n < 2 || p < 2) throw std::invalid_argument("H_{n,p} claim needs n > 1 and p > 1");
    return n % 2 == 0 || (n % 2 == 1 && p % 2 == 1);
}

bool predict_partite_02(std::span<const std::size_t> part_sizes)
{
    if (part_sizes.size() != 2 && part_sizes.size() != 3)
        throw std::invalid_argument("partite claim covers 2 or 3 parts");
    std::vector<std::size_t> a(part_sizes.begin(), part_sizes.end());
    std::sort(a.begin(), a.end());
    if (a.front() < 1) throw std::invalid_argument("part sizes must be >= 1");
    const std::size_t p = a.size();
    const std::size_t v = std::accumulate(a.begin(), a.end(), std::size_t{0});
    const std::size_t total = v * (v + 1);

    if (a[1] < 2) return false;           // (a)
    if (total % (2 * p) != 0) return false;  // (b)
    std::size_t s = 0;
    for (std::size_t i = 1; i <= p; ++i) {  // (c), reading the bound's n as v
        s += a[i - 1];
        std::size_t largest = 0;
        for (std::size_t j = 1; j <= s; ++j) largest += v + 1 - j;
        // largest >= i·v(v+1)/(2p)
        if (2 * p * largest < i * total) return false;
    }
    return true;
}

bool predict_cycle_singleton(std::size_t n, std::size_t k)
{
    return k >= 1 && n == 4 * k;
}

bool predict_union_c4k(std::span<const std::size_t> cycle_lengths, std::size_t k)
{
    if (cycle_lengths.empty()) throw std::invalid_argument("no cycles given");
    return std::all_of(cycle_lengths.begin(), cycle_lengths.end(),
                       [k](std::size_t len) { return predict_cycle_singleton(len, k); });
}

bool predict_union_c4k(const Graph& g, std::size_t k)
{
    if (g.regularity() != 2) throw std::invalid_argument("union-of-cycles claim needs a 2-regular graph");
    std::vector<std::size_t> lengths;
    for (const auto& comp : g.components()) lengths.push_back(comp.size());
    return predict_union_c4k(lengths, k);
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Observe = std::function<std::optional<bool>(const SearchOptions&, std::string&)>;

struct Instance {
    Params params;
    Graph graph;
    bool predicted;
    Observe observe;
    std::string note;
    /// When set, replaces `predicted` with a value computed at audit time.
    Observe predict = {};
};

std::string str(std::size_t v) { return std::to_string(v); }

// Existence by search; nullopt when the budget ran out. Appends screen hits to note.
std::optional<bool> exists(const Graph& g, const DistanceSet& set, const SearchOptions& budget,
                           std::string& note)
{
    auto outcome = solve(g, set, budget);
    if (outcome.status == SearchStatus::Aborted) {
        note += (note.empty() ? "" : "; ") + std::string("UNTESTED: ") + outcome.abort_reason;
        return std::nullopt;
    }
    if (!outcome.refutations.empty()) {
        std::string rules;
        for (const auto& r : outcome.refutations) rules += (rules.empty() ? "" : "+") + std::string(rule_id(r.rule));
        note += (note.empty() ? "" : "; ") + set.to_string() + " refuted by " + rules;
    }
    return outcome.found();
}

Observe exists_for(Graph g, DistanceSet set)
{
    return [g = std::move(g), set = std::move(set)](const SearchOptions& b, std::string& note) {
        return exists(g, set, b, note);
    };
}

std::string graph6_or_empty(const Graph& g)
{
    return g.order() <= kGraph6MaxOrder ? emit_graph6(g) : std::string();
}

// Multisets of cycle lengths >= 3 (non-decreasing) with total order <= max.
void cycle_multisets(std::size_t max, std::size_t min_len, std::vector<std::size_t>& current,
                     std::size_t used, std::vector<std::vector<std::size_t>>& out)
{
    if (!current.empty()) out.push_back(current);
    for (std::size_t len = min_len; used + len <= max; ++len) {
        current.push_back(len);
        cycle_multisets(max, len, current, used + len, out);
        current.pop_back();
    }
}

std::vector<Graph> odd_regular_diameter2(std::size_t max_order)
{
    std::vector<Graph> out;
    for (std::size_t n = 3; n <= std::min<std::size_t>(max_order, kMaxEnumerationOrder); n += 2) {
        auto graphs = enumerate_graphs(n, [](const Graph& g) {
            return g.connected() && g.diameter() == 2 && g.regularity() >= 0;
        });
        out.insert(out.end(), graphs.begin(), graphs.end());
    }
    return out;
}

std::vector<Instance> build(std::string_view id, std::size_t max)
{
    std::vector<Instance> out;
    if (id == "cycle-singleton") {
        for (std::size_t n = 3; n <= max; ++n)
            for (std::size_t k = 1; k <= n / 2; ++k)
                out.push_back({{{"n", str(n)}, {"k", str(k)}}, cycle(n), predict_cycle_singleton(n, k),
                               exists_for(cycle(n), DistanceSet{static_cast<int>(k)}), ""});
    } else if (id == "union-c4k") {
        std::vector<std::vector<std::size_t>> sets;
        std::vector<std::size_t> current;
        cycle_multisets(max, 3, current, 0, sets);
        for (const auto& lengths : sets) {
            Graph g = cycle_union(lengths);
            std::string name;
            for (auto len : lengths) name += (name.empty() ? "C" : "+C") + str(len);
            for (std::size_t k = 1; k <= lengths.back() / 2; ++k)
                out.push_back({{{"cycles", name}, {"k", str(k)}}, g, predict_union_c4k(lengths, k),
                               exists_for(g, DistanceSet{static_cast<int>(k)}), ""});
        }
    } else if (id == "cycle-prefix-sets") {
        for (std::size_t n = 4; n <= max; ++n) {
            for (std::size_t k = 0; 2 * k + 2 <= n; ++k) {
                auto prefix = DistanceSet::upto(static_cast<int>(k));
                auto suffix = DistanceSet::range(static_cast<int>(k + 1), static_cast<int>(n / 2));
                out.push_back({{{"n", str(n)}, {"D", prefix.to_string()}}, cycle(n), false,
                               exists_for(cycle(n), prefix), ""});
                out.push_back({{{"n", str(n)}, {"D", suffix.to_string()}}, cycle(n), false,
                               exists_for(cycle(n), suffix), ""});
            }
        }
    } else if (id == "even-cycle-antipodal") {
        for (std::size_t n = 4; n <= max; n += 2) {
            const int k = static_cast<int>(n / 2);
            auto inner = DistanceSet::range(1, k - 1);
            DistanceSet ends{0, k};
            out.push_back({{{"n", str(n)}, {"D", inner.to_string()}}, cycle(n), true, exists_for(cycle(n), inner), ""});
            out.push_back({{{"n", str(n)}, {"D", ends.to_string()}}, cycle(n), true, exists_for(cycle(n), ends), ""});
        }
    } else if (id == "c4k-complement") {
        for (std::size_t n = 4; n <= max; ++n) {
            for (std::size_t k = 1; k <= n / 2; ++k) {
                auto set = complement_distance_set(DistanceSet{static_cast<int>(k)}, static_cast<int>(n / 2));
                out.push_back({{{"n", str(n)}, {"k", str(k)}, {"D", set->to_string()}}, cycle(n),
                               predict_cycle_singleton(n, k), exists_for(cycle(n), *set), ""});
            }
        }
    } else if (id == "hnp-02") {
        for (std::size_t n = 2; 2 * n <= max; ++n)
            for (std::size_t p = 2; n * p <= max; ++p)
                out.push_back({{{"n", str(n)}, {"p", str(p)}}, h_np(n, p), predict_hnp_02(n, p),
                               exists_for(h_np(n, p), DistanceSet{0, 2}), ""});
    } else if (id == "partite-02") {
        for (std::size_t a1 = 1; 2 * a1 <= max; ++a1) {
            for (std::size_t a2 = a1; a1 + a2 <= max; ++a2) {
                std::vector<std::size_t> two{a1, a2};
                out.push_back({{{"parts", str(a1) + "," + str(a2)}}, complete_multipartite(two),
                               predict_partite_02(two), exists_for(complete_multipartite(two), DistanceSet{0, 2}), ""});
                for (std::size_t a3 = a2; a1 + a2 + a3 <= max; ++a3) {
                    std::vector<std::size_t> three{a1, a2, a3};
                    out.push_back({{{"parts", str(a1) + "," + str(a2) + "," + str(a3)}},
                                   complete_multipartite(three), predict_partite_02(three),
                                   exists_for(complete_multipartite(three), DistanceSet{0, 2}), ""});
                }
            }
        }
    } else if (id == "os11b-complement") {
        for (std::size_t n = 2; n <= std::min<std::size_t>(max, kMaxEnumerationOrder); ++n) {
            for (const auto& g : enumerate_graphs(n)) {
                if (g.edge_count() == 0) continue;  // {1}-neighborhoods all empty: degenerate
                Graph co = complement_graph(g);
                // Predicted: the complement's {0,1} status equals G's own {1} status.
                Instance inst{{{"n", str(n)}}, g, false, exists_for(co, DistanceSet{0, 1}), ""};
                inst.predict = exists_for(g, DistanceSet{1});
                out.push_back(std::move(inst));
            }
        }
    } else if (id == "os11b-parity") {
        for (std::size_t n = 2; n <= std::min<std::size_t>(max, kMaxEnumerationOrder); n += 2) {
            for (const auto& g : enumerate_graphs(n)) {
                Instance inst{{{"n", str(n)}}, g, false, {}, ""};
                inst.observe = [g](const SearchOptions& b, std::string& note) -> std::optional<bool> {
                    std::string ignored;
                    auto one = exists(g, DistanceSet{1}, b, ignored);
                    auto closed = exists(g, DistanceSet{0, 1}, b, ignored);
                    if (!one || !closed) {
                        note = "UNTESTED: budget";
                        return std::nullopt;
                    }
                    return *one && *closed;
                };
                out.push_back(std::move(inst));
            }
        }
    } else if (id == "fkk06-regular-diam2") {
        for (const auto& g : odd_regular_diameter2(max)) {
            const auto r = static_cast<std::size_t>(g.regularity());
            const bool predicted = r % 2 == 0 && r >= 2 && r + 2 <= g.order();
            out.push_back({{{"n", str(g.order())}, {"r", str(r)}}, g, predicted, exists_for(g, DistanceSet{0, 2}), ""});
        }
    } else if (id == "fkk06-lexicographic") {
        for (const auto& base : odd_regular_diameter2(max)) {
            for (std::size_t n = 1; base.order() * n <= max; n += 2) {
                Graph g = lexicographic_product(base, empty_graph(n));
                out.push_back({{{"G", emit_graph6(base)}, {"n", str(n)}}, g, true,
                               exists_for(g, DistanceSet{0, 2}),
                               n == 1 ? "n=1: the product is G itself" : ""});
            }
        }
    } else if (id == "sas09-c4-lexicographic") {
        for (std::size_t n = 1; 4 * n <= max; ++n) {
            Graph g = lexicographic_product(cycle(4), empty_graph(n));
            out.push_back({{{"n", str(n)}}, g, true, exists_for(g, DistanceSet{0, 2}), ""});
        }
    } else if (id == "p3-both-labelings") {
        Graph g = path(3);
        Instance inst{{{"graph", "P3"}}, g, true, {}, ""};
        inst.observe = [g](const SearchOptions& b, std::string& note) -> std::optional<bool> {
            std::string ignored;
            auto one = exists(g, DistanceSet{1}, b, ignored);
            auto closed = exists(g, DistanceSet{0, 1}, b, ignored);
            if (!one || !closed) return std::nullopt;
            note = std::string("{1}-magic=") + (*one ? "yes" : "no") + "; {0,1}-magic=" + (*closed ? "yes" : "no");
            return *one && *closed;
        };
        out.push_back(std::move(inst));
    } else {
        throw std::invalid_argument("unknown claim id '" + std::string(id) + "'");
    }
    return out;
}

}  // namespace

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids{
        "cycle-singleton",  "union-c4k",         "cycle-prefix-sets",   "even-cycle-antipodal",
        "c4k-complement",   "hnp-02",            "partite-02",          "os11b-complement",
        "os11b-parity",     "fkk06-regular-diam2", "fkk06-lexicographic", "sas09-c4-lexicographic",
        "p3-both-labelings",
    };
    return ids;
}

ClaimTier claim_tier(std::string_view claim_id)
{
    static const std::vector<std::string_view> hard{
        "cycle-singleton", "union-c4k", "cycle-prefix-sets", "even-cycle-antipodal",
        "c4k-complement",  "hnp-02",    "partite-02",
    };
    if (std::find(claim_ids().begin(), claim_ids().end(), claim_id) == claim_ids().end())
        throw std::invalid_argument("unknown claim id '" + std::string(claim_id) + "'");
    return std::find(hard.begin(), hard.end(), claim_id) != hard.end() ? ClaimTier::Hard
                                                                        : ClaimTier::ReportOnly;
}

std::vector<ClaimVerdict> audit(std::string_view claim_id, const AuditRange& range,
                                const SearchOptions& budget)
{
    const auto tier = claim_tier(claim_id);
    auto instances = build(claim_id, range.max_order);
    return parallel_map(instances.size(), [&](std::size_t i) {
        auto& inst = instances[i];
        ClaimVerdict v;
        v.claim_id = std::string(claim_id);
        v.parameters = inst.params;
        v.graph6 = graph6_or_empty(inst.graph);
        v.predicted_exists = inst.predicted;
        v.tier = tier;
        std::string note = inst.note;
        if (inst.predict) {
            std::string ignored;
            auto predicted = inst.predict(budget, ignored);
            if (!predicted) {
                v.note = "UNTESTED: prediction search aborted";
                return v;
            }
            v.predicted_exists = *predicted;
        }
        v.observed_exists = inst.observe(budget, note);
        v.note = note;
        v.agreement = v.observed_exists && *v.observed_exists == v.predicted_exists;
        return v;
    });
}

}  // namespace dmagic
