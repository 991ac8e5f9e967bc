#include "dmagic/json_io.hpp"

#include "dmagic/graph6.hpp"

namespace dmagic {

Json certificate_to_json(const MagicCertificate& cert)
{
    Json j;
    j["graph6"] = emit_graph6(cert.graph());
    j["D"] = cert.distance_set().values();
    j["labels"] = cert.labeling().labels();
    j["constant"] = cert.constant();
    return j;
}

MagicCertificate certificate_from_json(const Json& j)
{
    try {
        Graph g = parse_graph6(j.at("graph6").get<std::string>());
        DistanceSet set(j.at("D").get<std::vector<int>>());
        Labeling f(j.at("labels").get<std::vector<Label>>());
        auto cert = MagicCertificate::issue(std::move(g), std::move(f), std::move(set));
        if (cert.constant() != j.at("constant").get<Weight>())
            throw std::invalid_argument("certificate states constant " +
                                        std::to_string(j.at("constant").get<Weight>()) +
                                        " but the labeling gives " + std::to_string(cert.constant()));
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
    }
}

Json verdict_to_json(const Verdict& verdict)
{
    Json j;
    j["verdict"] = to_string(verdict.kind);
    if (verdict.kind == Verdict::Kind::Magic) j["constant"] = verdict.constant;
    if (verdict.kind == Verdict::Kind::NotMagic) {
        j["witness"] = {verdict.witness.first, verdict.witness.second};
        j["weights"] = {verdict.first_weight, verdict.second_weight};
    }
    return j;
}

Json refutation_to_json(const Refutation& r)
{
    Json j;
    j["rule"] = std::string(rule_id(r.rule));
    j["witnesses"] = r.witnesses;
    if (r.regularity) j["r"] = *r.regularity;
    j["explanation"] = r.explanation;
    return j;
}

Json gamma_to_json(const GammaResult& result)
{
    Json j;
    j["gamma"] = result.gamma.to_string();
    Json witness = Json::array();
    for (const auto& v : result.witness) witness.push_back(v.to_string());
    j["witness"] = witness;
    Json dual = Json::array();
    for (const auto& v : result.dual) dual.push_back(v.to_string());
    j["dual"] = dual;
    j["predictedConstant"] = result.predicted_constant.to_string();
    j["integral"] = result.predicted_constant.is_integer();
    return j;
}

Json outcome_to_json(const SearchOutcome& outcome, bool include_elapsed)
{
    Json j;
    j["status"] = to_string(outcome.status);
    if (outcome.found()) {
        const auto& first = outcome.certificates.front();
        j["constant"] = first.constant();
        j["labels"] = first.labeling().labels();
    }
    if (outcome.status == SearchStatus::Aborted) j["abortReason"] = outcome.abort_reason;
    if (outcome.counted) {
        j["solutions"] = outcome.total_solutions;
        j["canonicalSolutions"] = outcome.canonical_solutions;
    }
    if (outcome.target_constant) j["targetConstant"] = *outcome.target_constant;
    if (!outcome.refutations.empty()) {
        Json refs = Json::array();
        for (const auto& r : outcome.refutations) refs.push_back(refutation_to_json(r));
        j["refutations"] = refs;
    }
    j["nodes"] = outcome.stats.nodes;
    const auto& p = outcome.stats.prunes;
    j["prunes"] = {{"screen", p.screen},         {"constantTarget", p.constant_target},
                   {"emptyEquation", p.empty_equation}, {"bound", p.bound},
                   {"equation", p.equation},     {"twin", p.twin}};
    if (include_elapsed) j["elapsed"] = outcome.elapsed_seconds;
    return j;
}

Json claim_to_json(const ClaimVerdict& v)
{
    Json j;
    j["claimId"] = v.claim_id;
    Json params = Json::object();
    for (const auto& [k, val] : v.parameters) params[k] = val;
    j["params"] = params;
    j["graph6"] = v.graph6;
    j["tier"] = std::string(to_string(v.tier));
    j["predicted"] = v.predicted_exists;
    if (v.observed_exists) j["observed"] = *v.observed_exists;
    else j["observed"] = "UNTESTED";
    j["agreement"] = v.agreement;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace dmagic
