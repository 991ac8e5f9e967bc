#pragma once

#include <nlohmann/json.hpp>

#include "dmagic/claims.hpp"
#include "dmagic/fracdom.hpp"
#include "dmagic/labeling.hpp"
#include "dmagic/screeners.hpp"
#include "dmagic/solver.hpp"

namespace dmagic {

using Json = nlohmann::ordered_json;

/// {"graph6", "D", "labels", "constant"}
Json certificate_to_json(const MagicCertificate& cert);
/// Rebuilds and re-verifies; throws MagicCertificate::Rejected on a bad
/// labeling and std::invalid_argument on malformed input, including a
/// stated constant that differs from the verified one.
MagicCertificate certificate_from_json(const Json& j);

Json verdict_to_json(const Verdict& verdict);
Json refutation_to_json(const Refutation& r);
/// Exact "p/q" strings throughout.
Json gamma_to_json(const GammaResult& result);

/// {"status", "constant"?, "labels"?, "nodes", "prunes", "elapsed"?}.
/// Elapsed time is omitted when include_elapsed is false so reports stay
/// byte-identical across runs.
Json outcome_to_json(const SearchOutcome& outcome, bool include_elapsed = true);

Json claim_to_json(const ClaimVerdict& v);

}  // namespace dmagic
