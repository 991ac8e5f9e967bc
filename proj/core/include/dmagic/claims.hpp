#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmagic/graph.hpp"
#include "dmagic/solver.hpp"

namespace dmagic {

/// Hard claims are self-contained theorems that must match the solver on
/// every tested instance. Report-only claims are restated results from
/// other sources; disagreements are recorded, not treated as failures.
enum class ClaimTier { Hard, ReportOnly };

std::string_view to_string(ClaimTier tier);

struct ClaimVerdict {
    std::string claim_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string graph6;
    bool predicted_exists = false;
    /// nullopt when the search aborted: the instance is UNTESTED.
    std::optional<bool> observed_exists;
    bool agreement = false;
    ClaimTier tier = ClaimTier::Hard;
    std::string note;

    bool tested() const noexcept { return observed_exists.has_value(); }
    std::string parameter_string() const;  // "n=5;k=2"
};

/// H_{n,p} (n, p > 1) is {0,2}-magic iff n is even or n and p are both odd.
bool predict_hnp_02(std::size_t n, std::size_t p);

/// Complete bi- or tripartite graph with part sizes (any order) is
/// {0,2}-magic iff, with sizes sorted a_1 <= a_2 (<= a_3), v the order,
/// p the number of parts and s_i the partial sums:
///   (a) a_2 >= 2, (b) v(v+1) ≡ 0 mod 2p,
///   (c) the s_i largest labels sum to at least i·v(v+1)/(2p) for every i.
bool predict_partite_02(std::span<const std::size_t> part_sizes);

/// C_n is {k}-magic iff n = 4k.
bool predict_cycle_singleton(std::size_t n, std::size_t k);

/// A 2-regular graph is {k}-magic iff every component is C_{4k}.
/// Throws std::invalid_argument for graphs that are not 2-regular.
bool predict_union_c4k(const Graph& g, std::size_t k);
bool predict_union_c4k(std::span<const std::size_t> cycle_lengths, std::size_t k);

struct AuditRange {
    /// Largest graph order examined; each claim documents how it reads this.
    std::size_t max_order = 8;
};

/// Identifiers accepted by audit(), in a stable order.
const std::vector<std::string>& claim_ids();
ClaimTier claim_tier(std::string_view claim_id);

/// Runs one claim over its instance family up to range.max_order, using
/// `budget` for every solver call. Aborted searches yield UNTESTED verdicts.
/// Throws std::invalid_argument on an unknown claim id.
std::vector<ClaimVerdict> audit(std::string_view claim_id, const AuditRange& range,
                                const SearchOptions& budget);

}  // namespace dmagic
