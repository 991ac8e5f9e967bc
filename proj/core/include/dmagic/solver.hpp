#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmagic/distance_set.hpp"
#include "dmagic/graph.hpp"
#include "dmagic/labeling.hpp"
#include "dmagic/screeners.hpp"

namespace dmagic {

struct SearchOptions {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    /// Collect every magic labeling instead of stopping at the first.
    bool enumerate_all = false;
    /// Run screen_all first and stop on any refutation.
    bool use_screeners = true;
    /// Fix the constant to n(n+1)/(2 gamma_f) and bound partial weights by it.
    bool use_constant_target = true;
    /// Within each twin class, only explore increasing label orders.
    bool use_twin_pruning = true;
};

enum class SearchStatus { Found, ExhaustedNone, Aborted };

std::string to_string(SearchStatus status);

struct PruneCounts {
    std::uint64_t screen = 0;           // screener refutation, search skipped
    std::uint64_t constant_target = 0;  // non-integral or infeasible predicted constant
    std::uint64_t empty_equation = 0;   // some N_D(x) empty (or all empty: degenerate)
    std::uint64_t bound = 0;            // partial weight cannot reach / already exceeds k
    std::uint64_t equation = 0;         // completed weight differs from k
    std::uint64_t twin = 0;             // label skipped by twin ordering
};

struct SearchStats {
    std::uint64_t nodes = 0;
    PruneCounts prunes;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    /// Found: the first certificate, or all of them under enumerate_all.
    std::vector<MagicCertificate> certificates;
    /// Solutions reached by the search (one per twin orbit when twin pruning).
    std::uint64_t canonical_solutions = 0;
    /// canonical_solutions times twin_multiplicity.
    std::uint64_t total_solutions = 0;
    /// True when enumerate_all ran to completion, so the counts are exact.
    bool counted = false;
    /// Product of factorials of twin class sizes (1 without twin pruning).
    std::uint64_t twin_multiplicity = 1;
    /// The target constant, when use_constant_target produced one.
    std::optional<Weight> target_constant;
    std::vector<Refutation> refutations;
    std::string abort_reason;
    SearchStats stats;
    double elapsed_seconds = 0.0;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

/// Vertices grouped by N_D sets that coincide up to the pair itself, so
/// any two members can trade labels without changing magicness. Classes are
/// ordered by their smallest member and list members ascending.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g, const DistanceSet& set);

/// Complete backtracking decision procedure (order <= 64). Deterministic.
SearchOutcome solve(const Graph& g, const DistanceSet& set, const SearchOptions& options = {});

/// solve() with enumerate_all forced on; certificates lists every magic
/// labeling, twin orbits expanded.
SearchOutcome count_all(const Graph& g, const DistanceSet& set, SearchOptions options = {});

}  // namespace dmagic
