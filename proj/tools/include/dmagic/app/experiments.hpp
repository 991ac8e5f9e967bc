#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmagic/distance_set.hpp"
#include "dmagic/graph.hpp"
#include "dmagic/json_io.hpp"
#include "dmagic/solver.hpp"

namespace dmagic::app {

/// Version string embedded in every report.
const char* tool_version();

struct ExperimentSpec {
    std::string name;
    /// Overrides of the experiment's defaults, e.g. {"max_order", "6"}.
    std::map<std::string, std::string> parameters;
    std::string output_path;
    SearchOptions budget;
};

/// Deterministic for identical specs: nothing time-dependent is recorded.
struct Report {
    std::string tool_version;
    std::string experiment;
    Json parameters = Json::object();
    std::vector<Json> records;
    Json summary = Json::object();
    std::vector<Json> discrepancies;
    /// Some instance hit the budget; the CLI maps this to exit code 3.
    bool incomplete = false;
};

Json to_json(const Report& report);
/// One row per record, columns in first-seen key order. Arrays are joined
/// with spaces.
std::string to_csv(const Report& report);

struct ExperimentInfo {
    std::string name;
    std::string description;
    std::map<std::string, std::string> defaults;
};

const std::vector<ExperimentInfo>& experiments();

/// Throws std::invalid_argument on an unknown name or a bad parameter.
Report run_experiment(const ExperimentSpec& spec);

/// D restricted to the distances that occur in g.
struct NormalizedSet {
    std::optional<DistanceSet> effective;
    std::optional<std::string> warning;
};

NormalizedSet normalize(const Graph& g, const DistanceSet& set);

/// Screen, gamma and solve for every graph6 line; records keep input order.
Report run_batch(std::istream& corpus, const DistanceSet& set, const SearchOptions& budget);

}  // namespace dmagic::app
