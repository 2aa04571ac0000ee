#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coweval/detection.hpp"
#include "coweval/matching.hpp"
#include "coweval/metrics.hpp"

namespace coweval {

struct CaseRecord {
    std::string case_id;
    std::string error;  // empty = ok
    std::optional<CaseMetrics> metrics;

    bool ok() const { return error.empty(); }
};

struct Aggregate {
    double mean = 0;
    double std_dev = 0;  // sample standard deviation, 0 for n < 2
    int n = 0;
};

/// Per-case metric records for one team plus recomputable aggregates.
struct TeamReport {
    std::string team;
    Task task = Task::Multiclass;
    std::vector<CaseRecord> cases;  // sorted by case id
    std::map<std::string, Aggregate> aggregates;
};

/// Aggregate mean/std over ok cases for every metric column present.
std::map<std::string, Aggregate> compute_aggregates(const std::vector<CaseRecord>& cases, Task task);

/// Machine schema: versioned header, one flat-keyed record per case,
/// deterministic key and case ordering.
std::string report_to_json(const TeamReport& report);
TeamReport report_from_json(const std::string& text);
void save_report(const TeamReport& report, const std::string& path);
TeamReport load_report(const std::string& path);

/// Tab-delimited table, one row per case; absent values render as "nan".
std::string report_to_table(const TeamReport& report);

struct TopoCase {
    std::string case_id;
    std::string error;
    VariantDiagnosis diagnosis{};
    MatchReport match{};
    std::optional<double> group1_dice;  // per-case mean over present Group-1 classes
    std::optional<double> group2_dice;

    bool ok() const { return error.empty(); }
};

struct TopoReport {
    std::string team;
    DetectionCounts detection{};
    std::vector<TopoCase> cases;
    MatchRates rates{};
    Aggregate group1_dice{};
    Aggregate group2_dice{};
};

std::string topo_report_to_json(const TopoReport& report);
std::string topo_report_to_table(const TopoReport& report);

}  // namespace coweval
