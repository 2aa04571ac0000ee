#pragma once

#include <map>
#include <string>
#include <vector>

#include "coweval/component_graph.hpp"
#include "coweval/metrics.hpp"

namespace coweval {

enum class AnteriorVariant { WithAcom, MissingAcom, ThirdA2 };
enum class PosteriorVariant { BothPcoms, RPcomOnly, LPcomOnly, NoPcoms };

const char* anterior_variant_name(AnteriorVariant v);
const char* posterior_variant_name(PosteriorVariant v);

struct VariantDiagnosis {
    AnteriorVariant anterior = AnteriorVariant::MissingAcom;
    PosteriorVariant posterior = PosteriorVariant::NoPcoms;
};

/// Reads the variant off a ground-truth graph: 3rd-A2 wins over Acom on the
/// anterior axis; the posterior axis is Pcom presence per side.
VariantDiagnosis classify_variants(const ComponentGraph& gt_graph);

struct MatchResult {
    bool matched = true;
    std::vector<std::string> failed_conditions;
};

struct MatchReport {
    std::string case_id;
    bool anterior_matched = false;
    bool posterior_matched = false;
    std::vector<std::string> failed_conditions;  // "anterior/..." and "posterior/..." entries
};

/// Anterior variant topology match:
///  - Acom presence equals GT's; if present it must touch both ACAs and have
///    no β0 error;
///  - same for 3rd-A2 with Acom as the required neighbor;
///  - each ACA has no β0 error and its adjacency to {ipsilateral ICA, Acom}
///    equals the GT-side adjacency (connect to ICA if A1 present, else just
///    to Acom).
MatchResult match_anterior(const ComponentGraph& gt_graph, const ComponentGraph& pred_graph,
                           const EvalOptions& opts = {});

/// Posterior mirror: Pcom presence per side, Pcom touching (ipsilateral) ICA
/// and PCA with no β0 error; PCAs with no β0 error and GT-equal adjacency to
/// {BA, ipsilateral Pcom}.
MatchResult match_posterior(const ComponentGraph& gt_graph, const ComponentGraph& pred_graph,
                            const EvalOptions& opts = {});

MatchReport match_case(const std::string& case_id, const ComponentGraph& gt_graph,
                       const ComponentGraph& pred_graph, const EvalOptions& opts = {});

struct VariantRate {
    int matched = 0;
    int total = 0;
    double rate() const { return total == 0 ? 0.0 : static_cast<double>(matched) / total; }
};

struct MatchRates {
    std::map<AnteriorVariant, VariantRate> anterior;   // variants with zero cases omitted
    std::map<PosteriorVariant, VariantRate> posterior;
};

/// Per-variant fraction of cases whose axis matched, case-aligned lists.
MatchRates aggregate_match_rates(const std::vector<MatchReport>& reports,
                                 const std::vector<VariantDiagnosis>& diagnoses);

}  // namespace coweval
