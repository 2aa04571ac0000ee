#pragma once

#include <array>
#include <optional>
#include <string>

#include "coweval/label_map.hpp"
#include "coweval/metrics.hpp"
#include "coweval/volume.hpp"

namespace coweval {

enum class DetectionOutcome { TP, TN, FP, FN };

const char* detection_outcome_name(DetectionOutcome o);

/// Dice > 0 for the class -> TP regardless of segmentation quality; absent
/// from both -> TN; Dice = 0 -> FN when the ground truth has the class,
/// FP when only the prediction does.
DetectionOutcome detect_class(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                              const LabelMap& map);

struct DetectionDetail {
    DetectionOutcome outcome;
    bool gt_present = false;
    bool pred_present = false;
    bool overlap = false;
};

DetectionDetail detect_class_detail(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                                    const LabelMap& map);

/// Per-class tallies over a case set.
struct DetectionCounts {
    struct Tally {
        int tp = 0, tn = 0, fp = 0, fn = 0;
        int total() const { return tp + tn + fp + fn; }
    };
    std::array<Tally, kNumSegments> per_class{};

    Tally& tally(Segment s) { return per_class[static_cast<int>(s)]; }
    const Tally& tally(Segment s) const { return per_class[static_cast<int>(s)]; }

    /// When zero_overlap_fp is set, a both-present-zero-overlap case tallies
    /// FP in addition to its FN.
    void add(Segment s, const DetectionDetail& d, bool zero_overlap_fp = false);
};

struct PrecisionRecall {
    std::optional<double> precision;  // nullopt on zero denominator ("nan")
    std::optional<double> recall;
};

PrecisionRecall precision_recall(const DetectionCounts::Tally& t);

}  // namespace coweval
