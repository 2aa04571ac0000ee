#include "coweval/detection.hpp"

namespace coweval {

const char* detection_outcome_name(DetectionOutcome o) {
    switch (o) {
        case DetectionOutcome::TP: return "TP";
        case DetectionOutcome::TN: return "TN";
        case DetectionOutcome::FP: return "FP";
        case DetectionOutcome::FN: return "FN";
    }
    return "?";
}

DetectionDetail detect_class_detail(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                                    const LabelMap& map) {
    if (!(gt.dims() == pred.dims()))
        throw std::invalid_argument("detect_class: volumes have different dims");
    const std::uint8_t v = map.value(c);
    DetectionDetail d{DetectionOutcome::TN};
    const auto& dg = gt.data();
    const auto& dp = pred.data();
    for (std::size_t i = 0; i < dg.size(); ++i) {
        const bool fg = dg[i] == v, fp = dp[i] == v;
        d.gt_present |= fg;
        d.pred_present |= fp;
        if (fg && fp) {
            d.overlap = true;
            break;  // TP is already decided
        }
    }
    if (d.overlap)
        d.outcome = DetectionOutcome::TP;
    else if (d.gt_present)
        d.outcome = DetectionOutcome::FN;  // GT presence dominates, overlap or not
    else if (d.pred_present)
        d.outcome = DetectionOutcome::FP;
    else
        d.outcome = DetectionOutcome::TN;
    return d;
}

DetectionOutcome detect_class(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                              const LabelMap& map) {
    return detect_class_detail(gt, pred, c, map).outcome;
}

void DetectionCounts::add(Segment s, const DetectionDetail& d, bool zero_overlap_fp) {
    Tally& t = tally(s);
    switch (d.outcome) {
        case DetectionOutcome::TP: ++t.tp; break;
        case DetectionOutcome::TN: ++t.tn; break;
        case DetectionOutcome::FP: ++t.fp; break;
        case DetectionOutcome::FN:
            ++t.fn;
            if (zero_overlap_fp && d.pred_present) ++t.fp;
            break;
    }
}

PrecisionRecall precision_recall(const DetectionCounts::Tally& t) {
    PrecisionRecall pr;
    if (t.tp + t.fp > 0) pr.precision = static_cast<double>(t.tp) / (t.tp + t.fp);
    if (t.tp + t.fn > 0) pr.recall = static_cast<double>(t.tp) / (t.tp + t.fn);
    return pr;
}

}  // namespace coweval
