#include "coweval/metrics.hpp"

#include "coweval/skeleton.hpp"

namespace coweval {

namespace {

void require_same_dims(const LabelVolume& a, const LabelVolume& b, const char* what) {
    if (!(a.dims() == b.dims()))
        throw std::invalid_argument(std::string(what) + ": volumes have different dims");
}

struct OverlapCounts {
    std::size_t a = 0, b = 0, both = 0;
};

OverlapCounts count_overlap(const LabelVolume& a, const LabelVolume& b) {
    OverlapCounts c;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        const bool fa = da[i] != 0, fb = db[i] != 0;
        c.a += fa;
        c.b += fb;
        c.both += fa && fb;
    }
    return c;
}

double dice_from_counts(const OverlapCounts& c) {
    if (c.a + c.b == 0) return 1.0;  // agreement on absence
    return 2.0 * static_cast<double>(c.both) / static_cast<double>(c.a + c.b);
}

}  // namespace

double dice(const LabelVolume& a, const LabelVolume& b) {
    require_same_dims(a, b, "dice");
    return dice_from_counts(count_overlap(a, b));
}

std::optional<double> per_class_dice(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                                     const LabelMap& map) {
    require_same_dims(gt, pred, "per_class_dice");
    const std::uint8_t v = map.value(c);
    OverlapCounts counts;
    const auto& dg = gt.data();
    const auto& dp = pred.data();
    for (std::size_t i = 0; i < dg.size(); ++i) {
        const bool fg = dg[i] == v, fp = dp[i] == v;
        counts.a += fg;
        counts.b += fp;
        counts.both += fg && fp;
    }
    if (counts.a + counts.b == 0) return std::nullopt;  // absent from both, no score
    return dice_from_counts(counts);
}

double cl_dice(const LabelVolume& gt_bin, const LabelVolume& pred_bin) {
    require_same_dims(gt_bin, pred_bin, "cl_dice");
    std::size_t n_gt = 0, n_pred = 0;
    for (const auto v : gt_bin.data()) n_gt += v != 0;
    for (const auto v : pred_bin.data()) n_pred += v != 0;
    if (n_gt == 0 && n_pred == 0) return 1.0;
    if (n_gt == 0 || n_pred == 0) return 0.0;

    const SkeletonVolume s_gt = skeletonize(gt_bin);
    const SkeletonVolume s_pred = skeletonize(pred_bin);

    std::size_t sp = 0, sp_in_vg = 0, sg = 0, sg_in_vp = 0;
    const auto& dsp = s_pred.data();
    const auto& dsg = s_gt.data();
    const auto& dvg = gt_bin.data();
    const auto& dvp = pred_bin.data();
    for (std::size_t i = 0; i < dsp.size(); ++i) {
        if (dsp[i]) {
            ++sp;
            sp_in_vg += dvg[i] != 0;
        }
        if (dsg[i]) {
            ++sg;
            sg_in_vp += dvp[i] != 0;
        }
    }
    // Non-empty masks always keep a non-empty skeleton (a component's last
    // voxel is never simple), so the ratios are well-defined.
    const double tprec = static_cast<double>(sp_in_vg) / static_cast<double>(sp);
    const double tsens = static_cast<double>(sg_in_vp) / static_cast<double>(sg);
    if (tprec + tsens == 0.0) return 0.0;
    return 2.0 * tprec * tsens / (tprec + tsens);
}

CaseMetrics evaluate_case(const LabelVolume& gt, const LabelVolume& pred, const RoiBox& roi,
                          const LabelMap& map, Task task, const EvalOptions& opts) {
    require_same_dims(gt, pred, "evaluate_case");
    if (!roi.valid_for(gt.dims())) throw std::invalid_argument("evaluate_case: roi out of bounds");

    const LabelVolume gt_roi = crop_to_roi(gt, roi);
    const LabelVolume pred_roi = crop_to_roi(pred, roi);
    const LabelVolume gt_bin = merge_to_binary(gt_roi);
    const LabelVolume pred_bin = merge_to_binary(pred_roi);

    CaseMetrics m;
    m.binary_dice = dice(gt_bin, pred_bin);
    m.binary_cldice = cl_dice(gt_bin, pred_bin);
    m.binary_betti0_error =
        std::abs(betti0(gt_bin, opts.component_connectivity) - betti0(pred_bin, opts.component_connectivity));

    if (task == Task::Binary) return m;

    validate_labels(gt_roi, map);
    validate_labels(pred_roi, map);

    // One same-value labeling pass per volume yields every class's component
    // count; one joint pass yields every class's overlap counts.
    std::array<int, kNumSegments> b0_gt{}, b0_pred{};
    const ComponentField fg = label_components(gt_roi, opts.component_connectivity);
    for (std::int32_t c = 1; c <= fg.count; ++c)
        if (auto s = map.segment(fg.value_of_comp[c])) ++b0_gt[static_cast<int>(*s)];
    const ComponentField fp = label_components(pred_roi, opts.component_connectivity);
    for (std::int32_t c = 1; c <= fp.count; ++c)
        if (auto s = map.segment(fp.value_of_comp[c])) ++b0_pred[static_cast<int>(*s)];

    std::array<OverlapCounts, kNumSegments> counts{};
    const auto& dg = gt_roi.data();
    const auto& dp = pred_roi.data();
    for (std::size_t i = 0; i < dg.size(); ++i) {
        const std::uint8_t vg = dg[i], vp = dp[i];
        if (vg) {
            const int sg = static_cast<int>(*map.segment(vg));
            ++counts[sg].a;
            if (vg == vp) ++counts[sg].both;
        }
        if (vp) ++counts[static_cast<int>(*map.segment(vp))].b;
    }

    double dice_sum = 0, err_sum = 0;
    int present = 0;
    for (Segment s : kAllSegments) {
        const int i = static_cast<int>(s);
        ClassScore score;
        score.segment = s;
        score.betti0_gt = b0_gt[i];
        score.betti0_pred = b0_pred[i];
        score.betti0_error = std::abs(b0_pred[i] - b0_gt[i]);
        if (counts[i].a + counts[i].b > 0) {
            score.dice = dice_from_counts(counts[i]);
            dice_sum += *score.dice;
            err_sum += score.betti0_error;
            ++present;
        }
        m.class_scores.push_back(score);
    }
    // No class present anywhere = agreement on absence.
    m.class_avg_dice = present ? dice_sum / present : 1.0;
    m.class_avg_betti0_error = present ? err_sum / present : 0.0;
    return m;
}

}  // namespace coweval
