#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coweval/components.hpp"
#include "coweval/label_map.hpp"
#include "coweval/volume.hpp"

namespace coweval {

/// Volumetric overlap 2|A∩B| / (|A|+|B|) over nonzero voxels.
/// Both empty -> 1 (agreement on absence); exactly one empty -> 0.
double dice(const LabelVolume& a, const LabelVolume& b);

/// Dice of the class-c indicator masks; nullopt when c is absent from both.
std::optional<double> per_class_dice(const LabelVolume& gt, const LabelVolume& pred, Segment c,
                                     const LabelMap& map);

/// Centerline Dice: harmonic mean of topology precision |S_P∩V_G|/|S_P| and
/// topology sensitivity |S_G∩V_P|/|S_G|, with S the skeleton and V the mask.
/// Both empty -> 1; exactly one empty -> 0.
double cl_dice(const LabelVolume& gt_bin, const LabelVolume& pred_bin);

struct ClassScore {
    Segment segment = Segment::BA;
    std::optional<double> dice;  // absent iff the class is missing from both volumes
    int betti0_gt = 0;
    int betti0_pred = 0;
    int betti0_error = 0;
};

struct CaseMetrics {
    std::string case_id;
    std::string modality;  // "CTA", "MRA", or empty
    double binary_dice = 0;
    double binary_cldice = 0;
    int binary_betti0_error = 0;
    std::vector<ClassScore> class_scores;  // empty for the binary task
    std::optional<double> class_avg_dice;
    std::optional<double> class_avg_betti0_error;
};

struct EvalOptions {
    Connectivity component_connectivity = Connectivity::C26;  // β0 and graph nodes
    Connectivity adjacency_connectivity = Connectivity::C26;  // graph edges
    bool ipsilateral = true;   // Pcom/ACA neighborhood checks use same-side ICA/PCA
    bool zero_overlap_fp = false;  // both-present-zero-overlap also tallies an FP
};

enum class Task { Binary, Multiclass };

/// Crops both volumes to the ROI, then computes the metric columns: binary
/// Dice / clDice / β0 error on the merged masks and, for the multiclass task,
/// per-class Dice and β0 errors with per-case class averages over the classes
/// present in at least one volume (clDice stays on the merged binary mask).
CaseMetrics evaluate_case(const LabelVolume& gt, const LabelVolume& pred, const RoiBox& roi,
                          const LabelMap& map, Task task = Task::Multiclass,
                          const EvalOptions& opts = {});

}  // namespace coweval
