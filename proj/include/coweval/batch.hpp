#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coweval/report.hpp"

namespace coweval {

struct BatchInputs {
    std::string gt_dir;
    std::string pred_dir;
    std::optional<std::string> roi_path;  // absent = evaluate whole volumes
    LabelMap map = LabelMap::defaults();
    EvalOptions opts{};
    Task task = Task::Multiclass;
    std::string modality;  // stamped onto every case record
    int jobs = 1;
};

/// Case ids = NIfTI file stems shared by both directories; ids present on
/// one side only, or cases that fail to load/evaluate, become flagged error
/// records without aborting the batch. Records come back sorted by id.
std::vector<CaseRecord> batch_evaluate(const BatchInputs& in);

TeamReport run_evaluation(const BatchInputs& in, const std::string& team);

/// Detection counts, per-case variant matching, per-variant match rates and
/// Group-1/Group-2 mean Dice over a case directory pair.
TopoReport run_topology_report(const BatchInputs& in, const std::string& team);

/// NIfTI file stems (name minus .nii/.nii.gz) found directly in a directory.
std::vector<std::string> list_case_ids(const std::string& dir);

}  // namespace coweval
