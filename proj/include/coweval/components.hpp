#pragma once

#include <cstdint>
#include <vector>

#include "coweval/volume.hpp"

namespace coweval {

enum class Connectivity : int { C6 = 6, C18 = 18, C26 = 26 };

Connectivity connectivity_from_int(int n);

/// Neighbor offsets for a connectivity, faces first.
const std::vector<Vec3i>& neighbor_offsets(Connectivity conn);

struct ComponentField {
    std::vector<std::int32_t> comp_of;   // per voxel, 0 = background, 1..count
    std::int32_t count = 0;
    std::vector<std::uint8_t> value_of_comp;   // indexed 1..count
    std::vector<std::size_t> size_of_comp;     // indexed 1..count
    std::vector<std::size_t> first_voxel_of_comp;  // scan-order anchor, 1..count
};

/// Connected components of equal-valued nonzero voxels. For a binary mask
/// this is plain foreground labeling; for a multiclass volume, voxels of
/// different classes never join.
ComponentField label_components(const LabelVolume& vol, Connectivity conn);

/// Number of foreground (nonzero) connected components.
int betti0(const LabelVolume& mask, Connectivity conn = Connectivity::C26);

}  // namespace coweval
