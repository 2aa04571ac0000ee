#pragma once

#include "coweval/volume.hpp"

namespace coweval {

/// Medial-axis thinning of a binary mask: border-sequential, 6-subiteration
/// deletion of simple points with endpoint preservation. The result is a
/// one-voxel-thin 26-connected centerline that is a subset of the mask and
/// has the same number of connected components (26-foreground/6-background
/// digital topology). Nonzero input voxels are treated as foreground.
SkeletonVolume skeletonize(const LabelVolume& mask);

}  // namespace coweval
