#pragma once

#include <string>
#include <variant>

#include "coweval/volume.hpp"

namespace coweval {

enum class VolumeKind { Label, Intensity };

using AnyVolume = std::variant<LabelVolume, IntensityVolume>;

/// Reads a NIfTI-1 file (.nii or .nii.gz, little- or big-endian header).
/// Accepted datatypes: uint8 for labels; int16 (or uint8, widened) for
/// intensities. Volumes are reoriented to LPS+ by axis permutation/flip from
/// the header affine; labels are never resampled.
AnyVolume read_volume(const std::string& path, VolumeKind kind);

LabelVolume read_label_volume(const std::string& path);
IntensityVolume read_intensity_volume(const std::string& path);

/// Writes NIfTI-1, LPS+ sform, gzip-compressed when the path ends in ".gz".
/// write then read gives back an equal volume (data exact, spacing 1e-6 mm).
void write_volume(const LabelVolume& vol, const std::string& path);
void write_volume(const IntensityVolume& vol, const std::string& path);

}  // namespace coweval
