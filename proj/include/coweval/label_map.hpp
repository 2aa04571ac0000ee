#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "coweval/volume.hpp"

namespace coweval {

/// The thirteen CoW vessel components, in the per-class reporting column
/// order (BA first, communicating arteries bold in the middle, 3rd-A2 last).
enum class Segment : std::uint8_t {
    BA = 0,
    RPCA,
    LPCA,
    RICA,
    RMCA,
    LICA,
    LMCA,
    RPcom,
    LPcom,
    Acom,
    RACA,
    LACA,
    ThirdA2,
};

inline constexpr int kNumSegments = 13;

inline constexpr std::array<Segment, kNumSegments> kAllSegments = {
    Segment::BA,    Segment::RPCA,  Segment::LPCA, Segment::RICA, Segment::RMCA,
    Segment::LICA,  Segment::LMCA,  Segment::RPcom, Segment::LPcom, Segment::Acom,
    Segment::RACA,  Segment::LACA,  Segment::ThirdA2,
};

const char* segment_name(Segment s);
std::optional<Segment> segment_from_name(const std::string& name);

/// Group 2 = the communicating arteries plus the rare 3rd-A2; Group 1 = the
/// other nine, which are almost always present.
bool is_group2(Segment s);

/// Bijection between the 13 anatomical classes and their nonzero 8-bit voxel
/// values. Values are dataset conventions, not anatomy, hence configurable.
class LabelMap {
public:
    /// Consecutive ids 1..13 in column order (BA=1 ... L-ACA=12, 3rd-A2=13).
    static LabelMap defaults();

    /// Builds from explicit (segment, value) assignments covering all 13
    /// classes. Throws on duplicate ids, ids outside 1..255, missing class.
    static LabelMap from_values(const std::array<std::uint8_t, kNumSegments>& value_per_segment);

    std::uint8_t value(Segment s) const { return values_[static_cast<int>(s)]; }
    std::optional<Segment> segment(std::uint8_t value) const {
        const std::int8_t s = lookup_[value];
        return s < 0 ? std::nullopt : std::optional<Segment>(static_cast<Segment>(s));
    }
    bool is_class_value(std::uint8_t value) const { return lookup_[value] >= 0; }

    friend bool operator==(const LabelMap&, const LabelMap&) = default;

private:
    LabelMap() = default;
    std::array<std::uint8_t, kNumSegments> values_{};
    std::array<std::int8_t, 256> lookup_{};
};

/// JSON config: {"labels": [{"value": 1, "name": "BA"}, ...]} with exactly 13
/// entries. Group membership is fixed by class name and not configurable.
LabelMap load_label_map(const std::string& path);
void save_label_map(const LabelMap& map, const std::string& path);

/// Throws if any nonzero voxel value is not a key of the map.
void validate_labels(const LabelVolume& vol, const LabelMap& map);

}  // namespace coweval
