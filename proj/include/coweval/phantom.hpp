#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "coweval/component_graph.hpp"
#include "coweval/label_map.hpp"
#include "coweval/volume.hpp"

namespace coweval {

enum class VesselState { Normal, Hypoplastic, Aplastic };
enum class AcomState { Present, Absent, Double };

/// Parametric synthetic CoW with analytically known component topology.
/// Centerlines are fixed piecewise-linear templates in a 64 mm domain with
/// small seeded jitter; topological fidelity, not anatomical realism, is the
/// contract.
struct PhantomSpec {
    Vec3i dims{128, 128, 128};
    Vec3d spacing{0.5, 0.5, 0.5};

    AcomState acom = AcomState::Present;
    bool third_a2 = false;
    bool r_pcom = true;
    bool l_pcom = true;
    VesselState r_a1 = VesselState::Normal;
    VesselState l_a1 = VesselState::Normal;
    VesselState r_p1 = VesselState::Normal;
    VesselState l_p1 = VesselState::Normal;
    bool fetal_r = false;  // dominant Pcom feeding the PCA; requires r_pcom
    bool fetal_l = false;

    std::array<double, kNumSegments> radius_mm = default_radii();
    std::uint32_t seed = 0;

    static std::array<double, kNumSegments> default_radii();

    /// Throws on invalid toggles: radii outside [0.5, 4.0] mm, fetal side
    /// without its Pcom, aplastic A1 without Acom, aplastic P1 without its
    /// Pcom, 3rd-A2 without a single Acom.
    void validate() const;

    bool segment_enabled(Segment s) const;
};

PhantomSpec phantom_spec_from_json(const std::string& text);
std::string phantom_spec_to_json(const PhantomSpec& spec);
PhantomSpec load_phantom_spec(const std::string& path);

struct PhantomResult {
    LabelVolume volume;
    RoiBox roi;                // foreground bounding box with a 2-voxel margin
    ComponentGraph expected;   // symbolic graph, never derived from the voxels
};

/// Rasterizes each enabled component as a capsule sweep along its centerline.
/// Schematic-adjacent components share one junction contact (capsule ends
/// overlap; ICA owns its bifurcation tip, BA owns the BA-PCA tip); all other
/// pairs stay >= 2 background voxels apart. Deterministic for a fixed seed.
/// Throws when the requested radii/spacing would make non-adjacent
/// components overlap, or the grid cannot hold the 64 mm template domain.
PhantomResult generate_phantom(const PhantomSpec& spec, const LabelMap& map = LabelMap::defaults());

/// The adjacency graph implied by the schematic and the toggles, computed
/// symbolically without voxelization.
ComponentGraph expected_graph(const PhantomSpec& spec);

// Corruption operators modeling observed failure modes. Each produces a
// deterministic modified copy and touches only the voxels it specifies.

/// Removes a perpendicular slab of the class along its principal axis,
/// `position` in [0,1] along the axis (0.5 = mid-vessel).
struct BreakVessel {
    Segment segment;
    double gap_mm = 1.5;
    double position = 0.5;
};

/// Zeroes every voxel of the class.
struct DropClass {
    Segment segment;
};

/// Paints a sphere of the class over background voxels only; far placements
/// add a floating component, near placements fake a wrong-neighbor contact.
struct FloatingBlob {
    Segment segment;
    double radius_mm = 1.0;
    Vec3d center_mm;
};

/// Exchanges the two class labels inside an axis-aligned voxel region.
struct CrossoverSwap {
    Segment a;
    Segment b;
    RoiBox region;
};

/// steps > 0 dilates (claiming background only), steps < 0 erodes.
struct DilateErode {
    Segment segment;
    int steps = 1;
};

using Corruption = std::variant<BreakVessel, DropClass, FloatingBlob, CrossoverSwap, DilateErode>;

LabelVolume apply_corruption(const LabelVolume& vol, const Corruption& c,
                             const LabelMap& map = LabelMap::defaults());

/// CLI grammar: break:<class>[:gap_mm[:position]] | drop:<class> |
/// blob:<class>:<radius>:<cx>,<cy>,<cz> | swap:<a>:<b>:<x>,<y>,<z>,<sx>,<sy>,<sz> |
/// morph:<class>:<steps>
Corruption parse_corruption(const std::string& text);
std::string corruption_tag(const Corruption& c);

}  // namespace coweval
