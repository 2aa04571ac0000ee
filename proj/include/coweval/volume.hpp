#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coweval {

struct Vec3i {
    int x = 0, y = 0, z = 0;
    friend bool operator==(const Vec3i&, const Vec3i&) = default;
};

struct Vec3d {
    double x = 0, y = 0, z = 0;
    friend bool operator==(const Vec3d&, const Vec3d&) = default;
};

/// Dense 3D grid, x-fastest memory order (NIfTI layout). Voxel (x,y,z) lives
/// at data()[x + dims.x*(y + dims.y*z)]. Immutable after construction in all
/// evaluation paths; safe to share across threads.
template <class T>
class VoxelGrid {
public:
    VoxelGrid() = default;

    VoxelGrid(Vec3i dims, Vec3d spacing, T fill = T{})
        : dims_(dims), spacing_(spacing), data_(checked_size(dims), fill) {
        check_spacing(spacing);
    }

    VoxelGrid(Vec3i dims, Vec3d spacing, std::vector<T> data)
        : dims_(dims), spacing_(spacing), data_(std::move(data)) {
        check_spacing(spacing);
        if (data_.size() != checked_size(dims))
            throw std::invalid_argument("volume: data length does not match dims");
    }

    const Vec3i& dims() const { return dims_; }
    const Vec3d& spacing() const { return spacing_; }

    /// Axis-direction code of the voxel axes; always "LPS" after load.
    const std::string& orientation() const { return orientation_; }
    void set_orientation(std::string code) { orientation_ = std::move(code); }

    std::size_t size() const { return data_.size(); }
    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(x) +
               static_cast<std::size_t>(dims_.x) *
                   (static_cast<std::size_t>(y) + static_cast<std::size_t>(dims_.y) * static_cast<std::size_t>(z));
    }
    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && y >= 0 && z >= 0 && x < dims_.x && y < dims_.y && z < dims_.z;
    }

    T at(int x, int y, int z) const { return data_[index(x, y, z)]; }
    T& at(int x, int y, int z) { return data_[index(x, y, z)]; }
    T operator[](std::size_t i) const { return data_[i]; }
    T& operator[](std::size_t i) { return data_[i]; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    friend bool operator==(const VoxelGrid& a, const VoxelGrid& b) {
        return a.dims_ == b.dims_ && near_spacing(a.spacing_, b.spacing_) && a.data_ == b.data_;
    }

private:
    static std::size_t checked_size(Vec3i d) {
        if (d.x < 1 || d.y < 1 || d.z < 1)
            throw std::invalid_argument("volume: dims components must be >= 1");
        const std::uint64_t n = static_cast<std::uint64_t>(d.x) * static_cast<std::uint64_t>(d.y) *
                                static_cast<std::uint64_t>(d.z);
        if (n > (1ull << 33))
            throw std::invalid_argument("volume: dims product overflows supported size");
        return static_cast<std::size_t>(n);
    }
    static void check_spacing(Vec3d s) {
        if (s.x <= 0 || s.y <= 0 || s.z <= 0)
            throw std::invalid_argument("volume: spacing components must be > 0");
    }
    // Spacing equality to 1e-6 mm, the write/read contract.
    static bool near_spacing(Vec3d a, Vec3d b) {
        auto near = [](double u, double v) { return u > v ? u - v < 1e-6 : v - u < 1e-6; };
        return near(a.x, b.x) && near(a.y, b.y) && near(a.z, b.z);
    }

    Vec3i dims_{1, 1, 1};
    Vec3d spacing_{1, 1, 1};
    std::string orientation_ = "LPS";
    std::vector<T> data_ = std::vector<T>(1);
};

/// Class-id volume, 8-bit unsigned, 0 = background.
using LabelVolume = VoxelGrid<std::uint8_t>;
/// Image volume, 16-bit signed.
using IntensityVolume = VoxelGrid<std::int16_t>;
/// Binary centerline mask produced by skeletonize(); subset of its source mask.
using SkeletonVolume = VoxelGrid<std::uint8_t>;

/// Axis-aligned voxel-index bounding box.
struct RoiBox {
    Vec3i min_corner;
    Vec3i size;

    bool valid_for(const Vec3i& dims) const {
        return min_corner.x >= 0 && min_corner.y >= 0 && min_corner.z >= 0 && size.x >= 1 && size.y >= 1 &&
               size.z >= 1 && min_corner.x + size.x <= dims.x && min_corner.y + size.y <= dims.y &&
               min_corner.z + size.z <= dims.z;
    }
    friend bool operator==(const RoiBox&, const RoiBox&) = default;
};

template <class T>
VoxelGrid<T> crop_to_roi(const VoxelGrid<T>& vol, const RoiBox& roi) {
    if (!roi.valid_for(vol.dims()))
        throw std::invalid_argument("crop_to_roi: roi out of bounds");
    VoxelGrid<T> out(roi.size, vol.spacing());
    out.set_orientation(vol.orientation());
    const int sx = roi.size.x;
    for (int z = 0; z < roi.size.z; ++z)
        for (int y = 0; y < roi.size.y; ++y) {
            const T* src = vol.data().data() + vol.index(roi.min_corner.x, roi.min_corner.y + y, roi.min_corner.z + z);
            T* dst = out.data().data() + out.index(0, y, z);
            std::copy(src, src + sx, dst);
        }
    return out;
}

/// Foreground indicator: 1 wherever the input is nonzero.
LabelVolume merge_to_binary(const LabelVolume& vol);

/// One ROI record per case: `<case_id> <min_x> <min_y> <min_z> <sx> <sy> <sz>`,
/// '#' comments allowed.
struct RoiTable {
    std::vector<std::pair<std::string, RoiBox>> entries;

    const RoiBox* find(const std::string& case_id) const;
};

RoiTable read_roi_table(const std::string& path);
void write_roi_table(const RoiTable& table, const std::string& path);

}  // namespace coweval
