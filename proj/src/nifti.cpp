#include "coweval/nifti.hpp"

#include <zlib.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>

namespace coweval {

static_assert(std::endian::native == std::endian::little, "reader assumes a little-endian host");

namespace {

#pragma pack(push, 1)
struct Nifti1Header {
    std::int32_t sizeof_hdr;
    char data_type[10];
    char db_name[18];
    std::int32_t extents;
    std::int16_t session_error;
    char regular;
    char dim_info;
    std::int16_t dim[8];
    float intent_p1, intent_p2, intent_p3;
    std::int16_t intent_code;
    std::int16_t datatype;
    std::int16_t bitpix;
    std::int16_t slice_start;
    float pixdim[8];
    float vox_offset;
    float scl_slope;
    float scl_inter;
    std::int16_t slice_end;
    char slice_code;
    char xyzt_units;
    float cal_max, cal_min;
    float slice_duration;
    float toffset;
    std::int32_t glmax, glmin;
    char descrip[80];
    char aux_file[24];
    std::int16_t qform_code;
    std::int16_t sform_code;
    float quatern_b, quatern_c, quatern_d;
    float qoffset_x, qoffset_y, qoffset_z;
    float srow_x[4];
    float srow_y[4];
    float srow_z[4];
    char intent_name[16];
    char magic[4];
};
#pragma pack(pop)
static_assert(sizeof(Nifti1Header) == 348, "NIfTI-1 header must be 348 bytes");

constexpr std::int16_t DT_UINT8 = 2;
constexpr std::int16_t DT_INT16 = 4;

void swap2(void* p) {
    auto* b = static_cast<std::uint8_t*>(p);
    std::swap(b[0], b[1]);
}
void swap4(void* p) {
    auto* b = static_cast<std::uint8_t*>(p);
    std::swap(b[0], b[3]);
    std::swap(b[1], b[2]);
}

void swap_header(Nifti1Header& h) {
    swap4(&h.sizeof_hdr);
    swap4(&h.extents);
    swap2(&h.session_error);
    for (auto& d : h.dim) swap2(&d);
    swap4(&h.intent_p1);
    swap4(&h.intent_p2);
    swap4(&h.intent_p3);
    swap2(&h.intent_code);
    swap2(&h.datatype);
    swap2(&h.bitpix);
    swap2(&h.slice_start);
    for (auto& p : h.pixdim) swap4(&p);
    swap4(&h.vox_offset);
    swap4(&h.scl_slope);
    swap4(&h.scl_inter);
    swap2(&h.slice_end);
    swap4(&h.cal_max);
    swap4(&h.cal_min);
    swap4(&h.slice_duration);
    swap4(&h.toffset);
    swap4(&h.glmax);
    swap4(&h.glmin);
    swap2(&h.qform_code);
    swap2(&h.sform_code);
    swap4(&h.quatern_b);
    swap4(&h.quatern_c);
    swap4(&h.quatern_d);
    swap4(&h.qoffset_x);
    swap4(&h.qoffset_y);
    swap4(&h.qoffset_z);
    for (auto& v : h.srow_x) swap4(&v);
    for (auto& v : h.srow_y) swap4(&v);
    for (auto& v : h.srow_z) swap4(&v);
}

// gzread handles plain files transparently, so one read path covers both.
class GzReader {
public:
    explicit GzReader(const std::string& path) : path_(path), file_(gzopen(path.c_str(), "rb")) {
        if (!file_) throw std::runtime_error("nifti: cannot open " + path);
    }
    ~GzReader() {
        if (file_) gzclose(file_);
    }
    GzReader(const GzReader&) = delete;
    GzReader& operator=(const GzReader&) = delete;

    void read_exact(void* dst, std::size_t n) {
        auto* out = static_cast<std::uint8_t*>(dst);
        while (n > 0) {
            const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(n, 1u << 30));
            const int got = gzread(file_, out, chunk);
            if (got <= 0) throw std::runtime_error("nifti: truncated file " + path_);
            out += got;
            n -= static_cast<std::size_t>(got);
        }
    }
    void skip(std::size_t n) {
        std::uint8_t buf[4096];
        while (n > 0) {
            const std::size_t chunk = std::min(n, sizeof(buf));
            read_exact(buf, chunk);
            n -= chunk;
        }
    }

private:
    std::string path_;
    gzFile file_;
};

struct Affine {
    // Column j = world direction (RAS) of voxel axis j, scaled by spacing.
    double m[3][3];
};

Affine affine_from_header(const Nifti1Header& h) {
    Affine a{};
    if (h.sform_code > 0) {
        for (int c = 0; c < 3; ++c) {
            a.m[0][c] = h.srow_x[c];
            a.m[1][c] = h.srow_y[c];
            a.m[2][c] = h.srow_z[c];
        }
        return a;
    }
    if (h.qform_code > 0) {
        const double b = h.quatern_b, c = h.quatern_c, d = h.quatern_d;
        double w2 = 1.0 - (b * b + c * c + d * d);
        const double w = w2 > 0 ? std::sqrt(w2) : 0.0;
        const double qfac = h.pixdim[0] < 0 ? -1.0 : 1.0;
        const double R[3][3] = {
            {w * w + b * b - c * c - d * d, 2 * (b * c - w * d), 2 * (b * d + w * c)},
            {2 * (b * c + w * d), w * w + c * c - b * b - d * d, 2 * (c * d - w * b)},
            {2 * (b * d - w * c), 2 * (c * d + w * b), w * w + d * d - b * b - c * c},
        };
        for (int r = 0; r < 3; ++r)
            for (int c2 = 0; c2 < 3; ++c2)
                a.m[r][c2] = R[r][c2] * std::abs(h.pixdim[c2 + 1]) * (c2 == 2 ? qfac : 1.0);
        return a;
    }
    // No orientation info: take the grid as already LPS+.
    a.m[0][0] = -std::abs(h.pixdim[1]);
    a.m[1][1] = -std::abs(h.pixdim[2]);
    a.m[2][2] = std::abs(h.pixdim[3]);
    return a;
}

struct Reorient {
    int src_axis[3];  // input voxel axis feeding output axis o
    bool flip[3];
    bool identity() const {
        return src_axis[0] == 0 && src_axis[1] == 1 && src_axis[2] == 2 && !flip[0] && !flip[1] && !flip[2];
    }
};

// Output axes must point L, P, S, i.e. world RAS signs (-, -, +).
Reorient reorient_to_lps(const Affine& a) {
    int dominant[3];
    double sign[3];
    for (int j = 0; j < 3; ++j) {
        int best = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(a.m[i][j]) > std::abs(a.m[best][j])) best = i;
        if (a.m[best][j] == 0.0) throw std::runtime_error("nifti: degenerate orientation matrix");
        dominant[j] = best;
        sign[j] = a.m[best][j] > 0 ? 1.0 : -1.0;
    }
    if (dominant[0] == dominant[1] || dominant[0] == dominant[2] || dominant[1] == dominant[2])
        throw std::runtime_error("nifti: orientation matrix does not resolve to three distinct axes");

    const double target_sign[3] = {-1.0, -1.0, 1.0};
    Reorient r{};
    for (int o = 0; o < 3; ++o) {
        int j = 0;
        while (dominant[j] != o) ++j;
        r.src_axis[o] = j;
        r.flip[o] = sign[j] != target_sign[o];
    }
    return r;
}

template <class T>
VoxelGrid<T> apply_reorient(const VoxelGrid<T>& in, const Reorient& r) {
    const Vec3i d = in.dims();
    const int in_dims[3] = {d.x, d.y, d.z};
    const double in_spc[3] = {in.spacing().x, in.spacing().y, in.spacing().z};
    Vec3i od{in_dims[r.src_axis[0]], in_dims[r.src_axis[1]], in_dims[r.src_axis[2]]};
    Vec3d os{in_spc[r.src_axis[0]], in_spc[r.src_axis[1]], in_spc[r.src_axis[2]]};
    VoxelGrid<T> out(od, os);

    const std::size_t in_stride[3] = {1, static_cast<std::size_t>(d.x),
                                      static_cast<std::size_t>(d.x) * static_cast<std::size_t>(d.y)};
    auto& dst = out.data();
    const auto& src = in.data();
    std::size_t n = 0;
    int iv[3];
    for (int z = 0; z < od.z; ++z) {
        iv[2] = z;
        for (int y = 0; y < od.y; ++y) {
            iv[1] = y;
            for (int x = 0; x < od.x; ++x) {
                iv[0] = x;
                std::size_t idx = 0;
                for (int o = 0; o < 3; ++o) {
                    const int j = r.src_axis[o];
                    const int v = r.flip[o] ? in_dims[j] - 1 - iv[o] : iv[o];
                    idx += in_stride[j] * static_cast<std::size_t>(v);
                }
                dst[n++] = src[idx];
            }
        }
    }
    return out;
}

std::string img_companion(const std::string& path) {
    namespace fs = std::filesystem;
    std::string stem = path;
    const bool gz = stem.size() > 3 && stem.ends_with(".gz");
    if (gz) stem.resize(stem.size() - 3);
    if (stem.ends_with(".hdr")) stem.resize(stem.size() - 4);
    for (const char* suffix : {".img", ".img.gz"}) {
        if (fs::exists(stem + suffix)) return stem + suffix;
    }
    throw std::runtime_error("nifti: header-only file without companion .img: " + path);
}

template <class T>
VoxelGrid<T> finalize(VoxelGrid<T> vol, const Nifti1Header& h) {
    const Affine a = affine_from_header(h);
    const Reorient r = reorient_to_lps(a);
    if (!r.identity()) vol = apply_reorient(vol, r);
    vol.set_orientation("LPS");
    return vol;
}

template <class T>
VoxelGrid<T> read_payload(GzReader& file, const Nifti1Header& h, bool swapped, Vec3i dims, Vec3d spacing,
                          bool widen_uint8) {
    const std::size_t n = static_cast<std::size_t>(dims.x) * dims.y * dims.z;
    VoxelGrid<T> vol(dims, spacing);
    if (widen_uint8) {
        std::vector<std::uint8_t> raw(n);
        file.read_exact(raw.data(), n);
        for (std::size_t i = 0; i < n; ++i) vol[i] = static_cast<T>(raw[i]);
    } else {
        file.read_exact(vol.data().data(), n * sizeof(T));
        if (swapped && sizeof(T) == 2)
            for (auto& v : vol.data()) swap2(&v);
    }
    return finalize(std::move(vol), h);
}

}  // namespace

AnyVolume read_volume(const std::string& path, VolumeKind kind) {
    if (!std::filesystem::exists(path)) throw std::runtime_error("nifti: no such file: " + path);
    GzReader file(path);

    Nifti1Header h{};
    file.read_exact(&h, sizeof(h));
    bool swapped = false;
    if (h.sizeof_hdr != 348) {
        swap4(&h.sizeof_hdr);
        if (h.sizeof_hdr != 348) throw std::runtime_error("nifti: not a NIfTI-1 file (sizeof_hdr): " + path);
        swap4(&h.sizeof_hdr);  // restore, swap_header handles everything once
        swap_header(h);
        swapped = true;
    }

    const bool single_file = std::memcmp(h.magic, "n+1\0", 4) == 0;
    const bool header_pair = std::memcmp(h.magic, "ni1\0", 4) == 0;
    if (!single_file && !header_pair)
        throw std::runtime_error("nifti: bad magic in " + path);

    if (h.dim[0] < 3 || h.dim[0] > 7)
        throw std::runtime_error("nifti: expected a 3D volume, dim[0]=" + std::to_string(h.dim[0]));
    for (int i = 4; i <= h.dim[0]; ++i)
        if (h.dim[i] > 1)
            throw std::runtime_error("nifti: only scalar single-timepoint volumes are supported: " + path);
    if (h.dim[1] < 1 || h.dim[2] < 1 || h.dim[3] < 1)
        throw std::runtime_error("nifti: non-positive dimension in " + path);
    const std::uint64_t nvox = static_cast<std::uint64_t>(h.dim[1]) * h.dim[2] * h.dim[3];
    if (nvox > (1ull << 33)) throw std::runtime_error("nifti: dims product overflow in " + path);

    const Vec3i dims{h.dim[1], h.dim[2], h.dim[3]};
    for (int i = 1; i <= 3; ++i)
        if (!(std::abs(h.pixdim[i]) > 0))
            throw std::runtime_error("nifti: non-positive pixdim in " + path);
    const Vec3d spacing{std::abs(h.pixdim[1]), std::abs(h.pixdim[2]), std::abs(h.pixdim[3])};

    const bool raw_scaling = (h.scl_slope == 0.0f || h.scl_slope == 1.0f) && h.scl_inter == 0.0f;
    if (!raw_scaling) throw std::runtime_error("nifti: intensity rescaling is not supported: " + path);

    std::optional<GzReader> img;
    GzReader* data_src = &file;
    if (header_pair) {
        img.emplace(img_companion(path));
        data_src = &*img;
    } else {
        const auto offset = static_cast<std::int64_t>(h.vox_offset);
        if (offset < 348) throw std::runtime_error("nifti: vox_offset below header size in " + path);
        file.skip(static_cast<std::size_t>(offset) - sizeof(h));
    }

    if (kind == VolumeKind::Label) {
        if (h.datatype != DT_UINT8)
            throw std::runtime_error("nifti: label volumes must be 8-bit unsigned, got datatype " +
                                     std::to_string(h.datatype) + " in " + path);
        return read_payload<std::uint8_t>(*data_src, h, swapped, dims, spacing, false);
    }
    if (h.datatype == DT_INT16)
        return read_payload<std::int16_t>(*data_src, h, swapped, dims, spacing, false);
    if (h.datatype == DT_UINT8)
        return read_payload<std::int16_t>(*data_src, h, swapped, dims, spacing, true);
    throw std::runtime_error("nifti: intensity volumes must be 16-bit signed (or widenable 8-bit), got datatype " +
                             std::to_string(h.datatype) + " in " + path);
}

LabelVolume read_label_volume(const std::string& path) {
    return std::get<LabelVolume>(read_volume(path, VolumeKind::Label));
}

IntensityVolume read_intensity_volume(const std::string& path) {
    return std::get<IntensityVolume>(read_volume(path, VolumeKind::Intensity));
}

namespace {

template <class T>
void write_impl(const VoxelGrid<T>& vol, const std::string& path, std::int16_t datatype) {
    const Vec3i d = vol.dims();
    if (d.x > 32767 || d.y > 32767 || d.z > 32767)
        throw std::runtime_error("nifti: dimension exceeds the NIfTI-1 dim field: " + path);

    Nifti1Header h{};
    h.sizeof_hdr = 348;
    h.regular = 'r';
    h.dim[0] = 3;
    h.dim[1] = static_cast<std::int16_t>(d.x);
    h.dim[2] = static_cast<std::int16_t>(d.y);
    h.dim[3] = static_cast<std::int16_t>(d.z);
    for (int i = 4; i < 8; ++i) h.dim[i] = 1;
    h.datatype = datatype;
    h.bitpix = static_cast<std::int16_t>(sizeof(T) * 8);
    h.pixdim[0] = 1.0f;
    h.pixdim[1] = static_cast<float>(vol.spacing().x);
    h.pixdim[2] = static_cast<float>(vol.spacing().y);
    h.pixdim[3] = static_cast<float>(vol.spacing().z);
    h.vox_offset = 352.0f;
    h.scl_slope = 1.0f;
    h.scl_inter = 0.0f;
    h.xyzt_units = 2;  // millimeters
    std::strncpy(h.descrip, "coweval", sizeof(h.descrip) - 1);
    h.sform_code = 1;
    // LPS+ voxel axes expressed in the RAS world frame.
    h.srow_x[0] = -h.pixdim[1];
    h.srow_y[1] = -h.pixdim[2];
    h.srow_z[2] = h.pixdim[3];
    std::memcpy(h.magic, "n+1\0", 4);

    const char extender[4] = {0, 0, 0, 0};
    const auto* payload = reinterpret_cast<const char*>(vol.data().data());
    const std::size_t payload_bytes = vol.size() * sizeof(T);

    if (path.ends_with(".gz")) {
        gzFile f = gzopen(path.c_str(), "wb");
        if (!f) throw std::runtime_error("nifti: cannot write " + path);
        bool ok = gzwrite(f, &h, sizeof(h)) == static_cast<int>(sizeof(h)) &&
                  gzwrite(f, extender, 4) == 4;
        std::size_t done = 0;
        while (ok && done < payload_bytes) {
            const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(payload_bytes - done, 1u << 30));
            ok = gzwrite(f, payload + done, chunk) == static_cast<int>(chunk);
            done += chunk;
        }
        ok = gzclose(f) == Z_OK && ok;
        if (!ok) throw std::runtime_error("nifti: write failed for " + path);
        return;
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("nifti: cannot write " + path);
    out.write(reinterpret_cast<const char*>(&h), sizeof(h));
    out.write(extender, 4);
    out.write(payload, static_cast<std::streamsize>(payload_bytes));
    if (!out) throw std::runtime_error("nifti: write failed for " + path);
}

}  // namespace

void write_volume(const LabelVolume& vol, const std::string& path) { write_impl(vol, path, DT_UINT8); }
void write_volume(const IntensityVolume& vol, const std::string& path) { write_impl(vol, path, DT_INT16); }

}  // namespace coweval
