#include "coweval/skeleton.hpp"

#include <array>
#include <vector>

namespace coweval {

namespace {

// Local 3x3x3 cube, cell c = (dx+1) + 3*(dy+1) + 9*(dz+1), center = 13.
constexpr int kCenter = 13;

struct CubeTables {
    std::array<std::array<int, 3>, 27> off;      // cell -> offset
    std::array<std::vector<int>, 27> adj26;      // 26-adjacency between non-center cells
    std::array<std::vector<int>, 27> adj6in18;   // 6-adjacency restricted to the 18-neighborhood
    std::array<bool, 27> in18{};
    std::array<bool, 27> is_face{};

    CubeTables() {
        for (int c = 0; c < 27; ++c)
            off[c] = {c % 3 - 1, (c / 3) % 3 - 1, c / 9 - 1};
        for (int c = 0; c < 27; ++c) {
            const int l1 = std::abs(off[c][0]) + std::abs(off[c][1]) + std::abs(off[c][2]);
            in18[c] = c != kCenter && l1 <= 2;
            is_face[c] = l1 == 1;
        }
        for (int a = 0; a < 27; ++a) {
            if (a == kCenter) continue;
            for (int b = 0; b < 27; ++b) {
                if (b == kCenter || b == a) continue;
                const int dx = std::abs(off[a][0] - off[b][0]);
                const int dy = std::abs(off[a][1] - off[b][1]);
                const int dz = std::abs(off[a][2] - off[b][2]);
                if (std::max({dx, dy, dz}) == 1) adj26[a].push_back(b);
                if (in18[a] && in18[b] && dx + dy + dz == 1) adj6in18[a].push_back(b);
            }
        }
    }
};

const CubeTables& tables() {
    static const CubeTables t;
    return t;
}

// Malandain-Bertrand characterization for (26, 6) digital topology: a
// foreground point is simple iff its 26-neighborhood holds exactly one
// foreground 26-component and the 18-neighborhood holds exactly one
// background 6-component that touches a face neighbor. Deleting a simple
// point provably changes no Betti number.
bool is_simple(const std::array<std::uint8_t, 27>& cube) {
    const CubeTables& t = tables();

    int fg_components = 0;
    std::array<std::uint8_t, 27> seen{};
    std::array<int, 26> stack;
    for (int c = 0; c < 27; ++c) {
        if (c == kCenter || !cube[c] || seen[c]) continue;
        if (++fg_components > 1) return false;
        int top = 0;
        stack[top++] = c;
        seen[c] = 1;
        while (top) {
            const int cur = stack[--top];
            for (const int nb : t.adj26[cur])
                if (cube[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    stack[top++] = nb;
                }
        }
    }
    if (fg_components != 1) return false;

    int bg_face_components = 0;
    seen.fill(0);
    for (int c = 0; c < 27; ++c) {
        if (!t.is_face[c] || cube[c] || seen[c]) continue;
        if (++bg_face_components > 1) return false;
        int top = 0;
        stack[top++] = c;
        seen[c] = 1;
        while (top) {
            const int cur = stack[--top];
            for (const int nb : t.adj6in18[cur])
                if (!cube[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    stack[top++] = nb;
                }
        }
    }
    return bg_face_components == 1;
}

int foreground_neighbors(const std::array<std::uint8_t, 27>& cube) {
    int n = 0;
    for (int c = 0; c < 27; ++c) n += (c != kCenter && cube[c]);
    return n;
}

class Thinner {
public:
    explicit Thinner(const LabelVolume& mask)
        : d_(mask.dims()), grid_(d_, mask.spacing()) {
        grid_.set_orientation(mask.orientation());
        auto& out = grid_.data();
        const auto& in = mask.data();
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] != 0 ? 1 : 0;
    }

    SkeletonVolume run() {
        // Border-sequential: per direction, collect deletable border points,
        // then delete one at a time re-verifying simplicity so that earlier
        // deletions can veto later ones.
        static constexpr int kDirs[6][3] = {
            {0, 0, 1}, {0, 0, -1}, {0, -1, 0}, {0, 1, 0}, {-1, 0, 0}, {1, 0, 0},
        };
        std::vector<std::size_t> candidates;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& dir : kDirs) {
                candidates.clear();
                collect(dir, candidates);
                for (const std::size_t idx : candidates) {
                    std::array<std::uint8_t, 27> cube;
                    gather(idx, cube);
                    const int n = foreground_neighbors(cube);
                    if (n == 1) continue;  // endpoint, keep centerline tips
                    if (!is_simple(cube)) continue;
                    grid_.data()[idx] = 0;
                    changed = true;
                }
            }
        }
        return std::move(grid_);
    }

private:
    void collect(const int (&dir)[3], std::vector<std::size_t>& out) const {
        const auto& data = grid_.data();
        std::size_t idx = 0;
        for (int z = 0; z < d_.z; ++z)
            for (int y = 0; y < d_.y; ++y)
                for (int x = 0; x < d_.x; ++x, ++idx) {
                    if (!data[idx]) continue;
                    const int bx = x + dir[0], by = y + dir[1], bz = z + dir[2];
                    const bool border =
                        !grid_.in_bounds(bx, by, bz) || data[grid_.index(bx, by, bz)] == 0;
                    if (!border) continue;
                    std::array<std::uint8_t, 27> cube;
                    gather(idx, cube);
                    const int n = foreground_neighbors(cube);
                    if (n != 1 && is_simple(cube)) out.push_back(idx);
                }
    }

    void gather(std::size_t idx, std::array<std::uint8_t, 27>& cube) const {
        const auto& data = grid_.data();
        const std::size_t plane = static_cast<std::size_t>(d_.x) * d_.y;
        const int z = static_cast<int>(idx / plane);
        const int rem = static_cast<int>(idx % plane);
        const int y = rem / d_.x;
        const int x = rem % d_.x;
        if (x > 0 && y > 0 && z > 0 && x < d_.x - 1 && y < d_.y - 1 && z < d_.z - 1) {
            int c = 0;
            for (int dz = -1; dz <= 1; ++dz)
                for (int dy = -1; dy <= 1; ++dy) {
                    const std::size_t row = idx + static_cast<std::size_t>(dz) * plane +
                                            static_cast<std::size_t>(dy) * d_.x;
                    cube[c++] = data[row - 1];
                    cube[c++] = data[row];
                    cube[c++] = data[row + 1];
                }
            return;
        }
        int c = 0;
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx, ++c) {
                    const int nx = x + dx, ny = y + dy, nz = z + dz;
                    cube[c] = grid_.in_bounds(nx, ny, nz) ? data[grid_.index(nx, ny, nz)] : 0;
                }
    }

    Vec3i d_;
    SkeletonVolume grid_;
};

}  // namespace

SkeletonVolume skeletonize(const LabelVolume& mask) { return Thinner(mask).run(); }

}  // namespace coweval
