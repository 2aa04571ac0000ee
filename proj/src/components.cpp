#include "coweval/components.hpp"

#include <stdexcept>

namespace coweval {

Connectivity connectivity_from_int(int n) {
    switch (n) {
        case 6: return Connectivity::C6;
        case 18: return Connectivity::C18;
        case 26: return Connectivity::C26;
        default: throw std::invalid_argument("connectivity must be 6, 18 or 26");
    }
}

const std::vector<Vec3i>& neighbor_offsets(Connectivity conn) {
    static const std::vector<Vec3i> all = [] {
        std::vector<Vec3i> v;
        // Faces, then edges, then corners, so prefixes give 6 and 18.
        for (int order = 1; order <= 3; ++order)
            for (int dz = -1; dz <= 1; ++dz)
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx)
                        if (std::abs(dx) + std::abs(dy) + std::abs(dz) == order) v.push_back({dx, dy, dz});
        return v;
    }();
    static const std::vector<Vec3i> c6(all.begin(), all.begin() + 6);
    static const std::vector<Vec3i> c18(all.begin(), all.begin() + 18);
    switch (conn) {
        case Connectivity::C6: return c6;
        case Connectivity::C18: return c18;
        case Connectivity::C26: return all;
    }
    throw std::invalid_argument("bad connectivity");
}

ComponentField label_components(const LabelVolume& vol, Connectivity conn) {
    const Vec3i d = vol.dims();
    const auto& data = vol.data();
    const auto& offs = neighbor_offsets(conn);

    ComponentField field;
    field.comp_of.assign(data.size(), 0);
    field.value_of_comp.push_back(0);   // 1-based
    field.size_of_comp.push_back(0);
    field.first_voxel_of_comp.push_back(0);

    std::vector<std::size_t> stack;
    std::size_t idx = 0;
    for (int z = 0; z < d.z; ++z)
        for (int y = 0; y < d.y; ++y)
            for (int x = 0; x < d.x; ++x, ++idx) {
                const std::uint8_t value = data[idx];
                if (value == 0 || field.comp_of[idx] != 0) continue;
                const std::int32_t comp = ++field.count;
                field.value_of_comp.push_back(value);
                field.size_of_comp.push_back(0);
                field.first_voxel_of_comp.push_back(idx);

                field.comp_of[idx] = comp;
                stack.assign(1, idx);
                while (!stack.empty()) {
                    const std::size_t cur = stack.back();
                    stack.pop_back();
                    ++field.size_of_comp[comp];
                    const int cz = static_cast<int>(cur / (static_cast<std::size_t>(d.x) * d.y));
                    const int rem = static_cast<int>(cur % (static_cast<std::size_t>(d.x) * d.y));
                    const int cy = rem / d.x;
                    const int cx = rem % d.x;
                    for (const auto& o : offs) {
                        const int nx = cx + o.x, ny = cy + o.y, nz = cz + o.z;
                        if (nx < 0 || ny < 0 || nz < 0 || nx >= d.x || ny >= d.y || nz >= d.z) continue;
                        const std::size_t nidx = vol.index(nx, ny, nz);
                        if (data[nidx] == value && field.comp_of[nidx] == 0) {
                            field.comp_of[nidx] = comp;
                            stack.push_back(nidx);
                        }
                    }
                }
            }
    return field;
}

int betti0(const LabelVolume& mask, Connectivity conn) {
    // Component count of the foreground as one phase, whatever the values.
    bool multivalued = false;
    std::uint8_t seen = 0;
    for (const auto v : mask.data()) {
        if (v == 0) continue;
        if (seen == 0)
            seen = v;
        else if (v != seen) {
            multivalued = true;
            break;
        }
    }
    if (!multivalued) return label_components(mask, conn).count;
    return label_components(merge_to_binary(mask), conn).count;
}

}  // namespace coweval
