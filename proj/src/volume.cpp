#include "coweval/volume.hpp"

#include <fstream>
#include <sstream>

namespace coweval {

LabelVolume merge_to_binary(const LabelVolume& vol) {
    LabelVolume out(vol.dims(), vol.spacing());
    out.set_orientation(vol.orientation());
    const auto& src = vol.data();
    auto& dst = out.data();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] != 0 ? 1 : 0;
    return out;
}

const RoiBox* RoiTable::find(const std::string& case_id) const {
    for (const auto& [id, box] : entries)
        if (id == case_id) return &box;
    return nullptr;
}

RoiTable read_roi_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("roi table: cannot open " + path);
    RoiTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string id;
        if (!(ss >> id)) continue;  // blank line
        RoiBox box;
        if (!(ss >> box.min_corner.x >> box.min_corner.y >> box.min_corner.z >> box.size.x >> box.size.y >>
              box.size.z))
            throw std::runtime_error("roi table: malformed record at " + path + ":" + std::to_string(lineno));
        if (box.min_corner.x < 0 || box.min_corner.y < 0 || box.min_corner.z < 0 || box.size.x < 1 ||
            box.size.y < 1 || box.size.z < 1)
            throw std::runtime_error("roi table: invalid box at " + path + ":" + std::to_string(lineno));
        table.entries.emplace_back(std::move(id), box);
    }
    return table;
}

void write_roi_table(const RoiTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("roi table: cannot write " + path);
    out << "# case min_x min_y min_z size_x size_y size_z\n";
    for (const auto& [id, box] : table.entries)
        out << id << ' ' << box.min_corner.x << ' ' << box.min_corner.y << ' ' << box.min_corner.z << ' '
            << box.size.x << ' ' << box.size.y << ' ' << box.size.z << '\n';
    if (!out) throw std::runtime_error("roi table: write failed for " + path);
}

}  // namespace coweval
