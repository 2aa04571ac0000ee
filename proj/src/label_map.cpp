#include "coweval/label_map.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coweval {

namespace {

constexpr std::array<const char*, kNumSegments> kNames = {
    "BA",     "R-PCA",  "L-PCA", "R-ICA", "R-MCA", "L-ICA", "L-MCA",
    "R-Pcom", "L-Pcom", "Acom",  "R-ACA", "L-ACA", "3rd-A2",
};

}  // namespace

const char* segment_name(Segment s) { return kNames[static_cast<int>(s)]; }

std::optional<Segment> segment_from_name(const std::string& name) {
    for (int i = 0; i < kNumSegments; ++i)
        if (name == kNames[i]) return static_cast<Segment>(i);
    return std::nullopt;
}

bool is_group2(Segment s) {
    return s == Segment::RPcom || s == Segment::LPcom || s == Segment::Acom || s == Segment::ThirdA2;
}

LabelMap LabelMap::defaults() {
    std::array<std::uint8_t, kNumSegments> values{};
    for (int i = 0; i < kNumSegments; ++i) values[i] = static_cast<std::uint8_t>(i + 1);
    return from_values(values);
}

LabelMap LabelMap::from_values(const std::array<std::uint8_t, kNumSegments>& value_per_segment) {
    LabelMap map;
    map.lookup_.fill(-1);
    for (int i = 0; i < kNumSegments; ++i) {
        const std::uint8_t v = value_per_segment[i];
        if (v == 0) throw std::invalid_argument("label map: class identifier 0 is reserved for background");
        if (map.lookup_[v] >= 0)
            throw std::invalid_argument(std::string("label map: duplicate identifier for ") + kNames[i]);
        map.lookup_[v] = static_cast<std::int8_t>(i);
        map.values_[i] = v;
    }
    return map;
}

LabelMap load_label_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("label map: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("label map: parse error in " + path + ": " + e.what());
    }
    if (!doc.contains("labels") || !doc["labels"].is_array())
        throw std::runtime_error("label map: missing \"labels\" array in " + path);
    const auto& labels = doc["labels"];
    if (labels.size() != kNumSegments)
        throw std::runtime_error("label map: expected 13 entries, got " + std::to_string(labels.size()));

    std::array<std::uint8_t, kNumSegments> values{};
    std::array<bool, kNumSegments> seen{};
    for (const auto& entry : labels) {
        if (!entry.contains("name") || !entry.contains("value"))
            throw std::runtime_error("label map: entry missing name/value in " + path);
        const std::string name = entry["name"].get<std::string>();
        const auto seg = segment_from_name(name);
        if (!seg) throw std::runtime_error("label map: unknown class name \"" + name + "\"");
        const int idx = static_cast<int>(*seg);
        if (seen[idx]) throw std::runtime_error("label map: class \"" + name + "\" given twice");
        const std::int64_t v = entry["value"].get<std::int64_t>();
        if (v < 1 || v > 255)
            throw std::runtime_error("label map: identifier for \"" + name + "\" must be in 1..255");
        values[idx] = static_cast<std::uint8_t>(v);
        seen[idx] = true;
    }
    for (int i = 0; i < kNumSegments; ++i)
        if (!seen[i]) throw std::runtime_error(std::string("label map: missing class ") + kNames[i]);
    return LabelMap::from_values(values);
}

void save_label_map(const LabelMap& map, const std::string& path) {
    nlohmann::ordered_json doc;
    auto& labels = doc["labels"];
    for (Segment s : kAllSegments)
        labels.push_back({{"value", map.value(s)}, {"name", segment_name(s)}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("label map: cannot write " + path);
    out << doc.dump(2) << '\n';
}

void validate_labels(const LabelVolume& vol, const LabelMap& map) {
    std::array<bool, 256> allowed{};
    allowed[0] = true;
    for (Segment s : kAllSegments) allowed[map.value(s)] = true;
    for (const std::uint8_t v : vol.data())
        if (!allowed[v])
            throw std::runtime_error("volume contains voxel value " + std::to_string(int(v)) +
                                     " which is not in the label map");
}

}  // namespace coweval
