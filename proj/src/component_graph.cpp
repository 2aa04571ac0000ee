#include "coweval/component_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace coweval {

bool ComponentGraph::present(Segment s) const { return component_count(s) > 0; }

int ComponentGraph::component_count(Segment s) const {
    int n = 0;
    for (const auto& node : nodes) n += node.segment == s;
    return n;
}

std::size_t ComponentGraph::class_voxels(Segment s) const {
    std::size_t n = 0;
    for (const auto& node : nodes)
        if (node.segment == s) n += node.voxels;
    return n;
}

bool ComponentGraph::classes_adjacent(Segment a, Segment b) const {
    for (const auto& [i, j] : edges) {
        const Segment si = nodes[i].segment, sj = nodes[j].segment;
        if ((si == a && sj == b) || (si == b && sj == a)) return true;
    }
    return false;
}

int ComponentGraph::node_index(Segment s, int component) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].segment == s && nodes[i].component == component) return static_cast<int>(i);
    return -1;
}

void ComponentGraph::add_node(Segment s, int component, std::size_t voxels) {
    nodes.push_back({s, component, voxels});
}

void ComponentGraph::add_edge(Segment a, int comp_a, Segment b, int comp_b) {
    const int i = node_index(a, comp_a);
    const int j = node_index(b, comp_b);
    if (i < 0 || j < 0) throw std::invalid_argument("component graph: edge endpoint not present");
    if (i == j) throw std::invalid_argument("component graph: self edge");
    edges.insert({std::min(i, j), std::max(i, j)});
}

bool same_topology(const ComponentGraph& a, const ComponentGraph& b) {
    auto key = [](const GraphNode& n) { return std::pair(static_cast<int>(n.segment), n.component); };
    std::vector<std::pair<int, int>> ka, kb;
    for (const auto& n : a.nodes) ka.push_back(key(n));
    for (const auto& n : b.nodes) kb.push_back(key(n));
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    using EdgeKey = std::pair<std::pair<int, int>, std::pair<int, int>>;
    auto edge_keys = [&](const ComponentGraph& g, const std::vector<std::pair<int, int>>& keys) {
        std::set<EdgeKey> out;
        for (const auto& [i, j] : g.edges) {
            auto u = keys[i], v = keys[j];
            out.insert({std::min(u, v), std::max(u, v)});
        }
        return out;
    };
    return edge_keys(a, ka) == edge_keys(b, kb);
}

ComponentGraph extract_component_graph(const LabelVolume& vol, const LabelMap& map,
                                       Connectivity component_conn, Connectivity adjacency_conn) {
    validate_labels(vol, map);
    const ComponentField field = label_components(vol, component_conn);

    // Components in per-class scan order; ordinal = rank of the component's
    // first voxel within its class.
    ComponentGraph g;
    std::vector<int> node_of_comp(field.count + 1, -1);
    std::array<int, kNumSegments> ordinal{};
    std::vector<std::int32_t> comps_by_scan(field.count);
    for (std::int32_t c = 1; c <= field.count; ++c) comps_by_scan[c - 1] = c;
    std::sort(comps_by_scan.begin(), comps_by_scan.end(), [&](std::int32_t a, std::int32_t b) {
        const int sa = static_cast<int>(*map.segment(field.value_of_comp[a]));
        const int sb = static_cast<int>(*map.segment(field.value_of_comp[b]));
        if (sa != sb) return sa < sb;
        return field.first_voxel_of_comp[a] < field.first_voxel_of_comp[b];
    });
    for (const std::int32_t c : comps_by_scan) {
        const Segment s = *map.segment(field.value_of_comp[c]);
        node_of_comp[c] = static_cast<int>(g.nodes.size());
        g.nodes.push_back({s, ++ordinal[static_cast<int>(s)], field.size_of_comp[c]});
    }

    // Forward half of the neighborhood is enough for unordered edges.
    std::vector<Vec3i> fwd;
    for (const auto& o : neighbor_offsets(adjacency_conn))
        if (o.z > 0 || (o.z == 0 && (o.y > 0 || (o.y == 0 && o.x > 0)))) fwd.push_back(o);

    const Vec3i d = vol.dims();
    std::size_t idx = 0;
    for (int z = 0; z < d.z; ++z)
        for (int y = 0; y < d.y; ++y)
            for (int x = 0; x < d.x; ++x, ++idx) {
                const std::int32_t ca = field.comp_of[idx];
                if (ca == 0) continue;
                for (const auto& o : fwd) {
                    const int nx = x + o.x, ny = y + o.y, nz = z + o.z;
                    if (nx < 0 || ny < 0 || nz < 0 || nx >= d.x || ny >= d.y || nz >= d.z) continue;
                    const std::int32_t cb = field.comp_of[vol.index(nx, ny, nz)];
                    if (cb == 0 || cb == ca) continue;
                    const int i = node_of_comp[ca], j = node_of_comp[cb];
                    g.edges.insert({std::min(i, j), std::max(i, j)});
                }
            }
    return g;
}

std::string graph_to_json(const ComponentGraph& g) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"class", segment_name(n.segment)},
                         {"component", n.component},
                         {"voxels", n.voxels}});
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    auto tag = [&](int i) {
        return std::string(segment_name(g.nodes[i].segment)) + ":" + std::to_string(g.nodes[i].component);
    };
    for (const auto& [i, j] : g.edges) edges.push_back({tag(i), tag(j)});
    return doc.dump(2) + "\n";
}

ComponentGraph graph_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    ComponentGraph g;
    for (const auto& n : doc.at("nodes")) {
        const auto seg = segment_from_name(n.at("class").get<std::string>());
        if (!seg) throw std::runtime_error("graph: unknown class in json");
        g.add_node(*seg, n.at("component").get<int>(), n.value("voxels", std::size_t{0}));
    }
    auto parse_tag = [&](const std::string& t) {
        const auto colon = t.rfind(':');
        if (colon == std::string::npos) throw std::runtime_error("graph: bad node tag " + t);
        const auto seg = segment_from_name(t.substr(0, colon));
        if (!seg) throw std::runtime_error("graph: unknown class in tag " + t);
        const int comp = std::stoi(t.substr(colon + 1));
        const int idx = g.node_index(*seg, comp);
        if (idx < 0) throw std::runtime_error("graph: edge references missing node " + t);
        return idx;
    };
    for (const auto& e : doc.at("edges")) {
        const int i = parse_tag(e.at(0).get<std::string>());
        const int j = parse_tag(e.at(1).get<std::string>());
        if (i == j) throw std::runtime_error("graph: self edge in json");
        g.edges.insert({std::min(i, j), std::max(i, j)});
    }
    return g;
}

}  // namespace coweval
