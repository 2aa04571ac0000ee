#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "coweval/components.hpp"
#include "coweval/label_map.hpp"
#include "coweval/volume.hpp"

namespace coweval {

struct GraphNode {
    Segment segment = Segment::BA;
    int component = 1;        // ordinal within the class, scan order
    std::size_t voxels = 0;   // 0 in symbolic (expected) graphs
};

/// Labeled-component adjacency graph of a multiclass volume: one node per
/// connected component of each class, an edge wherever two components touch
/// under the adjacency connectivity.
struct ComponentGraph {
    std::vector<GraphNode> nodes;
    std::set<std::pair<int, int>> edges;  // node indices, first < second

    bool present(Segment s) const;
    int component_count(Segment s) const;
    std::size_t class_voxels(Segment s) const;
    /// Any component of a touches any component of b.
    bool classes_adjacent(Segment a, Segment b) const;

    int node_index(Segment s, int component) const;  // -1 if absent
    void add_node(Segment s, int component, std::size_t voxels = 0);
    void add_edge(Segment a, int comp_a, Segment b, int comp_b);
};

/// Structural equality on (class, component ordinal) nodes and their edges;
/// voxel counts are ignored so voxelized graphs compare against symbolic ones.
bool same_topology(const ComponentGraph& a, const ComponentGraph& b);

/// Nodes from same-valued connected components (component connectivity),
/// edges between components with any voxel pair within the adjacency
/// neighborhood. Throws on voxel values outside the map.
ComponentGraph extract_component_graph(const LabelVolume& vol, const LabelMap& map,
                                       Connectivity component_conn = Connectivity::C26,
                                       Connectivity adjacency_conn = Connectivity::C26);

std::string graph_to_json(const ComponentGraph& g);
ComponentGraph graph_from_json(const std::string& text);

}  // namespace coweval
