#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace reeb {

struct ReebNode {
    int id = 0;
    double value = 0.0;
    /// Regular node inserted by subdivide(); exempt from suppression.
    bool subdivision = false;
};

/// Arc between two node *indices*; `lo` precedes `hi` in the tie-break order.
struct ReebArc {
    int id = 0;
    int lo = 0;
    int hi = 0;
};

/// Arc endpoints given by node id, in either orientation (as read from a file).
struct ArcSpec {
    int id = 0;
    int a = 0;
    int b = 0;
};

class ReebGraph;

/// A point of a Reeb graph: either a node, or a value strictly inside an arc.
struct ReebPoint {
    int node = -1;
    int arc = -1;
    double value = 0.0;

    bool is_node() const { return node >= 0; }

    static ReebPoint at_node(const ReebGraph& graph, int node_index);
    /// Point on `arc_index` at `value`; collapses to the endpoint node when the
    /// value equals an endpoint value. Throws std::out_of_range outside the arc.
    static ReebPoint on_arc(const ReebGraph& graph, int arc_index, double value);

    friend bool operator==(const ReebPoint&, const ReebPoint&) = default;
};

std::string to_string(const ReebGraph& graph, const ReebPoint& point);

struct NodeClass {
    int up_degree = 0;
    int down_degree = 0;
    bool minimum = false;
    bool maximum = false;
    bool down_fork = false;
    bool up_fork = false;

    bool degenerate() const { return (minimum + maximum + down_fork + up_fork) > 1; }
    bool regular() const { return up_degree == 1 && down_degree == 1; }
    std::vector<std::string> tags() const;
};

/// Multigraph of critical nodes joined by monotone arcs.
///
/// Nodes are stored sorted by (value, id), so node indices realize the
/// tie-break order and `a < b` on indices is the strict order on nodes. Arcs
/// are stored sorted by id. The graph is immutable after construction.
class ReebGraph {
public:
    ReebGraph() = default;

    /// Throws SchemaError on duplicate node or arc ids, UnknownNode on arcs
    /// referencing missing nodes, NonMonotoneArc on self-loops.
    ReebGraph(std::vector<ReebNode> nodes, std::vector<ArcSpec> arcs);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    std::span<const ReebNode> nodes() const { return nodes_; }
    std::span<const ReebArc> arcs() const { return arcs_; }
    const ReebNode& node(int index) const { return nodes_.at(index); }
    const ReebArc& arc(int index) const { return arcs_.at(index); }
    double value(int node_index) const { return nodes_[node_index].value; }
    double arc_height(int arc_index) const;

    std::span<const int> up_arcs(int node_index) const { return up_[node_index]; }
    std::span<const int> down_arcs(int node_index) const { return down_[node_index]; }
    int degree(int node_index) const
    {
        return static_cast<int>(up_[node_index].size() + down_[node_index].size());
    }
    int other_end(int arc_index, int node_index) const;

    std::optional<int> find_node(int id) const;
    /// Throws UnknownNode.
    int index_of(int node_id) const;
    std::optional<int> find_arc(int id) const;

    int component_count() const;
    /// Component label per node index, labels numbered by lowest member.
    std::vector<int> component_labels() const;
    /// First Betti number: arcs - nodes + components.
    int cycle_rank() const;

    /// Images of complex vertices, filled in by build_reeb.
    struct VertexImage {
        int vertex_id;
        ReebPoint point;
    };
    const std::vector<VertexImage>& provenance() const { return provenance_; }
    void set_provenance(std::vector<VertexImage> images) { provenance_ = std::move(images); }

private:
    std::vector<ReebNode> nodes_;
    std::vector<ReebArc> arcs_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::unordered_map<int, int> node_index_;
    std::unordered_map<int, int> arc_index_;
    std::vector<VertexImage> provenance_;
};

/// Throws UnknownNode.
NodeClass classify(const ReebGraph& graph, int node_id);
NodeClass classify_index(const ReebGraph& graph, int node_index);

/// Splices out every regular (up 1, down 1) node. The merged arc keeps the
/// smallest id of the arcs it replaces. Subdivision nodes survive when
/// `keep_subdivision` is set.
ReebGraph suppress_regular(const ReebGraph& graph, bool keep_subdivision = false);

/// The same graph carrying -f. Node and arc ids are preserved.
ReebGraph negate(const ReebGraph& graph);

/// Structural equality: same node ids with identical values, same arcs.
bool identical(const ReebGraph& a, const ReebGraph& b);

}  // namespace reeb
