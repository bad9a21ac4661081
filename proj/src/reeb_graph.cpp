#include "reeb/reeb_graph.hpp"

#include "reeb/errors.hpp"
#include "reeb/scalar_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reeb {

ReebPoint ReebPoint::at_node(const ReebGraph& graph, int node_index)
{
    ReebPoint p;
    p.node = node_index;
    p.value = graph.value(node_index);
    return p;
}

ReebPoint ReebPoint::on_arc(const ReebGraph& graph, int arc_index, double value)
{
    const ReebArc& a = graph.arc(arc_index);
    if (value == graph.value(a.lo))
        return at_node(graph, a.lo);
    if (value == graph.value(a.hi))
        return at_node(graph, a.hi);
    if (!(graph.value(a.lo) < value && value < graph.value(a.hi)))
        throw std::out_of_range("value " + std::to_string(value) + " outside arc " + std::to_string(a.id));
    ReebPoint p;
    p.arc = arc_index;
    p.value = value;
    return p;
}

std::string to_string(const ReebGraph& graph, const ReebPoint& point)
{
    if (point.is_node())
        return "n" + std::to_string(graph.node(point.node).id);
    return "a" + std::to_string(graph.arc(point.arc).id) + "@" + std::to_string(point.value);
}

std::vector<std::string> NodeClass::tags() const
{
    std::vector<std::string> out;
    if (minimum)
        out.emplace_back("minimum");
    if (maximum)
        out.emplace_back("maximum");
    if (down_fork)
        out.emplace_back("down-fork");
    if (up_fork)
        out.emplace_back("up-fork");
    if (degenerate())
        out.emplace_back("degenerate");
    return out;
}

ReebGraph::ReebGraph(std::vector<ReebNode> nodes, std::vector<ArcSpec> arcs)
{
    std::sort(nodes.begin(), nodes.end(), [](const ReebNode& a, const ReebNode& b) {
        return precedes(a.value, a.id, b.value, b.id);
    });
    nodes_ = std::move(nodes);
    for (int i = 0; i < node_count(); ++i) {
        if (!node_index_.emplace(nodes_[i].id, i).second)
            throw SchemaError("duplicate node id " + std::to_string(nodes_[i].id));
    }

    std::sort(arcs.begin(), arcs.end(), [](const ArcSpec& a, const ArcSpec& b) { return a.id < b.id; });
    arcs_.reserve(arcs.size());
    up_.assign(nodes_.size(), {});
    down_.assign(nodes_.size(), {});
    for (const auto& spec : arcs) {
        int a = index_of(spec.a);
        int b = index_of(spec.b);
        if (a == b)
            throw NonMonotoneArc("arc " + std::to_string(spec.id) + " joins node " + std::to_string(spec.a) +
                                 " to itself");
        int index = static_cast<int>(arcs_.size());
        if (!arc_index_.emplace(spec.id, index).second)
            throw SchemaError("duplicate arc id " + std::to_string(spec.id));
        ReebArc arc{spec.id, std::min(a, b), std::max(a, b)};
        arcs_.push_back(arc);
        up_[arc.lo].push_back(index);
        down_[arc.hi].push_back(index);
    }
}

double ReebGraph::arc_height(int arc_index) const
{
    const ReebArc& a = arcs_[arc_index];
    return nodes_[a.hi].value - nodes_[a.lo].value;
}

int ReebGraph::other_end(int arc_index, int node_index) const
{
    const ReebArc& a = arcs_[arc_index];
    return a.lo == node_index ? a.hi : a.lo;
}

std::optional<int> ReebGraph::find_node(int id) const
{
    auto it = node_index_.find(id);
    if (it == node_index_.end())
        return std::nullopt;
    return it->second;
}

int ReebGraph::index_of(int node_id) const
{
    auto found = find_node(node_id);
    if (!found)
        throw UnknownNode("unknown node " + std::to_string(node_id));
    return *found;
}

std::optional<int> ReebGraph::find_arc(int id) const
{
    auto it = arc_index_.find(id);
    if (it == arc_index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> ReebGraph::component_labels() const
{
    std::vector<int> label(nodes_.size(), -1);
    std::vector<int> stack;
    int next = 0;
    for (int start = 0; start < node_count(); ++start) {
        if (label[start] >= 0)
            continue;
        label[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto* list : {&up_[v], &down_[v]}) {
                for (int a : *list) {
                    int w = other_end(a, v);
                    if (label[w] < 0) {
                        label[w] = next;
                        stack.push_back(w);
                    }
                }
            }
        }
        ++next;
    }
    return label;
}

int ReebGraph::component_count() const
{
    auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int ReebGraph::cycle_rank() const
{
    return arc_count() - node_count() + component_count();
}

NodeClass classify_index(const ReebGraph& graph, int node_index)
{
    NodeClass c;
    c.up_degree = static_cast<int>(graph.up_arcs(node_index).size());
    c.down_degree = static_cast<int>(graph.down_arcs(node_index).size());
    c.minimum = c.down_degree == 0;
    c.maximum = c.up_degree == 0;
    c.down_fork = c.down_degree >= 2;
    c.up_fork = c.up_degree >= 2;
    return c;
}

NodeClass classify(const ReebGraph& graph, int node_id)
{
    return classify_index(graph, graph.index_of(node_id));
}

ReebGraph suppress_regular(const ReebGraph& graph, bool keep_subdivision)
{
    auto removable = [&](int v) {
        if (keep_subdivision && graph.node(v).subdivision)
            return false;
        return graph.up_arcs(v).size() == 1 && graph.down_arcs(v).size() == 1;
    };

    std::vector<ReebNode> nodes;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (!removable(v))
            nodes.push_back(graph.node(v));
    }

    // Walk each maximal chain upward from a kept node (or a kept lower end).
    std::vector<ArcSpec> arcs;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (removable(v))
            continue;
        for (int start_arc : graph.up_arcs(v)) {
            int id = graph.arc(start_arc).id;
            int top = graph.arc(start_arc).hi;
            while (removable(top)) {
                int next = graph.up_arcs(top)[0];
                id = std::min(id, graph.arc(next).id);
                top = graph.arc(next).hi;
            }
            arcs.push_back({id, graph.node(v).id, graph.node(top).id});
        }
    }
    ReebGraph out(std::move(nodes), std::move(arcs));
    return out;
}

ReebGraph negate(const ReebGraph& graph)
{
    std::vector<ReebNode> nodes(graph.nodes().begin(), graph.nodes().end());
    for (auto& n : nodes)
        n.value = -n.value;
    std::vector<ArcSpec> arcs;
    for (const auto& a : graph.arcs())
        arcs.push_back({a.id, graph.node(a.lo).id, graph.node(a.hi).id});
    return ReebGraph(std::move(nodes), std::move(arcs));
}

bool identical(const ReebGraph& a, const ReebGraph& b)
{
    if (a.node_count() != b.node_count() || a.arc_count() != b.arc_count())
        return false;
    for (int i = 0; i < a.node_count(); ++i) {
        if (a.node(i).id != b.node(i).id || a.node(i).value != b.node(i).value)
            return false;
    }
    for (int i = 0; i < a.arc_count(); ++i) {
        const auto& x = a.arc(i);
        const auto& y = b.arc(i);
        if (x.id != y.id || a.node(x.lo).id != b.node(y.lo).id || a.node(x.hi).id != b.node(y.hi).id)
            return false;
    }
    return true;
}

}  // namespace reeb
