#include "reeb/build.hpp"

#include "disjoint_sets.hpp"
#include "reeb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reeb {

namespace {

struct Edge {
    int lo;  // vertex rank
    int hi;
};

// Element numbering for the disjoint-set forest.
class CrossingIndex {
public:
    CrossingIndex(int vertex_count, const std::vector<Edge>& edges) : edges_(edges)
    {
        int next = vertex_count;
        segment_base_.resize(edges.size());
        level_base_.resize(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            segment_base_[e] = next;
            next += edges[e].hi - edges[e].lo;
            level_base_[e] = next;
            next += edges[e].hi - edges[e].lo - 1;
        }
        size_ = next;
    }

    int size() const { return size_; }
    static int vertex(int rank) { return rank; }
    // Crossing of edge e over the open interval (rank k, rank k+1).
    int segment(int e, int k) const { return segment_base_[e] + (k - edges_[e].lo); }
    // Crossing of edge e with the level of the vertex of rank k, lo < k < hi.
    int level(int e, int k) const { return level_base_[e] + (k - edges_[e].lo - 1); }

    // The level element touched by segment (e, k) at level `at` (k or k+1).
    int end_of(int e, int at) const
    {
        if (edges_[e].lo == at || edges_[e].hi == at)
            return vertex(at);
        return level(e, at);
    }

private:
    const std::vector<Edge>& edges_;
    std::vector<int> segment_base_;
    std::vector<int> level_base_;
    int size_ = 0;
};

}  // namespace

ReebGraph build_reeb(const ScalarComplex& complex)
{
    auto report = validate(complex);
    if (!report.valid()) {
        std::string msg = "invalid complex:";
        for (const auto& issue : report.issues)
            msg += " " + to_string(issue.kind) + " (" + issue.detail + ");";
        throw InvalidComplex(msg);
    }

    const TotalOrder order = tie_break(complex);
    const int n = static_cast<int>(order.ids.size());
    std::map<int, int> rank;
    std::map<int, double> value_of;
    for (const auto& v : complex.vertices)
        value_of[v.id] = v.value;
    for (int r = 0; r < n; ++r)
        rank[order.ids[r]] = r;

    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> edge_of;
    for (const auto& e : complex.edges) {
        int a = rank.at(e[0]);
        int b = rank.at(e[1]);
        if (a > b)
            std::swap(a, b);
        edge_of[{a, b}] = static_cast<int>(edges.size());
        edges.push_back({a, b});
    }

    CrossingIndex index(n, edges);
    detail::DisjointSets sets(index.size());

    for (const auto& t : complex.triangles) {
        std::array<int, 3> r{rank.at(t[0]), rank.at(t[1]), rank.at(t[2])};
        std::sort(r.begin(), r.end());
        const auto [a, b, c] = r;
        const int ab = edge_of.at({a, b});
        const int bc = edge_of.at({b, c});
        const int ac = edge_of.at({a, c});
        for (int k = a; k < b; ++k)
            sets.unite(index.segment(ab, k), index.segment(ac, k));
        for (int k = b; k < c; ++k)
            sets.unite(index.segment(bc, k), index.segment(ac, k));
        for (int k = a + 1; k < b; ++k)
            sets.unite(index.level(ab, k), index.level(ac, k));
        for (int k = b + 1; k < c; ++k)
            sets.unite(index.level(bc, k), index.level(ac, k));
        sets.unite(CrossingIndex::vertex(b), index.level(ac, b));
    }

    // Raw graph: one node per level class, one arc per interval class.
    // Raw arcs are numbered in sweep order (by interval, then first crossing).
    std::vector<int> raw_node_of(index.size(), -1);
    std::vector<double> raw_value;
    std::vector<int> raw_id;  // vertex id, or -1 for a crossing-only class
    auto raw_node = [&](int element, int level) {
        int root = sets.find(element);
        if (raw_node_of[root] < 0) {
            raw_node_of[root] = static_cast<int>(raw_value.size());
            raw_value.push_back(value_of.at(order.ids[level]));
            raw_id.push_back(-1);
        }
        return raw_node_of[root];
    };
    for (int k = 0; k < n; ++k)
        raw_id[raw_node(CrossingIndex::vertex(k), k)] = order.ids[k];

    struct RawArc {
        int lo;
        int hi;
    };
    std::vector<RawArc> raw_arcs;
    std::vector<int> raw_arc_of(index.size(), -1);
    std::vector<std::vector<int>> starting(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        starting[edges[e].lo].push_back(e);
    std::vector<int> active;
    for (int k = 0; k + 1 < n; ++k) {
        std::erase_if(active, [&](int e) { return edges[e].hi == k; });
        active.insert(active.end(), starting[k].begin(), starting[k].end());
        for (int ei : active) {
            const int root = sets.find(index.segment(ei, k));
            const int lo = raw_node(index.end_of(ei, k), k);
            const int hi = raw_node(index.end_of(ei, k + 1), k + 1);
            if (raw_arc_of[root] < 0) {
                raw_arc_of[root] = static_cast<int>(raw_arcs.size());
                raw_arcs.push_back({lo, hi});
            } else {
                const auto& existing = raw_arcs[raw_arc_of[root]];
                if (existing.lo != lo || existing.hi != hi)
                    throw InvariantViolation("level-set component attached to two different levels");
            }
        }
    }

    // Splice out regular raw nodes; chains of raw arcs become final arcs.
    const int raw_count = static_cast<int>(raw_value.size());
    std::vector<int> up_count(raw_count, 0), down_count(raw_count, 0), some_up(raw_count, -1);
    for (int i = 0; i < static_cast<int>(raw_arcs.size()); ++i) {
        ++up_count[raw_arcs[i].lo];
        ++down_count[raw_arcs[i].hi];
        if (some_up[raw_arcs[i].lo] < 0)
            some_up[raw_arcs[i].lo] = i;
    }
    auto regular = [&](int v) { return up_count[v] == 1 && down_count[v] == 1; };

    detail::DisjointSets chains(static_cast<int>(raw_arcs.size()));
    for (int i = 0; i < static_cast<int>(raw_arcs.size()); ++i) {
        if (regular(raw_arcs[i].hi))
            chains.unite(i, some_up[raw_arcs[i].hi]);
    }
    // Chain root -> (lowest raw arc index, kept lower node, kept upper node).
    std::map<int, std::array<int, 3>> chain;
    for (int i = 0; i < static_cast<int>(raw_arcs.size()); ++i) {
        auto [it, inserted] = chain.try_emplace(chains.find(i), std::array<int, 3>{i, -1, -1});
        auto& info = it->second;
        info[0] = std::min(info[0], i);
        if (!regular(raw_arcs[i].lo))
            info[1] = raw_arcs[i].lo;
        if (!regular(raw_arcs[i].hi))
            info[2] = raw_arcs[i].hi;
    }

    std::vector<ReebNode> nodes;
    for (int v = 0; v < raw_count; ++v) {
        if (regular(v))
            continue;
        if (raw_id[v] < 0)
            throw InvariantViolation("critical level-set component without a vertex");
        nodes.push_back({raw_id[v], raw_value[v], false});
    }

    std::vector<std::array<int, 3>> ordered;
    for (const auto& [root, info] : chain)
        ordered.push_back(info);
    std::sort(ordered.begin(), ordered.end());
    std::map<int, int> final_arc_of_chain;  // lowest raw arc -> final id
    std::vector<ArcSpec> arcs;
    for (const auto& info : ordered) {
        if (info[1] < 0 || info[2] < 0)
            throw InvariantViolation("arc chain without critical endpoints");
        const int id = static_cast<int>(arcs.size());
        final_arc_of_chain[info[0]] = id;
        arcs.push_back({id, raw_id[info[1]], raw_id[info[2]]});
    }

    ReebGraph graph(std::move(nodes), std::move(arcs));

    std::vector<ReebGraph::VertexImage> images;
    images.reserve(n);
    for (int k = 0; k < n; ++k) {
        const int v = raw_node(CrossingIndex::vertex(k), k);
        const int vid = order.ids[k];
        if (!regular(v)) {
            images.push_back({vid, ReebPoint::at_node(graph, graph.index_of(vid))});
            continue;
        }
        const int root = chains.find(some_up[v]);
        const int id = final_arc_of_chain.at(chain.at(root)[0]);
        images.push_back({vid, ReebPoint::on_arc(graph, *graph.find_arc(id), raw_value[v])});
    }
    graph.set_provenance(std::move(images));
    return graph;
}

}  // namespace reeb
