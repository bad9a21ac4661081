#include "reeb/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace reeb {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

ReebGraph random_reeb(Rng& rng, int nodes, int extra_arcs)
{
    std::vector<int> values(nodes);
    std::iota(values.begin(), values.end(), 0);
    std::shuffle(values.begin(), values.end(), rng);

    std::vector<ReebNode> out_nodes;
    for (int i = 0; i < nodes; ++i)
        out_nodes.push_back({i, static_cast<double>(values[i]), false});
    std::vector<ArcSpec> arcs;
    for (int i = 1; i < nodes; ++i)
        arcs.push_back({static_cast<int>(arcs.size()), i, uniform(rng, 0, i - 1)});
    for (int k = 0; k < extra_arcs && nodes > 1; ++k) {
        const int a = uniform(rng, 0, nodes - 1);
        int b = uniform(rng, 0, nodes - 2);
        if (b >= a)
            ++b;
        arcs.push_back({static_cast<int>(arcs.size()), a, b});
    }
    return suppress_regular(ReebGraph(std::move(out_nodes), std::move(arcs)));
}

ReebGraph jitter(const ReebGraph& graph, double eps, Rng& rng)
{
    const int steps = static_cast<int>(std::floor(std::min(eps, 31.0 / 64) * 64));
    std::vector<ReebNode> nodes(graph.nodes().begin(), graph.nodes().end());
    for (auto& n : nodes)
        n.value += uniform(rng, -steps, steps) / 64.0;
    std::vector<ArcSpec> arcs;
    for (const auto& a : graph.arcs())
        arcs.push_back({a.id, graph.node(a.lo).id, graph.node(a.hi).id});
    return ReebGraph(std::move(nodes), std::move(arcs));
}

ReebGraph shifted(const ReebGraph& graph, double shift)
{
    std::vector<ReebNode> nodes(graph.nodes().begin(), graph.nodes().end());
    for (auto& n : nodes)
        n.value += shift;
    std::vector<ArcSpec> arcs;
    for (const auto& a : graph.arcs())
        arcs.push_back({a.id, graph.node(a.lo).id, graph.node(a.hi).id});
    return ReebGraph(std::move(nodes), std::move(arcs));
}

ScalarComplex random_complex(Rng& rng, int vertices, int triangles, int extra_edges, int levels)
{
    ScalarComplex c;
    for (int i = 0; i < vertices; ++i)
        c.vertices.push_back({i, static_cast<double>(uniform(rng, 0, levels - 1))});
    if (vertices < 2)
        return c;
    std::set<std::array<int, 2>> edges;
    std::set<std::array<int, 3>> tris;
    for (int k = 0; k < triangles && vertices >= 3; ++k) {
        std::array<int, 3> t{};
        do {
            t = {uniform(rng, 0, vertices - 1), uniform(rng, 0, vertices - 1), uniform(rng, 0, vertices - 1)};
            std::sort(t.begin(), t.end());
        } while (t[0] == t[1] || t[1] == t[2]);
        tris.insert(t);
        edges.insert({t[0], t[1]});
        edges.insert({t[1], t[2]});
        edges.insert({t[0], t[2]});
    }
    for (int k = 0; k < extra_edges; ++k) {
        const int a = uniform(rng, 0, vertices - 1);
        int b = uniform(rng, 0, vertices - 2);
        if (b >= a)
            ++b;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    c.edges.assign(edges.begin(), edges.end());
    c.triangles.assign(tris.begin(), tris.end());
    return c;
}

}  // namespace reeb
