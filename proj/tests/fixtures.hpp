#pragma once

#include "reeb/reeb_graph.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace fixture {

// Nodes as (id, value); arcs as (lower id, upper id) with ids 0, 1, ...
inline reeb::ReebGraph graph(std::initializer_list<std::pair<int, double>> nodes,
                             std::initializer_list<std::pair<int, int>> arcs)
{
    std::vector<reeb::ReebNode> ns;
    for (const auto& [id, v] : nodes)
        ns.push_back({id, v, false});
    std::vector<reeb::ArcSpec> as;
    for (const auto& [a, b] : arcs)
        as.push_back({static_cast<int>(as.size()), a, b});
    return reeb::ReebGraph(std::move(ns), std::move(as));
}

// Two parallel arcs between b(0) and d(top).
inline reeb::ReebGraph loop(double top = 1.0)
{
    return graph({{0, 0.0}, {1, top}}, {{0, 1}, {0, 1}});
}

// Minima 0 and 1, saddle 2, maximum 3.
inline reeb::ReebGraph y_tree()
{
    return graph({{0, 0.0}, {1, 1.0}, {2, 2.0}, {3, 3.0}}, {{0, 2}, {1, 2}, {2, 3}});
}

// The double-loop example with extra branches. Node id i is x_i; values are
// a_i = 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13.
inline reeb::ReebGraph fig2b()
{
    return graph({{1, 1},
                  {2, 2},
                  {3, 3},
                  {4, 4},
                  {5, 5},
                  {6, 6},
                  {7, 7},
                  {8, 8},
                  {9, 10},
                  {10, 11},
                  {11, 12},
                  {12, 13}},
                 {{1, 3},
                  {2, 5},
                  {3, 4},
                  {3, 6},
                  {4, 8},
                  {4, 9},
                  {5, 6},
                  {5, 9},
                  {6, 8},
                  {7, 10},
                  {8, 10},
                  {9, 11},
                  {10, 12}});
}

// Two non-isomorphic trees with identical diagrams. Node ids equal values.
// Both: trunk from 0 to an up-fork at 3, a down-fork at 5 where the minimum 2
// joins, maxima 8 and 10. In the first tree 5 sits on the branch to 10, in
// the second on the branch to 8.
inline reeb::ReebGraph tree_pair_first()
{
    return graph({{0, 0}, {2, 2}, {3, 3}, {5, 5}, {8, 8}, {10, 10}}, {{0, 3}, {3, 5}, {5, 10}, {3, 8}, {2, 5}});
}

inline reeb::ReebGraph tree_pair_second()
{
    return graph({{0, 0}, {2, 2}, {3, 3}, {5, 5}, {8, 8}, {10, 10}}, {{0, 3}, {3, 5}, {5, 8}, {3, 10}, {2, 5}});
}

// Arc id of the arc joining nodes with ids a and b (first match).
inline int arc_between(const reeb::ReebGraph& g, int a, int b)
{
    for (const auto& arc : g.arcs()) {
        const int lo = g.node(arc.lo).id, hi = g.node(arc.hi).id;
        if ((lo == a && hi == b) || (lo == b && hi == a))
            return arc.id;
    }
    return -1;
}

}  // namespace fixture
