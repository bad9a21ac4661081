#pragma once

// Slow, independent reference implementations used only by tests.

#include "reeb/persistence.hpp"
#include "reeb/reeb_graph.hpp"
#include "reeb/scalar_complex.hpp"

#include <utility>
#include <vector>

namespace oracle {

/// Value-labelled multigraph: node ids with values, arcs as (lower id, upper id).
struct LabelledGraph {
    std::vector<std::pair<int, double>> nodes;  // sorted
    std::vector<std::pair<int, int>> arcs;      // sorted

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

LabelledGraph labelled(const reeb::ReebGraph& graph);

/// Reeb graph by explicit level-set component enumeration at every vertex
/// level and every midpoint between consecutive levels.
LabelledGraph level_set_quotient(const reeb::ScalarComplex& complex);

/// Path height by enumerating all simple paths.
double path_height(const reeb::ReebGraph& graph, const reeb::ReebPoint& u, const reeb::ReebPoint& v);

/// Every simple cycle as a sorted arc-id list (arc subsets with all degrees 0
/// or 2 forming one connected piece).
std::vector<std::vector<int>> simple_cycles(const reeb::ReebGraph& graph);

/// Ranges (low, high) of a thinnest basis by matroid greedy over all simple
/// cycles ordered by (height, arc-id set). Sorted.
std::vector<std::pair<double, double>> greedy_basis_ranges(const reeb::ReebGraph& graph,
                                                           std::vector<std::vector<int>>* cycles = nullptr);

/// Bottleneck distance by enumerating all partial matchings.
double exhaustive_bottleneck(const reeb::PersistenceDiagram& a, const reeb::PersistenceDiagram& b);

/// Coefficients of `cycle` over the basis by trying all 2^k subsets.
std::vector<bool> subset_decomposition(const reeb::CycleBasis& basis, const std::vector<int>& cycle);

/// Discrete Frechet distance between the segment [a, b] and the profile w,
/// both resampled with `per_piece` steps per linear piece. Within the
/// sampling spacing of the continuous value.
double sampled_frechet(double a, double b, const std::vector<double>& w, int per_piece);

}  // namespace oracle
