#pragma once

#include "reeb/reeb_graph.hpp"
#include "reeb/scalar_complex.hpp"

namespace reeb {

/// Reeb graph of the piecewise-linear extension of the vertex values.
///
/// Ascending sweep over the vertices. Between two consecutive vertices the
/// level set is a union of edge crossings glued by triangle crossings; each
/// (edge, interval) crossing and each (edge, vertex level) crossing is an
/// element of one disjoint-set forest, so the classes are exactly the
/// level-set components of every interval and every vertex level. Interval
/// classes become arcs, level classes become nodes, and regular nodes are
/// spliced out. Node ids are the ids of the complex vertices that realize them.
/// Cost is linear in the total number of crossings, i.e. the sum over edges
/// and triangles of the number of vertex levels they span.
///
/// Throws InvalidComplex if validate() reports any issue.
ReebGraph build_reeb(const ScalarComplex& complex);

}  // namespace reeb
