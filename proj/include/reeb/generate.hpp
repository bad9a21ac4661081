#pragma once

#include "reeb/reeb_graph.hpp"
#include "reeb/scalar_complex.hpp"

#include <random>

namespace reeb {

using Rng = std::mt19937_64;

/// Random connected graph: a random tree on `nodes` nodes with distinct
/// integer values 0..nodes-1, plus `extra_arcs` arcs between random distinct
/// nodes (parallel arcs allowed). Regular nodes are suppressed, so the result
/// may have fewer nodes; its cycle rank is exactly `extra_arcs`.
ReebGraph random_reeb(Rng& rng, int nodes, int extra_arcs);

/// Copy with every node value moved by a multiple of 1/64 of magnitude at most
/// min(eps, 31/64). On integer-valued graphs the order is preserved and all
/// values stay exactly representable.
ReebGraph jitter(const ReebGraph& graph, double eps, Rng& rng);

/// Adds `shift` to every node value.
ReebGraph shifted(const ReebGraph& graph, double shift);

/// Random 2-complex: `vertices` vertices with integer values in [0, levels)
/// (ties allowed), `triangles` random triangles with their edges, and
/// `extra_edges` further random edges.
ScalarComplex random_complex(Rng& rng, int vertices, int triangles, int extra_edges, int levels);

}  // namespace reeb
