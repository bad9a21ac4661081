#pragma once

#include "reeb/bottleneck.hpp"
#include "reeb/reeb_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reeb {

enum class FeatureKind { branch_min, branch_max, loop };

std::string to_string(FeatureKind kind);

/// A cancellable pair. Node fields are ids: (m, s) for branch-min, (s, M) for
/// branch-max, (s1, s2) for loops; `lower` is the lower-valued end.
struct FeaturePair {
    FeatureKind kind = FeatureKind::branch_min;
    int lower = -1;
    int upper = -1;
    double persistence = 0.0;

    friend bool operator==(const FeaturePair&, const FeaturePair&) = default;
};

/// Branch-min pairs from ordinary0-up, branch-max pairs from ordinary0-down,
/// loop pairs from the extended sweep; in that order.
std::vector<FeaturePair> feature_pairs(const ReebGraph& graph);

/// Points joined consecutively by monotone segments of `arcs` (arc indices).
struct Walk {
    std::vector<ReebPoint> points;
    std::vector<int> arcs;
};

/// Both walks start at the saddle `upper` of a branch-min pair (`lower` of a
/// branch-max pair). `first` runs to the extremum through the dying branch,
/// `second` runs through the surviving branch and stops at the first point
/// level with the extremum. For a loop both walks run from s2 down to s1 along
/// the two halves of the pair's thinnest-basis cycle.
struct MergingPath {
    FeaturePair pair;
    Walk first;
    Walk second;
};

/// Throws InvalidPair if `pair` is not one of feature_pairs(graph).
MergingPath merging_path(const ReebGraph& graph, const FeaturePair& pair);

/// Value-preserving surjection from the input graph onto a simplification.
class QuotientMap {
public:
    /// Image of a point of the input graph.
    ReebPoint operator()(const ReebPoint& x) const;
    /// Every point of the input graph sent to y.
    std::vector<ReebPoint> preimage(const ReebPoint& y) const;

    struct Stage;
    std::vector<Stage> stages;  // applied in order; empty for the identity
};

/// One quotient step. The input is refined at every node value so that each
/// merging path is a union of refined nodes and arcs; classes of those form the
/// quotient, whose regular nodes are then suppressed.
struct QuotientMap::Stage {
    ReebGraph input;
    ReebGraph refined;
    std::vector<std::vector<int>> chains;        // input arc -> refined arcs, bottom to top
    std::vector<ReebPoint> refined_node_source;  // refined node -> input point
    std::vector<int> piece_source;               // refined arc -> input arc
    ReebGraph quotient;
    std::vector<int> node_class;                 // refined node -> quotient node
    std::vector<int> arc_class;                  // refined arc -> quotient arc, -1 if collapsed to a node
    std::vector<std::vector<int>> class_nodes;   // quotient node -> refined nodes
    std::vector<std::vector<int>> class_arcs;    // quotient arc -> refined arcs
    ReebGraph output;
    std::vector<ReebPoint> quotient_node_image;  // quotient node -> output point
    std::vector<int> quotient_arc_image;         // quotient arc -> output arc
    std::vector<std::vector<int>> chain_nodes;   // output arc -> suppressed quotient nodes
    std::vector<std::vector<int>> chain_arcs;    // output arc -> quotient arcs

    ReebPoint forward(const ReebPoint& x) const;
    std::vector<ReebPoint> backward(const ReebPoint& y) const;
};

struct SimplifyResult {
    ReebGraph graph;
    QuotientMap map;
    std::vector<FeaturePair> removed;
    int rounds = 0;
};

/// Removes every pair with persistence <= delta (none when delta == 0) by
/// identifying equal-valued points along all their merging paths at once. With
/// `until_stable`, repeats on the result while such pairs remain. Throws
/// InvalidPair on negative delta.
SimplifyResult simplify(const ReebGraph& graph, double delta, bool until_stable = false);

/// Same with an explicit list; throws InvalidPair on a pair not in the graph.
SimplifyResult simplify(const ReebGraph& graph, std::span<const FeaturePair> pairs);

struct VerifyOptions {
    int point_pairs = 200;
    int fibers = 50;
    std::uint64_t seed = 1;
};

struct SimplificationReport {
    ClassDistances distances;
    bool ordinary0_up_ok = true;    // <= 2 delta
    bool ordinary0_down_ok = true;  // <= 2 delta
    bool extended1_ok = true;       // <= 6 delta
    std::size_t contraction_checked = 0;
    std::size_t contraction_violations = 0;
    std::size_t fiber_checked = 0;
    std::size_t fiber_violations = 0;  // preimage pairs farther apart than 2 delta
    std::size_t value_violations = 0;

    bool ok() const;
};

/// Diagram bounds between the input and the simplification, plus sampled
/// checks of the map: d_g(mu x, mu y) <= d_f(x, y), fibers of diameter
/// <= 2 delta, and g(mu x) == f(x).
SimplificationReport verify_simplification(const ReebGraph& input, const SimplifyResult& result, double delta,
                                           const VerifyOptions& options = {});

/// Random point: a node, or a point on an arc at a fraction k/8 of its height.
ReebPoint sample_point(const ReebGraph& graph, std::uint64_t bits);

}  // namespace reeb
