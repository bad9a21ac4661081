#pragma once

#include "reeb/reeb_graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reeb {

enum class PointClass {
    ordinary0_up,
    ordinary0_down,
    essential0,
    extended1,
};

std::string to_string(PointClass cls);
/// Throws SchemaError on an unknown name.
PointClass point_class_from_string(const std::string& name);

/// One diagram point. `death` may be +inf. Creator and destroyer are node ids
/// of the graph the diagram was computed on, or -1 when read from a file.
struct DiagramPoint {
    double birth = 0.0;
    double death = 0.0;
    PointClass cls = PointClass::ordinary0_up;
    int creator = -1;
    int destroyer = -1;

    double persistence() const;
    friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    PersistenceDiagram only(PointClass cls) const;
    /// (birth, death) pairs sorted, for multiset comparison.
    std::vector<std::pair<double, double>> sorted_pairs() const;
};

enum class Direction { up, down };

/// 0-dimensional persistence of the sublevel (up) or superlevel (down)
/// filtration. A down-fork joining k components kills the k - 1 components
/// whose minima are younger in the tie-break order. Down points are reported in
/// f-coordinates, so birth >= death. The up direction also emits one
/// essential0 point (component min, component max) per component.
PersistenceDiagram ordinary0(const ReebGraph& graph, Direction direction);

/// Extended 1-dimensional diagram: one point per independent cycle.
///
/// Ascending sweep; at node s the lower arcs are taken in order of (oldest
/// minimum of their component, lower endpoint, arc id). An arc whose component
/// is already attached to s closes a cycle. Its birth is the widest-path value
/// (largest possible minimum) from the arc's lower endpoint to the lower
/// endpoints of the arcs already taken, below s.
PersistenceDiagram extended1(const ReebGraph& graph);

/// Z2 1-cycle given by arc ids (sorted, distinct) with its value range.
struct Cycle {
    std::vector<int> arcs;
    double low = 0.0;
    double high = 0.0;

    double height() const { return high - low; }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Reduces the arc list mod 2 and checks the boundary. Throws NotACycle if
/// some node has odd degree, SchemaError on an unknown arc id.
Cycle make_cycle(const ReebGraph& graph, std::span<const int> arc_ids);

struct CycleBasis {
    std::vector<Cycle> cycles;
};

/// Thinnest basis: one cycle per extended1 event, sorted by height, then by
/// arc-id set. Its ranges are exactly the extended1 points.
CycleBasis thinnest_basis(const ReebGraph& graph);

struct Decomposition {
    std::vector<bool> coefficients;
    /// Tallest basis cycle used, smallest index on ties; empty for the zero chain.
    std::optional<int> dominating;
};

/// Throws NotACycle if `cycle` has a nonzero boundary, InvariantViolation if
/// the basis does not span it.
Decomposition decompose(const ReebGraph& graph, const CycleBasis& basis, const Cycle& cycle);

/// Rank over Z2 of a set of cycles.
int cycle_rank_of(const ReebGraph& graph, std::span<const Cycle> cycles);

/// True iff every pair (i in f, j in g) has ranges within Hausdorff distance
/// alpha, no basis cycle is used twice, and every cycle of height > 2 alpha on
/// either side is paired.
bool is_alpha_matching(const CycleBasis& f, const CycleBasis& g, std::span<const std::pair<int, int>> pairs,
                       double alpha);

}  // namespace reeb
