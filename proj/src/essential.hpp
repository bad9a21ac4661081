#pragma once

#include "reeb/persistence.hpp"

#include <vector>

namespace reeb::detail {

/// A cycle-closing event of the extended sweep. Node fields are indices.
struct EssentialEvent {
    Cycle cycle;
    int creator;    // bottleneck node of the widest path
    int destroyer;  // the down-fork closing the cycle
};

/// Events in sweep order; one per unit of cycle rank.
std::vector<EssentialEvent> essential_events(const ReebGraph& graph);

}  // namespace reeb::detail
