#pragma once

#include "reeb/persistence.hpp"

#include <string>

namespace reeb {

/// Scatter plot of a diagram as standalone SVG: axes, the diagonal, one marker
/// per point colored by class. Points with infinite death sit on the top
/// margin, labelled "inf". Same diagram, same bytes.
std::string export_plot(const PersistenceDiagram& diagram);

}  // namespace reeb
