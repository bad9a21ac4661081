#pragma once

#include "reeb/bottleneck.hpp"
#include "reeb/reeb_graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace reeb {

struct LowerBound {
    double value = 0.0;
    ClassDistances terms;
};

/// max(d_B(ordinary0-up), d_B(ordinary0-down), d_B(extended1) / 3), and also
/// d_B(essential0) when asked. Every term is at most the functional
/// distortion distance.
LowerBound lower_bound(const ReebGraph& f, const ReebGraph& g, bool include_essential0 = false);

/// Node maps between two graphs (usually subdivisions) with, per arc, the
/// target path its interior is spread over. Paths are lists of target arc
/// indices walked from the image of the arc's lower end to the image of its
/// upper end. Leave a path list empty to use minimal-height paths.
struct DiscreteMapPair {
    std::vector<int> phi;  // node index of f -> node index of g
    std::vector<int> psi;  // node index of g -> node index of f
    std::vector<std::vector<int>> phi_paths;  // per arc index of f
    std::vector<std::vector<int>> psi_paths;  // per arc index of g
};

/// Fills empty path lists with minimal-height paths. Throws InvalidWitness.
DiscreteMapPair complete_paths(const ReebGraph& f, const ReebGraph& g, DiscreteMapPair m);

/// The four maxima of the distortion functional for the continuous maps
/// induced by a DiscreteMapPair.
///
/// Function terms are exact: each arc is spread over its path with the
/// parametrization minimizing the largest value gap, which is the 1-D Frechet
/// distance between the arc's values and the path's value profile.
///
/// Round-trip terms are upper bounds over whole arcs, not just nodes. When the
/// arc's path is monotone and the return paths stay on the arc, the composed
/// map is piecewise affine on the arc and the bound is exact. Otherwise the
/// bound is the height of a connected set containing both x and its round-trip
/// image: the arc, the return path of one endpoint, and the image of the arc.
/// The node-only round-trip maxima are reported alongside.
struct DistortionTerms {
    double function_f = 0.0;    // max |f(x) - g(phi(x))|
    double function_g = 0.0;    // max |g(y) - f(psi(y))|
    double round_trip_f = 0.0;  // bound on max d_f(x, psi(phi(x)))
    double round_trip_g = 0.0;
    double node_round_trip_f = 0.0;  // the same maxima over nodes only
    double node_round_trip_g = 0.0;

    double value() const;
    double node_value() const;
};

/// Throws InvalidWitness on maps or paths that do not fit the graphs.
DistortionTerms eval_map_pair(const ReebGraph& f, const ReebGraph& g, const DiscreteMapPair& m);

/// 1-D Frechet distance between the increasing segment [a, b] and the
/// piecewise-linear profile w.
double frechet_profile(double a, double b, std::span<const double> w);

struct SearchLimits {
    /// Subdivided node count allowed per side; BudgetExceeded above it.
    int budget = 14;
    /// Search nodes visited before giving up; 0 means no limit.
    std::size_t max_steps = 0;
    bool include_essential0 = false;
};

struct DistortionReport {
    double lower = 0.0;
    ClassDistances lower_terms;
    /// Smallest bound found; absent when no map pair exists (different
    /// numbers of components).
    std::optional<double> upper;
    /// Discretization allowance reported with the bound: 2 eps.
    double slack = 0.0;
    double eps = 0.0;
    bool complete = true;
    std::size_t steps = 0;
    std::optional<ReebGraph> f_subdivided;
    std::optional<ReebGraph> g_subdivided;
    std::optional<DiscreteMapPair> witness;
    std::optional<DistortionTerms> terms;
};

/// Branch and bound over all node maps between the eps-subdivisions, in
/// increasing order of node value, candidates nearest in value first. Each arc
/// is spread over an arc joining its end images directly or over a
/// minimal-height path, whichever choice does best. Minimizes
/// DistortionTerms::value(), which bounds the distance from above. Throws
/// NonPositiveEpsilon, BudgetExceeded.
DistortionReport upper_bound_bruteforce(const ReebGraph& f, const ReebGraph& g, double eps,
                                        const SearchLimits& limits = {});

struct FghResult {
    double value = 0.0;
    bool complete = true;
    std::size_t steps = 0;
    /// Allowance for restricting correspondences to subdivision nodes: 2 eps.
    double slack = 0.0;
};

/// min over correspondences C between subdivision nodes of
/// max(max |f(x) - g(y)|, max |d_f(x, x') - d_g(y, y')|) over pairs in C.
/// Every correspondence contains the union of a map graph and a reversed map
/// graph, so the search runs over node map pairs. Throws as above.
FghResult fgh_bruteforce(const ReebGraph& f, const ReebGraph& g, double eps, const SearchLimits& limits = {});

}  // namespace reeb
