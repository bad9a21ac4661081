#include "reeb/metric.hpp"

#include "reeb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace reeb {

double PathHeight::low() const
{
    double lo = infinite_distance;
    for (const auto& p : points)
        lo = std::min(lo, p.value);
    return lo;
}

double PathHeight::high() const
{
    double hi = -infinite_distance;
    for (const auto& p : points)
        hi = std::max(hi, p.value);
    return hi;
}

namespace {

// Lowest achievable path maximum from a source point to every node, moving
// only through points with value >= floor.
class MinimaxSweep {
public:
    MinimaxSweep(const ReebGraph& graph, const ReebPoint& source, double floor)
        : graph_(graph), source_(source), floor_(floor), cost_(graph.node_count(), infinite_distance),
          pred_node_(graph.node_count(), -1), pred_arc_(graph.node_count(), -1)
    {
        using Entry = std::pair<double, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
        auto relax = [&](int node, double cost, int from_node, int via_arc) {
            if (cost < cost_[node]) {
                cost_[node] = cost;
                pred_node_[node] = from_node;
                pred_arc_[node] = via_arc;
                queue.push({cost, node});
            }
        };

        if (source.is_node()) {
            relax(source.node, source.value, -1, -1);
        } else {
            const ReebArc& a = graph.arc(source.arc);
            relax(a.hi, graph.value(a.hi), -1, source.arc);
            if (graph.value(a.lo) >= floor)
                relax(a.lo, source.value, -1, source.arc);
        }

        while (!queue.empty()) {
            auto [cost, x] = queue.top();
            queue.pop();
            if (cost > cost_[x])
                continue;
            for (const auto list : {graph.down_arcs(x), graph.up_arcs(x)}) {
                for (int arc : list) {
                    const int y = graph.other_end(arc, x);
                    if (graph.value(y) < floor)
                        continue;
                    relax(y, std::max(cost, graph.value(y)), x, arc);
                }
            }
        }
    }

    // Lowest path maximum from the source to `target`, and how it is reached:
    // via == -1 for the direct segment on a shared arc, else the node entered
    // last before sliding along the target's arc (or the node itself).
    std::pair<double, int> reach(const ReebPoint& target) const
    {
        if (target.is_node())
            return {cost_[target.node], target.node};
        const ReebArc& a = graph_.arc(target.arc);
        double best = cost_[a.hi];
        int via = a.hi;
        if (graph_.value(a.lo) >= floor_) {
            double through_lo = std::max(cost_[a.lo], target.value);
            if (through_lo < best) {
                best = through_lo;
                via = a.lo;
            }
        }
        if (!source_.is_node() && source_.arc == target.arc) {
            double direct = std::max(source_.value, target.value);
            if (direct < best) {
                best = direct;
                via = -1;
            }
        }
        return {best, via};
    }

    PathHeight witness(const ReebPoint& target, int via, double value) const
    {
        PathHeight path;
        path.value = value;
        if (via == -1) {
            path.points = {source_, target};
            path.arcs = {target.arc};
            return path;
        }
        std::vector<int> chain;
        for (int x = via; x >= 0; x = pred_node_[x])
            chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        if (!source_.is_node()) {
            path.points.push_back(source_);
            path.arcs.push_back(pred_arc_[chain.front()]);
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i > 0)
                path.arcs.push_back(pred_arc_[chain[i]]);
            path.points.push_back(ReebPoint::at_node(graph_, chain[i]));
        }
        if (!target.is_node()) {
            path.points.push_back(target);
            path.arcs.push_back(target.arc);
        }
        return path;
    }

private:
    const ReebGraph& graph_;
    ReebPoint source_;
    double floor_;
    std::vector<double> cost_;
    std::vector<int> pred_node_;
    std::vector<int> pred_arc_;
};

std::vector<double> floors_up_to(const ReebGraph& graph, std::span<const ReebPoint> extra, double ceiling)
{
    std::vector<double> floors;
    for (const auto& n : graph.nodes()) {
        if (n.value <= ceiling)
            floors.push_back(n.value);
    }
    for (const auto& p : extra) {
        if (p.value <= ceiling)
            floors.push_back(p.value);
    }
    std::sort(floors.begin(), floors.end());
    floors.erase(std::unique(floors.begin(), floors.end()), floors.end());
    return floors;
}

PathHeight trivial_path(const ReebPoint& p)
{
    PathHeight path;
    path.value = 0.0;
    path.points = {p};
    return path;
}

}  // namespace

PathHeight df(const ReebGraph& graph, const ReebPoint& u, const ReebPoint& v)
{
    if (u == v)
        return trivial_path(u);
    const ReebPoint ends[] = {u, v};
    const double ceiling = std::min(u.value, v.value);
    PathHeight best;
    for (double floor : floors_up_to(graph, ends, ceiling)) {
        MinimaxSweep sweep(graph, u, floor);
        auto [top, via] = sweep.reach(v);
        if (top == infinite_distance)
            continue;
        const double height = top - floor;
        if (height < best.value)
            best = sweep.witness(v, via, height);
    }
    return best;
}

std::vector<PathHeight> all_pairs_paths(const ReebGraph& graph, std::span<const ReebPoint> sample)
{
    const std::size_t n = sample.size();
    std::vector<PathHeight> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i * n + i] = trivial_path(sample[i]);
        for (double floor : floors_up_to(graph, sample, sample[i].value)) {
            MinimaxSweep sweep(graph, sample[i], floor);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (sample[j].value < floor)
                    continue;
                if (sample[i] == sample[j]) {
                    out[i * n + j] = trivial_path(sample[i]);
                    continue;
                }
                auto [top, via] = sweep.reach(sample[j]);
                if (top == infinite_distance)
                    continue;
                const double height = top - floor;
                if (height < out[i * n + j].value)
                    out[i * n + j] = sweep.witness(sample[j], via, height);
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            PathHeight reversed = out[i * n + j];
            std::reverse(reversed.points.begin(), reversed.points.end());
            std::reverse(reversed.arcs.begin(), reversed.arcs.end());
            out[j * n + i] = std::move(reversed);
        }
    }
    return out;
}

Eigen::MatrixXd all_pairs_df(const ReebGraph& graph, std::span<const ReebPoint> sample)
{
    const auto n = static_cast<Eigen::Index>(sample.size());
    auto paths = all_pairs_paths(graph, sample);
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            d(i, j) = paths[static_cast<std::size_t>(i * n + j)].value;
    return d;
}

std::vector<ReebPoint> node_points(const ReebGraph& graph)
{
    std::vector<ReebPoint> out;
    out.reserve(graph.node_count());
    for (int i = 0; i < graph.node_count(); ++i)
        out.push_back(ReebPoint::at_node(graph, i));
    return out;
}

Subdivision subdivide(const ReebGraph& graph, double eps)
{
    if (!(eps > 0.0))
        throw NonPositiveEpsilon("subdivision step must be positive");

    std::vector<ReebNode> nodes(graph.nodes().begin(), graph.nodes().end());
    int next_node = 0;
    int next_arc = 0;
    for (const auto& n : graph.nodes())
        next_node = std::max(next_node, n.id + 1);
    for (const auto& a : graph.arcs())
        next_arc = std::max(next_arc, a.id + 1);

    // Per input arc: ids of the refined arcs, bottom to top.
    std::vector<std::vector<int>> chain_ids(graph.arc_count());
    std::vector<ArcSpec> arcs;
    for (int ai = 0; ai < graph.arc_count(); ++ai) {
        const ReebArc& a = graph.arc(ai);
        const double lo = graph.value(a.lo);
        const double hi = graph.value(a.hi);
        const double height = hi - lo;

        std::vector<double> cuts;
        if (height > eps) {
            auto pieces = static_cast<long>(std::ceil(height / eps));
            for (;; ++pieces) {
                cuts.clear();
                double prev = lo;
                bool ok = true;
                for (long i = 1; i <= pieces; ++i) {
                    const double v = (i == pieces) ? hi : lo + height * static_cast<double>(i) / static_cast<double>(pieces);
                    if (!(v > prev) || v - prev > eps) {
                        ok = false;
                        break;
                    }
                    if (i < pieces)
                        cuts.push_back(v);
                    prev = v;
                }
                if (ok)
                    break;
            }
        }

        int lower = graph.node(a.lo).id;
        for (std::size_t c = 0; c <= cuts.size(); ++c) {
            int upper;
            if (c < cuts.size()) {
                upper = next_node++;
                nodes.push_back({upper, cuts[c], true});
            } else {
                upper = graph.node(a.hi).id;
            }
            const int id = (c == 0) ? a.id : next_arc++;
            arcs.push_back({id, lower, upper});
            chain_ids[ai].push_back(id);
            lower = upper;
        }
    }

    Subdivision out{ReebGraph(std::move(nodes), std::move(arcs)), {}};
    out.chains.resize(graph.arc_count());
    for (int ai = 0; ai < graph.arc_count(); ++ai)
        for (int id : chain_ids[ai])
            out.chains[ai].push_back(*out.graph.find_arc(id));
    return out;
}

ReebPoint Subdivision::map_point(const ReebGraph& input, const ReebPoint& point) const
{
    if (point.is_node())
        return ReebPoint::at_node(graph, graph.index_of(input.node(point.node).id));
    for (int piece : chains.at(point.arc)) {
        const ReebArc& a = graph.arc(piece);
        if (point.value <= graph.value(a.hi))
            return ReebPoint::on_arc(graph, piece, point.value);
    }
    throw std::out_of_range("point outside its arc");
}

}  // namespace reeb
