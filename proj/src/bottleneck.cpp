#include "reeb/bottleneck.hpp"

#include "reeb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace reeb {

double point_cost(const DiagramPoint& a, const DiagramPoint& b)
{
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const DiagramPoint& p)
{
    return std::abs(p.death - p.birth) / 2;
}

namespace {

// Left vertices: points of A, then one diagonal slot per point of B.
// Right vertices: points of B, then one diagonal slot per point of A.
class DiagonalMatcher {
public:
    DiagonalMatcher(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) : a_(a), b_(b) {}

    // Right partner of every left vertex, or empty if no perfect matching at t.
    std::vector<int> match(double t) const
    {
        const int n = static_cast<int>(a_.size());
        const int m = static_cast<int>(b_.size());
        std::vector<std::vector<int>> adj(n + m);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                if (point_cost(a_[i], b_[j]) <= t)
                    adj[i].push_back(j);
            }
            if (diagonal_cost(a_[i]) <= t)
                adj[i].push_back(m + i);
        }
        for (int j = 0; j < m; ++j) {
            if (diagonal_cost(b_[j]) <= t)
                adj[n + j].push_back(j);
            for (int i = 0; i < n; ++i)
                adj[n + j].push_back(m + i);
        }

        std::vector<int> right_of(n + m, -1);
        std::vector<int> left_of(n + m, -1);
        std::vector<char> seen;
        std::function<bool(int)> augment = [&](int u) {
            for (int v : adj[u]) {
                if (seen[v])
                    continue;
                seen[v] = 1;
                if (left_of[v] < 0 || augment(left_of[v])) {
                    left_of[v] = u;
                    right_of[u] = v;
                    return true;
                }
            }
            return false;
        };
        for (int u = 0; u < n + m; ++u) {
            seen.assign(n + m, 0);
            if (!augment(u))
                return {};
        }
        return right_of;
    }

private:
    const std::vector<DiagramPoint>& a_;
    const std::vector<DiagramPoint>& b_;
};

}  // namespace

BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b)
{
    std::vector<DiagramPoint> fa, fb;
    std::vector<int> ia, ib, ja, jb;  // original indices of finite / infinite points
    for (int i = 0; i < static_cast<int>(a.points.size()); ++i) {
        const bool finite = std::isfinite(a.points[i].death);
        (finite ? ia : ja).push_back(i);
        if (finite)
            fa.push_back(a.points[i]);
    }
    for (int j = 0; j < static_cast<int>(b.points.size()); ++j) {
        const bool finite = std::isfinite(b.points[j].death);
        (finite ? ib : jb).push_back(j);
        if (finite)
            fb.push_back(b.points[j]);
    }
    if (ja.size() != jb.size())
        throw InfiniteMismatch("diagrams have " + std::to_string(ja.size()) + " and " + std::to_string(jb.size()) +
                               " points at infinity");

    BottleneckResult out;
    auto by_birth = [](const PersistenceDiagram& d) {
        return [&d](int x, int y) { return d.points[x].birth < d.points[y].birth; };
    };
    std::stable_sort(ja.begin(), ja.end(), by_birth(a));
    std::stable_sort(jb.begin(), jb.end(), by_birth(b));
    for (std::size_t k = 0; k < ja.size(); ++k) {
        const double cost = std::abs(a.points[ja[k]].birth - b.points[jb[k]].birth);
        out.matching.pairs.push_back({ja[k], jb[k], cost});
        out.value = std::max(out.value, cost);
    }

    std::vector<double> candidates{0.0};
    for (const auto& p : fa) {
        candidates.push_back(diagonal_cost(p));
        for (const auto& q : fb)
            candidates.push_back(point_cost(p, q));
    }
    for (const auto& q : fb)
        candidates.push_back(diagonal_cost(q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    DiagonalMatcher matcher(fa, fb);
    // The largest candidate is always feasible: every point can go to the diagonal.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (!matcher.match(candidates[mid]).empty() || fa.size() + fb.size() == 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    const double t = candidates[lo];
    out.value = std::max(out.value, t);

    const int n = static_cast<int>(fa.size());
    const int m = static_cast<int>(fb.size());
    const std::vector<int> right_of = matcher.match(t);
    for (int u = 0; u < n + m && !right_of.empty(); ++u) {
        const int v = right_of[u];
        if (u < n && v < m)
            out.matching.pairs.push_back({ia[u], ib[v], point_cost(fa[u], fb[v])});
        else if (u < n)
            out.matching.pairs.push_back({ia[u], -1, diagonal_cost(fa[u])});
        else if (v < m)
            out.matching.pairs.push_back({-1, ib[v], diagonal_cost(fb[v])});
    }
    for (const auto& p : out.matching.pairs)
        out.matching.cost = std::max(out.matching.cost, p.cost);
    return out;
}

ClassDistances bottleneck_all_classes(const ReebGraph& f, const ReebGraph& g)
{
    const PersistenceDiagram up_f = ordinary0(f, Direction::up);
    const PersistenceDiagram up_g = ordinary0(g, Direction::up);
    const PersistenceDiagram down_f = ordinary0(f, Direction::down);
    const PersistenceDiagram down_g = ordinary0(g, Direction::down);
    const PersistenceDiagram ext_f = extended1(f);
    const PersistenceDiagram ext_g = extended1(g);

    ClassDistances out;
    out.ordinary0_up = bottleneck(up_f.only(PointClass::ordinary0_up), up_g.only(PointClass::ordinary0_up)).value;
    out.ordinary0_down = bottleneck(down_f, down_g).value;
    out.extended1 = bottleneck(ext_f, ext_g).value;
    out.essential0 = bottleneck(up_f.only(PointClass::essential0), up_g.only(PointClass::essential0)).value;
    return out;
}

}  // namespace reeb
