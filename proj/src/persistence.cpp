#include "reeb/persistence.hpp"

#include "disjoint_sets.hpp"
#include "essential.hpp"
#include "reeb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

namespace reeb {

std::string to_string(PointClass cls)
{
    switch (cls) {
    case PointClass::ordinary0_up:
        return "ordinary0-up";
    case PointClass::ordinary0_down:
        return "ordinary0-down";
    case PointClass::essential0:
        return "essential0";
    case PointClass::extended1:
        return "extended1";
    }
    return "?";
}

PointClass point_class_from_string(const std::string& name)
{
    for (auto cls : {PointClass::ordinary0_up, PointClass::ordinary0_down, PointClass::essential0,
                     PointClass::extended1}) {
        if (to_string(cls) == name)
            return cls;
    }
    throw SchemaError("unknown diagram class '" + name + "'");
}

double DiagramPoint::persistence() const
{
    return std::abs(death - birth);
}

PersistenceDiagram PersistenceDiagram::only(PointClass cls) const
{
    PersistenceDiagram out;
    for (const auto& p : points) {
        if (p.cls == cls)
            out.points.push_back(p);
    }
    return out;
}

std::vector<std::pair<double, double>> PersistenceDiagram::sorted_pairs() const
{
    std::vector<std::pair<double, double>> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.emplace_back(p.birth, p.death);
    std::sort(out.begin(), out.end());
    return out;
}

PersistenceDiagram ordinary0(const ReebGraph& graph, Direction direction)
{
    const int n = graph.node_count();
    const bool up = direction == Direction::up;
    detail::DisjointSets sets(n);
    // Oldest node of each component, by root. Index order is the sweep order
    // for up; reversed for down.
    std::vector<int> oldest(n);
    auto older = [up](int a, int b) { return up ? a < b : a > b; };

    PersistenceDiagram out;
    for (int step = 0; step < n; ++step) {
        const int s = up ? step : n - 1 - step;
        oldest[s] = s;
        std::vector<int> roots;
        for (int arc : up ? graph.down_arcs(s) : graph.up_arcs(s))
            roots.push_back(sets.find(graph.other_end(arc, s)));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::sort(roots.begin(), roots.end(), [&](int a, int b) { return older(oldest[a], oldest[b]); });

        for (std::size_t i = 1; i < roots.size(); ++i) {
            const int dying = oldest[roots[i]];
            out.points.push_back({graph.value(dying), graph.value(s),
                                  up ? PointClass::ordinary0_up : PointClass::ordinary0_down,
                                  graph.node(dying).id, graph.node(s).id});
        }
        int keep = roots.empty() ? s : oldest[roots.front()];
        int root = s;
        for (int r : roots)
            root = sets.unite(root, r);
        oldest[root] = keep;
    }

    if (up) {
        std::vector<int> top(n, -1);
        for (int i = 0; i < n; ++i)
            top[sets.find(i)] = i;
        for (int i = 0; i < n; ++i) {
            if (sets.find(i) != i)
                continue;
            const int lo = oldest[i];
            const int hi = top[i];
            out.points.push_back(
                {graph.value(lo), graph.value(hi), PointClass::essential0, graph.node(lo).id, graph.node(hi).id});
        }
    }
    return out;
}

namespace detail {

namespace {

struct WidestPath {
    std::vector<int> nodes;  // from the start to the reached target
    std::vector<int> arcs;
};

// Path from `start` to any node flagged in `target`, through nodes with index
// below `ceiling`, maximizing the smallest node index along the way.
WidestPath widest_path(const ReebGraph& graph, int start, const std::vector<char>& target, int ceiling)
{
    std::vector<int> width(ceiling, -1);
    std::vector<int> pred_arc(ceiling, -1);
    std::priority_queue<std::pair<int, int>> queue;  // (width, -node)
    width[start] = start;
    queue.push({start, -start});
    int reached = -1;
    while (!queue.empty()) {
        auto [w, neg] = queue.top();
        queue.pop();
        const int x = -neg;
        if (w < width[x])
            continue;
        if (target[x]) {
            reached = x;
            break;
        }
        for (const auto list : {graph.down_arcs(x), graph.up_arcs(x)}) {
            for (int arc : list) {
                const int y = graph.other_end(arc, x);
                if (y >= ceiling)
                    continue;
                const int wy = std::min(w, y);
                if (wy > width[y]) {
                    width[y] = wy;
                    pred_arc[y] = arc;
                    queue.push({wy, -y});
                }
            }
        }
    }
    if (reached < 0)
        throw InvariantViolation("cycle event without a connecting path");

    WidestPath path;
    for (int x = reached; x != start; x = graph.other_end(pred_arc[x], x)) {
        path.nodes.push_back(x);
        path.arcs.push_back(pred_arc[x]);
    }
    path.nodes.push_back(start);
    std::reverse(path.nodes.begin(), path.nodes.end());
    std::reverse(path.arcs.begin(), path.arcs.end());
    return path;
}

}  // namespace

std::vector<EssentialEvent> essential_events(const ReebGraph& graph)
{
    const int n = graph.node_count();
    DisjointSets sets(n);
    std::vector<int> oldest(n);
    std::vector<EssentialEvent> events;
    std::vector<char> target(n, 0);

    for (int s = 0; s < n; ++s) {
        oldest[s] = s;
        std::vector<std::tuple<int, int, int>> lower;  // (oldest of component, lower end, arc)
        for (int arc : graph.down_arcs(s)) {
            const int x = graph.other_end(arc, s);
            lower.emplace_back(oldest[sets.find(x)], x, arc);
        }
        std::sort(lower.begin(), lower.end());

        std::set<int> attached;
        std::vector<std::pair<int, int>> taken;  // (lower end, arc)
        for (const auto& [old, x, arc] : lower) {
            const int root = sets.find(x);
            if (attached.insert(root).second) {
                taken.emplace_back(x, arc);
                continue;
            }
            for (const auto& t : taken)
                target[t.first] = 1;
            WidestPath path = widest_path(graph, x, target, s);
            for (const auto& t : taken)
                target[t.first] = 0;

            int hub = -1;
            for (const auto& t : taken) {
                if (t.first == path.nodes.back()) {
                    hub = t.second;
                    break;
                }
            }
            const int creator = *std::min_element(path.nodes.begin(), path.nodes.end());

            std::vector<int> ids{graph.arc(arc).id, graph.arc(hub).id};
            for (int a : path.arcs)
                ids.push_back(graph.arc(a).id);
            std::sort(ids.begin(), ids.end());
            events.push_back({Cycle{ids, graph.value(creator), graph.value(s)}, creator, s});
            taken.emplace_back(x, arc);
        }

        const int keep = lower.empty() ? s : std::get<0>(lower.front());
        int root = s;
        for (const auto& [old, x, arc] : lower)
            root = sets.unite(root, x);
        oldest[root] = keep;
    }
    return events;
}

}  // namespace detail

PersistenceDiagram extended1(const ReebGraph& graph)
{
    PersistenceDiagram out;
    for (const auto& e : detail::essential_events(graph)) {
        out.points.push_back({e.cycle.low, e.cycle.high, PointClass::extended1, graph.node(e.creator).id,
                              graph.node(e.destroyer).id});
    }
    return out;
}

Cycle make_cycle(const ReebGraph& graph, std::span<const int> arc_ids)
{
    std::vector<int> ids(arc_ids.begin(), arc_ids.end());
    std::sort(ids.begin(), ids.end());
    std::vector<int> reduced;
    for (std::size_t i = 0; i < ids.size();) {
        std::size_t j = i;
        while (j < ids.size() && ids[j] == ids[i])
            ++j;
        if ((j - i) % 2 == 1)
            reduced.push_back(ids[i]);
        i = j;
    }

    std::vector<int> parity(graph.node_count(), 0);
    Cycle c;
    c.arcs = reduced;
    if (reduced.empty())
        return c;
    c.low = graph.value(graph.node_count() - 1);
    c.high = graph.value(0);
    for (int id : reduced) {
        auto index = graph.find_arc(id);
        if (!index)
            throw SchemaError("unknown arc id " + std::to_string(id));
        const ReebArc& a = graph.arc(*index);
        parity[a.lo] ^= 1;
        parity[a.hi] ^= 1;
        c.low = std::min(c.low, graph.value(a.lo));
        c.high = std::max(c.high, graph.value(a.hi));
    }
    for (int i = 0; i < graph.node_count(); ++i) {
        if (parity[i])
            throw NotACycle("node " + std::to_string(graph.node(i).id) + " has odd degree in the chain");
    }
    return c;
}

CycleBasis thinnest_basis(const ReebGraph& graph)
{
    CycleBasis basis;
    for (auto& e : detail::essential_events(graph))
        basis.cycles.push_back(std::move(e.cycle));
    std::stable_sort(basis.cycles.begin(), basis.cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.height() != b.height())
            return a.height() < b.height();
        return a.arcs < b.arcs;
    });
    return basis;
}

namespace {

using Bits = std::vector<char>;

Bits arc_bits(const ReebGraph& graph, const Cycle& c)
{
    Bits bits(graph.arc_count(), 0);
    for (int id : c.arcs) {
        auto index = graph.find_arc(id);
        if (!index)
            throw SchemaError("unknown arc id " + std::to_string(id));
        bits[*index] ^= 1;
    }
    return bits;
}

void add_into(Bits& into, const Bits& from)
{
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] ^= from[i];
}

int first_set(const Bits& bits)
{
    auto it = std::find(bits.begin(), bits.end(), 1);
    return it == bits.end() ? -1 : static_cast<int>(it - bits.begin());
}

// Echelon form over Z2 that remembers which inputs make up each row.
class Echelon {
public:
    explicit Echelon(std::size_t inputs) : inputs_(inputs) {}

    // Reduces `v` (with combination `combo`) against the rows; returns true
    // when it is independent and was added.
    bool insert(Bits v, Bits combo)
    {
        reduce(v, combo);
        const int pivot = first_set(v);
        if (pivot < 0)
            return false;
        rows_.push_back({std::move(v), std::move(combo), pivot});
        return true;
    }

    void reduce(Bits& v, Bits& combo) const
    {
        for (const auto& row : rows_) {
            if (v[row.pivot]) {
                add_into(v, row.bits);
                add_into(combo, row.combo);
            }
        }
    }

    std::size_t inputs() const { return inputs_; }

private:
    struct Row {
        Bits bits;
        Bits combo;
        int pivot;
    };
    std::size_t inputs_;
    std::vector<Row> rows_;
};

}  // namespace

Decomposition decompose(const ReebGraph& graph, const CycleBasis& basis, const Cycle& cycle)
{
    const Cycle target = make_cycle(graph, cycle.arcs);
    const std::size_t k = basis.cycles.size();
    Echelon echelon(k);
    for (std::size_t i = 0; i < k; ++i) {
        Bits combo(k, 0);
        combo[i] = 1;
        if (!echelon.insert(arc_bits(graph, basis.cycles[i]), std::move(combo)))
            throw InvariantViolation("basis cycles are linearly dependent");
    }
    Bits v = arc_bits(graph, target);
    Bits combo(k, 0);
    echelon.reduce(v, combo);
    if (first_set(v) >= 0)
        throw InvariantViolation("cycle is not spanned by the basis");

    Decomposition out;
    out.coefficients.assign(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (!combo[i])
            continue;
        out.coefficients[i] = true;
        const int idx = static_cast<int>(i);
        if (!out.dominating || basis.cycles[i].height() > basis.cycles[*out.dominating].height())
            out.dominating = idx;
    }
    return out;
}

int cycle_rank_of(const ReebGraph& graph, std::span<const Cycle> cycles)
{
    Echelon echelon(cycles.size());
    int rank = 0;
    for (const auto& c : cycles)
        rank += echelon.insert(arc_bits(graph, c), Bits(cycles.size(), 0)) ? 1 : 0;
    return rank;
}

bool is_alpha_matching(const CycleBasis& f, const CycleBasis& g, std::span<const std::pair<int, int>> pairs,
                       double alpha)
{
    std::vector<int> used_f(f.cycles.size(), 0);
    std::vector<int> used_g(g.cycles.size(), 0);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= static_cast<int>(f.cycles.size()) || j >= static_cast<int>(g.cycles.size()))
            return false;
        const Cycle& a = f.cycles[i];
        const Cycle& b = g.cycles[j];
        if (std::max(std::abs(a.low - b.low), std::abs(a.high - b.high)) > alpha)
            return false;
        ++used_f[i];
        ++used_g[j];
    }
    auto check = [alpha](const CycleBasis& basis, const std::vector<int>& used) {
        for (std::size_t i = 0; i < used.size(); ++i) {
            if (used[i] > 1)
                return false;
            if (basis.cycles[i].height() > 2 * alpha && used[i] != 1)
                return false;
        }
        return true;
    };
    return check(f, used_f) && check(g, used_g);
}

}  // namespace reeb
