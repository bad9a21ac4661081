#include "reeb/simplify.hpp"

#include "reeb/errors.hpp"
#include "reeb/metric.hpp"
#include "reeb/persistence.hpp"

#include "disjoint_sets.hpp"
#include "essential.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>

namespace reeb {

std::string to_string(FeatureKind kind)
{
    switch (kind) {
    case FeatureKind::branch_min:
        return "branch-min";
    case FeatureKind::branch_max:
        return "branch-max";
    case FeatureKind::loop:
        return "loop";
    }
    return "?";
}

std::vector<FeaturePair> feature_pairs(const ReebGraph& graph)
{
    std::vector<FeaturePair> out;
    for (const auto& p : ordinary0(graph, Direction::up).only(PointClass::ordinary0_up).points)
        out.push_back({FeatureKind::branch_min, p.creator, p.destroyer, std::abs(p.death - p.birth)});
    for (const auto& p : ordinary0(graph, Direction::down).points)
        out.push_back({FeatureKind::branch_max, p.destroyer, p.creator, std::abs(p.death - p.birth)});
    for (const auto& ev : detail::essential_events(graph)) {
        out.push_back({FeatureKind::loop, graph.node(ev.creator).id, graph.node(ev.destroyer).id,
                       graph.value(ev.destroyer) - graph.value(ev.creator)});
    }
    return out;
}

namespace {

std::vector<int> incident_arcs(const ReebGraph& g, int x)
{
    std::vector<int> arcs;
    for (const auto list : {g.down_arcs(x), g.up_arcs(x)})
        arcs.insert(arcs.end(), list.begin(), list.end());
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

// Fewest-arc walk from `from` to `to` through nodes accepted by `inside`,
// arcs tried in index order.
template <class Inside>
Walk bfs_walk(const ReebGraph& g, int from, int to, Inside inside)
{
    std::vector<int> pred_arc(g.node_count(), -1);
    std::vector<char> seen(g.node_count(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty() && !seen[to]) {
        const int x = queue.front();
        queue.pop_front();
        for (int a : incident_arcs(g, x)) {
            const int y = g.other_end(a, x);
            if (seen[y] || !inside(y))
                continue;
            seen[y] = 1;
            pred_arc[y] = a;
            queue.push_back(y);
        }
    }
    if (!seen[to])
        throw InvariantViolation("merging path endpoint unreachable");
    std::vector<int> nodes{to};
    std::vector<int> arcs;
    for (int x = to; x != from;) {
        arcs.push_back(pred_arc[x]);
        x = g.other_end(pred_arc[x], x);
        nodes.push_back(x);
    }
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(arcs.begin(), arcs.end());
    Walk w;
    for (int x : nodes)
        w.points.push_back(ReebPoint::at_node(g, x));
    w.arcs = std::move(arcs);
    return w;
}

Walk prepend(const ReebGraph& g, int start, int arc, Walk rest)
{
    Walk w;
    w.points.push_back(ReebPoint::at_node(g, start));
    w.arcs.push_back(arc);
    w.points.insert(w.points.end(), rest.points.begin(), rest.points.end());
    w.arcs.insert(w.arcs.end(), rest.arcs.begin(), rest.arcs.end());
    return w;
}

// Cut a walk at the first point with value t.
Walk truncate_at(const ReebGraph& g, const Walk& w, double t)
{
    Walk out;
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        out.points.push_back(w.points[i]);
        if (w.points[i].value == t)
            return out;
        if (i + 1 < w.points.size()) {
            const double a = w.points[i].value - t;
            const double b = w.points[i + 1].value - t;
            out.arcs.push_back(w.arcs[i]);
            if ((a < 0) != (b < 0) && b != 0.0) {
                out.points.push_back(ReebPoint::on_arc(g, w.arcs[i], t));
                return out;
            }
        }
    }
    throw InvariantViolation("surviving branch never reaches the extremum level");
}

MergingPath branch_path(const ReebGraph& g, const FeaturePair& pair)
{
    const bool up = pair.kind == FeatureKind::branch_min;
    const int s = g.index_of(up ? pair.upper : pair.lower);
    const int m = g.index_of(up ? pair.lower : pair.upper);
    auto inside = [&](int x) { return up ? x < s : x > s; };
    auto older = [&](int x, int y) { return up ? x < y : x > y; };

    detail::DisjointSets dsu(g.node_count());
    for (const auto& a : g.arcs())
        if (inside(a.lo) && inside(a.hi))
            dsu.unite(a.lo, a.hi);
    std::map<int, int> oldest;
    for (int x = 0; x < g.node_count(); ++x) {
        if (!inside(x))
            continue;
        auto [it, fresh] = oldest.emplace(dsu.find(x), x);
        if (!fresh && older(x, it->second))
            it->second = x;
    }

    const auto toward = up ? g.down_arcs(s) : g.up_arcs(s);
    const int dying = dsu.find(m);
    int dying_arc = -1;
    int survivor_arc = -1;
    for (int a : toward) {
        const int root = dsu.find(g.other_end(a, s));
        if (root == dying && dying_arc < 0)
            dying_arc = a;
        if (root != dying) {
            const int cur = survivor_arc < 0 ? -1 : dsu.find(g.other_end(survivor_arc, s));
            if (cur < 0 || older(oldest.at(root), oldest.at(cur)))
                survivor_arc = a;
        }
    }
    if (dying_arc < 0 || survivor_arc < 0 || older(oldest.at(dying), oldest.at(dsu.find(g.other_end(survivor_arc, s)))))
        throw InvariantViolation("branch pair does not match its saddle");

    const int d0 = g.other_end(dying_arc, s);
    const int s0 = g.other_end(survivor_arc, s);
    MergingPath out;
    out.pair = pair;
    out.first = prepend(g, s, dying_arc, bfs_walk(g, d0, m, inside));
    const Walk full = prepend(g, s, survivor_arc, bfs_walk(g, s0, oldest.at(dsu.find(s0)), inside));
    out.second = truncate_at(g, full, g.value(m));
    return out;
}

MergingPath loop_path(const ReebGraph& g, const FeaturePair& pair)
{
    const int s1 = g.index_of(pair.lower);
    const int s2 = g.index_of(pair.upper);
    for (const auto& ev : detail::essential_events(g)) {
        if (ev.creator != s1 || ev.destroyer != s2)
            continue;
        std::vector<char> on_cycle(g.arc_count(), 0);
        for (int id : ev.cycle.arcs)
            on_cycle[*g.find_arc(id)] = 1;
        auto cycle_arcs_at = [&](int x) {
            std::vector<int> out;
            for (int a : incident_arcs(g, x))
                if (on_cycle[a])
                    out.push_back(a);
            return out;
        };
        auto half = [&](int first_arc) {
            Walk w;
            w.points.push_back(ReebPoint::at_node(g, s2));
            int cur = s2;
            int arc = first_arc;
            while (true) {
                w.arcs.push_back(arc);
                cur = g.other_end(arc, cur);
                w.points.push_back(ReebPoint::at_node(g, cur));
                if (cur == s1)
                    return w;
                const auto next = cycle_arcs_at(cur);
                arc = next[0] == arc ? next[1] : next[0];
            }
        };
        const auto start = cycle_arcs_at(s2);
        return {pair, half(start[0]), half(start[1])};
    }
    throw InvariantViolation("loop pair without a sweep event");
}

void check_pair(const std::vector<FeaturePair>& known, const FeaturePair& pair)
{
    for (const auto& k : known)
        if (k.kind == pair.kind && k.lower == pair.lower && k.upper == pair.upper)
            return;
    throw InvalidPair(to_string(pair.kind) + " pair (" + std::to_string(pair.lower) + ", " +
                      std::to_string(pair.upper) + ") is not a feature of the graph");
}

// Refined element holding a point: a refined node, or the interior of a piece.
struct Element {
    bool node;
    int index;
};

Element locate(const QuotientMap::Stage& st, const ReebPoint& x)
{
    if (x.is_node())
        return {true, st.refined.index_of(st.input.node(x.node).id)};
    for (int piece : st.chains.at(x.arc)) {
        const ReebArc& a = st.refined.arc(piece);
        if (x.value == st.refined.value(a.lo))
            return {true, a.lo};
        if (x.value == st.refined.value(a.hi))
            return {true, a.hi};
        if (x.value < st.refined.value(a.hi))
            return {false, piece};
    }
    throw std::out_of_range("point outside its arc");
}

void refine(QuotientMap::Stage& st)
{
    const ReebGraph& g = st.input;
    std::vector<double> levels;
    for (const auto& n : g.nodes())
        levels.push_back(n.value);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    int max_node = -1;
    int max_arc = -1;
    for (const auto& n : g.nodes())
        max_node = std::max(max_node, n.id);
    for (const auto& a : g.arcs())
        max_arc = std::max(max_arc, a.id);
    int next_node = max_node + 1;
    int next_arc = max_arc + 1;

    std::vector<ReebNode> nodes(g.nodes().begin(), g.nodes().end());
    std::vector<ArcSpec> specs;
    std::vector<std::vector<int>> chain_ids(g.arc_count());
    std::map<int, ReebPoint> fresh_source;
    std::map<int, int> piece_owner;
    for (int ai = 0; ai < g.arc_count(); ++ai) {
        const ReebArc& a = g.arc(ai);
        const double lo = g.value(a.lo);
        const double hi = g.value(a.hi);
        int lower = g.node(a.lo).id;
        auto it = std::upper_bound(levels.begin(), levels.end(), lo);
        bool first = true;
        auto add_piece = [&](int upper) {
            const int id = first ? a.id : next_arc++;
            first = false;
            specs.push_back({id, lower, upper});
            chain_ids[ai].push_back(id);
            piece_owner[id] = ai;
            lower = upper;
        };
        for (; it != levels.end() && *it < hi; ++it) {
            const int id = next_node++;
            nodes.push_back({id, *it, true});
            ReebPoint src;
            src.arc = ai;
            src.value = *it;
            fresh_source[id] = src;
            add_piece(id);
        }
        add_piece(g.node(a.hi).id);
    }
    st.refined = ReebGraph(std::move(nodes), std::move(specs));

    st.chains.assign(g.arc_count(), {});
    for (int ai = 0; ai < g.arc_count(); ++ai)
        for (int id : chain_ids[ai])
            st.chains[ai].push_back(*st.refined.find_arc(id));
    st.piece_source.assign(st.refined.arc_count(), -1);
    for (int r = 0; r < st.refined.arc_count(); ++r)
        st.piece_source[r] = piece_owner.at(st.refined.arc(r).id);
    st.refined_node_source.clear();
    for (int r = 0; r < st.refined.node_count(); ++r) {
        const int id = st.refined.node(r).id;
        if (id <= max_node)
            st.refined_node_source.push_back(ReebPoint::at_node(g, g.index_of(id)));
        else
            st.refined_node_source.push_back(fresh_source.at(id));
    }
}

// Identifies equal-valued refined elements along each merging path.
void identify(QuotientMap::Stage& st, const std::vector<MergingPath>& paths)
{
    const ReebGraph& r = st.refined;
    detail::DisjointSets nodes(r.node_count());
    detail::DisjointSets arcs(r.arc_count());
    for (const auto& mp : paths) {
        std::map<double, int> level;
        std::map<std::pair<double, double>, int> slab;
        auto take_node = [&](int x) {
            auto [it, fresh] = level.emplace(r.value(x), x);
            if (!fresh)
                nodes.unite(it->second, x);
        };
        auto take_arc = [&](int p) {
            const ReebArc& a = r.arc(p);
            take_node(a.lo);
            take_node(a.hi);
            auto [it, fresh] = slab.emplace(std::pair(r.value(a.lo), r.value(a.hi)), p);
            if (!fresh)
                arcs.unite(it->second, p);
        };
        for (const Walk* w : {&mp.first, &mp.second}) {
            for (const auto& pt : w->points) {
                const Element e = locate(st, pt);
                if (!e.node)
                    throw InvariantViolation("merging path point off the refinement levels");
                take_node(e.index);
            }
            for (std::size_t i = 0; i < w->arcs.size(); ++i) {
                const double lo = std::min(w->points[i].value, w->points[i + 1].value);
                const double hi = std::max(w->points[i].value, w->points[i + 1].value);
                for (int piece : st.chains[w->arcs[i]]) {
                    const ReebArc& a = r.arc(piece);
                    if (lo <= r.value(a.lo) && r.value(a.hi) <= hi && lo < hi)
                        take_arc(piece);
                }
            }
        }
    }

    // Quotient graph: one node per node class, one arc per arc class.
    int max_id = -1;
    for (const auto& n : st.input.nodes())
        max_id = std::max(max_id, n.id);
    int fresh = max_id + 1;
    std::map<int, int> class_id;  // root -> quotient node id
    for (int x = 0; x < r.node_count(); ++x) {
        const int root = nodes.find(x);
        const int id = r.node(x).id;
        const bool original = id <= max_id;
        auto it = class_id.find(root);
        if (it == class_id.end())
            class_id.emplace(root, original ? id : -1);
        else if (original && (it->second < 0 || id < it->second))
            it->second = id;
    }
    std::vector<ReebNode> qnodes;
    for (auto& [root, id] : class_id) {
        if (id < 0)
            id = fresh++;
        qnodes.push_back({id, r.value(root), false});
    }
    std::map<int, ArcSpec> arc_spec;  // root -> spec
    for (int p = 0; p < r.arc_count(); ++p) {
        const int root = arcs.find(p);
        const ReebArc& a = r.arc(p);
        const int lo = class_id.at(nodes.find(a.lo));
        const int hi = class_id.at(nodes.find(a.hi));
        auto it = arc_spec.find(root);
        if (it == arc_spec.end()) {
            arc_spec.emplace(root, ArcSpec{a.id, lo, hi});
        } else {
            if (it->second.a != lo || it->second.b != hi)
                throw InvariantViolation("identified arcs disagree on their ends");
            it->second.id = std::min(it->second.id, a.id);
        }
    }
    std::vector<ArcSpec> qarcs;
    for (const auto& [root, spec] : arc_spec)
        if (spec.a != spec.b)
            qarcs.push_back(spec);
    st.quotient = ReebGraph(std::move(qnodes), std::move(qarcs));

    const ReebGraph& q = st.quotient;
    st.node_class.assign(r.node_count(), -1);
    st.class_nodes.assign(q.node_count(), {});
    for (int x = 0; x < r.node_count(); ++x) {
        st.node_class[x] = q.index_of(class_id.at(nodes.find(x)));
        st.class_nodes[st.node_class[x]].push_back(x);
    }
    st.arc_class.assign(r.arc_count(), -1);
    st.class_arcs.assign(q.arc_count(), {});
    for (int p = 0; p < r.arc_count(); ++p) {
        const ArcSpec& spec = arc_spec.at(arcs.find(p));
        if (spec.a == spec.b)
            continue;
        st.arc_class[p] = *q.find_arc(spec.id);
        st.class_arcs[st.arc_class[p]].push_back(p);
    }
}

// Suppresses regular nodes of the quotient, recording where each part went.
void suppress(QuotientMap::Stage& st)
{
    const ReebGraph& q = st.quotient;
    auto removable = [&](int v) { return q.up_arcs(v).size() == 1 && q.down_arcs(v).size() == 1; };
    std::vector<ReebNode> nodes;
    for (int v = 0; v < q.node_count(); ++v)
        if (!removable(v))
            nodes.push_back({q.node(v).id, q.value(v), false});

    struct Chain {
        std::vector<int> arcs;
        std::vector<int> inner;
    };
    std::vector<ArcSpec> specs;
    std::vector<Chain> chains;
    for (int v = 0; v < q.node_count(); ++v) {
        if (removable(v))
            continue;
        for (int start : q.up_arcs(v)) {
            Chain c{{start}, {}};
            int id = q.arc(start).id;
            int top = q.arc(start).hi;
            while (removable(top)) {
                c.inner.push_back(top);
                const int next = q.up_arcs(top)[0];
                c.arcs.push_back(next);
                id = std::min(id, q.arc(next).id);
                top = q.arc(next).hi;
            }
            specs.push_back({id, q.node(v).id, q.node(top).id});
            chains.push_back(std::move(c));
        }
    }
    st.output = ReebGraph(std::move(nodes), specs);

    const ReebGraph& out = st.output;
    st.quotient_node_image.assign(q.node_count(), {});
    st.quotient_arc_image.assign(q.arc_count(), -1);
    st.chain_nodes.assign(out.arc_count(), {});
    st.chain_arcs.assign(out.arc_count(), {});
    for (int v = 0; v < q.node_count(); ++v)
        if (!removable(v))
            st.quotient_node_image[v] = ReebPoint::at_node(out, out.index_of(q.node(v).id));
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const int oa = *out.find_arc(specs[i].id);
        st.chain_arcs[oa] = chains[i].arcs;
        st.chain_nodes[oa] = chains[i].inner;
        for (int a : chains[i].arcs)
            st.quotient_arc_image[a] = oa;
        for (int v : chains[i].inner) {
            ReebPoint p;
            p.arc = oa;
            p.value = q.value(v);
            st.quotient_node_image[v] = p;
        }
    }
}

QuotientMap::Stage make_stage(const ReebGraph& graph, const std::vector<MergingPath>& paths)
{
    QuotientMap::Stage st;
    st.input = graph;
    refine(st);
    identify(st, paths);
    suppress(st);
    return st;
}

}  // namespace

MergingPath merging_path(const ReebGraph& graph, const FeaturePair& pair)
{
    check_pair(feature_pairs(graph), pair);
    return pair.kind == FeatureKind::loop ? loop_path(graph, pair) : branch_path(graph, pair);
}

ReebPoint QuotientMap::Stage::forward(const ReebPoint& x) const
{
    const Element e = locate(*this, x);
    if (e.node)
        return quotient_node_image[node_class[e.index]];
    if (arc_class[e.index] < 0)
        return quotient_node_image[node_class[refined.arc(e.index).lo]];
    ReebPoint p;
    p.arc = quotient_arc_image[arc_class[e.index]];
    p.value = x.value;
    return p;
}

std::vector<ReebPoint> QuotientMap::Stage::backward(const ReebPoint& y) const
{
    std::vector<int> qnodes;
    std::vector<int> qarcs;
    if (y.is_node()) {
        qnodes.push_back(quotient.index_of(output.node(y.node).id));
    } else {
        for (int v : chain_nodes[y.arc])
            if (quotient.value(v) == y.value)
                qnodes.push_back(v);
        for (int a : chain_arcs[y.arc]) {
            const ReebArc& arc = quotient.arc(a);
            if (quotient.value(arc.lo) < y.value && y.value < quotient.value(arc.hi))
                qarcs.push_back(a);
        }
    }
    std::vector<ReebPoint> out;
    for (int v : qnodes)
        for (int x : class_nodes[v])
            out.push_back(refined_node_source[x]);
    for (int a : qarcs)
        for (int piece : class_arcs[a])
            out.push_back(ReebPoint::on_arc(input, piece_source[piece], y.value));
    return out;
}

ReebPoint QuotientMap::operator()(const ReebPoint& x) const
{
    ReebPoint y = x;
    for (const auto& st : stages)
        y = st.forward(y);
    return y;
}

std::vector<ReebPoint> QuotientMap::preimage(const ReebPoint& y) const
{
    std::vector<ReebPoint> current{y};
    for (auto st = stages.rbegin(); st != stages.rend(); ++st) {
        std::vector<ReebPoint> next;
        for (const auto& p : current) {
            auto back = st->backward(p);
            next.insert(next.end(), back.begin(), back.end());
        }
        current = std::move(next);
    }
    return current;
}

SimplifyResult simplify(const ReebGraph& graph, std::span<const FeaturePair> pairs)
{
    SimplifyResult out;
    out.graph = graph;
    if (pairs.empty())
        return out;
    const auto known = feature_pairs(graph);
    std::vector<MergingPath> paths;
    for (const auto& p : pairs) {
        check_pair(known, p);
        paths.push_back(p.kind == FeatureKind::loop ? loop_path(graph, p) : branch_path(graph, p));
    }
    out.map.stages.push_back(make_stage(graph, paths));
    out.graph = out.map.stages.back().output;
    out.removed.assign(pairs.begin(), pairs.end());
    out.rounds = 1;
    return out;
}

SimplifyResult simplify(const ReebGraph& graph, double delta, bool until_stable)
{
    if (!(delta >= 0.0))
        throw InvalidPair("threshold must be non-negative");
    auto selected = [&](const ReebGraph& g) {
        std::vector<FeaturePair> out;
        if (delta > 0.0)
            for (const auto& p : feature_pairs(g))
                if (p.persistence <= delta)
                    out.push_back(p);
        return out;
    };

    auto pairs = selected(graph);
    const std::size_t bound = pairs.size();
    SimplifyResult out = simplify(graph, pairs);
    while (until_stable && static_cast<std::size_t>(out.rounds) <= bound) {
        pairs = selected(out.graph);
        if (pairs.empty())
            break;
        SimplifyResult more = simplify(out.graph, pairs);
        for (auto& st : more.map.stages)
            out.map.stages.push_back(std::move(st));
        out.removed.insert(out.removed.end(), more.removed.begin(), more.removed.end());
        out.graph = std::move(more.graph);
        ++out.rounds;
    }
    return out;
}

bool SimplificationReport::ok() const
{
    return ordinary0_up_ok && ordinary0_down_ok && extended1_ok && contraction_violations == 0 &&
           fiber_violations == 0 && value_violations == 0;
}

ReebPoint sample_point(const ReebGraph& graph, std::uint64_t bits)
{
    const auto total = static_cast<std::uint64_t>(graph.node_count() + graph.arc_count());
    const auto k = static_cast<int>(bits % total);
    if (k < graph.node_count())
        return ReebPoint::at_node(graph, k);
    const int a = k - graph.node_count();
    const double lo = graph.value(graph.arc(a).lo);
    const double hi = graph.value(graph.arc(a).hi);
    const double step = static_cast<double>(1 + (bits >> 32) % 7);
    return ReebPoint::on_arc(graph, a, lo + (hi - lo) * step / 8.0);
}

SimplificationReport verify_simplification(const ReebGraph& input, const SimplifyResult& result, double delta,
                                           const VerifyOptions& options)
{
    SimplificationReport rep;
    rep.distances = bottleneck_all_classes(input, result.graph);
    rep.ordinary0_up_ok = rep.distances.ordinary0_up <= 2.0 * delta;
    rep.ordinary0_down_ok = rep.distances.ordinary0_down <= 2.0 * delta;
    rep.extended1_ok = rep.distances.extended1 <= 6.0 * delta;

    const ReebGraph& out = result.graph;
    std::mt19937_64 rng(options.seed);
    if (input.node_count() > 0) {
        for (int i = 0; i < options.point_pairs; ++i) {
            const ReebPoint x = sample_point(input, rng());
            const ReebPoint y = sample_point(input, rng());
            const ReebPoint mx = result.map(x);
            const ReebPoint my = result.map(y);
            if (mx.value != x.value || my.value != y.value)
                ++rep.value_violations;
            ++rep.contraction_checked;
            if (df(out, mx, my).value > df(input, x, y).value)
                ++rep.contraction_violations;
        }
    }
    if (out.node_count() > 0) {
        for (int i = 0; i < options.fibers; ++i) {
            const ReebPoint y = sample_point(out, rng());
            const auto fiber = result.map.preimage(y);
            if (fiber.empty())
                ++rep.value_violations;  // the map must be onto
            for (std::size_t a = 0; a < fiber.size(); ++a) {
                if (fiber[a].value != y.value || !(result.map(fiber[a]) == y))
                    ++rep.value_violations;
                for (std::size_t b = a + 1; b < fiber.size(); ++b) {
                    ++rep.fiber_checked;
                    if (df(input, fiber[a], fiber[b]).value > 2.0 * delta)
                        ++rep.fiber_violations;
                }
            }
        }
    }
    return rep;
}

}  // namespace reeb
