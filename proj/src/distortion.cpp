#include "reeb/distortion.hpp"

#include "reeb/errors.hpp"
#include "reeb/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace reeb {

LowerBound lower_bound(const ReebGraph& f, const ReebGraph& g, bool include_essential0)
{
    LowerBound out;
    out.terms = bottleneck_all_classes(f, g);
    out.value = std::max({out.terms.ordinary0_up, out.terms.ordinary0_down, out.terms.extended1 / 3.0});
    if (include_essential0)
        out.value = std::max(out.value, out.terms.essential0);
    return out;
}

double DistortionTerms::value() const
{
    return std::max({function_f, function_g, round_trip_f, round_trip_g});
}

double DistortionTerms::node_value() const
{
    return std::max({function_f, function_g, node_round_trip_f, node_round_trip_g});
}

double frechet_profile(double a, double b, std::span<const double> w)
{
    if (w.empty())
        throw std::invalid_argument("empty profile");
    double out = std::max(std::abs(a - w.front()), std::abs(b - w.back()));
    double running_max = w.front();
    for (double x : w) {
        out = std::max({out, x - b, a - x, (running_max - x) / 2.0});
        running_max = std::max(running_max, x);
    }
    return out;
}

namespace {

struct Tables {
    explicit Tables(const ReebGraph& graph) : n(graph.node_count())
    {
        const auto points = node_points(graph);
        paths = all_pairs_paths(graph, points);
    }

    const PathHeight& path(int a, int b) const { return paths[static_cast<std::size_t>(a * n + b)]; }
    double d(int a, int b) const { return path(a, b).value; }

    int n;
    std::vector<PathHeight> paths;
};

// Node sequence of a walk along `arcs` from `start`; must finish at `end`.
std::vector<int> walk(const ReebGraph& graph, int start, std::span<const int> arcs, int end)
{
    std::vector<int> seq{start};
    int cur = start;
    for (int a : arcs) {
        if (a < 0 || a >= graph.arc_count())
            throw InvalidWitness("path uses unknown arc index " + std::to_string(a));
        const ReebArc& arc = graph.arc(a);
        if (arc.lo == cur)
            cur = arc.hi;
        else if (arc.hi == cur)
            cur = arc.lo;
        else
            throw InvalidWitness("path is not a walk at arc index " + std::to_string(a));
        seq.push_back(cur);
    }
    if (cur != end)
        throw InvalidWitness("path does not end at the image of the arc's upper node");
    return seq;
}

void check_map(const std::vector<int>& map, int from, int to, const char* name)
{
    if (static_cast<int>(map.size()) != from)
        throw InvalidWitness(std::string(name) + " has the wrong size");
    for (int x : map)
        if (x < 0 || x >= to)
            throw InvalidWitness(std::string(name) + " maps outside the target graph");
}

struct SideTerms {
    double function = 0.0;
    double round_trip = 0.0;
    double node_round_trip = 0.0;
};

// One direction: src --fwd--> dst --back--> src.
SideTerms eval_side(const ReebGraph& src, const ReebGraph& dst, const std::vector<int>& fwd,
                    const std::vector<int>& back, const std::vector<std::vector<int>>& fwd_paths,
                    const std::vector<std::vector<int>>& back_paths, const Tables& src_tables)
{
    SideTerms out;
    for (int v = 0; v < src.node_count(); ++v) {
        out.function = std::max(out.function, std::abs(src.value(v) - dst.value(fwd[v])));
        out.node_round_trip = std::max(out.node_round_trip, src_tables.d(v, back[fwd[v]]));
    }
    out.round_trip = out.node_round_trip;

    std::vector<std::vector<int>> back_seq(dst.arc_count());
    for (int p = 0; p < dst.arc_count(); ++p) {
        const ReebArc& a = dst.arc(p);
        back_seq[p] = walk(src, back[a.lo], back_paths[p], back[a.hi]);
    }

    for (int e = 0; e < src.arc_count(); ++e) {
        const int u = src.arc(e).lo;
        const int v = src.arc(e).hi;
        const double a = src.value(u);
        const double b = src.value(v);
        const auto seq = walk(dst, fwd[u], fwd_paths[e], fwd[v]);
        std::vector<double> w;
        for (int x : seq)
            w.push_back(dst.value(x));
        out.function = std::max(out.function, frechet_profile(a, b, w));

        const std::size_t k = fwd_paths[e].size();
        auto on_e = [&](int z) { return z == u || z == v; };
        std::optional<double> exact;
        if (k == 0) {
            const int z = back[seq[0]];
            if (on_e(z))
                exact = std::max(std::abs(a - src.value(z)), std::abs(b - src.value(z)));
        } else {
            bool monotone = true;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                monotone = monotone && ((w.back() > w.front()) ? w[i + 1] > w[i] : w[i + 1] < w[i]);
            bool stays = monotone;
            for (std::size_t i = 0; stays && i < k; ++i) {
                const auto& q = back_paths[fwd_paths[e][i]];
                stays = (q.empty() && on_e(back[seq[i]])) || (q.size() == 1 && q[0] == e);
            }
            if (stays) {
                double rt = 0.0;
                for (std::size_t i = 0; i <= k; ++i) {
                    const double t = (w[i] - w.front()) / (w.back() - w.front());
                    const double x = a + t * (b - a);
                    rt = std::max(rt, std::abs(x - src.value(back[seq[i]])));
                }
                exact = rt;
            }
        }
        if (exact) {
            out.round_trip = std::max(out.round_trip, *exact);
            continue;
        }

        // Height of e + (return path of one end) + (image of e under the round trip).
        double lo = a;
        double hi = b;
        for (std::size_t i = 0; i < k; ++i) {
            for (int z : back_seq[fwd_paths[e][i]]) {
                lo = std::min(lo, src.value(z));
                hi = std::max(hi, src.value(z));
            }
        }
        const int z0 = back[seq[0]];
        lo = std::min(lo, src.value(z0));
        hi = std::max(hi, src.value(z0));
        double best = infinite_distance;
        for (int end : {u, v}) {
            const PathHeight& ret = src_tables.path(end, back[fwd[end]]);
            if (!ret.connected())
                continue;
            best = std::min(best, std::max(hi, ret.high()) - std::min(lo, ret.low()));
        }
        out.round_trip = std::max(out.round_trip, best);
    }
    return out;
}

DistortionTerms eval_with_tables(const ReebGraph& f, const ReebGraph& g, const DiscreteMapPair& m,
                                 const Tables& tf, const Tables& tg)
{
    const SideTerms sf = eval_side(f, g, m.phi, m.psi, m.phi_paths, m.psi_paths, tf);
    const SideTerms sg = eval_side(g, f, m.psi, m.phi, m.psi_paths, m.phi_paths, tg);
    return {sf.function, sg.function, sf.round_trip, sg.round_trip, sf.node_round_trip, sg.node_round_trip};
}

void fill_paths(const ReebGraph& src, const ReebGraph& dst, const std::vector<int>& map,
                std::vector<std::vector<int>>& paths, const Tables* tables)
{
    if (paths.empty())
        paths.resize(src.arc_count());
    if (static_cast<int>(paths.size()) != src.arc_count())
        throw InvalidWitness("one path list per arc expected");
    for (int e = 0; e < src.arc_count(); ++e) {
        const int a = map[src.arc(e).lo];
        const int b = map[src.arc(e).hi];
        if (!paths[e].empty() || a == b)
            continue;
        PathHeight p = tables ? tables->path(a, b)
                              : df(dst, ReebPoint::at_node(dst, a), ReebPoint::at_node(dst, b));
        if (!p.connected())
            throw InvalidWitness("arc ends map to different components");
        paths[e] = p.arcs;
    }
}

std::vector<int> direct_arcs(const ReebGraph& graph, int a, int b)
{
    std::vector<int> out;
    for (const auto list : {graph.down_arcs(a), graph.up_arcs(a)})
        for (int arc : list)
            if (graph.other_end(arc, a) == b)
                out.push_back(arc);
    std::sort(out.begin(), out.end());
    return out;
}

double gap(double x, double y)
{
    if (x == infinite_distance && y == infinite_distance)
        return 0.0;
    return std::abs(x - y);
}

// Node pairs (side, index) in increasing value; f before g on ties.
std::vector<std::pair<int, int>> variable_order(const ReebGraph& f, const ReebGraph& g)
{
    std::vector<std::pair<int, int>> vars;
    for (int v = 0; v < f.node_count(); ++v)
        vars.push_back({0, v});
    for (int w = 0; w < g.node_count(); ++w)
        vars.push_back({1, w});
    auto value = [&](const std::pair<int, int>& x) { return x.first == 0 ? f.value(x.second) : g.value(x.second); };
    std::stable_sort(vars.begin(), vars.end(), [&](const auto& x, const auto& y) {
        return std::pair(value(x), x.first) < std::pair(value(y), y.first);
    });
    return vars;
}

std::vector<int> candidates(double value, const ReebGraph& target)
{
    std::vector<int> out(target.node_count());
    std::iota(out.begin(), out.end(), 0);
    std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
        return std::abs(target.value(x) - value) < std::abs(target.value(y) - value);
    });
    return out;
}

struct Prepared {
    ReebGraph f;
    ReebGraph g;
};

Prepared prepare(const ReebGraph& f, const ReebGraph& g, double eps, int budget)
{
    if (!(eps > 0.0))
        throw NonPositiveEpsilon("eps must be positive");
    Prepared p{subdivide(f, eps).graph, subdivide(g, eps).graph};
    const int largest = std::max(p.f.node_count(), p.g.node_count());
    if (largest > budget)
        throw BudgetExceeded("subdivision has " + std::to_string(largest) + " nodes, budget is " +
                             std::to_string(budget));
    return p;
}

class StepLimit {
public:
    explicit StepLimit(std::size_t max) : max_(max) {}
    bool take()
    {
        if (max_ != 0 && steps_ >= max_)
            stopped_ = true;
        if (stopped_)
            return false;
        ++steps_;
        return true;
    }
    std::size_t steps() const { return steps_; }
    bool stopped() const { return stopped_; }

private:
    std::size_t max_;
    std::size_t steps_ = 0;
    bool stopped_ = false;
};

class MapSearch {
public:
    MapSearch(const ReebGraph& f, const ReebGraph& g, std::size_t max_steps)
        : f_(f), g_(g), tf_(f), tg_(g), limit_(max_steps), vars_(variable_order(f, g)),
          phi_(f.node_count(), -1), psi_(g.node_count(), -1), phi_pre_(g.node_count()), psi_pre_(f.node_count())
    {
        frechet_f_ = frechet_table(f_, g_, tg_);
        frechet_g_ = frechet_table(g_, f_, tf_);
        for (const auto& [side, x] : vars_)
            cand_.push_back(side == 0 ? candidates(f.value(x), g) : candidates(g.value(x), f));
        dfs(0);
    }

    double best = infinite_distance;
    std::optional<DiscreteMapPair> witness;
    std::optional<DistortionTerms> terms;
    std::size_t steps() const { return limit_.steps(); }
    bool complete() const { return !limit_.stopped(); }

private:
    // Per arc of src, Frechet term for every pair of endpoint images.
    static std::vector<std::vector<double>> frechet_table(const ReebGraph& src, const ReebGraph& dst,
                                                          const Tables& dst_tables)
    {
        const int n = dst.node_count();
        std::vector<std::vector<double>> out(src.arc_count(), std::vector<double>(n * n, infinite_distance));
        for (int e = 0; e < src.arc_count(); ++e) {
            const double a = src.value(src.arc(e).lo);
            const double b = src.value(src.arc(e).hi);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const PathHeight& p = dst_tables.path(x, y);
                    if (!p.connected())
                        continue;
                    std::vector<double> w;
                    if (x != y && !direct_arcs(dst, x, y).empty())
                        w = {dst.value(x), dst.value(y)};
                    else
                        for (const auto& q : p.points)
                            w.push_back(q.value);
                    out[e][x * n + y] = frechet_profile(a, b, w);
                }
        }
        return out;
    }

    // Largest term fixed by mapping node x of src to y, given the current maps.
    static double bound(const ReebGraph& src, const ReebGraph& dst, const std::vector<int>& fwd, const std::vector<int>& back,
                 const std::vector<std::vector<int>>& back_pre, const std::vector<std::vector<double>>& frechet,
                 const Tables& src_tables, const Tables& dst_tables, int x, int y, double cap)
    {
        const int n = dst.node_count();
        double lb = std::abs(src.value(x) - dst.value(y));
        for (const auto list : {src.down_arcs(x), src.up_arcs(x)}) {
            for (int e : list) {
                if (lb >= cap)
                    return lb;
                const ReebArc& a = src.arc(e);
                const int lo = a.lo == x ? y : fwd[a.lo];
                const int hi = a.hi == x ? y : fwd[a.hi];
                if (lo >= 0 && hi >= 0)
                    lb = std::max(lb, frechet[e][lo * n + hi]);
            }
        }
        if (back[y] >= 0)
            lb = std::max(lb, src_tables.d(x, back[y]));
        for (int z : back_pre[x])
            lb = std::max(lb, dst_tables.d(z, y));
        return lb;
    }

    void dfs(std::size_t depth)
    {
        if (limit_.stopped())
            return;
        if (depth == vars_.size()) {
            leaf();
            return;
        }
        const auto [side, x] = vars_[depth];
        for (int y : cand_[depth]) {
            const double node_gap = side == 0 ? std::abs(f_.value(x) - g_.value(y)) : std::abs(g_.value(x) - f_.value(y));
            if (node_gap >= best)
                break;
            if (!limit_.take())
                return;
            const double lb = side == 0 ? bound(f_, g_, phi_, psi_, psi_pre_, frechet_f_, tf_, tg_, x, y, best)
                                        : bound(g_, f_, psi_, phi_, phi_pre_, frechet_g_, tg_, tf_, x, y, best);
            if (lb >= best)
                continue;
            auto& map = side == 0 ? phi_ : psi_;
            auto& pre = side == 0 ? phi_pre_ : psi_pre_;
            map[x] = y;
            pre[y].push_back(x);
            dfs(depth + 1);
            pre[y].pop_back();
            map[x] = -1;
        }
    }

    // Path choices for one arc: every arc joining the two images directly,
    // then the minimal-height path if it is longer.
    static std::vector<std::vector<int>> path_options(const ReebGraph& src, const ReebGraph& dst,
                                                      const std::vector<int>& map, const Tables& dst_tables, int e)
    {
        const int a = map[src.arc(e).lo];
        const int b = map[src.arc(e).hi];
        if (a == b)
            return {{}};
        std::vector<std::vector<int>> out;
        for (int arc : direct_arcs(dst, a, b))
            out.push_back({arc});
        const PathHeight& p = dst_tables.path(a, b);
        if (p.arcs.size() != 1)
            out.push_back(p.arcs);
        return out;
    }

    // Index of the option that sends e to the direct arc of the same rank
    // among its parallel arcs, or the last option when there is none.
    static std::size_t ranked_option(const ReebGraph& src, const std::vector<int>& map, const ReebGraph& dst, int e,
                                     std::size_t count)
    {
        const int a = map[src.arc(e).lo];
        const int b = map[src.arc(e).hi];
        const std::size_t direct = a == b ? 0 : direct_arcs(dst, a, b).size();
        if (direct == 0)
            return count - 1;
        const auto own = direct_arcs(src, src.arc(e).lo, src.arc(e).hi);
        const auto rank = static_cast<std::size_t>(std::find(own.begin(), own.end(), e) - own.begin());
        return rank % direct;
    }

    void try_paths(DiscreteMapPair& m, const std::vector<std::vector<std::vector<int>>>& options,
                   const std::vector<std::size_t>& pick)
    {
        for (std::size_t i = 0; i < options.size(); ++i) {
            auto& slot = i < m.phi_paths.size() ? m.phi_paths[i] : m.psi_paths[i - m.phi_paths.size()];
            slot = options[i][pick[i]];
        }
        const DistortionTerms t = eval_with_tables(f_, g_, m, tf_, tg_);
        if (t.value() < best) {
            best = t.value();
            witness = m;
            terms = t;
        }
    }

    void leaf()
    {
        std::vector<std::vector<std::vector<int>>> options;
        for (int e = 0; e < f_.arc_count(); ++e)
            options.push_back(path_options(f_, g_, phi_, tg_, e));
        for (int e = 0; e < g_.arc_count(); ++e)
            options.push_back(path_options(g_, f_, psi_, tf_, e));

        DiscreteMapPair m{phi_, psi_, std::vector<std::vector<int>>(f_.arc_count()),
                          std::vector<std::vector<int>>(g_.arc_count())};
        std::size_t combos = 1;
        for (const auto& o : options)
            combos = std::min<std::size_t>(combos * o.size(), max_path_combos + 1);
        std::vector<std::size_t> pick(options.size(), 0);
        if (combos > max_path_combos) {
            // Too many: parallel arcs matched by rank, then minimal-height paths only.
            const std::size_t nf = m.phi_paths.size();
            for (std::size_t i = 0; i < options.size(); ++i) {
                pick[i] = i < nf ? ranked_option(f_, phi_, g_, static_cast<int>(i), options[i].size())
                                 : ranked_option(g_, psi_, f_, static_cast<int>(i - nf), options[i].size());
            }
            try_paths(m, options, pick);
            for (std::size_t i = 0; i < options.size(); ++i)
                pick[i] = options[i].size() - 1;
            try_paths(m, options, pick);
            return;
        }

        for (std::size_t c = 0; c < combos; ++c) {
            try_paths(m, options, pick);
            for (std::size_t i = 0; i < pick.size(); ++i) {
                if (++pick[i] < options[i].size())
                    break;
                pick[i] = 0;
            }
        }
    }

    static constexpr std::size_t max_path_combos = 256;

    const ReebGraph& f_;
    const ReebGraph& g_;
    Tables tf_;
    Tables tg_;
    StepLimit limit_;
    std::vector<std::pair<int, int>> vars_;
    std::vector<std::vector<int>> cand_;
    std::vector<std::vector<double>> frechet_f_;
    std::vector<std::vector<double>> frechet_g_;
    std::vector<int> phi_;
    std::vector<int> psi_;
    std::vector<std::vector<int>> phi_pre_;  // per g node, f nodes mapped onto it
    std::vector<std::vector<int>> psi_pre_;
};

class CorrespondenceSearch {
public:
    CorrespondenceSearch(const ReebGraph& f, const ReebGraph& g, std::size_t max_steps)
        : f_(f), g_(g), tf_(f), tg_(g), limit_(max_steps), vars_(variable_order(f, g))
    {
        for (const auto& [side, x] : vars_)
            cand_.push_back(side == 0 ? candidates(f.value(x), g) : candidates(g.value(x), f));
        dfs(0, 0.0);
    }

    double best = infinite_distance;
    std::size_t steps() const { return limit_.steps(); }
    bool complete() const { return !limit_.stopped(); }

private:
    void dfs(std::size_t depth, double running)
    {
        if (limit_.stopped())
            return;
        if (depth == vars_.size()) {
            best = running;
            return;
        }
        const auto [side, node] = vars_[depth];
        for (int other : cand_[depth]) {
            const int x = side == 0 ? node : other;
            const int y = side == 0 ? other : node;
            double cost = std::max(running, std::abs(f_.value(x) - g_.value(y)));
            if (cost >= best)
                break;
            if (!limit_.take())
                return;
            for (const auto& [x2, y2] : pairs_) {
                cost = std::max(cost, gap(tf_.d(x, x2), tg_.d(y, y2)));
                if (cost >= best)
                    break;
            }
            if (cost >= best)
                continue;
            pairs_.push_back({x, y});
            dfs(depth + 1, cost);
            pairs_.pop_back();
        }
    }

    const ReebGraph& f_;
    const ReebGraph& g_;
    Tables tf_;
    Tables tg_;
    StepLimit limit_;
    std::vector<std::pair<int, int>> vars_;
    std::vector<std::vector<int>> cand_;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

DiscreteMapPair complete_paths(const ReebGraph& f, const ReebGraph& g, DiscreteMapPair m)
{
    check_map(m.phi, f.node_count(), g.node_count(), "phi");
    check_map(m.psi, g.node_count(), f.node_count(), "psi");
    fill_paths(f, g, m.phi, m.phi_paths, nullptr);
    fill_paths(g, f, m.psi, m.psi_paths, nullptr);
    return m;
}

DistortionTerms eval_map_pair(const ReebGraph& f, const ReebGraph& g, const DiscreteMapPair& m)
{
    const DiscreteMapPair full = complete_paths(f, g, m);
    return eval_with_tables(f, g, full, Tables(f), Tables(g));
}

DistortionReport upper_bound_bruteforce(const ReebGraph& f, const ReebGraph& g, double eps, const SearchLimits& limits)
{
    Prepared p = prepare(f, g, eps, limits.budget);
    const LowerBound lb = lower_bound(f, g, limits.include_essential0);

    MapSearch search(p.f, p.g, limits.max_steps);
    DistortionReport out;
    out.lower = lb.value;
    out.lower_terms = lb.terms;
    out.eps = eps;
    out.slack = 2.0 * eps;
    out.complete = search.complete();
    out.steps = search.steps();
    if (search.witness) {
        out.upper = search.best;
        out.witness = std::move(search.witness);
        out.terms = search.terms;
    }
    out.f_subdivided = std::move(p.f);
    out.g_subdivided = std::move(p.g);
    return out;
}

FghResult fgh_bruteforce(const ReebGraph& f, const ReebGraph& g, double eps, const SearchLimits& limits)
{
    const Prepared p = prepare(f, g, eps, limits.budget);
    CorrespondenceSearch search(p.f, p.g, limits.max_steps);
    return {search.best, search.complete(), search.steps(), 2.0 * eps};
}

}  // namespace reeb
