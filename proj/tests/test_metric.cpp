#include "fixtures.hpp"
#include "oracles.hpp"

#include "reeb/errors.hpp"
#include "reeb/generate.hpp"
#include "reeb/metric.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace reeb;

namespace {

// Random points: every node plus a few arc-interior points at quarter steps.
std::vector<ReebPoint> sample_points(const ReebGraph& g, Rng& rng, int interior)
{
    auto pts = node_points(g);
    for (int k = 0; k < interior && g.arc_count() > 0; ++k) {
        const int a = static_cast<int>(rng() % g.arc_count());
        const double lo = g.value(g.arc(a).lo), hi = g.value(g.arc(a).hi);
        const double t = (1 + rng() % 3) / 4.0;
        pts.push_back(ReebPoint::on_arc(g, a, lo + (hi - lo) * t));
    }
    return pts;
}

void check_witness(const ReebGraph& g, const PathHeight& p, const ReebPoint& u, const ReebPoint& v)
{
    REQUIRE(p.points.size() == p.arcs.size() + 1);
    CHECK(p.points.front() == u);
    CHECK(p.points.back() == v);
    CHECK(p.high() - p.low() == p.value);
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        const ReebArc& a = g.arc(p.arcs[i]);
        for (const ReebPoint* q : {&p.points[i], &p.points[i + 1]}) {
            if (q->is_node())
                CHECK((q->node == a.lo || q->node == a.hi));
            else
                CHECK(q->arc == p.arcs[i]);
        }
    }
}

}  // namespace

TEST_CASE("identical points are at distance zero")
{
    auto g = fixture::loop();
    auto u = ReebPoint::on_arc(g, 0, 0.5);
    auto p = df(g, u, u);
    CHECK(p.value == 0.0);
    CHECK(p.points.size() == 1);
}

TEST_CASE("loop examples")
{
    auto g = fixture::loop();
    auto u = ReebPoint::on_arc(g, 0, 0.3);
    auto v = ReebPoint::on_arc(g, 1, 0.7);
    CHECK(df(g, u, v).value == 0.7);
    check_witness(g, df(g, u, v), u, v);
    auto a = ReebPoint::on_arc(g, 0, 0.5);
    auto b = ReebPoint::on_arc(g, 1, 0.5);
    CHECK(df(g, a, b).value == 0.5);
}

TEST_CASE("points on a common arc are at their value difference")
{
    auto g = fixture::loop(4.0);
    auto u = ReebPoint::on_arc(g, 0, 1.0);
    auto v = ReebPoint::on_arc(g, 0, 3.5);
    CHECK(df(g, u, v).value == 2.5);
}

TEST_CASE("Y-tree minima")
{
    auto g = fixture::y_tree();
    std::vector<ReebPoint> pts{ReebPoint::at_node(g, 0), ReebPoint::at_node(g, 1), ReebPoint::at_node(g, 2)};
    auto d = all_pairs_df(g, pts);
    CHECK(d(0, 1) == 2.0);
    CHECK(d(0, 1) == oracle::path_height(g, pts[0], pts[1]));
}

TEST_CASE("small samples")
{
    auto g = fixture::y_tree();
    std::vector<ReebPoint> one{ReebPoint::at_node(g, 1)};
    CHECK(all_pairs_df(g, one)(0, 0) == 0.0);
    std::vector<ReebPoint> twice{ReebPoint::at_node(g, 1), ReebPoint::at_node(g, 1)};
    CHECK(all_pairs_df(g, twice).isZero());
}

TEST_CASE("disconnected points are infinitely far")
{
    auto g = fixture::graph({{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 1}, {2, 3}});
    auto p = df(g, ReebPoint::at_node(g, 0), ReebPoint::at_node(g, 3));
    CHECK(p.value == infinite_distance);
    CHECK_FALSE(p.connected());
}

TEST_CASE("df agrees with simple-path enumeration")
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_reeb(rng, 3 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 3));
        if (g.arc_count() > 8)
            continue;
        auto pts = sample_points(g, rng, 3);
        auto all = all_pairs_paths(g, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const double expected = oracle::path_height(g, pts[i], pts[j]);
                auto p = df(g, pts[i], pts[j]);
                CHECK(p.value == expected);
                CHECK(all[i * pts.size() + j].value == expected);
                check_witness(g, p, pts[i], pts[j]);
                check_witness(g, all[i * pts.size() + j], pts[i], pts[j]);
            }
        }
    }
}

TEST_CASE("metric axioms on random samples")
{
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_reeb(rng, 8, static_cast<int>(rng() % 4));
        auto pts = sample_points(g, rng, 5);
        auto d = all_pairs_df(g, pts);
        const auto n = d.rows();
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                CHECK(d(i, j) >= 0);
                CHECK(d(i, j) == d(j, i));
                CHECK((d(i, j) == 0) == (pts[i] == pts[j]));
                for (Eigen::Index k = 0; k < n; ++k)
                    CHECK(d(i, k) <= d(i, j) + d(j, k));
            }
        }
    }
}

TEST_CASE("subdivide splits arcs by the ceiling rule")
{
    auto g = fixture::graph({{0, 0}, {1, 1}}, {{0, 1}});
    CHECK(subdivide(g, 0.5).graph.arc_count() == 2);
    auto s = subdivide(g, 0.4);
    CHECK(s.graph.arc_count() == 3);
    for (const auto& a : s.graph.arcs())
        CHECK(s.graph.value(a.hi) - s.graph.value(a.lo) <= 0.4);
    CHECK(s.graph.node(1).subdivision);
    auto same = subdivide(g, 2.0);
    CHECK(identical(same.graph, g));
    CHECK_THROWS_AS(subdivide(g, 0.0), NonPositiveEpsilon);
    CHECK_THROWS_AS(subdivide(g, -1.0), NonPositiveEpsilon);
}

TEST_CASE("subdivision preserves df")
{
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_reeb(rng, 7, static_cast<int>(rng() % 3));
        const double eps = (1 + rng() % 8) / 4.0;
        auto s = subdivide(g, eps);
        for (const auto& a : s.graph.arcs())
            CHECK(s.graph.value(a.hi) - s.graph.value(a.lo) <= eps);
        CHECK(suppress_regular(s.graph).node_count() == g.node_count());
        auto pts = sample_points(g, rng, 4);
        std::vector<ReebPoint> mapped;
        for (const auto& p : pts) {
            mapped.push_back(s.map_point(g, p));
            CHECK(mapped.back().value == p.value);
        }
        CHECK(all_pairs_df(g, pts) == all_pairs_df(s.graph, mapped));
    }
}
