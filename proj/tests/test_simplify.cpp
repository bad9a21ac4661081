#include "fixtures.hpp"

#include "reeb/errors.hpp"
#include "reeb/generate.hpp"
#include "reeb/persistence.hpp"
#include "reeb/simplify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace reeb;

namespace {

std::set<int> arc_ids(const ReebGraph& g, const Walk& w)
{
    std::set<int> out;
    for (int a : w.arcs)
        out.insert(g.arc(a).id);
    return out;
}

bool has_pair(const std::vector<FeaturePair>& pairs, FeatureKind kind, int lower, int upper)
{
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const FeaturePair& p) { return p.kind == kind && p.lower == lower && p.upper == upper; });
}

}  // namespace

TEST_CASE("feature pairs of small graphs")
{
    const auto y = feature_pairs(fixture::y_tree());
    REQUIRE(y.size() == 1);
    CHECK(y[0] == FeaturePair{FeatureKind::branch_min, 1, 2, 1.0});

    const auto l = feature_pairs(fixture::loop());
    REQUIRE(l.size() == 1);
    CHECK(l[0] == FeaturePair{FeatureKind::loop, 0, 1, 1.0});

    const auto f = feature_pairs(fixture::fig2b());
    CHECK(has_pair(f, FeatureKind::branch_min, 2, 6));
    CHECK(has_pair(f, FeatureKind::loop, 4, 9));
    CHECK(has_pair(f, FeatureKind::loop, 3, 8));
    CHECK(has_pair(f, FeatureKind::branch_max, 5, 11));
}

TEST_CASE("merging paths")
{
    const auto y = fixture::y_tree();
    const auto mp = merging_path(y, {FeatureKind::branch_min, 1, 2, 1.0});
    CHECK(arc_ids(y, mp.first) == std::set<int>{1});
    CHECK(mp.first.points.back().value == 1.0);
    // Other branch, stopped halfway down arc 0 at value 1.
    CHECK(arc_ids(y, mp.second) == std::set<int>{0});
    CHECK(mp.second.points.back().value == 1.0);
    CHECK_FALSE(mp.second.points.back().is_node());

    const auto loop = fixture::loop();
    const auto lp = merging_path(loop, {FeatureKind::loop, 0, 1, 1.0});
    CHECK(arc_ids(loop, lp.first) == std::set<int>{0});
    CHECK(arc_ids(loop, lp.second) == std::set<int>{1});

    const auto g = fixture::fig2b();
    const auto cp = merging_path(g, {FeatureKind::loop, 4, 9, 6.0});
    std::set<int> cycle = arc_ids(g, cp.first);
    for (int id : arc_ids(g, cp.second))
        cycle.insert(id);
    using fixture::arc_between;
    CHECK(cycle == std::set<int>{arc_between(g, 4, 8), arc_between(g, 8, 6), arc_between(g, 6, 5),
                                 arc_between(g, 5, 9), arc_between(g, 9, 4)});
    for (const Walk* w : {&cp.first, &cp.second}) {
        CHECK(w->points.front().node == g.index_of(9));
        CHECK(w->points.back().node == g.index_of(4));
    }

    CHECK_THROWS_AS(merging_path(y, {FeatureKind::branch_min, 0, 2, 2.0}), InvalidPair);
    CHECK_THROWS_AS(merging_path(y, {FeatureKind::loop, 1, 2, 1.0}), InvalidPair);
}

TEST_CASE("simplify small graphs")
{
    const auto y = fixture::y_tree();
    const auto same = simplify(y, 0.0);
    CHECK(identical(same.graph, y));
    CHECK(same.map.stages.empty());

    const auto one = simplify(y, 1.0);
    REQUIRE(one.graph.node_count() == 2);
    REQUIRE(one.graph.arc_count() == 1);
    CHECK(one.graph.value(0) == 0.0);
    CHECK(one.graph.value(1) == 3.0);
    CHECK(ordinary0(one.graph, Direction::up).only(PointClass::ordinary0_up).points.empty());

    const auto l = simplify(fixture::loop(), 1.0);
    CHECK(l.graph.node_count() == 2);
    CHECK(l.graph.arc_count() == 1);
    CHECK(extended1(l.graph).points.empty());

    CHECK_THROWS_AS(simplify(y, -1.0), InvalidPair);
    const FeaturePair bogus{FeatureKind::branch_max, 2, 3, 1.0};
    CHECK_THROWS_AS(simplify(y, std::span(&bogus, 1)), InvalidPair);
}

TEST_CASE("quotient map preserves values and inverts")
{
    const auto g = fixture::fig2b();
    const auto r = simplify(g, 5.0);
    CHECK(r.removed.size() == 3);  // (2,6), (7,11) and the loop (3,8)
    for (std::uint64_t bits = 0; bits < 400; ++bits) {
        const ReebPoint x = sample_point(g, bits * 0x9E3779B97F4A7C15ull);
        const ReebPoint y = r.map(x);
        CHECK(y.value == x.value);
        const auto fiber = r.map.preimage(y);
        CHECK(std::find(fiber.begin(), fiber.end(), x) != fiber.end());
    }
    const auto rep = verify_simplification(g, r, 5.0, {.point_pairs = 300, .fibers = 100});
    CHECK(rep.ok());
    CHECK(rep.fiber_checked > 0);
}

TEST_CASE("simplification stability on random graphs")
{
    Rng rng(21);
    int removed = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_reeb(rng, 4 + static_cast<int>(rng() % 9), static_cast<int>(rng() % 4));
        const double delta = static_cast<double>(rng() % 9) / 2.0;
        const auto r = simplify(g, delta, trial % 2 == 1);
        removed += static_cast<int>(r.removed.size());
        const auto rep = verify_simplification(g, r, delta, {.point_pairs = 40, .fibers = 20, .seed = rng()});
        CHECK(rep.ordinary0_up_ok);
        CHECK(rep.ordinary0_down_ok);
        CHECK(rep.extended1_ok);
        CHECK(rep.contraction_violations == 0);
        CHECK(rep.fiber_violations == 0);
        CHECK(rep.value_violations == 0);
        // Pairs removed are gone; output values come from input values.
        for (const auto& n : r.graph.nodes())
            CHECK(g.find_node(n.id).has_value());
        if (trial % 2 == 1) {
            for (const auto& p : feature_pairs(r.graph))
                CHECK(p.persistence > delta);
        }
    }
    CHECK(removed > 100);
}
