#include "fixtures.hpp"
#include "oracles.hpp"

#include "reeb/bottleneck.hpp"
#include "reeb/errors.hpp"
#include "reeb/generate.hpp"

#include <doctest.h>

#include <limits>

using namespace reeb;

namespace {

PersistenceDiagram diagram(std::initializer_list<std::pair<double, double>> pts)
{
    PersistenceDiagram d;
    for (const auto& [b, e] : pts)
        d.points.push_back({b, e, PointClass::extended1});
    return d;
}

PersistenceDiagram random_diagram(Rng& rng, int max_points)
{
    PersistenceDiagram d;
    const int n = static_cast<int>(rng() % (max_points + 1));
    for (int i = 0; i < n; ++i) {
        const double b = static_cast<double>(rng() % 17) / 2;
        d.points.push_back({b, b + static_cast<double>(rng() % 13) / 4, PointClass::extended1});
    }
    return d;
}

}  // namespace

TEST_CASE("basic values")
{
    auto a = diagram({{0, 4}, {1, 2}});
    auto same = bottleneck(a, a);
    CHECK(same.value == 0);
    CHECK(same.matching.pairs.size() == 2);
    for (const auto& p : same.matching.pairs)
        CHECK(p.first == p.second);
    CHECK(bottleneck(diagram({{0, 2}}), diagram({})).value == 1);
    CHECK(bottleneck(diagram({{0, 4}}), diagram({{1, 5}})).value == 1);
    CHECK(bottleneck(diagram({}), diagram({})).value == 0);
}

TEST_CASE("matching is a witness")
{
    auto a = diagram({{0, 4}, {2, 3}, {5, 9}});
    auto b = diagram({{0.5, 4}, {6, 9.5}});
    auto r = bottleneck(a, b);
    CHECK(r.matching.cost == r.value);
    std::vector<int> ca(3, 0), cb(2, 0);
    for (const auto& p : r.matching.pairs) {
        if (p.first >= 0)
            ++ca[p.first];
        if (p.second >= 0)
            ++cb[p.second];
    }
    CHECK(ca == std::vector<int>{1, 1, 1});
    CHECK(cb == std::vector<int>{1, 1});
}

TEST_CASE("infinite points")
{
    const double inf = std::numeric_limits<double>::infinity();
    auto a = diagram({{0, inf}, {3, inf}});
    auto b = diagram({{1, inf}, {3.5, inf}});
    CHECK(bottleneck(a, b).value == 1);
    CHECK_THROWS_AS(bottleneck(a, diagram({{1, inf}})), InfiniteMismatch);
}

TEST_CASE("bottleneck agrees with exhaustive matching")
{
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_diagram(rng, 7);
        auto b = random_diagram(rng, 7);
        CHECK(bottleneck(a, b).value == oracle::exhaustive_bottleneck(a, b));
    }
}

TEST_CASE("metric properties")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_diagram(rng, 5);
        auto b = random_diagram(rng, 5);
        auto c = random_diagram(rng, 5);
        const double ab = bottleneck(a, b).value;
        CHECK(ab == bottleneck(b, a).value);
        CHECK(bottleneck(a, c).value <= ab + bottleneck(b, c).value);
        auto a2 = a;
        a2.points.push_back({1, 3, PointClass::extended1});
        CHECK(bottleneck(a2, b).value >= ab - 1.0);
        CHECK(bottleneck(a2, b).value <= std::max(ab, 1.0));
    }
}

TEST_CASE("per-class distances")
{
    auto g = fixture::fig2b();
    auto same = bottleneck_all_classes(g, g);
    CHECK(same.ordinary0_up == 0);
    CHECK(same.ordinary0_down == 0);
    CHECK(same.extended1 == 0);

    auto t = bottleneck_all_classes(fixture::tree_pair_first(), fixture::tree_pair_second());
    CHECK(t.ordinary0_up == 0);
    CHECK(t.ordinary0_down == 0);
    CHECK(t.extended1 == 0);
    CHECK(t.essential0 == 0);

    auto loops = bottleneck_all_classes(fixture::loop(1.0), fixture::loop(2.0));
    CHECK(loops.extended1 == 1);
    CHECK(loops.extended1 ==
          oracle::exhaustive_bottleneck(extended1(fixture::loop(1.0)), extended1(fixture::loop(2.0))));
}
