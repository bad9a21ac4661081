#include "fixtures.hpp"
#include "oracles.hpp"

#include "reeb/build.hpp"
#include "reeb/errors.hpp"
#include "reeb/generate.hpp"
#include "reeb/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace reeb;

namespace {

ScalarComplex path3()
{
    return {{{0, 0.0}, {1, 1.0}, {2, 2.0}}, {{0, 1}, {1, 2}}, {}};
}

int complex_components(const ScalarComplex& c)
{
    std::map<int, int> parent;
    for (const auto& v : c.vertices)
        parent[v.id] = v.id;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : c.edges)
        parent[find(e[0])] = find(e[1]);
    int count = 0;
    for (const auto& [id, p] : parent)
        count += find(id) == id;
    return count;
}

}  // namespace

TEST_CASE("monotone path collapses to one arc")
{
    auto g = build_reeb(path3());
    CHECK(g.node_count() == 2);
    CHECK(g.arc_count() == 1);
    CHECK(g.node(0).id == 0);
    CHECK(g.node(1).id == 2);
}

TEST_CASE("triangle boundary gives a loop, filled triangle an arc")
{
    ScalarComplex boundary{{{0, 0.0}, {1, 1.0}, {2, 2.0}}, {{0, 1}, {1, 2}, {0, 2}}, {}};
    auto g = build_reeb(boundary);
    CHECK(g.node_count() == 2);
    CHECK(g.arc_count() == 2);
    CHECK(g.cycle_rank() == 1);
    CHECK(oracle::labelled(g) == oracle::level_set_quotient(boundary));

    ScalarComplex disk = boundary;
    disk.triangles.push_back({0, 1, 2});
    auto h = build_reeb(disk);
    CHECK(h.node_count() == 2);
    CHECK(h.arc_count() == 1);
    CHECK(oracle::labelled(h) == oracle::level_set_quotient(disk));
}

TEST_CASE("invalid complex is rejected")
{
    ScalarComplex c{{{0, 0.0}}, {{0, 1}}, {}};
    CHECK_THROWS_AS(build_reeb(c), InvalidComplex);
}

TEST_CASE("provenance maps every vertex to a point of the same value")
{
    ScalarComplex boundary{{{0, 0.0}, {1, 1.0}, {2, 2.0}}, {{0, 1}, {1, 2}, {0, 2}}, {}};
    auto g = build_reeb(boundary);
    REQUIRE(g.provenance().size() == 3);
    for (const auto& img : g.provenance()) {
        const double f = boundary.vertices[img.vertex_id].value;
        CHECK(img.point.value == f);
    }
    CHECK_FALSE(g.provenance()[1].point.is_node());
}

TEST_CASE("build agrees with the level-set oracle on random complexes")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        auto c = random_complex(rng, n, static_cast<int>(rng() % (2 * n)), static_cast<int>(rng() % n),
                                2 + static_cast<int>(rng() % n));
        auto g = build_reeb(c);
        INFO("trial " << trial);
        CHECK(oracle::labelled(g) == oracle::level_set_quotient(c));
        CHECK(g.component_count() == complex_components(c));
        for (int i = 0; i < g.node_count(); ++i)
            CHECK_FALSE(classify_index(g, i).regular());
    }
}

TEST_CASE("trees have cycle rank zero")
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        ScalarComplex c;
        for (int i = 0; i < n; ++i)
            c.vertices.push_back({i, static_cast<double>(rng() % 5)});
        for (int i = 1; i < n; ++i)
            c.edges.push_back({static_cast<int>(rng() % i), i});
        CHECK(build_reeb(c).cycle_rank() == 0);
    }
}

TEST_CASE("order-preserving relabelling gives an isomorphic graph")
{
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = random_complex(rng, 8, 6, 3, 20);
        // Distinct values make any relabelling order-preserving.
        for (int i = 0; i < 8; ++i)
            c.vertices[i].value = i * 7 % 8;
        ScalarComplex r = c;
        auto relabel = [](int id) { return 100 - 3 * id; };
        for (auto& v : r.vertices)
            v.id = relabel(v.id);
        for (auto& e : r.edges)
            e = {relabel(e[0]), relabel(e[1])};
        for (auto& t : r.triangles)
            t = {relabel(t[0]), relabel(t[1]), relabel(t[2])};
        auto a = oracle::labelled(build_reeb(c));
        auto b = oracle::labelled(build_reeb(r));
        for (auto& [id, v] : a.nodes)
            id = relabel(id);
        for (auto& [lo, hi] : a.arcs)
            std::tie(lo, hi) = std::make_pair(relabel(lo), relabel(hi));
        std::sort(a.nodes.begin(), a.nodes.end());
        std::sort(a.arcs.begin(), a.arcs.end());
        CHECK(a == b);
    }
}

TEST_CASE("Reeb JSON input suppresses regular nodes")
{
    auto two = reeb_from_json(json::parse(R"({"nodes":[{"id":0,"f":0},{"id":1,"f":1}],"arcs":[{"id":0,"lo":0,"hi":1}]})"));
    CHECK(two.node_count() == 2);
    CHECK(two.arc_count() == 1);

    auto chain = reeb_from_json(json::parse(
        R"({"nodes":[{"id":0,"f":0},{"id":1,"f":1},{"id":2,"f":2}],"arcs":[{"id":0,"lo":0,"hi":1},{"id":1,"lo":1,"hi":2}]})"));
    CHECK(chain.node_count() == 2);
    CHECK(chain.arc_count() == 1);
    CHECK(chain.arc(0).id == 0);

    auto par = reeb_from_json(
        json::parse(R"({"nodes":[{"id":0,"f":0},{"id":1,"f":1}],"arcs":[{"id":0,"lo":0,"hi":1},{"id":1,"lo":0,"hi":1}]})"));
    CHECK(par.cycle_rank() == 1);

    CHECK_THROWS_AS(reeb_from_json(json::parse(R"({"nodes":[{"id":0,"f":0}],"arcs":[{"id":0,"lo":0,"hi":0}]})")),
                    NonMonotoneArc);
    CHECK_THROWS_AS(reeb_from_json(json::parse(R"({"nodes":[]})")), SchemaError);
}

TEST_CASE("node classification")
{
    auto g = fixture::graph({{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {0, 2}});
    auto c = classify(g, 0);
    CHECK(c.minimum);
    CHECK(c.up_fork);
    CHECK(c.degenerate());
    CHECK(c.tags() == std::vector<std::string>{"minimum", "up-fork", "degenerate"});

    auto y = fixture::graph({{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 2}, {1, 2}, {2, 3}});
    CHECK(classify(y, 2).tags() == std::vector<std::string>{"down-fork"});

    auto iso = fixture::graph({{0, 0}}, {});
    CHECK(classify(iso, 0).tags() == std::vector<std::string>{"minimum", "maximum", "degenerate"});
    CHECK_THROWS_AS(classify(iso, 7), UnknownNode);
}
