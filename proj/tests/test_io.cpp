#include "fixtures.hpp"

#include "reeb/build.hpp"
#include "reeb/errors.hpp"
#include "reeb/generate.hpp"
#include "reeb/io.hpp"

#include <doctest.h>

#include <fstream>
#include <limits>
#include <sstream>

using namespace reeb;

TEST_CASE("complex round trip")
{
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_complex(rng, 7, 5, 3, 4);
        c.vertices[0].value = 0.1;
        auto back = complex_from_json(json::parse(to_json(c).dump()));
        CHECK(to_json(back) == to_json(c));
        CHECK(validate(back).valid());
    }
}

TEST_CASE("Reeb graph round trip")
{
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_reeb(rng, 9, 2);
        auto back = reeb_from_json(json::parse(to_json(g).dump()));
        CHECK(identical(g, back));
    }
    auto fig = fixture::fig2b();
    CHECK(identical(reeb_from_json(to_json(fig)), fig));
}

TEST_CASE("diagram round trip")
{
    PersistenceDiagram d{{{0.1, 0.7, PointClass::extended1, 3, 4},
                          {2, std::numeric_limits<double>::infinity(), PointClass::essential0},
                          {5, 1.25, PointClass::ordinary0_down}}};
    auto text = to_json(d).dump();
    CHECK(text.find("\"inf\"") != std::string::npos);
    auto back = diagram_from_json(json::parse(text));
    CHECK(back.points == d.points);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"points":[{"b":0,"d":1,"class":"bogus"}]})")), SchemaError);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"points":[{"b":"x","d":1,"class":"extended1"}]})")),
                    SchemaError);
}

TEST_CASE("cycle round trip")
{
    auto g = fixture::loop();
    auto c = cycle_from_json(g, json::parse(R"({"arcs":[1,0]})"));
    CHECK(c.arcs == std::vector<int>{0, 1});
    CHECK(cycle_from_json(g, to_json(c)) == c);
    CHECK_THROWS_AS(cycle_from_json(g, json::parse(R"({"arcs":[0]})")), NotACycle);
    CHECK_THROWS_AS(cycle_from_json(g, json::parse(R"({"arcs":[0, 5, 1]})")), SchemaError);
}

TEST_CASE("schema errors")
{
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"edges":[]})")), SchemaError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"vertices":[{"id":0,"f":"a"}]})")), SchemaError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"vertices":[{"id":0,"f":1}],"edges":[[0]]})")), SchemaError);
    CHECK_THROWS_AS(reeb_from_json(json::parse(R"({"nodes":[{"id":0,"f":0}],"arcs":[{"id":0,"lo":0,"hi":9}]})")),
                    UnknownNode);
}

TEST_CASE("OFF input")
{
    std::istringstream off("OFF\n# a square split in two\n4 2 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n3 0 1 2\n3 0 2 3\n");
    std::istringstream scalars("0\n1\n2\n1.5\n");
    auto c = complex_from_off(off, scalars);
    CHECK(validate(c).valid());
    CHECK(c.vertices.size() == 4);
    CHECK(c.edges.size() == 5);
    CHECK(c.triangles.size() == 2);
    auto g = build_reeb(c);
    CHECK(g.arc_count() == 1);

    std::istringstream quad("OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
    std::istringstream few("0\n1\n");
    CHECK_THROWS_AS(complex_from_off(quad, few), SchemaError);
}

TEST_CASE("double loop golden file")
{
    std::ifstream in(REEB_TEST_DATA "/fig2b.json");
    REQUIRE(in);
    auto doc = json::parse(in);
    auto g = reeb_from_json(doc["graph"]);
    CHECK(identical(g, fixture::fig2b()));
}
