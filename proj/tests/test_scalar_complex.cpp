#include "reeb/scalar_complex.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace reeb;

namespace {

bool has(const ValidationReport& r, IssueKind kind)
{
    for (const auto& i : r.issues) {
        if (i.kind == kind)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("single vertex is valid")
{
    ScalarComplex c{{{0, 0.0}}, {}, {}};
    CHECK(validate(c).valid());
}

TEST_CASE("undeclared edge endpoint is dangling")
{
    ScalarComplex c{{{0, 0.0}}, {{0, 1}}, {}};
    auto r = validate(c);
    CHECK_FALSE(r.valid());
    CHECK(has(r, IssueKind::dangling_reference));
}

TEST_CASE("triangle without its edge is missing a face")
{
    ScalarComplex c{{{0, 0.0}, {1, 1.0}, {2, 2.0}}, {{1, 2}, {0, 2}}, {{0, 1, 2}}};
    auto r = validate(c);
    CHECK(has(r, IssueKind::missing_face));
}

TEST_CASE("other issues are reported")
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(has(validate({{{0, 0.0}, {0, 1.0}}, {}, {}}), IssueKind::duplicate_vertex));
    CHECK(has(validate({{{0, nan}}, {}, {}}), IssueKind::non_finite_value));
    CHECK(has(validate({{{0, 0.0}}, {{0, 0}}, {}}), IssueKind::degenerate_simplex));
    CHECK(has(validate({{{0, 0.0}, {1, 1.0}}, {{0, 1}, {1, 0}}, {}}), IssueKind::duplicate_simplex));
}

TEST_CASE("tie break orders equal values by id")
{
    ScalarComplex c{{{0, 1.0}, {1, 1.0}, {2, 0.0}}, {}, {}};
    CHECK(tie_break(c).ids == std::vector<int>{2, 0, 1});
    ScalarComplex d{{{0, 3.0}, {1, -1.0}, {2, 2.5}}, {}, {}};
    CHECK(tie_break(d).ids == std::vector<int>{1, 2, 0});
    CHECK(tie_break(ScalarComplex{}).ids.empty());
}

TEST_CASE("tie break is deterministic")
{
    ScalarComplex c{{{5, 1.0}, {3, 1.0}, {9, 1.0}, {1, 0.5}}, {}, {}};
    CHECK(tie_break(c).ids == tie_break(c).ids);
    CHECK(precedes(1.0, 3, 1.0, 5));
    CHECK_FALSE(precedes(1.0, 5, 1.0, 5));
}
