#include <doctest.h>

#include <algorithm>

#include "hdx/complex.hpp"
#include "hdx/errors.hpp"

using hdx::Cell;
using hdx::OrientedCell;
using hdx::Relation;
using hdx::SimplicialComplex;

TEST_CASE("facets close downward") {
    auto X = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK(X.dimension() == 2);
    CHECK(X.cell_count(-1) == 1);
    CHECK(X.cell_count(0) == 3);
    CHECK(X.cell_count(1) == 3);
    CHECK(X.cell_count(2) == 1);
    CHECK(X.contains({0, 2}));
    CHECK_FALSE(X.contains({0, 3}));
}

TEST_CASE("all vertices exist even outside facets") {
    auto X = SimplicialComplex::from_facets(5, {{0, 1}});
    CHECK(X.vertex_count() == 5);
    CHECK(X.cell_count(0) == 5);
    CHECK(X.dimension() == 1);
}

TEST_CASE("empty complex has dimension -1") {
    auto X = SimplicialComplex::from_facets(0, {});
    CHECK(X.dimension() == -1);
    CHECK(X.cell_count(-1) == 1);
}

TEST_CASE("facet validation") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(-1, {}), hdx::ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0, 3}}), hdx::ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{-1, 0}}), hdx::ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 1}}), hdx::ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{}}), hdx::ValidationError);
}

TEST_CASE("cells are sorted and ordinals round-trip") {
    auto X = SimplicialComplex::from_facets(4, {{0, 1, 2}, {1, 2, 3}});
    const auto& edges = X.cells(1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) CHECK(edges[i] < edges[i + 1]);
    for (std::size_t i = 0; i < edges.size(); ++i) CHECK(X.ordinal(edges[i]) == i);
    CHECK_THROWS_AS(X.ordinal({0, 3}), hdx::ValidationError);
    CHECK_THROWS_AS(X.cells(3), hdx::ValidationError);
}

TEST_CASE("degree counts cofaces") {
    auto X = SimplicialComplex::from_facets(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(X.degree({1, 2}) == 2);
    CHECK(X.degree({0, 1}) == 1);
    CHECK(X.degree({0}) == 2);  // edges 01 and 02
    CHECK(X.degree({0, 1, 2}) == 0);
}

TEST_CASE("orientation sign is the permutation parity") {
    CHECK(hdx::orientation_sign({0, 1, 2}) == 1);
    CHECK(hdx::orientation_sign({1, 0, 2}) == -1);
    CHECK(hdx::orientation_sign({2, 0, 1}) == 1);
    CHECK_THROWS_AS(hdx::orientation_sign({0, 0, 1}), hdx::ValidationError);
}

TEST_CASE("induced sign alternates over omitted positions") {
    Cell triangle{0, 1, 2};
    CHECK(hdx::induced_sign(triangle, {1, 2}) == 1);
    CHECK(hdx::induced_sign(triangle, {0, 2}) == -1);
    CHECK(hdx::induced_sign(triangle, {0, 1}) == 1);
    CHECK_THROWS_AS(hdx::induced_sign(triangle, {1, 3}), hdx::ValidationError);
}

TEST_CASE("edge relation depends on orientation") {
    // Hollow 3-cycle: no triangle, so agreeing orientations see the shared
    // vertex the same way and remain pitchfork-adjacent only.
    auto cycle = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    OrientedCell e01{{0, 1}, 1};
    OrientedCell e12{{1, 2}, 1};
    OrientedCell e21{{1, 2}, -1};  // traversed as (2,1), ending at 1
    CHECK(cycle.relation(e01, e21) == Relation::pitchfork_only);
    CHECK(cycle.relation(e01, e12) == Relation::none);  // head-to-tail chain

    auto filled = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK(filled.relation(e01, e21) == Relation::similar);
    CHECK(filled.relation(e01, e12) == Relation::none);
}

TEST_CASE("relation rejects bad arguments") {
    auto X = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    CHECK(X.relation({{0, 1}, 1}, {{0, 1}, 1}) == Relation::none);  // equal cells
    CHECK(X.relation({{0, 1}, 1}, {{2, 3}, -1}) == Relation::none); // disjoint
    CHECK_THROWS_AS(X.relation({{0, 1}, 1}, {{0, 1, 2}, 1}), hdx::ValidationError);
    CHECK_THROWS_AS(X.relation({{0, 1}, 2}, {{1, 2}, 1}), hdx::ValidationError);
    CHECK_THROWS_AS(X.relation({{0}, -1}, {{1}, 1}), hdx::ValidationError);
    CHECK_THROWS_AS(X.relation({{0, 3}, 1}, {{1, 2}, 1}), hdx::ValidationError);
}

TEST_CASE("vertex relation distinguishes edges from non-edges") {
    auto X = SimplicialComplex::from_facets(3, {{0, 1}});
    CHECK(X.relation({{0}, 1}, {{1}, 1}) == Relation::similar);
    CHECK(X.relation({{0}, 1}, {{2}, 1}) == Relation::pitchfork_only);
}

TEST_CASE("maximal cells are the facets") {
    auto X = SimplicialComplex::from_facets(5, {{0, 1, 2}, {2, 3}, {4}});
    auto maximal = X.maximal_cells();
    CHECK(maximal.size() == 3);
    CHECK(std::find(maximal.begin(), maximal.end(), Cell{0, 1, 2}) != maximal.end());
    CHECK(std::find(maximal.begin(), maximal.end(), Cell{2, 3}) != maximal.end());
    CHECK(std::find(maximal.begin(), maximal.end(), Cell{4}) != maximal.end());
}
