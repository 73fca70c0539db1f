#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/rng.hpp"

using hdx::SimplicialComplex;

TEST_CASE("complete skeleton has binomial cell counts") {
    auto X = hdx::complete_skeleton(6, 2);
    CHECK(X.dimension() == 2);
    CHECK(X.cell_count(0) == 6);
    CHECK(X.cell_count(1) == 15);
    CHECK(X.cell_count(2) == 20);
    CHECK(hdx::is_complete_skeleton(X));
    CHECK_THROWS_AS(hdx::complete_skeleton(4, 4), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::complete_skeleton(4, -1), hdx::ValidationError);
}

TEST_CASE("probability one reproduces the complete skeleton") {
    auto lm = hdx::linial_meshulam(2, 7, 1.0, 123);
    auto complete = hdx::complete_skeleton(7, 2);
    CHECK(lm.maximal_cells() == complete.maximal_cells());
    auto empty = hdx::linial_meshulam(2, 7, 0.0, 123);
    CHECK(empty.dimension() == 1);
    CHECK(hdx::is_complete_skeleton(empty));
}

TEST_CASE("the random model is deterministic in the seed") {
    auto a = hdx::linial_meshulam(2, 9, 0.4, 77);
    auto b = hdx::linial_meshulam(2, 9, 0.4, 77);
    auto c = hdx::linial_meshulam(2, 9, 0.4, 78);
    CHECK(a.maximal_cells() == b.maximal_cells());
    CHECK(a.maximal_cells() != c.maximal_cells());  // 84 coin flips apart
}

TEST_CASE("random model validation") {
    CHECK_THROWS_AS(hdx::linial_meshulam(0, 5, 0.5, 1), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::linial_meshulam(2, 2, 0.5, 1), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::linial_meshulam(2, 5, 1.5, 1), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::linial_meshulam(2, 5, -0.1, 1), hdx::ValidationError);
}

TEST_CASE("cell inclusion rate matches the probability") {
    // 200 draws of G(8, 0.6): 56 candidate triangles each, so the total count
    // concentrates at 6720 with sigma ~51.8; a 4-sigma band is a stable test.
    std::int64_t total = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        total += hdx::linial_meshulam(2, 8, 0.6, seed).cell_count(2);
    double expected = 200.0 * 56.0 * 0.6;
    double sigma = std::sqrt(200.0 * 56.0 * 0.6 * 0.4);
    CHECK(std::abs(static_cast<double>(total) - expected) < 4 * sigma);
}

TEST_CASE("random disjoint families") {
    auto X = hdx::complete_skeleton(10, 2);
    auto fam = hdx::random_disjoint_family(X, {3, 2, 4}, 5);
    REQUIRE(fam.sets.size() == 3);
    CHECK(fam.sets[0].size() == 3);
    CHECK(fam.sets[1].size() == 2);
    CHECK(fam.sets[2].size() == 4);
    CHECK(hdx::window_disjoint(fam, 0, 2));
    std::set<int> all;
    for (const auto& s : fam.sets)
        for (int v : s) {
            CHECK(v >= 0);
            CHECK(v < 10);
            all.insert(v);
        }
    CHECK(all.size() == 9);

    auto again = hdx::random_disjoint_family(X, {3, 2, 4}, 5);
    CHECK(fam.sets == again.sets);
    CHECK_THROWS_AS(hdx::random_disjoint_family(X, {6, 6}, 1), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::random_disjoint_family(X, {-1}, 1), hdx::ValidationError);
}

TEST_CASE("splitmix reference values") {
    // Known stream for seed 1234567: pins the bit-exact algorithm the file
    // format and seeds depend on.
    hdx::SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
    hdx::SplitMix64 unit(0);
    double u = unit.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    hdx::SplitMix64 below(42);
    for (int i = 0; i < 100; ++i) CHECK(below.next_below(7) < 7);
}
