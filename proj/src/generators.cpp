#include "hdx/generators.hpp"

#include <algorithm>
#include <numeric>

#include "hdx/errors.hpp"
#include "hdx/rng.hpp"

namespace hdx {

namespace {

// Visits all (k+1)-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> cell(static_cast<std::size_t>(k) + 1);
    std::iota(cell.begin(), cell.end(), 0);
    for (;;) {
        fn(cell);
        int i = k;
        while (i >= 0 && cell[static_cast<std::size_t>(i)] == n - 1 - (k - i)) --i;
        if (i < 0) break;
        ++cell[static_cast<std::size_t>(i)];
        for (int t = i + 1; t <= k; ++t)
            cell[static_cast<std::size_t>(t)] = cell[static_cast<std::size_t>(t - 1)] + 1;
    }
}

} // namespace

SimplicialComplex complete_skeleton(int n, int m) {
    if (m < 0 || m >= n)
        throw ValidationError("complete skeleton needs 0 <= m < n");
    std::vector<Cell> facets;
    for_each_subset(n, m, [&facets](const Cell& cell) { facets.push_back(cell); });
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex linial_meshulam(int d, int n, double p, std::uint64_t seed) {
    if (d < 1) throw ValidationError("model needs dimension >= 1");
    if (n <= d) throw ValidationError("model needs n > d");
    if (!(p >= 0.0) || p > 1.0) throw ValidationError("probability must lie in [0, 1]");

    std::vector<Cell> facets;
    for_each_subset(n, d - 1, [&facets](const Cell& cell) { facets.push_back(cell); });
    SplitMix64 rng(seed);
    for_each_subset(n, d, [&facets, &rng, p](const Cell& cell) {
        if (rng.next_unit() < p) facets.push_back(cell);
    });
    return SimplicialComplex::from_facets(n, facets);
}

bool is_complete_skeleton(const SimplicialComplex& X) {
    const int n = X.vertex_count();
    const int d = X.dimension();
    for (int j = 0; j <= d; ++j) {
        std::int64_t expected = 1;
        for (int i = 0; i <= j; ++i) expected = expected * (n - i) / (i + 1);
        if (static_cast<std::int64_t>(X.cell_count(j)) != expected) return false;
    }
    return true;
}

VertexFamily random_disjoint_family(const SimplicialComplex& X,
                                    const std::vector<int>& sizes, std::uint64_t seed) {
    const int n = X.vertex_count();
    std::int64_t total = 0;
    for (int s : sizes) {
        if (s < 0) throw ValidationError("set sizes must be nonnegative");
        total += s;
    }
    if (total > n)
        throw ValidationError("set sizes sum to " + std::to_string(total) +
                              " but only " + std::to_string(n) + " vertices exist");

    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    SplitMix64 rng(seed);
    std::size_t drawn = 0;
    std::vector<std::vector<int>> sets;
    for (int s : sizes) {
        std::vector<int> set;
        for (int t = 0; t < s; ++t) {
            std::size_t idx = drawn + static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(n) - drawn));
            std::swap(pool[drawn], pool[idx]);
            set.push_back(pool[drawn]);
            ++drawn;
        }
        std::sort(set.begin(), set.end());
        sets.push_back(std::move(set));
    }
    return make_family(X, sets);
}

} // namespace hdx
