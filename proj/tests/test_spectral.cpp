#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/hodge.hpp"
#include "hdx/spectral.hpp"

using hdx::SimplicialComplex;

namespace {

// Exact rank over GF(p). Boundary matrices have entries in {-1, 0, 1} and the
// test corpus is small, so the modular rank matches the rational rank.
constexpr std::int64_t kPrime = 2147483647;

std::int64_t mod_inverse(std::int64_t a) {
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1, base = a % kPrime, e = kPrime - 2;
    if (base < 0) base += kPrime;
    while (e > 0) {
        if (e & 1) result = static_cast<__int128>(result) * base % kPrime;
        base = static_cast<__int128>(base) * base % kPrime;
        e >>= 1;
    }
    return result;
}

std::int64_t gfp_rank(const hdx::DenseIntMatrix& m) {
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        a[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::int64_t v = m(r, c) % kPrime;
            if (v < 0) v += kPrime;
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(m.cols()) && rank < a.size();
         ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        std::int64_t inv = mod_inverse(a[rank][col]);
        for (std::size_t c = col; c < a[rank].size(); ++c)
            a[rank][c] = static_cast<__int128>(a[rank][c]) * inv % kPrime;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            std::int64_t f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c) {
                a[r][c] = (a[r][c] - static_cast<__int128>(f) * a[rank][c]) % kPrime;
                if (a[r][c] < 0) a[r][c] += kPrime;
            }
        }
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

SimplicialComplex hollow_square() {
    return SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

SimplicialComplex bipartite_k33() {
    std::vector<hdx::Cell> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) edges.push_back({a, b});
    return SimplicialComplex::from_facets(6, edges);
}

bool spectra_match(const std::vector<double>& got, const std::vector<double>& expected,
                   double tol = 1e-8) {
    if (got.size() != expected.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - expected[i]) > tol) return false;
    return true;
}

} // namespace

TEST_CASE("numeric rank agrees with exact modular rank") {
    // K_7^(4) at j=3 has singular values 0 and sqrt(7) with multiplicities
    // 15 and 20, the repeated-value pattern that breaks some SVD backends.
    std::vector<SimplicialComplex> corpus = {
        hdx::complete_skeleton(6, 2), hdx::complete_skeleton(7, 4), hollow_square(),
        bipartite_k33(), hdx::linial_meshulam(2, 8, 0.5, 3),
        hdx::linial_meshulam(3, 7, 0.6, 4)};
    for (const auto& X : corpus) {
        for (int j = 0; j <= X.dimension(); ++j) {
            auto b = hdx::boundary_matrix(X, j);
            CHECK(hdx::boundary_rank(X, j) == gfp_rank(b.dense()));
        }
    }
    CHECK(hdx::boundary_rank(hdx::complete_skeleton(7, 4), 3) == 20);
}

TEST_CASE("nontrivial spectra of small fixtures") {
    CHECK(spectra_match(hdx::nontrivial_spectrum(hdx::complete_skeleton(4, 1), 0), {4, 4, 4}));
    CHECK(spectra_match(hdx::nontrivial_spectrum(hdx::complete_skeleton(3, 1), 0), {3, 3}));
    CHECK(spectra_match(hdx::nontrivial_spectrum(hollow_square(), 0), {2, 2, 4}));
    CHECK(spectra_match(hdx::nontrivial_spectrum(bipartite_k33(), 0), {3, 3, 3, 3, 6}));
    CHECK(spectra_match(hdx::nontrivial_spectrum(hdx::complete_skeleton(7, 2), -1), {7}));
    CHECK_THROWS_AS(hdx::nontrivial_spectrum(hollow_square(), 1), hdx::ValidationError);
}

TEST_CASE("betti numbers") {
    CHECK(hdx::betti(hollow_square(), 0) == 0);
    CHECK(hdx::betti(hollow_square(), 1) == 1);
    auto two_cycles = SimplicialComplex::from_facets(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(hdx::betti(two_cycles, 0) == 1);  // reduced: one extra component
    CHECK(hdx::betti(two_cycles, 1) == 2);
    auto full = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
    for (int j = 0; j <= 3; ++j) CHECK(hdx::betti(full, j) == 0);
}

TEST_CASE("certificates with a given center") {
    auto square = hollow_square();
    auto cert = hdx::certify(square, 0, 3.0);
    CHECK(cert.k == 3.0);
    CHECK(cert.eps == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(cert.valid);
    CHECK_FALSE(cert.vacuous);
    CHECK_THROWS_AS(hdx::certify(square, 0, 0.0), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::certify(square, 0, -2.0), hdx::ValidationError);
}

TEST_CASE("midpoint certificate minimizes eps") {
    auto cert = hdx::certify(hollow_square(), 0);
    CHECK(cert.k == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cert.eps == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(cert.valid);

    auto complete = hdx::certify(hdx::complete_skeleton(6, 2), 1);
    CHECK(complete.k == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(complete.eps < 1e-10);
}

TEST_CASE("zero in the nontrivial spectrum invalidates the certificate") {
    // A filled triangle plus a hollow square: the square's cycle is harmonic
    // at j=1, so the spectrum reaches down to zero and eps hits 1.
    auto X = SimplicialComplex::from_facets(
        7, {{0, 1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    auto cert = hdx::certify(X, 1);
    CHECK(cert.eps == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(cert.valid);
}

TEST_CASE("certify_all covers dimensions below the top") {
    auto X = hdx::complete_skeleton(5, 2);
    auto certs = hdx::certify_all(X);
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].j == 0);
    CHECK(certs[1].j == 1);
    for (const auto& c : certs) {
        CHECK(c.valid);
        CHECK(c.eps < 1e-10);
        CHECK(c.k == doctest::Approx(5.0));
    }
}

TEST_CASE("summary rows carry spectra and certificates") {
    auto X = hdx::complete_skeleton(4, 1);
    auto summary = hdx::summarize(X);
    REQUIRE(summary.size() == 2);  // j = -1 and j = 0
    CHECK(summary[0].j == -1);
    CHECK(spectra_match(summary[0].nontrivial, {4}));
    CHECK(summary[1].j == 0);
    CHECK(summary[1].trivial_zero_count == 1);
    CHECK(summary[1].betti == 0);
    CHECK(summary[1].lambda == doctest::Approx(4.0));
    CHECK(summary[1].cert.valid);
}

TEST_CASE("count lemma on the complete graph") {
    auto report = hdx::verify_count_lemma(hdx::complete_skeleton(4, 1));
    REQUIRE(report.applicable);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].m == 0);
    CHECK(report.rows[0].count_formula == doctest::Approx(4.0));
    CHECK(report.rows[0].avg_degree_formula == doctest::Approx(3.0));
    CHECK(report.rows[0].avg_degree_observed == doctest::Approx(3.0));
    CHECK(report.rows[1].m == 1);
    CHECK(report.rows[1].count_formula == doctest::Approx(6.0));
    CHECK(report.rows[1].count_observed == doctest::Approx(6.0));
}

TEST_CASE("count lemma matches eigenvalue averages on the hollow square") {
    auto report = hdx::verify_count_lemma(hollow_square());
    REQUIRE(report.applicable);
    CHECK(report.rows[0].avg_degree_formula == doctest::Approx(2.0));
    CHECK(report.rows[1].count_formula == doctest::Approx(4.0));
}

TEST_CASE("count lemma reports nonvanishing homology") {
    auto two_cycles = SimplicialComplex::from_facets(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto report = hdx::verify_count_lemma(two_cycles);
    CHECK_FALSE(report.applicable);
    CHECK(report.reason.find("dimension 0") != std::string::npos);
}

TEST_CASE("error operator vanishes on complete graphs") {
    auto X = hdx::complete_skeleton(6, 1);
    auto below = hdx::certify(X, -1);
    CHECK(below.k == doctest::Approx(6.0));
    CHECK(below.eps == 0.0);
    auto at = hdx::certify(X, 0);
    auto report = hdx::error_operator_norm(X, 0, below, at);
    CHECK(report.norm <= 1e-10);
    CHECK(report.ok);
}

TEST_CASE("error operator bound is tight on the hollow square") {
    auto X = hollow_square();
    auto report = hdx::error_operator_norm(X, 0, hdx::certify(X, -1), hdx::certify(X, 0));
    CHECK(report.bound == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.norm == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.ok);
}

TEST_CASE("error operator rejects mismatched certificates") {
    auto X = hdx::complete_skeleton(5, 2);
    auto c0 = hdx::certify(X, 0);
    auto c1 = hdx::certify(X, 1);
    CHECK_THROWS_AS(hdx::error_operator_norm(X, 1, c1, c1), hdx::ValidationError);
    hdx::ExpanderCertificate bad = c0;
    bad.valid = false;
    CHECK_THROWS_AS(hdx::error_operator_norm(X, 1, bad, c1), hdx::ValidationError);
}

TEST_CASE("spectral invariants hold on mixed fixtures") {
    std::vector<SimplicialComplex> corpus = {
        hdx::complete_skeleton(5, 2), hollow_square(), bipartite_k33(),
        hdx::linial_meshulam(2, 8, 0.6, 9)};
    for (const auto& X : corpus)
        for (const auto& check : hdx::verify_spectral_invariants(X)) {
            INFO(check.name << " at j=" << check.j);
            CHECK(check.pass);
        }
}
