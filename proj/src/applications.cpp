#include "hdx/applications.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"

namespace hdx {

namespace {

constexpr double kIdealEpsTolerance = 1e-8;
constexpr double kBarycentricTolerance = 1e-12;
constexpr int kChromaticVertexGuard = 20;

void require_cert_run(const std::vector<ExpanderCertificate>& certs, int d,
                      const char* what) {
    if (certs.size() < static_cast<std::size_t>(d))
        throw ValidationError(std::string(what) + " needs certificates for dimensions 0.." +
                              std::to_string(d - 1));
    for (int i = 0; i < d; ++i) {
        const auto& c = certs[static_cast<std::size_t>(i)];
        if (c.j != i)
            throw ValidationError(std::string(what) + ": certificate " + std::to_string(i) +
                                  " is for dimension " + std::to_string(c.j));
        if (!c.valid)
            throw ValidationError(std::string(what) + ": not an expander at dimension " +
                                  std::to_string(i));
    }
}

double eps_total(const std::vector<ExpanderCertificate>& certs, int d) {
    double sum = 0;
    for (int i = 0; i < d; ++i) sum += certs[static_cast<std::size_t>(i)].eps;
    return sum;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

ChromaticBound chromatic_lower_bound(int d, const std::vector<ExpanderCertificate>& certs) {
    if (d < 1) throw ValidationError("chromatic bound needs dimension >= 1");
    require_cert_run(certs, d, "chromatic bound");
    double sum = eps_total(certs, d);
    ChromaticBound bound;
    if (sum <= 0) {
        bound.unbounded = true;
        bound.value = std::numeric_limits<double>::infinity();
        return bound;
    }
    double inner = static_cast<double>(c_constant(d)) * sum;
    bound.value = 1.0 / ((d + 1) * std::pow(inner, 1.0 / d));
    return bound;
}

std::optional<int> chromatic_number_exact(const SimplicialComplex& X, int max_colors,
                                          std::optional<int> top_dim) {
    const int n = X.vertex_count();
    if (n > kChromaticVertexGuard)
        throw ValidationError("exact chromatic search is guarded to " +
                              std::to_string(kChromaticVertexGuard) + " vertices");
    int t = top_dim.value_or(X.dimension());
    if (t < 0 || t > X.dimension() || X.cell_count(t) == 0) return 1;
    if (t == 0) return std::nullopt;  // single vertices are always one-colored
    if (max_colors < 0) max_colors = std::max(n, 1);

    const auto& constraints = X.cells(t);

    // Most-constrained vertices first; ties by id keep the search deterministic.
    std::vector<int> incidence(static_cast<std::size_t>(n), 0);
    for (const Cell& c : constraints)
        for (int v : c) ++incidence[static_cast<std::size_t>(v)];
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&incidence](int a, int b) {
        if (incidence[static_cast<std::size_t>(a)] != incidence[static_cast<std::size_t>(b)])
            return incidence[static_cast<std::size_t>(a)] > incidence[static_cast<std::size_t>(b)];
        return a < b;
    });

    // Constraints indexed by vertex for incremental checks.
    std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < constraints.size(); ++ci)
        for (int v : constraints[ci]) touching[static_cast<std::size_t>(v)].push_back(ci);

    std::vector<int> color(static_cast<std::size_t>(n), -1);

    // A partial coloring stays viable while no constraint is fully colored
    // in one color.
    auto consistent = [&](int v) {
        for (std::size_t ci : touching[static_cast<std::size_t>(v)]) {
            bool mono = true;
            int base = color[static_cast<std::size_t>(v)];
            for (int u : constraints[ci]) {
                if (color[static_cast<std::size_t>(u)] != base) { mono = false; break; }
            }
            if (mono) return false;
        }
        return true;
    };

    for (int colors = 1; colors <= max_colors; ++colors) {
        std::function<bool(std::size_t, int)> place = [&](std::size_t idx, int used) -> bool {
            if (idx == order.size()) return true;
            int v = order[idx];
            // Allowing only one fresh color prunes color permutations.
            int limit = std::min(colors - 1, used);
            for (int c = 0; c <= limit; ++c) {
                color[static_cast<std::size_t>(v)] = c;
                if (consistent(v) && place(idx + 1, std::max(used, c + 1))) return true;
            }
            color[static_cast<std::size_t>(v)] = -1;
            return false;
        };
        if (place(0, 0)) return colors;
    }
    return std::nullopt;
}

OverlapBound overlap_bound(int d, double pach_constant,
                           const std::vector<ExpanderCertificate>& certs) {
    if (d < 1) throw ValidationError("overlap bound needs dimension >= 1");
    if (!(pach_constant > 0) || pach_constant > 1)
        throw ValidationError("selection constant must lie in (0, 1]");
    require_cert_run(certs, d, "overlap bound");

    double factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;
    double bracket = std::pow(pach_constant / (d + 1), d) -
                     static_cast<double>(c_constant(d)) * eps_total(certs, d);
    OverlapBound bound;
    bound.value = pach_constant * factorial / std::pow(2.0, d) * bracket;
    bound.vacuous = bracket <= 0;
    return bound;
}

namespace {

bool simplex_contains(const Eigen::MatrixXd& coords, const Cell& cell,
                      const Eigen::VectorXd& point) {
    const int d = static_cast<int>(point.size());
    Eigen::MatrixXd edges(d, d);
    Eigen::VectorXd base = coords.row(cell[0]).transpose();
    for (int i = 0; i < d; ++i)
        edges.col(i) = coords.row(cell[static_cast<std::size_t>(i) + 1]).transpose() - base;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
    if (!lu.isInvertible()) return false;  // degenerate placement never covers
    Eigen::VectorXd bary = lu.solve(point - base);
    double sum = 0;
    for (int i = 0; i < d; ++i) {
        if (bary(i) < -kBarycentricTolerance) return false;
        sum += bary(i);
    }
    return sum <= 1.0 + kBarycentricTolerance;
}

} // namespace

double embedding_max_coverage(const SimplicialComplex& X, const Eigen::MatrixXd& coords,
                              int cell_samples, int random_points, SplitMix64& rng) {
    const int d = X.dimension();
    if (d < 1) throw ValidationError("overlap needs a complex of dimension >= 1");
    if (coords.rows() != X.vertex_count() || coords.cols() != d)
        throw ValidationError("coordinates must be one row per vertex in dimension d");
    const auto& top = X.cells(d);
    const auto m = static_cast<std::int64_t>(top.size());

    std::vector<Eigen::VectorXd> candidates;
    if (m <= cell_samples) {
        for (const Cell& c : top) {
            Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
            for (int v : c) centroid += coords.row(v).transpose();
            candidates.push_back(centroid / static_cast<double>(c.size()));
        }
    } else {
        for (int s = 0; s < cell_samples; ++s) {
            const Cell& c = top[static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(m)))];
            Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
            for (int v : c) centroid += coords.row(v).transpose();
            candidates.push_back(centroid / static_cast<double>(c.size()));
        }
    }
    Eigen::VectorXd lo = coords.colwise().minCoeff().transpose();
    Eigen::VectorXd hi = coords.colwise().maxCoeff().transpose();
    for (int s = 0; s < random_points; ++s) {
        Eigen::VectorXd p(d);
        for (int i = 0; i < d; ++i) p(i) = lo(i) + rng.next_unit() * (hi(i) - lo(i));
        candidates.push_back(p);
    }

    double best = 0;
    for (const auto& point : candidates) {
        std::int64_t covered = 0;
        for (const Cell& c : top)
            if (simplex_contains(coords, c, point)) ++covered;
        best = std::max(best, static_cast<double>(covered) / static_cast<double>(m));
    }
    return best;
}

OverlapEstimate overlap_estimate(const SimplicialComplex& X, int embeddings,
                                 std::uint64_t seed, int cell_samples, int random_points) {
    if (embeddings < 1) throw ValidationError("need at least one sampled embedding");
    const int d = X.dimension();
    if (d < 1) throw ValidationError("overlap needs a complex of dimension >= 1");

    SplitMix64 master(seed);
    OverlapEstimate estimate;
    estimate.value = 1.0;
    for (int e = 0; e < embeddings; ++e) {
        SplitMix64 rng(master.next());
        Eigen::MatrixXd coords(X.vertex_count(), d);
        for (Eigen::Index r = 0; r < coords.rows(); ++r)
            for (Eigen::Index c = 0; c < coords.cols(); ++c) coords(r, c) = rng.next_unit();
        double coverage = embedding_max_coverage(X, coords, cell_samples, random_points, rng);
        estimate.per_embedding.push_back(coverage);
        estimate.value = std::min(estimate.value, coverage);
    }
    return estimate;
}

IdealExpanderReport ideal_expander_check(const SimplicialComplex& X, int families,
                                         std::uint64_t seed) {
    IdealExpanderReport report;
    const int d = X.dimension();
    const int n = X.vertex_count();

    report.ideal = true;
    std::vector<ExpanderCertificate> certs;
    for (int j = 0; j <= d - 1; ++j) {
        ExpanderCertificate cert = certify(X, j);
        certs.push_back(cert);
        report.eps.push_back(cert.eps);
        if (cert.eps > kIdealEpsTolerance || !cert.valid) report.ideal = false;
    }

    report.complete_skeleton = true;
    for (int j = 0; j <= d; ++j)
        if (static_cast<std::int64_t>(X.cell_count(j)) != binomial(n, j + 1))
            report.complete_skeleton = false;

    if (!report.ideal) return report;

    // Exact mixing: with all eps zero the gallery counts collapse to the
    // product of set sizes, at every level.
    report.mixing_exact = true;
    if (d >= 1 && n >= 2) {
        SplitMix64 master(seed);
        for (int f = 0; f < families; ++f) {
            int l = 1 + static_cast<int>(master.next_below(static_cast<std::uint64_t>(d)));
            auto cap = static_cast<std::uint64_t>(n / (l + 1));
            std::vector<int> sizes;
            for (int i = 0; i <= l; ++i)
                sizes.push_back(1 + static_cast<int>(master.next_below(cap)));
            VertexFamily fam = random_disjoint_family(X, sizes, master.next());

            std::int64_t product = 1;
            for (const auto& s : fam.sets) product *= static_cast<std::int64_t>(s.size());

            for (int j = 0; j <= l; ++j) {
                std::int64_t count = count_galleries_bruteforce(X, j, fam);
                double expected = static_cast<double>(product);
                if (j >= 1) {
                    // Size-product form scaled by the certificate values; for
                    // complete skeletons every scale is n and it reduces to
                    // the plain product.
                    double scale = 1;
                    for (int i = 0; i + 2 <= j; ++i) scale *= certs[static_cast<std::size_t>(i)].k;
                    scale *= std::pow(certs[static_cast<std::size_t>(j - 1)].k, l - j + 1);
                    expected = scale / std::pow(static_cast<double>(n), l) *
                               static_cast<double>(product);
                }
                if (std::abs(static_cast<double>(count) - expected) > 1e-6)
                    report.mixing_exact = false;
            }
            ++report.families_checked;
        }
    }
    return report;
}

} // namespace hdx
