#include "hdx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hdx/errors.hpp"

namespace hdx {

namespace {

constexpr double kRankThreshold = 1e-10;   // relative to the largest singular value
constexpr double kZeroEigenTolerance = 1e-8;
constexpr double kErrorNormSlack = 1e-8;

} // namespace

Eigen::VectorXd eigen_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw ValidationError("eigendecomposition needs a square matrix");
    if (m.rows() == 0) return Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver did not converge");
    return solver.eigenvalues();
}

Eigen::Index matrix_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Column-pivoted QR, not BDCSVD: Eigen 3.4.0's BDCSVD reads out of
    // bounds when singular values repeat heavily, which boundary matrices
    // of complete skeletons trigger.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    qr.setThreshold(kRankThreshold);
    return qr.rank();
}

Eigen::Index boundary_rank(const SimplicialComplex& X, int j) {
    if (j < 0 || j > X.dimension()) return 0;
    return matrix_rank(boundary_matrix(X, j).dense_real());
}

std::vector<double> nontrivial_spectrum(const SimplicialComplex& X, int j) {
    if (j < -1 || j > X.dimension() - 1)
        throw ValidationError("nontrivial spectrum needs dimension in [-1, " +
                              std::to_string(X.dimension() - 1) + "], got " +
                              std::to_string(j));
    Eigen::VectorXd eigs = eigen_symmetric(laplacian(X, j, LaplacianKind::upper).dense_real());
    auto trivial = static_cast<std::size_t>(boundary_rank(X, j));
    // The upper Laplacian vanishes on the coboundary space, whose dimension
    // is the rank of the boundary map; dropping that many smallest
    // eigenvalues removes exactly the trivial zeros.
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(eigs.size()) - trivial);
    for (std::size_t i = trivial; i < static_cast<std::size_t>(eigs.size()); ++i)
        out.push_back(eigs(static_cast<Eigen::Index>(i)));
    return out;
}

ExpanderCertificate certify(const SimplicialComplex& X, int j, std::optional<double> k) {
    std::vector<double> spectrum = nontrivial_spectrum(X, j);
    ExpanderCertificate cert;
    cert.j = j;
    if (k && *k <= 0) throw ValidationError("certificate scale k must be positive");

    if (spectrum.empty()) {
        // Nothing to certify; bounds quantified over the nontrivial spectrum
        // hold vacuously. Flagged so consumers cannot mistake it for a
        // measured certificate.
        cert.k = k.value_or(1.0);
        cert.eps = 0.0;
        cert.valid = true;
        cert.vacuous = true;
        return cert;
    }

    // Negative values at roundoff scale are noise from the eigensolver.
    for (double& v : spectrum) v = std::max(v, 0.0);

    if (k) {
        cert.k = *k;
        double eps = 0;
        for (double v : spectrum) eps = std::max(eps, std::abs(v / *k - 1.0));
        cert.eps = eps;
    } else {
        double lo = spectrum.front(), hi = spectrum.back();
        if (hi <= 0) {
            // All-zero spectrum: |0/k - 1| = 1 for every k, so no choice helps.
            cert.k = 1.0;
            cert.eps = 1.0;
        } else {
            cert.k = (lo + hi) / 2.0;
            cert.eps = (hi - lo) / (hi + lo);
        }
    }
    cert.valid = cert.eps < 1.0;
    return cert;
}

std::vector<ExpanderCertificate> certify_all(const SimplicialComplex& X) {
    std::vector<ExpanderCertificate> certs;
    for (int j = 0; j <= X.dimension() - 1; ++j) certs.push_back(certify(X, j));
    return certs;
}

namespace {

// Valid for j in [-1, dimension]; the public betti() restricts the range.
int betti_any(const SimplicialComplex& X, int j) {
    auto cells = static_cast<Eigen::Index>(X.cell_count(j));
    return static_cast<int>(cells - boundary_rank(X, j) - boundary_rank(X, j + 1));
}

} // namespace

int betti(const SimplicialComplex& X, int j) {
    if (j < 0 || j > X.dimension())
        throw ValidationError("Betti number needs dimension in [0, " +
                              std::to_string(X.dimension()) + "], got " + std::to_string(j));
    return betti_any(X, j);
}

SpectralSummary summarize(const SimplicialComplex& X) {
    SpectralSummary out;
    for (int j = -1; j <= X.dimension() - 1; ++j) {
        DimensionSpectrum row;
        row.j = j;
        Eigen::VectorXd eigs =
            eigen_symmetric(laplacian(X, j, LaplacianKind::upper).dense_real());
        row.eigenvalues.assign(eigs.data(), eigs.data() + eigs.size());
        row.trivial_zero_count = static_cast<std::size_t>(boundary_rank(X, j));
        row.nontrivial = nontrivial_spectrum(X, j);
        row.betti = betti_any(X, j);
        row.lambda = row.nontrivial.empty()
                         ? 0.0
                         : std::accumulate(row.nontrivial.begin(), row.nontrivial.end(), 0.0) /
                               static_cast<double>(row.nontrivial.size());
        row.cert = certify(X, j);
        out.push_back(std::move(row));
    }
    return out;
}

CountLemmaReport verify_count_lemma(const SimplicialComplex& X) {
    CountLemmaReport report;
    const int d = X.dimension();
    if (d < 0) {
        report.reason = "empty complex";
        return report;
    }
    for (int j = 0; j < d; ++j) {
        if (betti_any(X, j) != 0) {
            report.reason = "nonzero Betti number at dimension " + std::to_string(j);
            return report;
        }
    }
    report.applicable = true;

    // lambda[m+1] = average nontrivial eigenvalue at dimension m, m = -1..d-1.
    std::vector<double> lambda(static_cast<std::size_t>(d) + 1);
    for (int m = -1; m <= d - 1; ++m) {
        std::vector<double> spec = nontrivial_spectrum(X, m);
        lambda[static_cast<std::size_t>(m + 1)] =
            spec.empty() ? 0.0
                         : std::accumulate(spec.begin(), spec.end(), 0.0) /
                               static_cast<double>(spec.size());
    }
    auto lam = [&lambda](int m) { return lambda[static_cast<std::size_t>(m + 1)]; };

    for (int m = 0; m <= d; ++m) {
        CountLemmaRow row;
        row.m = m;
        if (m < d) {
            row.has_degree = true;
            row.avg_degree_formula = lam(m) * (1.0 - (m + 1) / lam(m - 1));
            row.avg_degree_observed = static_cast<double>(m + 2) *
                                      static_cast<double>(X.cell_count(m + 1)) /
                                      static_cast<double>(X.cell_count(m));
        }
        double count = lam(m - 1) / (m + 1);
        for (int j = -1; j <= m - 2; ++j) count *= lam(j) / (j + 2) - 1.0;
        row.count_formula = count;
        row.count_observed = static_cast<double>(X.cell_count(m));
        report.rows.push_back(row);
    }
    return report;
}

ErrorOperatorReport error_operator_norm(const SimplicialComplex& X, int j,
                                        const ExpanderCertificate& below,
                                        const ExpanderCertificate& at) {
    if (j < 0 || j > X.dimension() - 1)
        throw ValidationError("error operator needs dimension in [0, " +
                              std::to_string(X.dimension() - 1) + "], got " +
                              std::to_string(j));
    if (!below.valid || !at.valid)
        throw ValidationError("error operator bound needs valid certificates at both dimensions");
    if (below.j != j - 1 || at.j != j)
        throw ValidationError("certificate dimensions must be j-1 and j");

    Eigen::MatrixXd e = at.k * Eigen::MatrixXd::Identity(
                                    static_cast<Eigen::Index>(X.cell_count(j)),
                                    static_cast<Eigen::Index>(X.cell_count(j)));
    e -= laplacian(X, j, LaplacianKind::upper).dense_real();
    e -= (at.k / below.k) * laplacian(X, j, LaplacianKind::lower).dense_real();

    Eigen::VectorXd eigs = eigen_symmetric(e);
    ErrorOperatorReport report;
    report.norm = eigs.size() == 0 ? 0.0
                                   : std::max(std::abs(eigs(0)), std::abs(eigs(eigs.size() - 1)));
    report.bound = at.k * (below.eps + at.eps);
    report.ok = report.norm <= report.bound + kErrorNormSlack;
    return report;
}

namespace {

// Sorted lists compare elementwise.
bool multisets_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

} // namespace

std::vector<SpectralCheck> verify_spectral_invariants(const SimplicialComplex& X) {
    std::vector<SpectralCheck> out;
    const int d = X.dimension();

    // Nonzero lower spectrum at j matches nonzero upper spectrum at j-1:
    // both are singular values squared of the same boundary map.
    for (int j = 1; j <= d; ++j) {
        Eigen::VectorXd lower =
            eigen_symmetric(laplacian(X, j, LaplacianKind::lower).dense_real());
        Eigen::VectorXd upper =
            eigen_symmetric(laplacian(X, j - 1, LaplacianKind::upper).dense_real());
        std::vector<double> a, b;
        for (Eigen::Index i = 0; i < lower.size(); ++i)
            if (lower(i) > kZeroEigenTolerance) a.push_back(lower(i));
        for (Eigen::Index i = 0; i < upper.size(); ++i)
            if (upper(i) > kZeroEigenTolerance) b.push_back(upper(i));
        out.push_back({"lower_upper_spectrum_duality", j, multisets_match(a, b, 1e-6)});
    }

    // Zero sits in the nontrivial spectrum exactly when homology survives.
    for (int j = 0; j <= d - 1; ++j) {
        std::vector<double> spec = nontrivial_spectrum(X, j);
        bool has_zero = !spec.empty() && spec.front() < kZeroEigenTolerance;
        out.push_back({"nontrivial_zero_iff_betti", j, has_zero == (betti_any(X, j) > 0)});
    }

    return out;
}

} // namespace hdx
