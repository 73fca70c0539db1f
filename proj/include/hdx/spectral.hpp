#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdx/hodge.hpp"

namespace hdx {

/// Eigenvalues of a symmetric matrix, ascending. Throws NumericalError when
/// the solver fails to converge, ValidationError on non-square input.
Eigen::VectorXd eigen_symmetric(const Eigen::MatrixXd& m);

/// Rank by column-pivoted QR; pivots below 1e-10 times the largest count
/// as zero.
Eigen::Index matrix_rank(const Eigen::MatrixXd& m);

/// Rank of the boundary map at dimension j; 0 for j = -1 and j > dimension.
Eigen::Index boundary_rank(const SimplicialComplex& X, int j);

/// Spectrum of the upper Laplacian with the trivial zeros (one per rank of
/// the boundary map) removed; ascending. j = -1 yields {n}.
std::vector<double> nontrivial_spectrum(const SimplicialComplex& X, int j);

struct ExpanderCertificate {
    int j = 0;
    double k = 0;
    double eps = 0;
    bool valid = false;   // eps < 1
    bool vacuous = false; // no nontrivial spectrum at this dimension
};

/// Certify the nontrivial spectrum against [k(1-eps), k(1+eps)]. With k
/// given, eps = max |lambda/k - 1|; otherwise the midpoint enclosure
/// k = (min+max)/2, eps = (max-min)/(max+min), which minimizes eps. An
/// all-zero nontrivial spectrum certifies as (k=1, eps=1), invalid. An
/// empty one yields a vacuous certificate with eps = 0.
ExpanderCertificate certify(const SimplicialComplex& X, int j,
                            std::optional<double> k = std::nullopt);

/// Midpoint certificates for j = 0 .. dimension-1.
std::vector<ExpanderCertificate> certify_all(const SimplicialComplex& X);

/// Reduced Betti number: |X^j| - rank boundary_j - rank boundary_{j+1}.
int betti(const SimplicialComplex& X, int j);

struct DimensionSpectrum {
    int j;
    std::vector<double> eigenvalues;   // full spectrum of the upper Laplacian
    std::size_t trivial_zero_count;    // rank of the boundary map at j
    std::vector<double> nontrivial;
    int betti;
    double lambda;                     // mean of nontrivial (0 when empty)
    ExpanderCertificate cert;
};

/// Per-dimension spectral data for j = -1 .. dimension-1.
using SpectralSummary = std::vector<DimensionSpectrum>;
SpectralSummary summarize(const SimplicialComplex& X);

struct CountLemmaRow {
    int m;
    // Average degree comparison only applies below the top dimension.
    bool has_degree = false;
    double avg_degree_formula = 0;
    double avg_degree_observed = 0;
    double count_formula = 0;
    double count_observed = 0;
};

struct CountLemmaReport {
    bool applicable = false;
    std::string reason;
    std::vector<CountLemmaRow> rows;  // m = 0 .. dimension when applicable
};

/// Compare the eigenvalue-average formulas for cell degrees and counts
/// against direct enumeration. Requires vanishing Betti numbers below the
/// top dimension; failures of that precondition are reported, not thrown.
CountLemmaReport verify_count_lemma(const SimplicialComplex& X);

struct ErrorOperatorReport {
    double norm = 0;   // spectral norm of k_j I - upper - (k_j/k_{j-1}) lower
    double bound = 0;  // k_j (eps_{j-1} + eps_j)
    bool ok = false;   // norm <= bound + 1e-8
};

/// Norm of the approximation error operator at dimension j, given valid
/// certificates at j-1 and j (j=0 pairs with the certificate (k=n, eps=0)
/// that dimension -1 always carries).
ErrorOperatorReport error_operator_norm(const SimplicialComplex& X, int j,
                                        const ExpanderCertificate& below,
                                        const ExpanderCertificate& at);

struct SpectralCheck {
    std::string name;
    int j;
    bool pass;
};

/// Tolerance-based spectral invariants: lower/upper spectrum duality and
/// the zero-eigenvalue vs Betti correspondence.
std::vector<SpectralCheck> verify_spectral_invariants(const SimplicialComplex& X);

} // namespace hdx
