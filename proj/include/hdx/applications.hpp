#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdx/mixing.hpp"
#include "hdx/rng.hpp"

namespace hdx {

struct ChromaticBound {
    double value = 1;
    bool unbounded = false;  // all eps vanish; the method gives no finite bound
};

/// Lower bound 1 / ((d+1) (c_d * sum eps)^(1/d)) on the chromatic number of
/// a d-dimensional complex with valid certificates at 0..d-1.
ChromaticBound chromatic_lower_bound(int d, const std::vector<ExpanderCertificate>& certs);

/// Exact smallest color count such that no top-dimensional cell is all one
/// color, by backtracking; std::nullopt when no proper coloring with at
/// most max_colors colors exists. Guarded to n <= 20. `top_dim` overrides
/// which dimension counts as monochromatic-forbidden (defaults to the
/// complex dimension).
std::optional<int> chromatic_number_exact(const SimplicialComplex& X,
                                          int max_colors = -1,
                                          std::optional<int> top_dim = std::nullopt);

struct OverlapBound {
    double value = 0;
    bool vacuous = false;  // bracket went non-positive
};

/// Geometric overlap bound (pach_constant * d!/2^d) [ (pach_constant/(d+1))^d
/// - c_d * sum eps ]. pach_constant must lie in (0, 1].
OverlapBound overlap_bound(int d, double pach_constant,
                           const std::vector<ExpanderCertificate>& certs);

/// Fraction of top-cells covered by the best candidate point for one fixed
/// straight-line placement of the vertices (row v of `coords`). Candidates
/// are centroids of up to `cell_samples` top-cells plus `random_points`
/// draws from the bounding box.
double embedding_max_coverage(const SimplicialComplex& X, const Eigen::MatrixXd& coords,
                              int cell_samples, int random_points, SplitMix64& rng);

struct OverlapEstimate {
    double value = 1;                    // min over sampled embeddings
    std::vector<double> per_embedding;
};

/// Heuristic min-max overlap estimate over seeded random embeddings;
/// neither a certified upper nor lower bound.
OverlapEstimate overlap_estimate(const SimplicialComplex& X, int embeddings,
                                 std::uint64_t seed, int cell_samples = 500,
                                 int random_points = 500);

struct IdealExpanderReport {
    bool ideal = false;            // every eps at most 1e-8
    std::vector<double> eps;       // per dimension 0..d-1
    bool complete_skeleton = false;
    bool mixing_exact = false;     // gallery counts equal the size products
    int families_checked = 0;
};

/// Ideal expanders have exact mixing and are exactly the complete skeletons:
/// check the spectra, the count identity on random disjoint families, and
/// the combinatorial completeness.
IdealExpanderReport ideal_expander_check(const SimplicialComplex& X,
                                         int families = 20, std::uint64_t seed = 0);

} // namespace hdx
