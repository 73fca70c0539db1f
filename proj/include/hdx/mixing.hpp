#pragma once

#include <cstdint>
#include <vector>

#include "hdx/spectral.hpp"

namespace hdx {

/// Ordered vertex sets A_0 .. A_l. Disjointness is not a structural
/// invariant: each counting operation checks the windows it needs (a
/// j-gallery only requires every j+1 consecutive sets to be disjoint).
struct VertexFamily {
    std::vector<std::vector<int>> sets;  // each strictly increasing

    int top_index() const { return static_cast<int>(sets.size()) - 1; }
    std::vector<std::size_t> sizes() const;
};

/// Validate vertex ranges and in-set uniqueness; sorts each set.
VertexFamily make_family(const SimplicialComplex& X,
                         std::vector<std::vector<int>> sets);

/// True when sets[from..to] are pairwise disjoint.
bool window_disjoint(const VertexFamily& fam, int from, int to);

/// The +-1/0 form supported on cells with exactly one vertex in each set;
/// the sign is the parity of the assignment of sorted vertices to sets.
Form characteristic_form(const SimplicialComplex& X,
                         const std::vector<std::vector<int>>& sets);

/// Restriction to the mask's support (idempotent; the mask's signs do not
/// enter).
Form projection_apply(const Form& mask, const Form& value);

/// Number of j-galleries threading the family: sequences of j-cells, the
/// i-th having one vertex in each of A_i..A_{i+j}, consecutive cells
/// sharing a codimension-1 face. Layered path-count dynamic programming.
std::int64_t count_galleries_bruteforce(const SimplicialComplex& X, int j,
                                        const VertexFamily& fam);

/// Gallery counts via adjacency-operator products: the similar kind yields
/// the (j+1)-gallery count, the pitchfork kind the j-gallery count. An
/// optional diagonal shift (size |X^j|) added to the adjacency operator
/// must not change the result when windows are disjoint. Throws
/// NumericalError if the product is not an integer to 1e-6.
std::int64_t count_galleries_operator(const SimplicialComplex& X, int j,
                                      const VertexFamily& fam, AdjacencyKind kind,
                                      const Eigen::VectorXd* diagonal_shift = nullptr);

/// Constant c_{j,l} of the descent recurrence
/// c_{j,l} = c_{j-1,l} + (l-j)(1 + j c_{j-1,j}), base c_{-1,l} = 0.
std::int64_t cjl_constant(int j, int l);

/// Top-dimension constant c_d = c_{d-1,d}.
std::int64_t c_constant(int d);

struct DescentReport {
    std::int64_t upper_count = 0;  // (j+1)-galleries
    std::int64_t lower_count = 0;  // j-galleries
    double predicted = 0;          // (k_j/k_{j-1})^(l-j) * lower_count
    double deviation = 0;          // |upper_count - predicted|
    double bound = 0;
    double improved_bound = 0;     // 2eps((1+eps)/2)^(l-j-1) variant
    bool ok = false;               // deviation within both bounds
};

/// Check the descent estimate relating (j+1)- and j-gallery counts. Needs
/// valid certificates at j-1 and j and disjoint windows of j+2 sets.
DescentReport descent_check(const SimplicialComplex& X, int j, const VertexFamily& fam,
                            const ExpanderCertificate& below, const ExpanderCertificate& at,
                            double tol = 1e-6);

struct MixingReport {
    std::int64_t observed = 0;
    double main_term = 0;
    double bound = 0;
    double slack = 0;      // bound - |observed - main_term|
    std::vector<ExpanderCertificate> certs;
    std::vector<std::size_t> set_sizes;
    bool ok = false;       // slack >= -tol
    bool degenerate = false;  // some set empty
};

/// Estimate |F^{j+1}(A_0..A_l)| by the product of certificate scales, with
/// the c_{j,l} error bound. Sets must be pairwise disjoint and certificates
/// valid for dimensions 0..j.
MixingReport from_j_to_l_check(const SimplicialComplex& X, int j,
                               const VertexFamily& fam,
                               const std::vector<ExpanderCertificate>& certs,
                               double tol = 1e-6);

/// Top-dimensional mixing: observed |F(A_0..A_d)| against the density
/// heuristic, error controlled by c_d and the certificate defects.
MixingReport mixing_check(const SimplicialComplex& X, const VertexFamily& fam,
                          const std::vector<ExpanderCertificate>& certs,
                          double tol = 1e-6);

} // namespace hdx
