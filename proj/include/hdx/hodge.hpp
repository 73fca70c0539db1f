#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hdx/complex.hpp"

namespace hdx {

using SparseIntMatrix = Eigen::SparseMatrix<std::int64_t>;
using DenseIntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer operator between canonical cell bases. Boundary matrices have
/// entries in {-1, 0, +1}; Laplacians and adjacency operators stay integer.
struct OperatorMatrix {
    SparseIntMatrix entries;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
    std::int64_t nonzeros() const { return entries.nonZeros(); }

    DenseIntMatrix dense() const { return DenseIntMatrix(entries); }
    Eigen::MatrixXd dense_real() const { return DenseIntMatrix(entries).cast<double>(); }
    OperatorMatrix transpose() const { return {SparseIntMatrix(entries.transpose())}; }
};

/// Real-valued j-form in the canonical basis of X^j (value at the
/// positively oriented sorted cell).
struct Form {
    int dim = 0;
    Eigen::VectorXd values;
};

enum class LaplacianKind { upper, lower, full };
enum class AdjacencyKind { similar, pitchfork };

/// |X^{j-1}| x |X^j| signed incidence matrix of faces; 0 <= j <= dim.
/// The coboundary is its transpose.
OperatorMatrix boundary_matrix(const SimplicialComplex& X, int j);
OperatorMatrix coboundary_matrix(const SimplicialComplex& X, int j);

/// upper: -1 <= j <= dim-1; lower: 0 <= j <= dim; full: 0 <= j <= dim-1.
OperatorMatrix laplacian(const SimplicialComplex& X, int j, LaplacianKind kind);

/// Signed adjacency operators. pitchfork: 0 <= j <= dim;
/// similar: 0 <= j <= dim-1 (it needs cofaces one dimension up).
OperatorMatrix adjacency_matrix(const SimplicialComplex& X, int j, AdjacencyKind kind);

/// Diagonal of cell degrees; 0 <= j <= dim.
OperatorMatrix degree_matrix(const SimplicialComplex& X, int j);

struct IdentityCheck {
    std::string name;
    int j;
    bool pass;
};

/// Exact integer identities tying the matrix builders to the combinatorial
/// definitions: chain property, Laplacian/adjacency decompositions, degree
/// bookkeeping. All comparisons are integer equalities.
std::vector<IdentityCheck> verify_identities(const SimplicialComplex& X);

} // namespace hdx
