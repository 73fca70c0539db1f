#include "hdx/hodge.hpp"

#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx {

namespace {

using Triplet = Eigen::Triplet<std::int64_t>;

OperatorMatrix from_triplets(Eigen::Index rows, Eigen::Index cols,
                             const std::vector<Triplet>& triplets) {
    SparseIntMatrix m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    return {std::move(m)};
}

void check_range(const SimplicialComplex& X, int j, int lo, int hi, const char* what) {
    if (j < lo || j > hi)
        throw ValidationError(std::string(what) + " needs dimension in [" +
                              std::to_string(lo) + ", " + std::to_string(hi) +
                              "], got " + std::to_string(j) +
                              " (complex dimension " + std::to_string(X.dimension()) + ")");
}

} // namespace

OperatorMatrix boundary_matrix(const SimplicialComplex& X, int j) {
    check_range(X, j, 0, X.dimension(), "boundary");
    const auto& upper = X.cells(j);
    std::vector<Triplet> triplets;
    triplets.reserve(upper.size() * (static_cast<std::size_t>(j) + 1));
    Cell face(static_cast<std::size_t>(j));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const Cell& cell = upper[col];
        for (std::size_t skip = 0; skip < cell.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < cell.size(); ++i)
                if (i != skip) face[w++] = cell[i];
            std::int64_t sign = (skip % 2 == 0) ? 1 : -1;
            triplets.emplace_back(static_cast<Eigen::Index>(X.ordinal(face)),
                                  static_cast<Eigen::Index>(col), sign);
        }
    }
    return from_triplets(static_cast<Eigen::Index>(X.cell_count(j - 1)),
                         static_cast<Eigen::Index>(X.cell_count(j)), triplets);
}

OperatorMatrix coboundary_matrix(const SimplicialComplex& X, int j) {
    return boundary_matrix(X, j).transpose();
}

OperatorMatrix laplacian(const SimplicialComplex& X, int j, LaplacianKind kind) {
    switch (kind) {
        case LaplacianKind::upper: {
            check_range(X, j, -1, X.dimension() - 1, "upper laplacian");
            SparseIntMatrix b = boundary_matrix(X, j + 1).entries;
            SparseIntMatrix m = (b * SparseIntMatrix(b.transpose())).pruned();
            m.makeCompressed();
            return {std::move(m)};
        }
        case LaplacianKind::lower: {
            check_range(X, j, 0, X.dimension(), "lower laplacian");
            SparseIntMatrix b = boundary_matrix(X, j).entries;
            SparseIntMatrix m = (SparseIntMatrix(b.transpose()) * b).pruned();
            m.makeCompressed();
            return {std::move(m)};
        }
        case LaplacianKind::full: {
            check_range(X, j, 0, X.dimension() - 1, "full laplacian");
            SparseIntMatrix m = (laplacian(X, j, LaplacianKind::upper).entries +
                                 laplacian(X, j, LaplacianKind::lower).entries).pruned();
            m.makeCompressed();
            return {std::move(m)};
        }
    }
    throw ValidationError("unknown laplacian kind");
}

OperatorMatrix adjacency_matrix(const SimplicialComplex& X, int j, AdjacencyKind kind) {
    if (kind == AdjacencyKind::similar)
        check_range(X, j, 0, X.dimension() - 1, "similar adjacency");
    else
        check_range(X, j, 0, X.dimension(), "pitchfork adjacency");

    const auto n_j = static_cast<Eigen::Index>(X.cell_count(j));
    std::vector<Triplet> triplets;

    if (kind == AdjacencyKind::similar) {
        // Two j-cells are ~ neighbors exactly when their union is a cell, so
        // enumerate (j+1)-cells and pair up their faces. In the canonical
        // basis the entry is the product of boundary signs, negated: the two
        // faces of a common coface induce opposite orientations on the
        // shared codimension-1 cell.
        const auto& upper = X.cells(j + 1);
        Cell face(static_cast<std::size_t>(j) + 1);
        std::vector<Eigen::Index> ords(upper.empty() ? 0 : upper.front().size());
        for (const Cell& cell : upper) {
            for (std::size_t skip = 0; skip < cell.size(); ++skip) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != skip) face[w++] = cell[i];
                ords[skip] = static_cast<Eigen::Index>(X.ordinal(face));
            }
            for (std::size_t a = 0; a < cell.size(); ++a)
                for (std::size_t b = 0; b < cell.size(); ++b) {
                    if (a == b) continue;
                    std::int64_t v = ((a + b) % 2 == 0) ? -1 : 1;
                    triplets.emplace_back(ords[a], ords[b], v);
                }
        }
    } else {
        // ⋔ pairs all distinct cofaces of each codimension-1 cell; the union
        // of such a pair need not lie in the complex. Distinct j-cells share
        // at most one (j-1)-face, so no pair is generated twice.
        const auto& faces = X.cells(j - 1);
        const auto& level = X.cells(j);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const auto& up = X.cofaces(j - 1, f);
            for (std::size_t a : up)
                for (std::size_t b : up) {
                    if (a == b) continue;
                    std::int64_t v =
                        static_cast<std::int64_t>(induced_sign(level[a], faces[f])) *
                        induced_sign(level[b], faces[f]);
                    triplets.emplace_back(static_cast<Eigen::Index>(a),
                                          static_cast<Eigen::Index>(b), v);
                }
        }
    }
    return from_triplets(n_j, n_j, triplets);
}

OperatorMatrix degree_matrix(const SimplicialComplex& X, int j) {
    check_range(X, j, 0, X.dimension(), "degree matrix");
    const auto n_j = static_cast<Eigen::Index>(X.cell_count(j));
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(n_j));
    for (Eigen::Index i = 0; i < n_j; ++i) {
        auto deg = static_cast<std::int64_t>(X.cofaces(j, static_cast<std::size_t>(i)).size());
        if (deg != 0) triplets.emplace_back(i, i, deg);
    }
    return from_triplets(n_j, n_j, triplets);
}

namespace {

bool same_entries(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    SparseIntMatrix diff = a - b;
    diff.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
    return diff.nonZeros() == 0;
}

} // namespace

std::vector<IdentityCheck> verify_identities(const SimplicialComplex& X) {
    std::vector<IdentityCheck> out;
    const int d = X.dimension();

    for (int j = 0; j + 1 <= d; ++j) {
        SparseIntMatrix prod = (boundary_matrix(X, j).entries *
                                boundary_matrix(X, j + 1).entries).pruned();
        prod.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
        out.push_back({"boundary_of_boundary_zero", j, prod.nonZeros() == 0});
    }

    for (int j = 0; j <= d; ++j) {
        SparseIntMatrix expected = adjacency_matrix(X, j, AdjacencyKind::pitchfork).entries;
        SparseIntMatrix eye(expected.rows(), expected.cols());
        eye.setIdentity();
        expected += SparseIntMatrix(static_cast<std::int64_t>(j + 1) * eye);
        out.push_back({"lower_laplacian_decomposition", j,
                       same_entries(laplacian(X, j, LaplacianKind::lower).entries, expected)});
    }

    for (int j = 0; j + 1 <= d; ++j) {
        SparseIntMatrix expected = degree_matrix(X, j).entries -
                                   adjacency_matrix(X, j, AdjacencyKind::similar).entries;
        out.push_back({"upper_laplacian_decomposition", j,
                       same_entries(laplacian(X, j, LaplacianKind::upper).entries, expected)});
    }

    for (int j = 0; j + 1 <= d; ++j) {
        SparseIntMatrix full = laplacian(X, j, LaplacianKind::full).entries;
        SparseIntMatrix sum = laplacian(X, j, LaplacianKind::upper).entries +
                              laplacian(X, j, LaplacianKind::lower).entries;
        bool pass = same_entries(full, sum);
        const auto& level = X.cells(j);
        for (std::size_t i = 0; pass && i < level.size(); ++i) {
            auto expected = static_cast<std::int64_t>(X.degree(level[i])) + j + 1;
            pass = full.coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) ==
                   expected;
        }
        out.push_back({"full_laplacian_sum_and_diagonal", j, pass});
    }

    for (int j = -1; j + 1 <= d; ++j) {
        std::int64_t degree_sum = 0;
        for (const Cell& c : X.cells(j)) degree_sum += X.degree(c);
        bool pass = degree_sum ==
                    static_cast<std::int64_t>(j + 2) *
                        static_cast<std::int64_t>(X.cell_count(j + 1));
        std::int64_t tr = 0;
        SparseIntMatrix up = laplacian(X, j, LaplacianKind::upper).entries;
        for (Eigen::Index i = 0; i < up.rows(); ++i) tr += up.coeff(i, i);
        out.push_back({"degree_double_counting_and_trace", j, pass && tr == degree_sum});
    }

    return out;
}

} // namespace hdx
