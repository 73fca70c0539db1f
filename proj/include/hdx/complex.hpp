#pragma once

#include <cstddef>
#include <vector>

namespace hdx {

/// Vertex ids of a cell, strictly increasing. The empty cell (dimension -1)
/// is the empty vector.
using Cell = std::vector<int>;

inline int cell_dim(const Cell& c) { return static_cast<int>(c.size()) - 1; }

/// A cell with a presentation sign relative to the sorted vertex order.
/// Cells of dimension <= 0 only admit sign +1.
struct OrientedCell {
    Cell cell;
    int sign = 1;
};

enum class Relation { similar, pitchfork_only, none };

/// Parity (+1/-1) of the permutation sorting `ordered`.
int orientation_sign(const std::vector<int>& ordered);

/// Sign with which `face` appears in the boundary of `cell`: (-1)^i where i
/// is the position within `cell` of the vertex missing from `face`.
int induced_sign(const Cell& cell, const Cell& face);

/// A finite simplicial complex on vertices [0, n). Cells are stored per
/// dimension in lexicographic order; the empty cell and all n vertices are
/// always present. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the facets, plus all n vertices and the empty
    /// cell. Facets must be nonempty and use vertex ids below n.
    static SimplicialComplex from_facets(int n, const std::vector<Cell>& facets);

    int vertex_count() const { return n_; }
    int dimension() const { return dim_; }

    /// Cells of dimension j, lexicographically sorted. Requires -1 <= j <= dimension().
    const std::vector<Cell>& cells(int j) const;

    /// |X^j|; zero outside [-1, dimension()].
    std::size_t cell_count(int j) const;

    bool contains(const Cell& cell) const;

    /// Position of `cell` within cells(dim); throws if absent.
    std::size_t ordinal(const Cell& cell) const;

    /// Number of (dim+1)-cells containing `cell`; throws if absent.
    int degree(const Cell& cell) const;

    /// Ordinals into cells(j+1) of the cofaces of the cell at `ord` in cells(j).
    const std::vector<std::size_t>& cofaces(int j, std::size_t ord) const;

    /// Adjacency of two equal-dimensional oriented cells of the complex:
    /// pitchfork when they share a codimension-1 face with equal induced
    /// orientation, similar when additionally their union is a cell.
    Relation relation(const OrientedCell& a, const OrientedCell& b) const;

    /// Cells contained in no higher cell, sorted by (dimension, lex).
    /// Rebuilding from_facets(vertex_count(), maximal_cells()) reproduces
    /// the complex.
    std::vector<Cell> maximal_cells() const;

private:
    int n_ = 0;
    int dim_ = -1;
    // Index j+1 holds dimension j, so index 0 is the lone empty cell.
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<std::vector<std::size_t>>> cofaces_;

    void build_coface_lists();
};

} // namespace hdx
