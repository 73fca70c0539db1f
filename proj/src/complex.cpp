#include "hdx/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hdx/errors.hpp"

namespace hdx {

namespace {

std::string cell_to_string(const Cell& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "}";
}

} // namespace

int orientation_sign(const std::vector<int>& ordered) {
    // Counting inversions; quadratic is fine at cell sizes.
    int sign = 1;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t k = i + 1; k < ordered.size(); ++k) {
            if (ordered[i] == ordered[k])
                throw ValidationError("repeated vertex in oriented cell " +
                                      cell_to_string(ordered));
            if (ordered[i] > ordered[k]) sign = -sign;
        }
    }
    return sign;
}

int induced_sign(const Cell& cell, const Cell& face) {
    if (face.size() + 1 != cell.size())
        throw ValidationError("face " + cell_to_string(face) +
                              " is not a codimension-1 face of " + cell_to_string(cell));
    // The single vertex of `cell` missing from `face` marks the sign position.
    std::size_t i = 0;
    while (i < face.size() && cell[i] == face[i]) ++i;
    if (!std::includes(cell.begin(), cell.end(), face.begin(), face.end()))
        throw ValidationError("face " + cell_to_string(face) +
                              " is not contained in " + cell_to_string(cell));
    return (i % 2 == 0) ? 1 : -1;
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Cell>& facets) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");

    std::vector<std::set<Cell>> by_size;  // index = vertex count of the cell
    auto ensure_size = [&by_size](std::size_t k) {
        if (by_size.size() <= k) by_size.resize(k + 1);
    };

    ensure_size(1);
    by_size[0].insert(Cell{});
    for (int v = 0; v < n; ++v) by_size[1].insert(Cell{v});

    for (const Cell& facet : facets) {
        if (facet.empty()) throw ValidationError("facets must be nonempty");
        Cell sorted = facet;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= n)
                throw ValidationError("vertex id " + std::to_string(sorted[i]) +
                                      " out of range [0, " + std::to_string(n) + ")");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw ValidationError("duplicate vertex " + std::to_string(sorted[i]) +
                                      " in facet " + cell_to_string(facet));
        }
        ensure_size(sorted.size());
        by_size[sorted.size()].insert(sorted);
    }

    // Close downward, one dimension at a time.
    for (std::size_t k = by_size.size(); k-- > 2;) {
        for (const Cell& cell : by_size[k]) {
            Cell face(cell.size() - 1);
            for (std::size_t skip = 0; skip < cell.size(); ++skip) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != skip) face[w++] = cell[i];
                by_size[k - 1].insert(face);
            }
        }
    }

    SimplicialComplex X;
    X.n_ = n;
    X.cells_.reserve(by_size.size());
    for (const auto& level : by_size)
        X.cells_.emplace_back(level.begin(), level.end());
    while (X.cells_.size() > 1 && X.cells_.back().empty()) X.cells_.pop_back();
    X.dim_ = static_cast<int>(X.cells_.size()) - 2;
    X.build_coface_lists();
    return X;
}

void SimplicialComplex::build_coface_lists() {
    cofaces_.assign(cells_.size(), {});
    for (std::size_t level = 0; level < cells_.size(); ++level)
        cofaces_[level].resize(cells_[level].size());
    for (std::size_t level = 1; level < cells_.size(); ++level) {
        const auto& upper = cells_[level];
        for (std::size_t t = 0; t < upper.size(); ++t) {
            const Cell& cell = upper[t];
            Cell face(cell.size() - 1);
            for (std::size_t skip = 0; skip < cell.size(); ++skip) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != skip) face[w++] = cell[i];
                cofaces_[level - 1][ordinal(face)].push_back(t);
            }
        }
    }
}

const std::vector<Cell>& SimplicialComplex::cells(int j) const {
    if (j < -1 || j > dim_)
        throw ValidationError("dimension " + std::to_string(j) + " outside [-1, " +
                              std::to_string(dim_) + "]");
    return cells_[static_cast<std::size_t>(j + 1)];
}

std::size_t SimplicialComplex::cell_count(int j) const {
    if (j < -1 || j > dim_) return 0;
    return cells_[static_cast<std::size_t>(j + 1)].size();
}

bool SimplicialComplex::contains(const Cell& cell) const {
    int j = cell_dim(cell);
    if (j < -1 || j > dim_) return false;
    const auto& level = cells_[static_cast<std::size_t>(j + 1)];
    return std::binary_search(level.begin(), level.end(), cell);
}

std::size_t SimplicialComplex::ordinal(const Cell& cell) const {
    int j = cell_dim(cell);
    if (j >= -1 && j <= dim_) {
        const auto& level = cells_[static_cast<std::size_t>(j + 1)];
        auto it = std::lower_bound(level.begin(), level.end(), cell);
        if (it != level.end() && *it == cell)
            return static_cast<std::size_t>(it - level.begin());
    }
    throw ValidationError("cell " + cell_to_string(cell) + " not in complex");
}

int SimplicialComplex::degree(const Cell& cell) const {
    std::size_t ord = ordinal(cell);
    int j = cell_dim(cell);
    return static_cast<int>(cofaces_[static_cast<std::size_t>(j + 1)][ord].size());
}

const std::vector<std::size_t>& SimplicialComplex::cofaces(int j, std::size_t ord) const {
    if (j < -1 || j > dim_)
        throw ValidationError("dimension " + std::to_string(j) + " outside [-1, " +
                              std::to_string(dim_) + "]");
    const auto& level = cofaces_[static_cast<std::size_t>(j + 1)];
    if (ord >= level.size()) throw ValidationError("cell ordinal out of range");
    return level[ord];
}

Relation SimplicialComplex::relation(const OrientedCell& a, const OrientedCell& b) const {
    if (cell_dim(a.cell) != cell_dim(b.cell))
        throw ValidationError("adjacency requires equal-dimensional cells");
    if (a.sign != 1 && a.sign != -1)
        throw ValidationError("orientation sign must be +1 or -1");
    if (b.sign != 1 && b.sign != -1)
        throw ValidationError("orientation sign must be +1 or -1");
    int j = cell_dim(a.cell);
    if (j <= 0 && (a.sign != 1 || b.sign != 1))
        throw ValidationError("cells of dimension <= 0 only admit sign +1");
    if (!contains(a.cell) || !contains(b.cell))
        throw ValidationError("adjacency requires cells of the complex");

    if (j < 0 || a.cell == b.cell) return Relation::none;

    Cell shared;
    std::set_intersection(a.cell.begin(), a.cell.end(), b.cell.begin(), b.cell.end(),
                          std::back_inserter(shared));
    if (static_cast<int>(shared.size()) != j) return Relation::none;

    // Equal induced orientation on the shared codimension-1 face.
    if (a.sign * induced_sign(a.cell, shared) != b.sign * induced_sign(b.cell, shared))
        return Relation::none;

    Cell merged;
    std::set_union(a.cell.begin(), a.cell.end(), b.cell.begin(), b.cell.end(),
                   std::back_inserter(merged));
    return contains(merged) ? Relation::similar : Relation::pitchfork_only;
}

std::vector<Cell> SimplicialComplex::maximal_cells() const {
    std::vector<Cell> out;
    for (int j = 0; j <= dim_; ++j) {
        const auto& level = cells_[static_cast<std::size_t>(j + 1)];
        for (std::size_t i = 0; i < level.size(); ++i)
            if (cofaces_[static_cast<std::size_t>(j + 1)][i].empty())
                out.push_back(level[i]);
    }
    return out;
}

} // namespace hdx
