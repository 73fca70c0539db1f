#include "hdx/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hdx/errors.hpp"

namespace hdx {

namespace {

constexpr double kRelativeBoundTolerance = 1e-9;
constexpr double kIntegerTolerance = 1e-6;

void require_window(const VertexFamily& fam, int width, const char* what) {
    // width = sets per gallery cell; consecutive windows of that many sets
    // must be pairwise disjoint for F(window) membership to be well formed.
    int l = fam.top_index();
    for (int i = 0; i + width - 1 <= l; ++i)
        if (!window_disjoint(fam, i, i + width - 1))
            throw ValidationError(std::string(what) + ": sets " + std::to_string(i) +
                                  ".." + std::to_string(i + width - 1) +
                                  " must be pairwise disjoint");
}

// Map vertex -> index of the containing set within sets[from..to], or -1.
std::vector<int> window_assignment(int n, const VertexFamily& fam, int from, int to) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int s = from; s <= to; ++s)
        for (int v : fam.sets[static_cast<std::size_t>(s)])
            owner[static_cast<std::size_t>(v)] = s - from;
    return owner;
}

// Ordinals of j-cells with exactly one vertex in each of sets[from..to].
std::vector<std::size_t> window_members(const SimplicialComplex& X, int j,
                                        const VertexFamily& fam, int from, int to) {
    std::vector<std::size_t> members;
    if (j > X.dimension()) return members;
    std::vector<int> owner = window_assignment(X.vertex_count(), fam, from, to);
    const auto& level = X.cells(j);
    std::vector<char> hit(static_cast<std::size_t>(j) + 1);
    for (std::size_t ord = 0; ord < level.size(); ++ord) {
        std::fill(hit.begin(), hit.end(), 0);
        bool good = true;
        for (int v : level[ord]) {
            int s = owner[static_cast<std::size_t>(v)];
            if (s < 0 || hit[static_cast<std::size_t>(s)]) {
                good = false;
                break;
            }
            hit[static_cast<std::size_t>(s)] = 1;
        }
        if (good) members.push_back(ord);
    }
    return members;
}

int intersection_size(const Cell& a, const Cell& b) {
    int count = 0;
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i] < b[k]) ++i;
        else if (a[i] > b[k]) ++k;
        else { ++count; ++i; ++k; }
    }
    return count;
}

} // namespace

std::vector<std::size_t> VertexFamily::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.size());
    return out;
}

VertexFamily make_family(const SimplicialComplex& X, std::vector<std::vector<int>> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= X.vertex_count())
                throw ValidationError("family vertex " + std::to_string(s[i]) +
                                      " out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw ValidationError("family set repeats vertex " + std::to_string(s[i]));
        }
    }
    return VertexFamily{std::move(sets)};
}

bool window_disjoint(const VertexFamily& fam, int from, int to) {
    std::unordered_set<int> seen;
    for (int s = from; s <= to; ++s)
        for (int v : fam.sets[static_cast<std::size_t>(s)])
            if (!seen.insert(v).second) return false;
    return true;
}

Form characteristic_form(const SimplicialComplex& X,
                         const std::vector<std::vector<int>>& sets) {
    VertexFamily fam = make_family(X, sets);
    int j = fam.top_index();
    if (j < 0) throw ValidationError("characteristic form needs at least one set");
    if (!window_disjoint(fam, 0, j))
        throw ValidationError("characteristic form needs disjoint sets");

    Form form;
    form.dim = j;
    form.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(X.cell_count(j)));
    if (j > X.dimension()) return form;

    std::vector<int> owner = window_assignment(X.vertex_count(), fam, 0, j);
    const auto& level = X.cells(j);
    std::vector<int> assignment(static_cast<std::size_t>(j) + 1);
    for (std::size_t ord = 0; ord < level.size(); ++ord) {
        bool good = true;
        std::size_t w = 0;
        for (int v : level[ord]) {
            int s = owner[static_cast<std::size_t>(v)];
            if (s < 0) { good = false; break; }
            assignment[w++] = s;
        }
        if (!good) continue;
        // One vertex per set: the assignment must be a permutation of 0..j;
        // repeats make orientation_sign throw, so check first.
        std::vector<int> sorted = assignment;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = true;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) { permutation = false; break; }
        if (!permutation) continue;
        form.values(static_cast<Eigen::Index>(ord)) = orientation_sign(assignment);
    }
    return form;
}

Form projection_apply(const Form& mask, const Form& value) {
    if (mask.dim != value.dim || mask.values.size() != value.values.size())
        throw ValidationError("projection needs forms of matching dimension");
    // Support projection: the mask's signs must not enter, or the operator
    // would not be idempotent.
    return Form{mask.dim, mask.values.cwiseAbs().cwiseProduct(value.values)};
}

std::int64_t count_galleries_bruteforce(const SimplicialComplex& X, int j,
                                        const VertexFamily& fam) {
    int l = fam.top_index();
    if (j < 0 || j > l)
        throw ValidationError("gallery dimension must lie in [0, " + std::to_string(l) +
                              "], got " + std::to_string(j));
    require_window(fam, j + 1, "gallery count");
    if (j > X.dimension()) return 0;

    // Path counting across layers: layer i holds F(A_i..A_{i+j}), edges join
    // cells sharing a codimension-1 face.
    std::vector<std::size_t> layer = window_members(X, j, fam, 0, j);
    std::vector<std::int64_t> count(layer.size(), 1);
    const auto& level = X.cells(j);

    for (int i = 1; i + j <= l; ++i) {
        std::vector<std::size_t> next = window_members(X, j, fam, i, i + j);
        std::vector<std::int64_t> next_count(next.size(), 0);
        for (std::size_t t = 0; t < next.size(); ++t)
            for (std::size_t s = 0; s < layer.size(); ++s)
                if (intersection_size(level[layer[s]], level[next[t]]) == j)
                    next_count[t] += count[s];
        layer = std::move(next);
        count = std::move(next_count);
    }

    std::int64_t total = 0;
    for (std::int64_t c : count) total += c;
    return total;
}

std::int64_t count_galleries_operator(const SimplicialComplex& X, int j,
                                      const VertexFamily& fam, AdjacencyKind kind,
                                      const Eigen::VectorXd* diagonal_shift) {
    int l = fam.top_index();
    if (kind == AdjacencyKind::similar) {
        if (j < 0 || j >= l)
            throw ValidationError("similar-kind product needs 0 <= j < " + std::to_string(l));
    } else {
        if (j < 0 || j > l)
            throw ValidationError("pitchfork-kind product needs 0 <= j <= " + std::to_string(l));
    }
    require_window(fam, j + 1, "operator gallery count");
    // Dimension range enforced by adjacency_matrix below.
    Eigen::SparseMatrix<double> adjacency =
        adjacency_matrix(X, j, kind).entries.cast<double>();
    if (diagonal_shift && diagonal_shift->size() != adjacency.rows())
        throw ValidationError("diagonal shift must match the j-cell count");

    auto mask_for = [&X, &fam, j](int from) {
        std::vector<std::vector<int>> sets(
            fam.sets.begin() + from,
            fam.sets.begin() + from + j + 1);
        return characteristic_form(X, sets);
    };

    // The signed forms sit at the two ends only; interior windows act as
    // unsigned support projections. Each gallery then contributes the same
    // global sign: the end signs cancel against the adjacency entry signs
    // step by step, one window at a time.
    Eigen::VectorXd y = mask_for(l - j).values;
    for (int i = l - j - 1; i >= 0; --i) {
        Eigen::VectorXd z = adjacency * y;
        if (diagonal_shift) z += diagonal_shift->cwiseProduct(y);
        y = i > 0 ? mask_for(i).values.cwiseAbs().cwiseProduct(z).eval()
                  : std::move(z);
    }
    double value = std::abs(mask_for(0).values.dot(y));
    double rounded = std::round(value);
    if (std::abs(value - rounded) > kIntegerTolerance)
        throw NumericalError("operator gallery count is not an integer: " +
                             std::to_string(value));
    return static_cast<std::int64_t>(rounded);
}

std::int64_t cjl_constant(int j, int l) {
    if (j < 0 || j >= l)
        throw ValidationError("descent constant needs 0 <= j < l");
    // Table row a+1 holds c(a, .); the base row a = -1 is all zeros and the
    // recurrence c(a,b) = c(a-1,b) + (b-a)(1 + a c(a-1,a)) stays integer.
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(j) + 2,
        std::vector<std::int64_t>(static_cast<std::size_t>(l) + 1, 0));
    for (int a = 0; a <= j; ++a)
        for (int b = a + 1; b <= l; ++b)
            c[static_cast<std::size_t>(a) + 1][static_cast<std::size_t>(b)] =
                c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                static_cast<std::int64_t>(b - a) *
                    (1 + static_cast<std::int64_t>(a) *
                             c[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]);
    return c[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(l)];
}

std::int64_t c_constant(int d) {
    if (d < 1) throw ValidationError("top-dimension constant needs d >= 1");
    return cjl_constant(d - 1, d);
}

namespace {

std::int64_t window_cell_count(const SimplicialComplex& X, const VertexFamily& fam,
                               int from, int to) {
    return static_cast<std::int64_t>(
        window_members(X, to - from, fam, from, to).size());
}

void require_valid_cert(const ExpanderCertificate& cert, int expected_j) {
    if (cert.j != expected_j)
        throw ValidationError("certificate is for dimension " + std::to_string(cert.j) +
                              ", expected " + std::to_string(expected_j));
    if (!cert.valid)
        throw ValidationError("not an expander at dimension " + std::to_string(cert.j) +
                              " (eps = " + std::to_string(cert.eps) + ")");
}

} // namespace

DescentReport descent_check(const SimplicialComplex& X, int j, const VertexFamily& fam,
                            const ExpanderCertificate& below, const ExpanderCertificate& at,
                            double tol) {
    int l = fam.top_index();
    if (j < 0 || j >= l)
        throw ValidationError("descent needs 0 <= j < " + std::to_string(l));
    require_valid_cert(below, j - 1);
    require_valid_cert(at, j);
    // The descent estimate only needs each run of j+2 consecutive sets
    // disjoint, not the whole family.
    require_window(fam, j + 2, "descent");

    DescentReport report;
    report.upper_count = count_galleries_bruteforce(X, j + 1, fam);
    report.lower_count = count_galleries_bruteforce(X, j, fam);
    report.predicted =
        std::pow(at.k / below.k, l - j) * static_cast<double>(report.lower_count);
    report.deviation = std::abs(static_cast<double>(report.upper_count) - report.predicted);

    double head = static_cast<double>(window_cell_count(X, fam, 0, j));
    double tail = static_cast<double>(window_cell_count(X, fam, l - j, l));
    double scale = std::pow(at.k, l - j) * std::sqrt(head * tail);
    report.bound = (l - j) * (at.eps + below.eps) * scale;
    double eps = std::max(at.eps, below.eps);
    report.improved_bound =
        (l - j) * 2.0 * eps * std::pow((1.0 + eps) / 2.0, l - j - 1) * scale;

    auto within = [tol](double dev, double bnd) {
        return dev <= bnd * (1.0 + kRelativeBoundTolerance) + tol;
    };
    report.ok = within(report.deviation, report.bound) &&
                within(report.deviation, report.improved_bound);
    return report;
}

MixingReport from_j_to_l_check(const SimplicialComplex& X, int j, const VertexFamily& fam,
                               const std::vector<ExpanderCertificate>& certs, double tol) {
    int l = fam.top_index();
    if (j < 0 || j >= l)
        throw ValidationError("estimate needs 0 <= j < " + std::to_string(l));
    if (!window_disjoint(fam, 0, l))
        throw ValidationError("estimate needs pairwise disjoint sets");
    if (certs.size() < static_cast<std::size_t>(j) + 1)
        throw ValidationError("estimate needs certificates for dimensions 0.." +
                              std::to_string(j));
    for (int i = 0; i <= j; ++i)
        require_valid_cert(certs[static_cast<std::size_t>(i)], i);

    MixingReport report;
    report.certs.assign(certs.begin(), certs.begin() + j + 1);
    report.set_sizes = fam.sizes();

    std::int64_t size_product = 1;
    std::size_t max_size = 0;
    for (const auto& s : fam.sets) {
        size_product *= static_cast<std::int64_t>(s.size());
        max_size = std::max(max_size, s.size());
        if (s.empty()) report.degenerate = true;
    }

    double k_prefix = 1;  // k_0 ... k_{j-1}
    double eps_sum = 0;
    for (int i = 0; i < j; ++i) k_prefix *= certs[static_cast<std::size_t>(i)].k;
    for (int i = 0; i <= j; ++i) eps_sum += certs[static_cast<std::size_t>(i)].eps;
    double k_power = std::pow(certs[static_cast<std::size_t>(j)].k, l - j);

    report.observed = count_galleries_bruteforce(X, j + 1, fam);
    report.main_term = k_prefix * k_power /
                       std::pow(static_cast<double>(X.vertex_count()), l) *
                       static_cast<double>(size_product);
    report.bound = static_cast<double>(cjl_constant(j, l)) * k_prefix * k_power *
                   eps_sum * static_cast<double>(max_size);
    report.slack =
        report.bound - std::abs(static_cast<double>(report.observed) - report.main_term);
    report.ok = report.slack >= -(report.bound * kRelativeBoundTolerance + tol);
    return report;
}

MixingReport mixing_check(const SimplicialComplex& X, const VertexFamily& fam,
                          const std::vector<ExpanderCertificate>& certs, double tol) {
    int d = X.dimension();
    if (d < 1)
        throw ValidationError("mixing needs a complex of dimension at least 1");
    if (fam.top_index() != d)
        throw ValidationError("mixing needs exactly " + std::to_string(d + 1) +
                              " sets, got " + std::to_string(fam.top_index() + 1));
    return from_j_to_l_check(X, d - 1, fam, certs, tol);
}

} // namespace hdx
