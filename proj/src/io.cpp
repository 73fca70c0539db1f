#include "hdx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hdx/errors.hpp"

namespace hdx {

SimplicialComplex complex_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("facets"))
        throw ValidationError("complex document needs \"n\" and \"facets\"");
    if (!doc["n"].is_number_integer())
        throw ValidationError("\"n\" must be an integer");
    if (!doc["facets"].is_array())
        throw ValidationError("\"facets\" must be an array of vertex lists");
    int n = doc["n"].get<int>();
    std::vector<Cell> facets;
    for (const auto& entry : doc["facets"]) {
        if (!entry.is_array())
            throw ValidationError("each facet must be an array of vertices");
        Cell cell;
        for (const auto& v : entry) {
            if (!v.is_number_integer())
                throw ValidationError("facet vertices must be integers");
            cell.push_back(v.get<int>());
        }
        facets.push_back(std::move(cell));
    }
    return SimplicialComplex::from_facets(n, facets);
}

nlohmann::json complex_to_json(const SimplicialComplex& X) {
    std::vector<Cell> facets = X.maximal_cells();
    std::sort(facets.begin(), facets.end(), [](const Cell& a, const Cell& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    nlohmann::json doc;
    doc["n"] = X.vertex_count();
    doc["facets"] = facets;
    return doc;
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return complex_from_json(doc);
}

void save_complex(const SimplicialComplex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << complex_to_json(X).dump(2) << '\n';
}

void write_matrix(const OperatorMatrix& m, std::ostream& out) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (int col = 0; col < m.entries.outerSize(); ++col)
        for (SparseIntMatrix::InnerIterator it(m.entries, col); it; ++it)
            out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

std::string matrix_to_string(const OperatorMatrix& m) {
    std::ostringstream out;
    write_matrix(m, out);
    return out.str();
}

nlohmann::json to_json(const ExpanderCertificate& cert) {
    return {{"j", cert.j},
            {"k", cert.k},
            {"eps", cert.eps},
            {"valid", cert.valid},
            {"vacuous", cert.vacuous}};
}

nlohmann::json to_json(const DimensionSpectrum& spectrum) {
    return {{"j", spectrum.j},
            {"eigenvalues", spectrum.eigenvalues},
            {"trivial_zero_count", spectrum.trivial_zero_count},
            {"nontrivial", spectrum.nontrivial},
            {"betti", spectrum.betti},
            {"lambda", spectrum.lambda},
            {"cert", to_json(spectrum.cert)}};
}

nlohmann::json to_json(const SpectralSummary& summary) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& spectrum : summary) arr.push_back(to_json(spectrum));
    return arr;
}

nlohmann::json to_json(const CountLemmaReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json entry = {{"m", row.m},
                                {"count_formula", row.count_formula},
                                {"count_observed", row.count_observed}};
        if (row.has_degree) {
            entry["avg_degree_formula"] = row.avg_degree_formula;
            entry["avg_degree_observed"] = row.avg_degree_observed;
        }
        rows.push_back(std::move(entry));
    }
    return {{"applicable", report.applicable}, {"reason", report.reason}, {"rows", rows}};
}

nlohmann::json to_json(const ErrorOperatorReport& report) {
    return {{"norm", report.norm}, {"bound", report.bound}, {"ok", report.ok}};
}

nlohmann::json to_json(const DescentReport& report) {
    return {{"upper_count", report.upper_count},
            {"lower_count", report.lower_count},
            {"predicted", report.predicted},
            {"deviation", report.deviation},
            {"bound", report.bound},
            {"improved_bound", report.improved_bound},
            {"ok", report.ok}};
}

nlohmann::json to_json(const MixingReport& report) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& cert : report.certs)
        certs.push_back({{"j", cert.j}, {"k", cert.k}, {"eps", cert.eps}});
    return {{"observed", report.observed},
            {"main_term", report.main_term},
            {"bound", report.bound},
            {"slack", report.slack},
            {"certs", certs},
            {"sets", report.set_sizes},
            {"ok", report.ok},
            {"degenerate", report.degenerate}};
}

nlohmann::json to_json(const ChromaticBound& bound) {
    nlohmann::json doc;
    doc["unbounded"] = bound.unbounded;
    if (bound.unbounded)
        doc["value"] = nullptr;  // +infinity is not representable in JSON
    else
        doc["value"] = bound.value;
    return doc;
}

nlohmann::json to_json(const OverlapBound& bound) {
    return {{"value", bound.value}, {"vacuous", bound.vacuous}};
}

nlohmann::json to_json(const OverlapEstimate& estimate) {
    return {{"value", estimate.value}, {"per_embedding", estimate.per_embedding}};
}

nlohmann::json to_json(const IdealExpanderReport& report) {
    return {{"ideal", report.ideal},
            {"eps", report.eps},
            {"complete_skeleton", report.complete_skeleton},
            {"mixing_exact", report.mixing_exact},
            {"families_checked", report.families_checked}};
}

nlohmann::json to_json(const std::vector<IdentityCheck>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& check : checks)
        arr.push_back({{"name", check.name}, {"j", check.j}, {"pass", check.pass}});
    return arr;
}

nlohmann::json to_json(const std::vector<SpectralCheck>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& check : checks)
        arr.push_back({{"name", check.name}, {"j", check.j}, {"pass", check.pass}});
    return arr;
}

} // namespace hdx
