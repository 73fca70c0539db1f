#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "hdx/applications.hpp"
#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/hodge.hpp"
#include "hdx/io.hpp"
#include "hdx/mixing.hpp"
#include "hdx/spectral.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& value) {
    switch (value.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(value.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(value.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(value.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(value.get<double>());
        case nlohmann::json::value_t::string: return py::str(value.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list list;
            for (const auto& item : value) list.append(json_to_py(item));
            return list;
        }
        case nlohmann::json::value_t::object: {
            py::dict dict;
            for (const auto& [key, item] : value.items())
                dict[py::str(key)] = json_to_py(item);
            return dict;
        }
        default: return py::none();
    }
}

py::tuple matrix_to_py(const hdx::OperatorMatrix& m) {
    std::vector<std::int64_t> rows, cols, values;
    for (int col = 0; col < m.entries.outerSize(); ++col)
        for (hdx::SparseIntMatrix::InnerIterator it(m.entries, col); it; ++it) {
            rows.push_back(it.row());
            cols.push_back(it.col());
            values.push_back(it.value());
        }
    return py::make_tuple(rows, cols, values, py::make_tuple(m.rows(), m.cols()));
}

hdx::VertexFamily family_from_py(const hdx::SimplicialComplex& X,
                                 const std::vector<std::vector<int>>& sets) {
    return hdx::make_family(X, sets);
}

hdx::AdjacencyKind kind_from_string(const std::string& kind) {
    if (kind == "similar") return hdx::AdjacencyKind::similar;
    if (kind == "pitchfork") return hdx::AdjacencyKind::pitchfork;
    throw hdx::ValidationError("kind must be 'similar' or 'pitchfork'");
}

} // namespace

PYBIND11_MODULE(_hdx, m) {
    m.doc() = "Spectral expansion toolkit for simplicial complexes";

    py::register_exception<hdx::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<hdx::NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<hdx::SimplicialComplex>(m, "Complex")
        .def_static("from_facets", &hdx::SimplicialComplex::from_facets, py::arg("n"),
                    py::arg("facets"))
        .def_property_readonly("n", &hdx::SimplicialComplex::vertex_count)
        .def_property_readonly("dimension", &hdx::SimplicialComplex::dimension)
        .def("cell_count", &hdx::SimplicialComplex::cell_count, py::arg("j"))
        .def("cells", &hdx::SimplicialComplex::cells, py::arg("j"))
        .def("contains", &hdx::SimplicialComplex::contains, py::arg("cell"))
        .def("maximal_cells", &hdx::SimplicialComplex::maximal_cells)
        .def("__repr__", [](const hdx::SimplicialComplex& X) {
            return "Complex(n=" + std::to_string(X.vertex_count()) +
                   ", dim=" + std::to_string(X.dimension()) + ")";
        });

    m.def("complete_skeleton", &hdx::complete_skeleton, py::arg("n"), py::arg("m"));
    m.def("linial_meshulam", &hdx::linial_meshulam, py::arg("d"), py::arg("n"),
          py::arg("p"), py::arg("seed"));
    m.def("is_complete_skeleton", &hdx::is_complete_skeleton, py::arg("complex"));
    m.def(
        "random_disjoint_family",
        [](const hdx::SimplicialComplex& X, const std::vector<int>& sizes,
           std::uint64_t seed) { return hdx::random_disjoint_family(X, sizes, seed).sets; },
        py::arg("complex"), py::arg("sizes"), py::arg("seed"));

    m.def("load_complex", &hdx::load_complex, py::arg("path"));
    m.def("save_complex", &hdx::save_complex, py::arg("complex"), py::arg("path"));

    m.def(
        "boundary_matrix",
        [](const hdx::SimplicialComplex& X, int j) {
            return matrix_to_py(hdx::boundary_matrix(X, j));
        },
        py::arg("complex"), py::arg("j"),
        "COO triplets (rows, cols, values, shape) of the boundary map");
    m.def(
        "laplacian",
        [](const hdx::SimplicialComplex& X, int j, const std::string& kind) {
            hdx::LaplacianKind lk = hdx::LaplacianKind::full;
            if (kind == "upper") lk = hdx::LaplacianKind::upper;
            else if (kind == "lower") lk = hdx::LaplacianKind::lower;
            else if (kind != "full")
                throw hdx::ValidationError("kind must be 'upper', 'lower', or 'full'");
            return matrix_to_py(hdx::laplacian(X, j, lk));
        },
        py::arg("complex"), py::arg("j"), py::arg("kind") = "full");
    m.def(
        "adjacency_matrix",
        [](const hdx::SimplicialComplex& X, int j, const std::string& kind) {
            return matrix_to_py(hdx::adjacency_matrix(X, j, kind_from_string(kind)));
        },
        py::arg("complex"), py::arg("j"), py::arg("kind"));

    m.def("nontrivial_spectrum", &hdx::nontrivial_spectrum, py::arg("complex"), py::arg("j"));
    m.def("betti", &hdx::betti, py::arg("complex"), py::arg("j"));
    m.def(
        "certify",
        [](const hdx::SimplicialComplex& X, int j, std::optional<double> k) {
            return json_to_py(hdx::to_json(hdx::certify(X, j, k)));
        },
        py::arg("complex"), py::arg("j"), py::arg("k") = py::none());
    m.def(
        "summarize",
        [](const hdx::SimplicialComplex& X) { return json_to_py(hdx::to_json(hdx::summarize(X))); },
        py::arg("complex"));
    m.def(
        "verify_count_lemma",
        [](const hdx::SimplicialComplex& X) {
            return json_to_py(hdx::to_json(hdx::verify_count_lemma(X)));
        },
        py::arg("complex"));
    m.def(
        "verify_identities",
        [](const hdx::SimplicialComplex& X) {
            return json_to_py(hdx::to_json(hdx::verify_identities(X)));
        },
        py::arg("complex"));
    m.def(
        "verify_spectral_invariants",
        [](const hdx::SimplicialComplex& X) {
            return json_to_py(hdx::to_json(hdx::verify_spectral_invariants(X)));
        },
        py::arg("complex"));

    m.def(
        "count_galleries",
        [](const hdx::SimplicialComplex& X, int j, const std::vector<std::vector<int>>& sets,
           const std::string& method) {
            hdx::VertexFamily fam = family_from_py(X, sets);
            if (method == "bruteforce") return hdx::count_galleries_bruteforce(X, j, fam);
            return hdx::count_galleries_operator(X, j, fam, kind_from_string(method));
        },
        py::arg("complex"), py::arg("j"), py::arg("sets"), py::arg("method") = "bruteforce",
        "method: 'bruteforce', 'pitchfork' (counts at j), or 'similar' (counts at j+1)");
    m.def(
        "descent_check",
        [](const hdx::SimplicialComplex& X, int j, const std::vector<std::vector<int>>& sets,
           double tol) {
            hdx::VertexFamily fam = family_from_py(X, sets);
            hdx::ExpanderCertificate below = hdx::certify(X, j - 1);
            hdx::ExpanderCertificate at = hdx::certify(X, j);
            return json_to_py(hdx::to_json(hdx::descent_check(X, j, fam, below, at, tol)));
        },
        py::arg("complex"), py::arg("j"), py::arg("sets"), py::arg("tol") = 1e-6);
    m.def(
        "mixing_check",
        [](const hdx::SimplicialComplex& X, const std::vector<std::vector<int>>& sets,
           double tol) {
            hdx::VertexFamily fam = family_from_py(X, sets);
            return json_to_py(
                hdx::to_json(hdx::mixing_check(X, fam, hdx::certify_all(X), tol)));
        },
        py::arg("complex"), py::arg("sets"), py::arg("tol") = 1e-6);
    m.def(
        "from_j_to_l_check",
        [](const hdx::SimplicialComplex& X, int j, const std::vector<std::vector<int>>& sets,
           double tol) {
            hdx::VertexFamily fam = family_from_py(X, sets);
            return json_to_py(
                hdx::to_json(hdx::from_j_to_l_check(X, j, fam, hdx::certify_all(X), tol)));
        },
        py::arg("complex"), py::arg("j"), py::arg("sets"), py::arg("tol") = 1e-6);

    m.def(
        "chromatic_lower_bound",
        [](const hdx::SimplicialComplex& X) {
            return json_to_py(
                hdx::to_json(hdx::chromatic_lower_bound(X.dimension(), hdx::certify_all(X))));
        },
        py::arg("complex"));
    m.def("chromatic_number_exact", &hdx::chromatic_number_exact, py::arg("complex"),
          py::arg("max_colors") = -1, py::arg("top_dim") = py::none());
    m.def(
        "overlap_bound",
        [](const hdx::SimplicialComplex& X, double pach) {
            return json_to_py(
                hdx::to_json(hdx::overlap_bound(X.dimension(), pach, hdx::certify_all(X))));
        },
        py::arg("complex"), py::arg("pach"));
    m.def(
        "overlap_estimate",
        [](const hdx::SimplicialComplex& X, int embeddings, std::uint64_t seed) {
            return json_to_py(hdx::to_json(hdx::overlap_estimate(X, embeddings, seed)));
        },
        py::arg("complex"), py::arg("embeddings") = 10, py::arg("seed") = 0);
    m.def(
        "ideal_expander_check",
        [](const hdx::SimplicialComplex& X, int families, std::uint64_t seed) {
            return json_to_py(hdx::to_json(hdx::ideal_expander_check(X, families, seed)));
        },
        py::arg("complex"), py::arg("families") = 20, py::arg("seed") = 0);
}
