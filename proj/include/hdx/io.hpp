#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdx/applications.hpp"
#include "hdx/complex.hpp"
#include "hdx/hodge.hpp"
#include "hdx/mixing.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

// Complexes travel as {"n": int, "facets": [[v, ...], ...]}. Loading closes
// the facet list downward; saving writes the maximal cells sorted by
// dimension, then lexicographically.
SimplicialComplex complex_from_json(const nlohmann::json& doc);
nlohmann::json complex_to_json(const SimplicialComplex& X);
SimplicialComplex load_complex(const std::string& path);
void save_complex(const SimplicialComplex& X, const std::string& path);

// Sparse matrices print as a "rows cols nnz" header followed by one
// "row col value" line per entry, column-major.
void write_matrix(const OperatorMatrix& m, std::ostream& out);
std::string matrix_to_string(const OperatorMatrix& m);

nlohmann::json to_json(const ExpanderCertificate& cert);
nlohmann::json to_json(const DimensionSpectrum& spectrum);
nlohmann::json to_json(const SpectralSummary& summary);
nlohmann::json to_json(const CountLemmaReport& report);
nlohmann::json to_json(const ErrorOperatorReport& report);
nlohmann::json to_json(const DescentReport& report);
nlohmann::json to_json(const MixingReport& report);
nlohmann::json to_json(const ChromaticBound& bound);
nlohmann::json to_json(const OverlapBound& bound);
nlohmann::json to_json(const OverlapEstimate& estimate);
nlohmann::json to_json(const IdealExpanderReport& report);
nlohmann::json to_json(const std::vector<IdentityCheck>& checks);
nlohmann::json to_json(const std::vector<SpectralCheck>& checks);

} // namespace hdx
