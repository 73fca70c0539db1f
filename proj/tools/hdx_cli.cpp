#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdx/applications.hpp"
#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/hodge.hpp"
#include "hdx/io.hpp"
#include "hdx/mixing.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectral.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

struct Options {
    std::string input;
    std::string generator;
    std::vector<std::string> generate_args;
    std::string out;
    std::string format = "jsonl";
    std::string kind;
    std::string sets;
    std::vector<int> sizes;
    int j = 0;
    int l = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int trials = 1;
    double tol = 1e-6;
    std::optional<double> k;
    double pach = 0;
    std::optional<int> top_dim;
};

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed_given) return opt.seed;
    if (const char* env = std::getenv("HDX_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw hdx::ValidationError("HDX_SEED must be an unsigned integer");
        return static_cast<std::uint64_t>(v);
    }
    return 0;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw hdx::ValidationError(std::string(what) + ": not an integer: '" + text + "'");
    }
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw hdx::ValidationError(std::string(what) + ": not a number: '" + text + "'");
    }
}

// Generator specs: "complete:N:M" or "lm:D:N:P". The random model consumes
// the resolved seed directly, so `generate` and in-process analysis see the
// same complex for the same seed.
hdx::SimplicialComplex build_generator(const std::string& spec, std::uint64_t seed) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.empty()) throw hdx::ValidationError("empty generator spec");
    if (parts[0] == "complete") {
        if (parts.size() != 3)
            throw hdx::ValidationError("generator spec: complete:N:M");
        return hdx::complete_skeleton(parse_int(parts[1], "complete n"),
                                      parse_int(parts[2], "complete m"));
    }
    if (parts[0] == "lm") {
        if (parts.size() != 4)
            throw hdx::ValidationError("generator spec: lm:D:N:P");
        return hdx::linial_meshulam(parse_int(parts[1], "lm d"), parse_int(parts[2], "lm n"),
                                    parse_double(parts[3], "lm p"), seed);
    }
    throw hdx::ValidationError("unknown generator '" + parts[0] +
                               "' (expected complete or lm)");
}

hdx::SimplicialComplex load_input(const Options& opt) {
    if (opt.input.empty() == opt.generator.empty())
        throw hdx::ValidationError("provide exactly one of --input and --generator");
    if (!opt.input.empty()) return hdx::load_complex(opt.input);
    return build_generator(opt.generator, resolve_seed(opt));
}

// Sets are ';'-separated lists of ','-separated vertices: "0,1;2;3,4".
std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> sets;
    for (const std::string& group : split(text, ';')) {
        std::vector<int> set;
        for (const std::string& item : split(group, ','))
            if (!item.empty()) set.push_back(parse_int(item, "set vertex"));
        sets.push_back(std::move(set));
    }
    if (sets.empty()) throw hdx::ValidationError("--sets needs at least one set");
    return sets;
}

void emit_text(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw hdx::ValidationError("cannot write " + out);
    file << text;
}

void emit_json(const nlohmann::json& doc, const std::string& out) {
    emit_text(doc.dump(2) + "\n", out);
}

// Multi-trial outputs: one compact JSON object per line plus a summary line,
// or a single document under --format json.
void emit_trials(const std::vector<nlohmann::json>& lines, const nlohmann::json& summary,
                 const Options& opt) {
    if (opt.format == "json") {
        emit_json({{"trials", lines}, {"summary", summary}}, opt.out);
        return;
    }
    std::string text;
    for (const auto& line : lines) text += line.dump() + "\n";
    text += nlohmann::json{{"summary", summary}}.dump() + "\n";
    emit_text(text, opt.out);
}

int cmd_generate(const Options& opt) {
    std::string spec = opt.generator;
    if (!opt.generate_args.empty()) {
        spec.clear();
        for (const auto& tok : opt.generate_args) {
            if (!spec.empty()) spec += ':';
            spec += tok;
        }
    }
    if (spec.empty())
        throw hdx::ValidationError("generate needs a generator spec, e.g. complete:5:2");
    hdx::SimplicialComplex X = build_generator(spec, resolve_seed(opt));
    emit_json(hdx::complex_to_json(X), opt.out);
    return 0;
}

int cmd_spectrum(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    nlohmann::json doc;
    doc["n"] = X.vertex_count();
    doc["dimension"] = X.dimension();
    doc["dimensions"] = hdx::to_json(hdx::summarize(X));
    doc["count_lemma"] = hdx::to_json(hdx::verify_count_lemma(X));
    emit_json(doc, opt.out);
    return 0;
}

int cmd_certify(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    emit_json(hdx::to_json(hdx::certify(X, opt.j, opt.k)), opt.out);
    return 0;
}

int cmd_matrix(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    hdx::OperatorMatrix m;
    if (opt.kind == "boundary") m = hdx::boundary_matrix(X, opt.j);
    else if (opt.kind == "coboundary") m = hdx::coboundary_matrix(X, opt.j);
    else if (opt.kind == "upper") m = hdx::laplacian(X, opt.j, hdx::LaplacianKind::upper);
    else if (opt.kind == "lower") m = hdx::laplacian(X, opt.j, hdx::LaplacianKind::lower);
    else if (opt.kind == "full") m = hdx::laplacian(X, opt.j, hdx::LaplacianKind::full);
    else if (opt.kind == "similar")
        m = hdx::adjacency_matrix(X, opt.j, hdx::AdjacencyKind::similar);
    else if (opt.kind == "pitchfork")
        m = hdx::adjacency_matrix(X, opt.j, hdx::AdjacencyKind::pitchfork);
    else if (opt.kind == "degree") m = hdx::degree_matrix(X, opt.j);
    else
        throw hdx::ValidationError(
            "unknown --kind (boundary, coboundary, upper, lower, full, similar, "
            "pitchfork, degree)");
    emit_text(hdx::matrix_to_string(m), opt.out);
    return 0;
}

int cmd_galleries(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    hdx::VertexFamily fam = hdx::make_family(X, parse_sets(opt.sets));
    const int j = opt.j;
    const int l = fam.top_index();
    const int d = X.dimension();

    nlohmann::json doc;
    doc["j"] = j;
    doc["sets"] = fam.sets;
    std::int64_t brute = hdx::count_galleries_bruteforce(X, j, fam);
    doc["bruteforce"] = brute;

    bool agree = true;
    if (j <= d) {
        std::int64_t c = hdx::count_galleries_operator(X, j, fam, hdx::AdjacencyKind::pitchfork);
        doc["operator_pitchfork"] = c;
        agree = agree && c == brute;
    } else {
        doc["operator_pitchfork"] = nullptr;
    }
    if (j >= 1 && j <= d && j - 1 < l) {
        std::int64_t c =
            hdx::count_galleries_operator(X, j - 1, fam, hdx::AdjacencyKind::similar);
        doc["operator_similar"] = c;
        agree = agree && c == brute;
    } else {
        doc["operator_similar"] = nullptr;
    }
    doc["agreement"] = agree;
    emit_json(doc, opt.out);
    return agree ? 0 : kExitViolation;
}

int cmd_mixing(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    if (opt.sizes.empty()) throw hdx::ValidationError("--sizes is required");
    std::vector<hdx::ExpanderCertificate> certs = hdx::certify_all(X);

    hdx::SplitMix64 master(resolve_seed(opt));
    std::vector<nlohmann::json> lines;
    int violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < opt.trials; ++t) {
        std::uint64_t trial_seed = master.next();
        hdx::VertexFamily fam = hdx::random_disjoint_family(X, opt.sizes, trial_seed);
        hdx::MixingReport report = hdx::mixing_check(X, fam, certs, opt.tol);
        nlohmann::json line = hdx::to_json(report);
        line["trial"] = t;
        line["seed"] = trial_seed;
        lines.push_back(std::move(line));
        if (!report.ok) ++violations;
        min_slack = std::min(min_slack, report.slack);
    }
    nlohmann::json summary = {{"trials", opt.trials},
                              {"violations", violations},
                              {"min_slack", min_slack}};
    emit_trials(lines, summary, opt);
    return violations == 0 ? 0 : kExitViolation;
}

int cmd_descent(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    if (opt.sizes.empty()) throw hdx::ValidationError("--sizes is required");
    if (static_cast<int>(opt.sizes.size()) != opt.l + 1)
        throw hdx::ValidationError("--sizes must list l+1 = " + std::to_string(opt.l + 1) +
                                   " sizes");
    hdx::ExpanderCertificate below = hdx::certify(X, opt.j - 1);
    hdx::ExpanderCertificate at = hdx::certify(X, opt.j);

    hdx::SplitMix64 master(resolve_seed(opt));
    std::vector<nlohmann::json> lines;
    int violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < opt.trials; ++t) {
        std::uint64_t trial_seed = master.next();
        hdx::VertexFamily fam = hdx::random_disjoint_family(X, opt.sizes, trial_seed);
        hdx::DescentReport report = hdx::descent_check(X, opt.j, fam, below, at, opt.tol);
        nlohmann::json line = hdx::to_json(report);
        line["trial"] = t;
        line["seed"] = trial_seed;
        lines.push_back(std::move(line));
        if (!report.ok) ++violations;
        min_slack = std::min({min_slack, report.bound - report.deviation,
                              report.improved_bound - report.deviation});
    }
    nlohmann::json summary = {{"trials", opt.trials},
                              {"violations", violations},
                              {"min_slack", min_slack}};
    emit_trials(lines, summary, opt);
    return violations == 0 ? 0 : kExitViolation;
}

int cmd_invariants(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    std::vector<hdx::IdentityCheck> identities = hdx::verify_identities(X);
    std::vector<hdx::SpectralCheck> spectral = hdx::verify_spectral_invariants(X);
    bool all_pass = true;
    for (const auto& c : identities) all_pass = all_pass && c.pass;
    for (const auto& c : spectral) all_pass = all_pass && c.pass;
    nlohmann::json doc = {{"identities", hdx::to_json(identities)},
                          {"spectral", hdx::to_json(spectral)},
                          {"all_pass", all_pass}};
    emit_json(doc, opt.out);
    return all_pass ? 0 : kExitViolation;
}

int cmd_chromatic(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    nlohmann::json doc;
    doc["dimension"] = X.dimension();

    std::optional<int> exact;
    if (X.vertex_count() <= 20)
        exact = hdx::chromatic_number_exact(X, -1, opt.top_dim);
    if (exact)
        doc["exact"] = *exact;
    else
        doc["exact"] = nullptr;

    std::optional<hdx::ChromaticBound> bound;
    try {
        bound = hdx::chromatic_lower_bound(X.dimension(), hdx::certify_all(X));
        doc["bound"] = hdx::to_json(*bound);
    } catch (const hdx::ValidationError&) {
        doc["bound"] = nullptr;  // certificates missing or invalid
    }

    bool violated = false;
    if (bound && !bound->unbounded && exact) {
        bool consistent = std::ceil(bound->value) <= static_cast<double>(*exact);
        doc["consistent"] = consistent;
        violated = !consistent;
    } else {
        doc["consistent"] = nullptr;
    }
    emit_json(doc, opt.out);
    return violated ? kExitViolation : 0;
}

int cmd_overlap(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    std::vector<hdx::ExpanderCertificate> certs = hdx::certify_all(X);
    nlohmann::json doc;
    doc["dimension"] = X.dimension();
    doc["bound"] = hdx::to_json(hdx::overlap_bound(X.dimension(), opt.pach, certs));
    doc["estimate"] =
        hdx::to_json(hdx::overlap_estimate(X, opt.trials, resolve_seed(opt)));
    emit_json(doc, opt.out);
    return 0;
}

int cmd_ideal(const Options& opt) {
    hdx::SimplicialComplex X = load_input(opt);
    hdx::IdealExpanderReport report =
        hdx::ideal_expander_check(X, opt.trials, resolve_seed(opt));
    nlohmann::json doc = hdx::to_json(report);
    // The rigidity theorem: ideal exactly for complete skeletons, and then
    // gallery counts must factor exactly.
    bool ok = report.ideal == report.complete_skeleton &&
              (!report.ideal || report.mixing_exact);
    doc["rigidity_consistent"] = ok;
    emit_json(doc, opt.out);
    return ok ? 0 : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral expansion toolkit for simplicial complexes"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&opt](CLI::App* sub) {
        sub->add_option("--input", opt.input, "Complex JSON file");
        sub->add_option("--generator", opt.generator,
                        "Generator spec: complete:N:M or lm:D:N:P");
    };
    auto add_seed = [&opt](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "RNG seed (HDX_SEED as fallback, then 0)")
            ->each([&opt](const std::string&) { opt.seed_given = true; });
    };
    auto add_out = [&opt](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Output file (stdout when absent)");
    };
    auto add_format = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "jsonl (default) or json")
            ->check(CLI::IsMember({"json", "jsonl"}));
    };

    CLI::App* generate = app.add_subcommand("generate", "Write a generated complex");
    generate->add_option("spec", opt.generate_args,
                         "Generator spec, as one token or separate words");
    add_input(generate);
    add_seed(generate);
    add_out(generate);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Laplacian spectra, Betti numbers, certificates");
    add_input(spectrum);
    add_seed(spectrum);
    add_out(spectrum);

    CLI::App* certify = app.add_subcommand("certify", "Expansion certificate at one dimension");
    add_input(certify);
    add_seed(certify);
    add_out(certify);
    certify->add_option("--j", opt.j, "Dimension to certify")->required();
    certify->add_option("--k", opt.k, "Expected eigenvalue center (midpoint when absent)");

    CLI::App* matrix = app.add_subcommand("matrix", "Export one operator as sparse text");
    add_input(matrix);
    add_seed(matrix);
    add_out(matrix);
    matrix->add_option("--j", opt.j, "Operator dimension")->required();
    matrix->add_option("--kind", opt.kind, "boundary, coboundary, upper, lower, full, "
                                           "similar, pitchfork, degree")
        ->required();

    CLI::App* galleries =
        app.add_subcommand("galleries", "Count gallery paths through explicit sets");
    add_input(galleries);
    add_seed(galleries);
    add_out(galleries);
    galleries->add_option("--j", opt.j, "Gallery dimension")->required();
    galleries->add_option("--sets", opt.sets, "Vertex sets: \"0,1;2;3,4\"")->required();

    CLI::App* mixing = app.add_subcommand("mixing", "Mixing bound over random families");
    add_input(mixing);
    add_seed(mixing);
    add_out(mixing);
    add_format(mixing);
    mixing->add_option("--sizes", opt.sizes, "Set sizes, one per set (d+1 of them)")
        ->required()
        ->delimiter(',');
    mixing->add_option("--trials", opt.trials, "Random families to test (default 1)");
    mixing->add_option("--tol", opt.tol, "Additive slack tolerance (default 1e-6)");

    CLI::App* descent = app.add_subcommand("descent", "Descent bound over random families");
    add_input(descent);
    add_seed(descent);
    add_out(descent);
    add_format(descent);
    descent->add_option("--j", opt.j, "Lower gallery dimension")->required();
    descent->add_option("--l", opt.l, "Top set index (sets run A_0..A_l)")->required();
    descent->add_option("--sizes", opt.sizes, "Set sizes, l+1 of them")
        ->required()
        ->delimiter(',');
    descent->add_option("--trials", opt.trials, "Random families to test (default 1)");
    descent->add_option("--tol", opt.tol, "Additive slack tolerance (default 1e-6)");

    CLI::App* invariants =
        app.add_subcommand("invariants", "Exact identity suite plus spectral checks");
    add_input(invariants);
    add_seed(invariants);
    add_out(invariants);

    CLI::App* chromatic =
        app.add_subcommand("chromatic", "Spectral chromatic bound vs exact search");
    add_input(chromatic);
    add_seed(chromatic);
    add_out(chromatic);
    chromatic->add_option("--top-dim", [&opt](const std::vector<std::string>& vals) {
        opt.top_dim = parse_int(vals.at(0), "--top-dim");
        return true;
    }, "Cell dimension that must not be monochromatic (default: top)");

    CLI::App* overlap = app.add_subcommand("overlap", "Geometric overlap bound and estimate");
    add_input(overlap);
    add_seed(overlap);
    add_out(overlap);
    overlap->add_option("--pach", opt.pach, "Selection constant in (0, 1]")->required();
    overlap->add_option("--trials", opt.trials, "Sampled embeddings (default 1)");

    CLI::App* ideal = app.add_subcommand("ideal", "Ideal expansion and rigidity check");
    add_input(ideal);
    add_seed(ideal);
    add_out(ideal);
    ideal->add_option("--trials", opt.trials, "Random families when ideal (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::json err = {{"error", {{"type", "validation"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return kExitValidation;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (certify->parsed()) return cmd_certify(opt);
        if (matrix->parsed()) return cmd_matrix(opt);
        if (galleries->parsed()) return cmd_galleries(opt);
        if (mixing->parsed()) return cmd_mixing(opt);
        if (descent->parsed()) return cmd_descent(opt);
        if (invariants->parsed()) return cmd_invariants(opt);
        if (chromatic->parsed()) return cmd_chromatic(opt);
        if (overlap->parsed()) return cmd_overlap(opt);
        if (ideal->parsed()) return cmd_ideal(opt);
        throw hdx::ValidationError("no subcommand given");
    } catch (const hdx::ValidationError& e) {
        nlohmann::json err = {{"error", {{"type", "validation"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return kExitValidation;
    } catch (const hdx::NumericalError& e) {
        nlohmann::json err = {{"error", {{"type", "numerical"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return 1;
    }
}
