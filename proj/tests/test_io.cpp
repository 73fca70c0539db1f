#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/io.hpp"
#include "hdx/mixing.hpp"
#include "hdx/spectral.hpp"

using hdx::SimplicialComplex;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("hdx_test_") + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the CLI binary named by HDX_CLI_PATH; returns its exit status.
int run_cli(const std::string& args, const std::string& stdout_path) {
    const char* cli = std::getenv("HDX_CLI_PATH");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " > " + stdout_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("complex json round trip") {
    auto X = hdx::linial_meshulam(2, 7, 0.5, 3);
    std::string path = temp_path("roundtrip.json");
    hdx::save_complex(X, path);
    auto Y = hdx::load_complex(path);
    CHECK(X.vertex_count() == Y.vertex_count());
    CHECK(X.dimension() == Y.dimension());
    for (int j = 0; j <= X.dimension(); ++j) CHECK(X.cells(j) == Y.cells(j));
    std::remove(path.c_str());
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(hdx::complex_from_json({{"facets", nlohmann::json::array()}}),
                    hdx::ValidationError);
    CHECK_THROWS_AS(hdx::complex_from_json({{"n", 3}}), hdx::ValidationError);
    CHECK_THROWS_AS(hdx::complex_from_json({{"n", 3}, {"facets", "zero"}}),
                    hdx::ValidationError);
    CHECK_THROWS_AS(hdx::complex_from_json({{"n", 3}, {"facets", {{"a"}}}}),
                    hdx::ValidationError);
    CHECK_THROWS_AS(hdx::load_complex("does_not_exist.json"), hdx::ValidationError);

    std::string path = temp_path("bad.json");
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(hdx::load_complex(path), hdx::ValidationError);
    std::remove(path.c_str());
}

TEST_CASE("matrix text format") {
    auto X = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK(hdx::matrix_to_string(hdx::boundary_matrix(X, 2)) ==
          "3 1 3\n0 0 1\n1 0 -1\n2 0 1\n");
}

TEST_CASE("mixing report keys are pinned") {
    auto X = hdx::complete_skeleton(5, 2);
    auto fam = hdx::make_family(X, {{0}, {1, 2}, {3, 4}});
    auto doc = hdx::to_json(hdx::mixing_check(X, fam, hdx::certify_all(X)));
    for (const char* key :
         {"observed", "main_term", "bound", "slack", "certs", "sets", "ok", "degenerate"})
        CHECK(doc.contains(key));
    CHECK(doc["certs"].size() == 2);
    for (const char* key : {"j", "k", "eps"}) CHECK(doc["certs"][0].contains(key));
    CHECK(doc["sets"] == nlohmann::json({1, 2, 2}));
}

TEST_CASE("serialization is byte deterministic") {
    auto X = hdx::complete_skeleton(5, 2);
    CHECK(hdx::to_json(hdx::summarize(X)).dump(2) == hdx::to_json(hdx::summarize(X)).dump(2));
    CHECK(hdx::complex_to_json(X).dump(2) == hdx::complex_to_json(X).dump(2));
}

TEST_CASE("cli writes complexes that it can read back") {
    std::string complex_path = temp_path("cli_complex.json");
    std::string out_path = temp_path("cli_out.json");
    CHECK(run_cli("generate complete:5:2 --out " + complex_path, out_path) == 0);
    auto X = hdx::load_complex(complex_path);
    CHECK(X.vertex_count() == 5);
    CHECK(X.cell_count(2) == 10);

    CHECK(run_cli("spectrum --input " + complex_path, out_path) == 0);
    auto doc = nlohmann::json::parse(slurp(out_path));
    CHECK(doc["n"] == 5);
    CHECK(doc["dimensions"].is_array());
    std::remove(complex_path.c_str());
    std::remove(out_path.c_str());
}

TEST_CASE("cli reports errors as json with exit code 2") {
    std::string out_path = temp_path("cli_err.json");
    CHECK(run_cli("certify --generator complete:4:1 --j 5", out_path) == 2);
    CHECK(run_cli("spectrum --generator nosuch:1:2", out_path) == 2);
    CHECK(run_cli("spectrum --input missing_file.json", out_path) == 2);
    CHECK(run_cli("mixing --generator complete:5:2 --sizes 3,3,3", out_path) == 2);
    std::remove(out_path.c_str());
}

TEST_CASE("cli runs are byte identical for a fixed seed") {
    std::string a = temp_path("det_a.json");
    std::string b = temp_path("det_b.json");
    std::string args = "mixing --generator lm:2:8:0.7 --sizes 2,2,2 --trials 5 --seed 11";
    CHECK(run_cli(args, a) == 0);
    CHECK(run_cli(args, b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("\"summary\"") != std::string::npos);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("cli honors the seed environment fallback") {
    std::string with_flag = temp_path("env_a.json");
    std::string with_env = temp_path("env_b.json");
    CHECK(run_cli("generate lm:2:7:0.5 --seed 99 --out " + with_flag, with_env) == 0);
    const char* cli = std::getenv("HDX_CLI_PATH");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string("HDX_SEED=99 ") + cli + " generate lm:2:7:0.5 --out " +
                      with_env + " >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(with_flag) == slurp(with_env));
    std::remove(with_flag.c_str());
    std::remove(with_env.c_str());
}
