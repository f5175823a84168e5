// Golden tests driving the built binary end to end: verdicts, witnesses,
// exit codes, and byte-level determinism of repeated runs.

#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef PERMEXT_CLI_PATH
#error "PERMEXT_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(PERMEXT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> chunk{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        result.out.append(chunk.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_doc(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("permext_cli_" + name);
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("classify-linear verdict documents", "[cli]") {
    auto negsum = write_doc("negsum.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"],["-1","-1"]]
    })json");
    auto r = run_cli("classify-linear " + negsum.string());
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["verdict"] == "basis_plus_negsum");
    CHECK(doc["rank"] == 2);

    auto independent = write_doc("independent.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"]]
    })json");
    auto r2 = run_cli("classify-linear " + independent.string());
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["verdict"] == "independent");

    auto nothom = write_doc("nothom.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"],["1","1"]]
    })json");
    auto r3 = run_cli("classify-linear " + nothom.string());
    CHECK(r3.exit_code == 0);
    auto doc3 = json::parse(r3.out);
    CHECK(doc3["verdict"] == "not_homogeneous");
    CHECK(doc3["witness"] == json({2, 1, 0}));
}

TEST_CASE("classify-linear input failures exit 2", "[cli]") {
    auto dup = write_doc("dup.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["1","0"]]
    })json");
    CHECK(run_cli("classify-linear " + dup.string()).exit_code == 2);

    auto composite = write_doc("composite.json", R"json({
      "field": "GF(6)", "dim": 2,
      "vectors": [["1","0"],["0","1"]]
    })json");
    CHECK(run_cli("classify-linear " + composite.string()).exit_code == 2);

    auto malformed = write_doc("malformed.json", "{ not json");
    CHECK(run_cli("classify-linear " + malformed.string()).exit_code == 2);

    auto bad_scalar = write_doc("badscalar.json", R"json({
      "field": "GF(5)", "dim": 2,
      "vectors": [["1","9"],["0","1"]]
    })json");
    CHECK(run_cli("classify-linear " + bad_scalar.string()).exit_code == 2);

    CHECK(run_cli("classify-linear /nonexistent.json").exit_code == 2);
}

TEST_CASE("classify-projective verdict documents", "[cli]") {
    auto h3 = write_doc("h3.json", R"json({
      "field": "GF(3)", "dim": 2,
      "points": [["1","0"],["0","1"],["1","1"],["1","2"]]
    })json");
    auto r = run_cli("classify-projective " + h3.string());
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["verdict"] == "harmonic_char3");

    auto h5 = write_doc("h5.json", R"json({
      "field": "GF(5)", "dim": 2,
      "points": [["1","0"],["0","1"],["1","1"],["1","4"]]
    })json");
    auto r5 = run_cli("classify-projective " + h5.string());
    CHECK(r5.exit_code == 0);
    auto doc5 = json::parse(r5.out);
    CHECK(doc5["verdict"] == "not_homogeneous");
    CHECK(doc5["witness"] == json({2, 1, 0, 3}));

    auto simplex = write_doc("simplex.json", R"json({
      "field": "Q", "dim": 3,
      "points": [["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]]
    })json");
    auto rs = run_cli("classify-projective " + simplex.string());
    CHECK(rs.exit_code == 0);
    auto docs = json::parse(rs.out);
    CHECK(docs["verdict"] == "simplex");
    CHECK(docs["m"] == 3);
}

TEST_CASE("extend emits matrices or null", "[cli]") {
    auto ex1 = write_doc("ex1.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"],["-1","-1"]],
      "permutation": [2,1,0]
    })json");
    auto r = run_cli("extend " + ex1.string());
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["extension"] == json::parse(R"json([["-1","0"],["-1","1"]])json"));

    auto ident = write_doc("ident.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"],["-1","-1"]],
      "permutation": [0,1,2]
    })json");
    auto ri = run_cli("extend " + ident.string());
    CHECK(ri.exit_code == 0);
    CHECK(json::parse(ri.out)["extension"] == json::parse(R"json([["1","0"],["0","1"]])json"));

    auto blocked = write_doc("blocked.json", R"json({
      "field": "Q", "dim": 2,
      "vectors": [["1","0"],["0","1"],["1","1"]],
      "permutation": [2,1,0]
    })json");
    auto rb = run_cli("extend " + blocked.string());
    CHECK(rb.exit_code == 0);  // a decided negative is still a success
    CHECK(json::parse(rb.out)["extension"].is_null());

    auto proj = write_doc("proj.json", R"json({
      "field": "GF(3)", "dim": 2,
      "points": [["1","0"],["0","1"],["1","1"],["1","2"]],
      "permutation": [0,2,1,3]
    })json");
    auto rp = run_cli("extend --projective " + proj.string());
    CHECK(rp.exit_code == 0);
    CHECK_FALSE(json::parse(rp.out)["extension"].is_null());
}

TEST_CASE("oracle-verify exit codes and reports", "[cli]") {
    auto r = run_cli("oracle-verify --theorem 1 --n 2 --p 3");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["discrepancies"].empty());
    CHECK(doc["subsets_checked"] == 238);

    // budget refusal
    CHECK(run_cli("oracle-verify --theorem 1 --n 4 --p 5").exit_code == 3);
    // max-size guard is an input error
    CHECK(run_cli("oracle-verify --theorem 1 --n 2 --p 3 --max-size 9").exit_code == 2);
}

TEST_CASE("verify-corollary exit codes", "[cli]") {
    auto negsum2_gf2 = write_doc("negsum2_gf2.json", R"json({
      "field": "GF(2)", "dim": 2,
      "generators": [[["0","1"],["1","0"]], [["1","1"],["0","1"]]]
    })json");
    auto pass = run_cli("verify-corollary " + negsum2_gf2.string() + " --which 1 --m 3");
    CHECK(pass.exit_code == 0);
    auto doc = json::parse(pass.out);
    CHECK(doc["hypotheses"]["all_ok"] == true);
    CHECK(doc["conclusions"]["all_ok"] == true);

    auto s2_gf2 = write_doc("s2_gf2.json", R"json({
      "field": "GF(2)", "dim": 2,
      "generators": [[["0","1"],["1","0"]]]
    })json");
    auto inapplicable = run_cli("verify-corollary " + s2_gf2.string() + " --which 1 --m 2");
    CHECK(inapplicable.exit_code == 4);
    auto idoc = json::parse(inapplicable.out);
    CHECK(idoc["hypotheses"]["all_ok"] == false);
    CHECK(idoc["hypotheses"]["invariant_subspace"] == json::parse(R"json([["1","1"]])json"));

    auto singular = write_doc("singular.json", R"json({
      "field": "Q", "dim": 2,
      "generators": [[["1","1"],["1","1"]]]
    })json");
    CHECK(run_cli("verify-corollary " + singular.string() + " --which 1 --m 2").exit_code == 2);

    // projective pass with an explicit seed
    auto negsum3_gf5 = write_doc("negsum3_gf5.json", R"json({
      "field": "GF(5)", "dim": 3,
      "generators": [
        [["0","1","0"],["1","0","0"],["0","0","1"]],
        [["1","0","0"],["0","0","1"],["0","1","0"]],
        [["1","0","4"],["0","1","4"],["0","0","4"]]
      ]
    })json");
    auto proj = run_cli("verify-corollary " + negsum3_gf5.string() +
                        " --which 2 --m 4 --seed 1,0,0");
    CHECK(proj.exit_code == 0);
    auto pdoc = json::parse(proj.out);
    CHECK(pdoc["conclusions"]["classification"] == "simplex(3)");
}

TEST_CASE("identical inputs give byte-identical output", "[cli][determinism]") {
    auto h3 = write_doc("h3_det.json", R"json({
      "field": "GF(3)", "dim": 2,
      "points": [["1","0"],["0","1"],["1","1"],["1","2"]],
      "permutation": [3,1,2,0]
    })json");
    for (const std::string& command :
         {std::string("classify-projective "), std::string("extend --projective ")}) {
        auto a = run_cli(command + h3.string());
        auto b = run_cli(command + h3.string());
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }

    auto w1 = run_cli("oracle-verify --theorem 2 --n 2 --p 5 --workers 1");
    auto w2 = run_cli("oracle-verify --theorem 2 --n 2 --p 5 --workers 2");
    auto w3 = run_cli("oracle-verify --theorem 2 --n 2 --p 5 --workers 3");
    CHECK(w1.out == w2.out);
    CHECK(w1.out == w3.out);
    CHECK(w1.exit_code == 0);
}
