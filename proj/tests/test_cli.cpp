#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PERIOD_ATLAS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("unknown flags exit with the usage code") {
    CHECK(run_cli("--definitely-not-a-flag").exit_code == 64);
    CHECK(run_cli("verify --suite nonsense").exit_code == 64);
}

TEST_CASE("invariants subcommand emits minors and cross ratios") {
    auto path = write_temp("patlas_cli_mat.json",
                           R"({"n": 2, "entries": [[1,0],[0,0],[1,0],[1,0],[0,0],[1,0],[1,0],[0.25,0]]})");
    RunResult r = run_cli("invariants --matrix " + path.string());
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["generic"] == true);
    CHECK(doc["cross_ratios"]["f_2_4"][0].get<double>() == doctest::Approx(0.25));
    CHECK(doc["minors"]["{2,4}"][0].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("period double-cover emits value, tail, branches and cross ratios") {
    auto path = write_temp("patlas_cli_mat2.json",
                           R"({"n": 2, "entries": [[1,0],[0,0],[1,0],[1,0],[0,0],[1,0],[1,0],[0.2,0]]})");
    RunResult r = run_cli("period double-cover --matrix " + path.string() + " --max-degree 48");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.contains("value"));
    CHECK(doc.contains("tail_bound"));
    CHECK(doc["branch_log"]["prefactor_sqrt"] == 0);
    // value = -i * 2F1(.2), so the real part is ~0 and imag is negative
    CHECK(std::abs(doc["value"][0].get<double>()) < 1e-12);
    CHECK(doc["value"][1].get<double>() < -1.0);
}

TEST_CASE("domain errors exit with code 2 and a machine-readable object") {
    auto path = write_temp("patlas_cli_bad.json",
                           R"({"n": 2, "entries": [[1,0],[0,0],[1,0],[0,0],[0,0],[1,0],[1,0],[1,0]]})");
    RunResult r = run_cli("period double-cover --matrix " + path.string());
    CHECK(r.exit_code == 2);
    json doc = json::parse(r.out);
    CHECK(doc["error"]["code"] == "non_generic_matrix");
}

TEST_CASE("pc-check reproduces the counterexample verdicts") {
    auto good = write_temp("patlas_cli_pc1.json",
                           R"([[[0,0],"1","1"],[[1,1],"-1","1"],[[0,2],"1","1"],[[1,2],"1","1"]])");
    RunResult g = run_cli("pc-check --minpoly " + good.string());
    REQUIRE(g.exit_code == 0);
    CHECK(json::parse(g.out)["positively_closed"] == true);

    auto bad = write_temp("patlas_cli_pc2.json",
                          R"([[[1,0],"-1","1"],[[0,1],"1","1"],[[1,1],"1","1"]])");
    RunResult b = run_cli("pc-check --minpoly " + bad.string());
    REQUIRE(b.exit_code == 0);
    json doc = json::parse(b.out);
    CHECK(doc["positively_closed"] == false);
    CHECK(doc["certificate"].get<std::string>().find("x + 1") != std::string::npos);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
    RunResult a = run_cli("verify --suite k3 --seed 99");
    RunResult b = run_cli("verify --suite k3 --seed 99");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["seed"] == 99);
}

TEST_CASE("aronhold derive writes a loadable cache") {
    auto dir = std::filesystem::temp_directory_path() / "patlas_cli_cache";
    std::filesystem::remove_all(dir);
    RunResult r = run_cli("aronhold derive --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["derived"] == true);
    CHECK(doc["S_terms"] == 25);
    CHECK(doc["T_terms"] == 103);
    CHECK(std::filesystem::exists(dir / "aronhold_S.json"));
    CHECK(std::filesystem::exists(dir / "aronhold_T.json"));

    // Second run reuses the cache rather than rederiving.
    RunResult again = run_cli("aronhold derive --out " + dir.string());
    CHECK(json::parse(again.out)["derived"] == false);
    RunResult forced = run_cli("aronhold derive --force --out " + dir.string());
    CHECK(json::parse(forced.out)["derived"] == true);
    std::filesystem::remove_all(dir);
}
