#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
#ifdef DUNKLKIT_CLI_PATH
    return DUNKLKIT_CLI_PATH;
#else
    const char* p = std::getenv("DUNKLKIT_CLI_PATH");
    REQUIRE(p != nullptr);
    return p;
#endif
}

int run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("dunklkit_cli_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("verify subcommand passes and writes a report") {
    fs::path out = fresh_dir("verify");
    CHECK(run_cli("verify means --seed 1 --out " + out.string()) == 0);
    fs::path json = out / "verify_means.json";
    REQUIRE(fs::exists(json));
    std::string text = slurp(json);
    CHECK(text.find("\"suite\"") != std::string::npos);
    CHECK(text.find("\"checks\"") != std::string::npos);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
    CHECK(run_cli("verify symbolic --seed 7 --out " + a.string()) == 0);
    CHECK(run_cli("verify symbolic --seed 7 --out " + b.string()) == 0);
    CHECK(slurp(a / "verify_symbolic.json") == slurp(b / "verify_symbolic.json"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("verify no_such_suite") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("missing input files exit with 3") {
    CHECK(run_cli("report /nonexistent/input.json /tmp/out.csv") == 3);
    fs::path out = fresh_dir("io");
    // unwritable output directory
    CHECK(run_cli("verify means --out /proc/definitely_not_writable") == 3);
    (void)out;
}

TEST_CASE("config errors exit with 2") {
    fs::path dir = fresh_dir("cfg");
    fs::path cfg = dir / "empty_grid.toml";
    {
        std::ofstream f(cfg);
        f << "kind = \"fatou\"\n"
          << "[root]\nlambda = [0.5]\n"
          << "[field]\ntype = \"polynomial\"\nu = \"y\"\n"
          << "[grid]\npoints = []\n";
    }
    CHECK(run_cli("run " + cfg.string() + " --out " + dir.string()) == 2);

    fs::path bad = dir / "bad_kind.toml";
    {
        std::ofstream f(bad);
        f << "kind = \"unknown_kind\"\n[root]\nlambda = [0.5]\n";
    }
    CHECK(run_cli("run " + bad.string() + " --out " + dir.string()) == 2);
}

TEST_CASE("a small run produces the documented table") {
    fs::path dir = fresh_dir("run");
    fs::path cfg = dir / "mini.toml";
    {
        std::ofstream f(cfg);
        f << "kind = \"fatou\"\n"
          << "[root]\nlambda = [0.5]\n"
          << "[field]\ntype = \"polynomial\"\nu = \"x*y\"\n"
          << "[cone]\naperture = 1.0\nheight = 1.0\n"
          << "[grid]\npoints = [-0.5, 0.5]\n"
          << "[output]\ncsv = \"mini.csv\"\njson = \"mini.json\"\n";
    }
    CHECK(run_cli("run " + cfg.string() + " --seed 3 --out " + dir.string()) == 0);
    std::string csv = slurp(dir / "mini.csv");
    CHECK(csv.find("x,a,h,bounded,limit_exists,limit_value,S_value,S_verdict,seed") !=
          std::string::npos);
    CHECK(csv.find("# agreement_ratio = 1") != std::string::npos);
    CHECK(csv.find("finite") != std::string::npos);
    std::string json = slurp(dir / "mini.json");
    CHECK(json.find("\"agreement_ratio\"") != std::string::npos);
}

TEST_CASE("report converts json to csv") {
    fs::path dir = fresh_dir("report");
    CHECK(run_cli("verify means --out " + dir.string()) == 0);
    fs::path json = dir / "verify_means.json";
    fs::path csv = dir / "verify_means.csv";
    CHECK(run_cli("report " + json.string() + " " + csv.string()) == 0);
    std::string text = slurp(csv);
    CHECK(!text.empty());
    CHECK(text.find(',') != std::string::npos);
    // json-to-json round trip validates and re-emits
    fs::path copy = dir / "copy.json";
    CHECK(run_cli("report " + json.string() + " " + copy.string()) == 0);
    CHECK(slurp(copy) == slurp(json));
    // unsupported extension
    CHECK(run_cli("report " + json.string() + " " + (dir / "out.txt").string()) == 2);
}
