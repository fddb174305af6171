// End-to-end checks of the command-line surface: exit codes, file outputs,
// determinism. Spawns the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxop/experiments.hpp"
#include "maxop/io.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

std::string cli_path() { return MAXOP_CLI_PATH; }

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("maxop_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("help exits zero and every subcommand documents itself") {
    CHECK(run_cli("--help") == 0);
    for (const char* sub : {"maximal-curve", "average-profile", "holder-norm", "annular-decay",
                            "verify-theorem1", "verify-continuity", "counterexample",
                            "lemma-check"})
        CHECK(run_cli(std::string(sub) + " --help") == 0);
}

TEST_CASE("counterexample command: report file and exit code") {
    TempDir tmp;
    const auto out = tmp.path / "report.json";
    CHECK(run_cli("counterexample --n 100 --out " + out.string()) == 0);
    const maxop::Json j = maxop::Json::parse(slurp(out));
    CHECK(j["inequality_holds"] == true);
    CHECK(j["mfn_at_half"]["s"] == "2599/10000");
    CHECK(std::stod(j["norm_lower_bound"].get<std::string>()) >= 1.0 / 6.0);
    // out-of-range n is an input error
    CHECK(run_cli("counterexample --n 2 --out " + out.string()) == 2);

    // sweep mode emits one CSV row per n
    const auto sweep = tmp.path / "sweep.csv";
    CHECK(run_cli("counterexample --n 3 --n-max 12 --out " + sweep.string()) == 0);
    const std::string table = slurp(sweep);
    CHECK(table.find("n,dn,") == 0);
    CHECK(std::count(table.begin(), table.end(), '\n') == 11);  // header + 10 rows
    CHECK(table.find("\n3,17/36,") != std::string::npos);
}

TEST_CASE("maximal-curve matches the closed form") {
    TempDir tmp;
    const auto out = tmp.path / "mf.csv";
    REQUIRE(run_cli("maximal-curve --fn hat --grid 0:1:11 --out " + out.string()) == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,value_p,value_q,value_s,value_float");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string x, p, q, s, f;
        std::getline(ss, x, ',');
        std::getline(ss, p, ',');
        std::getline(ss, q, ',');
        std::getline(ss, s, ',');
        std::getline(ss, f, ',');
        const maxop::SurdValue expected = maxop::mf_closed_form(maxop::parse_rational(x));
        CHECK(maxop::parse_rational(p) == expected.p());
        CHECK(maxop::parse_rational(q) == expected.q());
        CHECK(maxop::parse_rational(s) == expected.s());
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
    TempDir tmp;
    const auto a = tmp.path / "a.json";
    const auto b = tmp.path / "b.json";
    const std::string args = "verify-theorem1 --trials 3 --seed 42 --grid-count 16 --out ";
    REQUIRE(run_cli(args + a.string()) == 0);
    REQUIRE(run_cli(args + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
}

TEST_CASE("annular-decay on the collinear fixture") {
    TempDir tmp;
    const auto dist = tmp.path / "dist.csv";
    const auto mass = tmp.path / "mass.csv";
    maxop::write_file(dist.string(), "0,1,2\n1,0,1\n2,1,0\n");
    maxop::write_file(mass.string(), "1\n1\n1\n");
    const auto out = tmp.path / "decay.json";
    REQUIRE(run_cli("annular-decay --distances " + dist.string() + " --masses " + mass.string() +
                    " --delta 1 --out " + out.string()) == 0);
    const maxop::Json j = maxop::Json::parse(slurp(out));
    CHECK(j["best_k"] == "3/2");
    CHECK(j["exact"] == true);
    CHECK(j["witness"]["epsilon"] == "1/3");

    // malformed CSV: exit 2 with a line-numbered diagnostic
    maxop::write_file(dist.string(), "0,1,2\n1,zz,1\n2,1,0\n");
    CHECK(run_cli("annular-decay --distances " + dist.string() + " --masses " + mass.string() +
                  " --delta 1 --out " + out.string()) == 2);
    // delta out of range: exit 2
    maxop::write_file(dist.string(), "0,1,2\n1,0,1\n2,1,0\n");
    CHECK(run_cli("annular-decay --distances " + dist.string() + " --masses " + mass.string() +
                  " --delta 2 --out " + out.string()) == 2);
}

TEST_CASE("lemma-check single shot and seeded trials") {
    TempDir tmp;
    const auto out = tmp.path / "lemma.json";
    CHECK(run_cli("lemma-check --fn hat --x 0 --periods-beyond 2 --grid-count 2000 --out " +
                  out.string()) == 0);
    const maxop::Json j = maxop::Json::parse(slurp(out));
    CHECK(j["all_hold"] == true);
    CHECK(run_cli("lemma-check --trials 2 --seed 9 --periods-beyond 1 --grid-count 500 --out " +
                  out.string()) == 0);
    // --trials without --seed is an input error
    CHECK(run_cli("lemma-check --trials 2 --periods-beyond 1 --grid-count 500 --out " +
                  out.string()) == 2);
}

TEST_CASE("holder-norm of Mf with constant exponent") {
    TempDir tmp;
    const auto out = tmp.path / "holder.json";
    REQUIRE(run_cli("holder-norm --fn hat --of mf --grid 0:1:101 --alpha 1 --out " +
                    out.string()) == 0);
    const maxop::Json j = maxop::Json::parse(slurp(out));
    CHECK(std::stod(j["seminorm"].get<std::string>()) == doctest::Approx(1.0).epsilon(1e-12));
    // unknown function keyword: input error (file not found)
    CHECK(run_cli("holder-norm --fn nosuch --of mf --grid 0:1:5 --alpha 1 --out " +
                  out.string()) == 2);
    // bad grid spec
    CHECK(run_cli("holder-norm --fn hat --of mf --grid 0:1 --alpha 1 --out " + out.string()) ==
          2);
}

TEST_CASE("function JSON file input") {
    TempDir tmp;
    const auto fn = tmp.path / "tent.json";
    maxop::write_file(fn.string(),
                      R"({"period": "2/1", "points": [["-1/1","1/1"], ["0/1","0/1"]]})");
    const auto out = tmp.path / "c.csv";
    CHECK(run_cli("maximal-curve --fn " + fn.string() + " --grid 0:1:3 --out " + out.string()) ==
          0);
    // malformed JSON: exit 2
    maxop::write_file(fn.string(), "{not json");
    CHECK(run_cli("maximal-curve --fn " + fn.string() + " --grid 0:1:3 --out " + out.string()) ==
          2);
}

TEST_CASE("verify-continuity runs a short sweep") {
    TempDir tmp;
    const auto out = tmp.path / "cont.json";
    REQUIRE(run_cli("verify-continuity --fn hat --kmin 3 --kmax 6 --alpha 1 --beta 1/2 "
                    "--grid 0:2:17 --out " +
                    out.string()) == 0);
    const maxop::Json j = maxop::Json::parse(slurp(out));
    CHECK(j["all_bounds_hold"] == true);
    CHECK(j["rows"].size() == 4);
    // beta >= alpha rejected
    CHECK(run_cli("verify-continuity --fn hat --kmin 3 --kmax 6 --alpha 1 --beta 1 --grid "
                  "0:2:17 --out " +
                  out.string()) == 2);
}
