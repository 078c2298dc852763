// Exercises the CLI as a subprocess: CSV schema, JSON/CSV consistency,
// sweep monotone flags, the validation negative control.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = std::string("UWOC_FIXTURE_DIR=") + UWOC_SOURCE_DIR +
                            "/fixtures " + UWOC_CLI_PATH + " " + args + " > " + out_path +
                            " 2> cli_test_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

constexpr const char* kHeader =
    "mu_db,mu2_db,metric,modulation,exact,asymptotic,mc_estimate,mc_stderr,rel_gap,exact_raw";

}  // namespace

TEST_CASE("eval emits the pinned csv schema with a monte carlo column") {
    const auto res = run_cli(
                             "eval --metric outage --hop1 egg_a --hop2 egg_b "
                             "--detection imdd --detection2 imdd --mu-db 30 "
                             "--gamma-th-db 0 --mc-samples 100000 --seed 7 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto lines = split(res.out, '\n');
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == kHeader);
    const auto cols = split(lines[1], ',');
    REQUIRE(cols.size() == 10);
    CHECK(cols[0] == "30");
    CHECK(cols[2] == "outage");
    const double exact = std::stod(cols[4]);
    const double mc = std::stod(cols[6]);
    const double se = std::stod(cols[7]);
    CHECK(exact > 0.0);
    CHECK(exact < 1.0);
    CHECK(std::abs(exact - mc) < 4.0 * se + 1e-9);
}

TEST_CASE("json and csv outputs carry the same numbers") {
    const std::string args =
        "eval --metric ber --modulation BPSK --hop1 egg_a --hop2 egg_b "
        "--detection heterodyne --detection2 heterodyne --mu-db 25";
    const auto csv = run_cli(args + " --format csv");
    const auto js = run_cli(args + " --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const auto row = split(split(csv.out, '\n')[1], ',');
    const auto parsed = nlohmann::json::parse(js.out);
    const auto& jrow = parsed.at("rows").at(0);
    // CSV carries 6 significant digits; JSON full precision.
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", jrow.at("exact").get<double>());
    CHECK(row[4] == buf);
    std::snprintf(buf, sizeof(buf), "%.6g", jrow.at("asymptotic").get<double>());
    CHECK(row[5] == buf);
    std::snprintf(buf, sizeof(buf), "%.6g", jrow.at("rel_gap").get<double>());
    CHECK(row[8] == buf);
}

TEST_CASE("sweep produces a non-increasing outage column with a pass flag") {
    const auto res = run_cli(
                             "sweep --metric outage --hop1 egg_a --hop2 egg_b "
                             "--grid 0:50:5 --gamma-th-db 0 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto lines = split(res.out, '\n');
    // header + 11 rows + flag comment + trailing blank
    REQUIRE(lines.size() >= 13);
    CHECK(lines[0] == kHeader);
    double prev = 2.0;
    for (int i = 1; i <= 11; ++i) {
        const auto cols = split(lines[std::size_t(i)], ',');
        REQUIRE(cols.size() == 10);
        const double exact = std::stod(cols[4]);
        CHECK(exact <= prev + 1e-12);
        prev = exact;
    }
    CHECK(lines[12] == "# monotone_check: pass");
}

TEST_CASE("unbalanced sweep keeps bpsk under ook rowwise") {
    const std::string common =
        "sweep --hop1 egg_a --hop2 egg_b --grid 10:40:10 --mu2-offset-db 7 --format json ";
    const auto bpsk = run_cli(common +
                              "--metric ber --modulation BPSK --detection heterodyne "
                              "--detection2 heterodyne");
    const auto ook = run_cli(common +
                             "--metric ber --modulation OOK --detection imdd "
                             "--detection2 imdd");
    REQUIRE(bpsk.exit_code == 0);
    REQUIRE(ook.exit_code == 0);
    const auto jb = nlohmann::json::parse(bpsk.out).at("rows");
    const auto jo = nlohmann::json::parse(ook.out).at("rows");
    REQUIRE(jb.size() == jo.size());
    for (std::size_t i = 0; i < jb.size(); ++i) {
        CHECK(jb.at(i).at("mu2_db").get<double>() ==
              jb.at(i).at("mu_db").get<double>() + 7.0);
        CHECK(jb.at(i).at("exact").get<double>() <= jo.at(i).at("exact").get<double>());
    }
}

TEST_CASE("heterodyne sweep dominates imdd rowwise") {
    const std::string common =
        "sweep --metric outage --hop1 egg_a --hop2 egg_b --grid 10:50:10 "
        "--gamma-th-db 0 --format json ";
    const auto het =
        run_cli(common + "--detection heterodyne --detection2 heterodyne");
    const auto imdd = run_cli(common + "--detection imdd --detection2 imdd");
    REQUIRE(het.exit_code == 0);
    REQUIRE(imdd.exit_code == 0);
    const auto jh = nlohmann::json::parse(het.out).at("rows");
    const auto ji = nlohmann::json::parse(imdd.out).at("rows");
    for (std::size_t i = 0; i < jh.size(); ++i) {
        CHECK(jh.at(i).at("exact").get<double>() <= ji.at(i).at("exact").get<double>());
    }
}

TEST_CASE("list-modulations shows the registry") {
    const auto res = run_cli("list-modulations");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("OOK") != std::string::npos);
    CHECK(res.out.find("BPSK") != std::string::npos);
    CHECK(res.out.find("16-QAM") != std::string::npos);
}

TEST_CASE("config file drives the run and flags override it") {
    const char* path = "cli_test_config.tmp.json";
    {
        std::ofstream out(path);
        out << R"({"hop1": {"fixture": "egg_a", "detection": "imdd", "mu_db": 20},
                   "hop2": {"fixture": "egg_b"},
                   "metric": "capacity", "format": "csv"})";
    }
    const auto res = run_cli(std::string("eval --config ") + path);
    REQUIRE(res.exit_code == 0);
    auto cols = split(split(res.out, '\n')[1], ',');
    CHECK(cols[0] == "20");
    CHECK(cols[2] == "capacity");
    const double cap20 = std::stod(cols[4]);

    const auto res30 = run_cli(std::string("eval --config ") + path + " --mu-db 30");
    cols = split(split(res30.out, '\n')[1], ',');
    CHECK(cols[0] == "30");
    CHECK(std::stod(cols[4]) > cap20);
    std::remove(path);
}

TEST_CASE("validate quick run passes and the sign hook is a working negative control") {
    const auto ok = run_cli(
                            "validate --mc-samples 20000 --seed 12345 --format csv");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("ALL CHECKS PASSED") != std::string::npos);

    const auto bad = run_cli(
                             "validate --mc-samples 20000 --seed 12345 --inject-sign-error");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL [ 1] identity/exp_kernel") != std::string::npos);
}

TEST_CASE("errors surface with actionable messages") {
    const auto res = run_cli("eval --metric nonsense");
    CHECK(res.exit_code == 1);
    const auto res2 = run_cli("eval --metric ber --modulation NOPE");
    CHECK(res2.exit_code == 1);
}

TEST_CASE("degenerate asymptotics surface as an explicit marker") {
    // egg_a paired with itself at r1=r2 puts Gamma(a1 - a2 c2/c1) exactly on
    // a pole, so the asymptotic column must say so rather than fake a number.
    const auto res = run_cli(
        "eval --metric outage --hop1 egg_a --hop2 egg_a "
        "--detection imdd --detection2 imdd --mu-db 30 --format csv");
    REQUIRE(res.exit_code == 0);
    const auto cols = split(split(res.out, '\n')[1], ',');
    REQUIRE(cols.size() == 10);
    CHECK(cols[5] == "degenerate");
    CHECK(split(res.out, '\n')[1].find("degenerate") != std::string::npos);
}
