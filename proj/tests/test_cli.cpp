#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "kring/rank4.hpp"
#include "kring/ring_io.hpp"
#include "kring/verlinde.hpp"

using namespace kring;

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

fs::path temp_path(const std::string& suffix) {
    static std::atomic<int> counter{0};
    return fs::temp_directory_path() /
           ("kring_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + suffix);
}

CmdResult run_cli(const std::string& args) {
    fs::path out_path = temp_path(".out");
    std::string cmd = std::string(KRING_CLI_PATH) + " " + args + " > " +
                      out_path.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CmdResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream f(out_path);
    std::stringstream buf;
    buf << f.rdbuf();
    res.out = buf.str();
    fs::remove(out_path);
    return res;
}

fs::path write_file(const std::string& content, const std::string& suffix = ".json") {
    fs::path p = temp_path(suffix);
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

}

TEST_CASE("cli: verlinde verify emits a full report and exits 0") {
    CmdResult r = run_cli("verlinde verify --p 7 --format json");
    REQUIRE(r.exit_code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["tool"] == "kring");
    CHECK(j["version"].get<std::string>() != "");
    CHECK(j["command"] == "verlinde verify");
    CHECK(j["config"]["primes"][0] == 7);
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["ok"] == true);
    CHECK(j["results"][0]["checks"].size() == 8);
    for (const auto& c : j["results"][0]["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("cli: verlinde verify accepts a prime list") {
    CmdResult r = run_cli("verlinde verify --primes 5,7,11 --format json");
    REQUIRE(r.exit_code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["results"].size() == 3);
}

TEST_CASE("cli: verlinde build emits a reloadable canonical ring file") {
    CmdResult r = run_cli("verlinde build --p 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == ring_to_json_string(build_verlinde(5)));
    BasedRing back = parse_ring(r.out);
    CHECK(back == build_verlinde(5));
    CmdResult plus = run_cli("verlinde build --p 7 --plus");
    CHECK(parse_ring(plus.out) == build_verlinde_plus(7));
    // byte-identical across runs
    CHECK(run_cli("verlinde build --p 5").out == r.out);
}

TEST_CASE("cli: table reports embed the version and resolved config") {
    CmdResult r = run_cli("verlinde adams --p 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("kring") == 0);
    CHECK(r.out.find("command: verlinde adams") != std::string::npos);
    CHECK(r.out.find("config:") != std::string::npos);
    CHECK(r.out.find("psi2(L3) = L1 - L3") != std::string::npos);
}

TEST_CASE("cli: fixed points listing and budget refusal") {
    CmdResult ok = run_cli("verlinde fixed-points --p 5 --bound 3");
    REQUIRE(ok.exit_code == 0);
    CHECK(ok.out.find("3*L1") != std::string::npos);
    CmdResult refused = run_cli("verlinde fixed-points --p 29 --bound 3");
    CHECK(refused.exit_code == 3);
}

TEST_CASE("cli: classification output is byte-identical across worker counts") {
    CmdResult a = run_cli("classify rank3 --bound 2 --format json --workers 1");
    CmdResult b = run_cli("classify rank3 --bound 2 --format json --workers 4");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    ojson j = ojson::parse(a.out);
    const ojson& pipe = j["results"][0];
    CHECK(pipe["survivor_classes"].size() == 2);
    CHECK(pipe["survivor_classes"][0] == ojson::array({0, 1, 0, 1}));
    CHECK(pipe["survivor_classes"][1] == ojson::array({1, 1, 0, 1}));
    CHECK(pipe["family_certificate"]["certified"] == true);
}

TEST_CASE("cli: rank-4 classification identifies the integral survivors") {
    CmdResult r = run_cli("classify rank4 --bound 3 --format json");
    REQUIRE(r.exit_code == 0);
    ojson j = ojson::parse(r.out);
    const ojson& pipe = j["results"][0];
    CHECK(j["config"]["coeff_bound"] == 1);  // rank-4 default
    CHECK(pipe["survivor_classes"].size() == 2);
    CHECK(pipe["survivor_classes"][0] == ojson::array({0, 0, 0, 1, 0, 0}));
    CHECK(pipe["survivor_classes"][1] == ojson::array({1, 2, 1, 0, 0, 0}));
    bool saw_ix = false;
    for (const auto& rep : pipe["reports"]) {
        if (rep["known_name"] == "Izumi-Xu") {
            saw_ix = true;
            CHECK(rep["status"] == "eliminated");
            CHECK(rep["filters"]["fpdim_field"]["witness"] == "t^2 - 3*t - 3");
            CHECK(rep["total_dim"]["min_poly"] == "t^2 - 21*t + 63");
            CHECK(rep["total_dim"]["closed_form"] == "(21 + 3*sqrt(21))/2");
            CHECK(rep["total_dim"]["alternative_satisfies_min_poly"] == false);
        }
    }
    CHECK(saw_ix);
}

TEST_CASE("cli: ring verify exit codes distinguish broken rings from bad files") {
    fs::path good = write_file(ring_to_json_string(
        build_rank4({Int(1), Int(3), Int(1), Int(0), Int(0), Int(0)})));
    CmdResult ok = run_cli("ring verify " + good.string() + " --format json");
    CHECK(ok.exit_code == 0);
    ojson j = ojson::parse(ok.out);
    CHECK(j["results"][0]["ok"] == true);
    CHECK(j["results"][0]["rank"] == 4);

    fs::path broken = write_file(
        "{\"rank\": 2, \"labels\": [\"1\", \"X\"], \"unit\": 0, \"dual\": [0, 1],"
        " \"N\": [[[1,0],[0,1]],[[0,1],[0,1]]]}");
    CHECK(run_cli("ring verify " + broken.string()).exit_code == 1);

    fs::path garbage = write_file("{\"rank\": 1,, }");
    CHECK(run_cli("ring verify " + garbage.string()).exit_code == 2);

    fs::path negative = write_file(
        "{\"rank\": 2, \"labels\": [\"1\", \"X\"], \"unit\": 0, \"dual\": [0, 1],"
        " \"N\": [[[1,0],[0,1]],[[0,1],[-1,0]]]}");
    CHECK(run_cli("ring verify " + negative.string()).exit_code == 2);

    CHECK(run_cli("ring verify /nonexistent/ring.json").exit_code == 2);

    // a broken ring blocks dependent commands unless --skip-verify
    CHECK(run_cli("ring decomposition " + broken.string()).exit_code == 1);
    CHECK(run_cli("ring decomposition " + broken.string() + " --skip-verify").exit_code == 0);
    fs::remove(good);
    fs::remove(broken);
    fs::remove(garbage);
    fs::remove(negative);
}

TEST_CASE("cli: obstruct on a loaded Izumi-Xu file reports the elimination") {
    fs::path ix = write_file(ring_to_json_string(
        build_rank4({Int(1), Int(3), Int(1), Int(0), Int(0), Int(0)})));
    CmdResult r =
        run_cli("ring obstruct " + ix.string() + " --primes 5..100 --coeff-bound 1 --format json");
    REQUIRE(r.exit_code == 0);
    ojson j = ojson::parse(r.out);
    const ojson& rep = j["results"][0];
    CHECK(rep["known_name"] == "Izumi-Xu");
    CHECK(rep["status"] == "eliminated");
    CHECK(rep["filters"]["adams"]["viable_count"] == 1);
    CHECK(rep["filters"]["fpdim_field"]["fails_all"] == true);
    CHECK(rep["filters"]["fpdim_field"]["pass_primes"].empty());
    std::string note = rep["total_dim"]["note"].get<std::string>();
    CHECK(note.find("(21 + 3*sqrt(21))/2") != std::string::npos);
    CHECK(note.find("(21 + 2*sqrt(21))/2") != std::string::npos);
    fs::remove(ix);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("verlinde").exit_code == 2);
    CHECK(run_cli("verlinde verify").exit_code == 2);          // needs --p or --primes
    CHECK(run_cli("verlinde verify --p 6").exit_code == 2);    // not a prime
    CHECK(run_cli("verlinde verify --p 3").exit_code == 2);    // below 5
    CHECK(run_cli("classify rank3").exit_code == 2);           // missing --bound
    CHECK(run_cli("classify rank3 --bound 2 --primes nope").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: galois subcommands") {
    CmdResult orbits = run_cli("galois orbits --p 7 --m 3 --format json");
    REQUIRE(orbits.exit_code == 0);
    ojson jo = ojson::parse(orbits.out);
    CHECK(jo["results"][0]["k"] == 1);
    CHECK(jo["results"][0]["orbits"][0] == ojson::array({1, 2, 3}));

    CmdResult rb = run_cli("galois rank-bound --p 13 --format json");
    REQUIRE(rb.exit_code == 0);
    ojson jr = ojson::parse(rb.out);
    CHECK(jr["results"][0]["ok"] == true);
    CHECK(jr["results"][0]["entries"].size() == 4);  // k in {2,3}, both parities
    for (const auto& e : jr["results"][0]["entries"])
        CHECK(e["cone_dim"].get<long>() < e["k"].get<long>());

    CHECK(run_cli("galois embed --p 11").exit_code == 0);
}

TEST_CASE("cli: output lands in the requested file") {
    fs::path out = temp_path(".json");
    CmdResult r = run_cli("verlinde adams --p 5 --plus --format json -o " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());  // nothing on stdout
    std::ifstream f(out);
    std::stringstream buf;
    buf << f.rdbuf();
    ojson j = ojson::parse(buf.str());
    CHECK(j["config"]["plus"] == true);
    // the plus-basis Adams matrix on (L1, L3): psi2(L3) = L1 - L3
    CHECK(j["results"][0]["matrix"] == ojson::array({{1, 1}, {0, -1}}));
    fs::remove(out);
}
