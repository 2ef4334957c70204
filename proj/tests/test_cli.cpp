#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "cli_capture_" + std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string cmd = std::string(SCG_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

json parse_report(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("scalars subcommand") {
    RunResult r = run_cli("scalars --q 4");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["command"] == "scalars");
    CHECK(j["A0"] == json::array({2, 3}));
    CHECK(j["A"] == json::array({2, 3}));
    CHECK(j["outcome"] == "ok");

    RunResult r8 = run_cli("scalars --q 8");
    CHECK(parse_report(r8)["A"] == json::array({2, 4, 6}));

    RunResult r2 = run_cli("scalars --q 2");
    REQUIRE(r2.rc == 0);
    json j2 = parse_report(r2);
    CHECK(j2["A0"] == json::array({1}));
    CHECK(j2.contains("note"));

    CHECK(run_cli("scalars --q 3").rc == 3);
    CHECK(run_cli("scalars").rc == 3);
    CHECK(run_cli("nonsense --q 4").rc == 3);
}

TEST_CASE("construct subcommand") {
    RunResult r = run_cli("construct --q 4 --d 4 --type +");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["parameters"]["scalars"] == json::array({2, 3, 2}));
    CHECK(j["parameters"]["type"] == "+");
    CHECK(j["generators"].size() == 4);

    RunResult rsp = run_cli("construct --q 4 --d 5 --type sp");
    REQUIRE(rsp.rc == 0);
    CHECK(parse_report(rsp)["generators"].size() == 5);

    // parity and q=2 restrictions are usage errors
    CHECK(run_cli("construct --q 4 --d 3 --type +").rc == 3);
    CHECK(run_cli("construct --q 4 --d 4 --type sp").rc == 3);
    CHECK(run_cli("construct --q 2 --d 4 --type +").rc == 3);
    CHECK(run_cli("construct --q 2 --d 3 --type sp").rc == 3);
    CHECK(run_cli("construct --q 4 --d 4").rc == 3);

    // explicit scalars bypass type selection, q=2 demonstration included
    RunResult rdemo = run_cli("construct --q 2 --scalars 1,1,1");
    REQUIRE(rdemo.rc == 0);
    CHECK(parse_report(rdemo)["generators"].size() == 4);
    CHECK(run_cli("construct --q 4 --scalars 1,2").rc == 3);  // 1 is not admissible
}

TEST_CASE("sp4 subcommand is a construct alias") {
    RunResult r = run_cli("sp4 --q 4");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["parameters"]["type"] == "sp4");
    CHECK(j["parameters"]["alpha"] == 2);
    CHECK(j["generators"].size() == 4);
    CHECK(run_cli("sp4 --q 2").rc == 3);
}

TEST_CASE("verify subcommand") {
    RunResult r = run_cli("verify --q 4 --d 3 --type sp");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["checks"]["involutions"] == true);
    CHECK(j["checks"]["isometries"] == true);
    CHECK(j["checks"]["string_condition"] == true);
    CHECK(j["checks"]["intersection_property"] == true);
    CHECK(j["group_order"] == 60);
    CHECK(j["schlafli"] == json::array({5, 5}));
    CHECK(j["outcome"] == "ok");

    // identical command lines give byte-identical reports
    RunResult again = run_cli("verify --q 4 --d 3 --type sp");
    CHECK(again.out == r.out);

    // thread count must not change the result fields
    RunResult threaded = run_cli("verify --q 4 --d 3 --type sp --threads 3");
    json jt = parse_report(threaded);
    CHECK(jt["group_order"] == j["group_order"]);
    CHECK(jt["checks"] == j["checks"]);
    CHECK(jt["schlafli"] == j["schlafli"]);

    RunResult rm = run_cli("verify --q 4 --d 2 --type -");
    CHECK(parse_report(rm)["group_order"] == 10);

    RunResult rfull = run_cli("verify --q 4 --d 3 --type sp --mode full");
    CHECK(parse_report(rfull)["checks"]["intersection_property"] == true);
    CHECK(run_cli("verify --q 4 --d 3 --type sp --mode bogus").rc == 3);

    // a tight cap is a distinct failure class
    RunResult capped = run_cli("verify --q 4 --d 3 --type sp --cap 30");
    CHECK(capped.rc == 2);
    CHECK(parse_report(capped)["outcome"] == "cap_exceeded");
}

TEST_CASE("verify from a generator file") {
    RunResult w = run_cli("construct --q 4 --d 3 --type sp --out gens_ok.txt");
    REQUIRE(w.rc == 0);

    RunResult r = run_cli("verify --q 4 --type sp --gens gens_ok.txt");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["group_order"] == 60);
    CHECK(j["checks"]["isometries"] == true);

    // without type flags the isometry check has no reference form
    RunResult rn = run_cli("verify --q 4 --gens gens_ok.txt");
    REQUIRE(rn.rc == 0);
    CHECK(parse_report(rn)["checks"]["isometries"].is_null());

    // tamper with one entry: the report flags it and the exit code is 1
    std::ifstream in("gens_ok.txt");
    std::ostringstream buf;
    std::string line;
    bool flipped = false;
    while (std::getline(in, line)) {
        if (!flipped && !line.empty() && line[0] != '#') {
            line[0] = line[0] == '1' ? '2' : '1';
            flipped = true;
        }
        buf << line << "\n";
    }
    REQUIRE(flipped);
    std::ofstream("gens_bad.txt") << buf.str();
    RunResult rb = run_cli("verify --q 4 --type sp --gens gens_bad.txt");
    CHECK(rb.rc == 1);
    json jb = parse_report(rb);
    CHECK(jb["outcome"] == "verification_failed");
    bool involutions_ok = jb["checks"]["involutions"] == true;
    bool isometries_ok = jb["checks"]["isometries"] == true;
    CHECK_FALSE((involutions_ok && isometries_ok));

    CHECK(run_cli("verify --q 4 --type sp --gens missing_file.txt").rc == 3);
    std::ofstream("gens_garbage.txt") << "not a matrix\n";
    CHECK(run_cli("verify --q 4 --gens gens_garbage.txt").rc == 3);
    std::remove("gens_ok.txt");
    std::remove("gens_bad.txt");
    std::remove("gens_garbage.txt");
}

TEST_CASE("verify the rank-4 symplectic string") {
    RunResult r = run_cli("verify --q 4 --type sp4");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["group_order"] == 979200);
    CHECK(j["checks"]["isometries"] == true);
    CHECK(j["checks"]["intersection_property"] == true);
}

TEST_CASE("polytope subcommand") {
    RunResult r = run_cli("polytope --q 4 --d 3 --type sp --out inc.txt");
    REQUIRE(r.rc == 0);
    json j = parse_report(r);
    CHECK(j["f_vector"] == json::array({6, 15, 6}));
    CHECK(j["flag_count"] == 60);
    std::string file = slurp("inc.txt");
    CHECK(file.substr(0, 13) == "3 3 4 60 5 5\n");
    std::remove("inc.txt");

    RunResult rdemo = run_cli("polytope --q 2 --scalars 1,1");
    REQUIRE(rdemo.rc == 0);
    CHECK(parse_report(rdemo)["f_vector"] == json::array({4, 6, 4}));

    RunResult capped = run_cli("polytope --q 4 --d 3 --type sp --cap 30");
    CHECK(capped.rc == 2);
    CHECK(parse_report(capped)["outcome"] == "cap_exceeded");
}
