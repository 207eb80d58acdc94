#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the installed binary with stderr silenced and captures stdout.
RunResult run(const std::string& args) {
    std::string cmd = std::string(ICOSA_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

json run_json(const std::string& args, int expect_code = 0) {
    RunResult r = run(args);
    CHECK(r.exit_code == expect_code);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("group table") {
    json doc = run_json("group table --format json");
    CHECK(doc["schema"] == 1);
    CHECK(doc["order"] == 60);
    REQUIRE(doc["elements"].size() == 60);
    CHECK(doc["elements"][0]["label"] == "E");
    CHECK(doc["elements"][0]["decomposition"]["a"] == 0);
    REQUIRE(doc["classes"].size() == 5);
    int total = 0;
    for (const auto& c : doc["classes"]) total += c["size"].get<int>();
    CHECK(total == 60);
    REQUIRE(doc["table"].size() == 60);
    CHECK(doc["table"][0].size() == 60);

    json full = run_json("group table --parity");
    CHECK(full["order"] == 120);
    CHECK(full["elements"][60]["label"] == "P");
    CHECK(full["elements"][60]["inverted"] == "E");
    CHECK(full["table"].size() == 120);

    RunResult csv = run("group table --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.substr(0, 3) == ",E,");
}

TEST_CASE("character table") {
    json doc = run_json("irreps characters");
    REQUIRE(doc["table"].contains("A"));
    for (const auto& x : doc["table"]["A"]) CHECK(x == 1.0);
    CHECK(doc["table"]["H"][0] == 5.0);
    CHECK(doc["classes"][0]["name"] == "E");

    RunResult csv = run("irreps characters --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.substr(0, 4) == "rep,");
}

TEST_CASE("representation matrices") {
    json doc = run_json("irreps --rep H --element S1");
    CHECK(doc["rep"] == "H");
    CHECK(doc["dim"] == 5);
    REQUIRE(doc["matrix"].size() == 5);
    // Stored tables are real and orthogonal at an involution.
    double colnorm = 0.0;
    for (int i = 0; i < 5; ++i) {
        double re = doc["matrix"][i][0][0].get<double>();
        double im = doc["matrix"][i][0][1].get<double>();
        CHECK(im == 0.0);
        colnorm += re * re;
    }
    CHECK(colnorm == doctest::Approx(1.0).epsilon(1e-9));

    json par = run_json("irreps --rep Hu --element P");
    CHECK(par["matrix"][0][0][0].get<double>() == doctest::Approx(-1.0));
    json iden = run_json("irreps --rep T1");
    CHECK(iden["element"] == "E");
    CHECK(iden["matrix"][0][0][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("reduced bases") {
    json doc = run_json("bases --rep T1 --mu 0 --nu 0");
    REQUIRE(doc["vectors"].size() == 1);
    const json& v = doc["vectors"][0];
    CHECK(v["families"] == json::array({1, 2, 3, 4}));
    CHECK(v["N"] == 4.0);
    const double want[4] = {1.0, -1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i) {
        CHECK(v["C"][i][0].get<double>() == doctest::Approx(want[i]));
        CHECK(v["C"][i][1].get<double>() == doctest::Approx(0.0));
    }
    CHECK(v["psi"]["E"][0].get<double>() ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(5.0))).epsilon(1e-9));

    json all = run_json("bases --rep A --parity u");
    REQUIRE(all["vectors"].size() == 1);
    CHECK(all["vectors"][0]["psi"].size() == 120);
}

TEST_CASE("quanta reports") {
    json doc = run_json("sab b12h12 --quanta 0,1,2,3,4,5,6,7,8,9,10,11");
    CHECK(doc["orbit_size"] == 60);
    CHECK(doc["sets"]["A"] == 1);
    CHECK(doc["sets"]["T1"] == 3);
    CHECK(doc["sets"]["T2"] == 3);
    CHECK(doc["sets"]["G"] == 4);
    CHECK(doc["sets"]["H"] == 5);
    CHECK(doc["set_count"] == 16);
    CHECK(doc["total_dim"] == 60);
    CHECK(doc["complete"] == true);

    json flat = run_json("sab b12h12 --quanta 1,1,1,1,1,1,1,1,1,1,1,1");
    CHECK(flat["orbit_size"] == 1);
    CHECK(flat["sets"]["A"] == 1);
    CHECK(flat["complete"] == true);
}

TEST_CASE("sixty-site blocks") {
    json doc = run_json("huckel c60 --alpha 1 --block A_g");
    CHECK(doc["alpha"] == 1.0);
    REQUIRE(doc["blocks"].size() == 1);
    const json& b = doc["blocks"][0];
    CHECK(b["rep"] == "Ag");
    CHECK(b["dim"] == 1);
    CHECK(b["block"][0][0][0].get<double>() == doctest::Approx(-3.0));
    CHECK(b["block"][0][0][1].get<double>() == doctest::Approx(0.0));
    CHECK(b["entry_dev"].get<double>() < 1e-9);
    CHECK(doc["pass"] == true);

    json full = run_json("huckel c60 --alpha 2.5");
    CHECK(full["blocks"].size() == 10);
    CHECK(full["dense_spectrum"].size() == 60);
    CHECK(full["block_union"].size() == 60);
    CHECK(full["spectrum_max_dev"].get<double>() < 1e-8);
    CHECK(full["pass"] == true);
}

TEST_CASE("two-hundred-forty-site blocks") {
    json doc = run_json("huckel c240 --alpha 1 --arrangement b --block A_1g");
    CHECK(doc["arrangement"] == "b");
    REQUIRE(doc["blocks"].size() == 1);
    const json& b = doc["blocks"][0];
    CHECK(b["rep"] == "Ag");
    CHECK(b["dim"] == 3);
    CHECK(b["entry_dev"].get<double>() < 1e-8);
    // Middle diagonal entry is -2 alpha.
    CHECK(b["block"][1][1][0].get<double>() == doctest::Approx(-2.0));
    CHECK(doc["pass"] == true);

    json au = run_json("huckel c240 --block Au");
    CHECK(au["blocks"][0]["eigenvalues"][0].get<double>() ==
          doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("verification command") {
    json doc = run_json("verify --format json");
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"].size() > 30);
    for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("group").exit_code == 2);
    CHECK(run("irreps --rep Q").exit_code == 2);
    CHECK(run("huckel c60 --block B2g").exit_code == 2);
    CHECK(run("huckel c240 --arrangement z").exit_code == 2);
    CHECK(run("bases --rep T1 --mu 1").exit_code == 2);
    CHECK(run("bases --rep T1 --mu 2 --nu 0").exit_code == 2);
    CHECK(run("sab b12h12 --quanta 1,2,3").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("output is deterministic") {
    RunResult a = run("irreps --rep H --element S1");
    RunResult b = run("irreps --rep H --element S1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("huckel c60 --alpha 1 --block Hg");
    RunResult d = run("huckel c60 --alpha 1 --block Hg");
    CHECK(c.out == d.out);
}
