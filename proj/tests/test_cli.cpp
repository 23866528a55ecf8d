#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SYMQ_CLI_PATH) + " --json-only " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json result(const Run& r) { return nlohmann::json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("headline commands")
{
    const auto c = run("color --catalog '10_1^{-1,-1}' --quandle dihedral:4 --involution antipodal --count");
    REQUIRE(c.code == 0);
    CHECK(result(c).at("count") == 0);

    const auto o = run("obstruct --upper '8_1^{-1,-1}' --lower '10_1^{-1,-1}' --quandle dihedral:4 "
                       "--involution antipodal");
    REQUIRE(o.code == 0);
    CHECK(result(o).at("verdict") == "obstructed");

    const auto e = run("euler --catalog 0_1");
    REQUIRE(e.code == 0);
    CHECK(result(e).at("euler_characteristic") == 2);
}

TEST_CASE("reports are byte-identical across runs")
{
    for (const char* args : {"color --catalog '8_1^{-1,-1}' --quandle dihedral:4 --involution antipodal --list",
                             "admissible --catalog '10_1^{-1,-1}' --budget 5000", "involutions --quandle dihedral:8",
                             "catalog"}) {
        CAPTURE(args);
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const auto j = nlohmann::json::parse(a.out);
        CHECK(j.contains("command"));
        CHECK(j.contains("inputs_digest"));
        CHECK(j.contains("warnings"));
    }
}

TEST_CASE("exit codes")
{
    const std::string r4 = " --quandle dihedral:4 --involution antipodal";
    CHECK(run("color --catalog '10_1^{-1,-1}'" + r4).code == 0);
    CHECK(run("--strict color --catalog '10_1^{-1,-1}'" + r4).code == 1);
    CHECK(run("--strict color --catalog '8_1^{-1,-1}'" + r4).code == 0);
    CHECK(run("--strict obstruct --upper '8_1^{-1,-1}' --lower '10_1^{-1,-1}'" + r4).code == 1);
    CHECK(run("--strict admissible --catalog trefoil").code == 1);

    CHECK(run("frobnicate").code == 2);
    CHECK(run("color --bogus-flag").code == 2);
    CHECK(run("color --catalog no_such_entry").code == 2);
    CHECK(run("color --diagram /nonexistent.chd").code == 2);
    CHECK(run("color --catalog trefoil --quandle dihedral:0").code == 2);
    CHECK(run("admissible --catalog 0_1 --budget 0").code == 2);
    CHECK(run("color --catalog trefoil --count --list").code == 2);
}

TEST_CASE("weights and cocycle obstruction from files")
{
    const std::string dir = std::string(SYMQ_TEST_TMP);
    {
        std::ofstream(dir + "/phi.csv") << "modulus,3\n0,0,0,1,1\n0,1,1,0,2\n";
        std::ofstream(dir + "/t1.csv") << "coloring_id,sign,y,x1,x2,x3\nA,1,0,0,0,1\n";
        std::ofstream(dir + "/t0.csv") << "A,1,0,1,1,0\nB\n";
    }
    const auto w = run("weights --cocycle " + dir + "/phi.csv --triples " + dir + "/t1.csv");
    REQUIRE(w.code == 0);
    CHECK(result(w).at("multiset") == nlohmann::json::array({1}));
    CHECK_FALSE(nlohmann::json::parse(w.out).at("warnings").empty());

    const auto o = run("obstruct --method cocycle --cocycle " + dir + "/phi.csv --upper-triples " + dir +
                       "/t1.csv --lower-triples " + dir + "/t0.csv");
    REQUIRE(o.code == 0);
    CHECK(result(o).at("verdict") == "obstructed");
}
