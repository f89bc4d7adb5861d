#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace
{

const std::string cli = THETA3_CLI;
const std::string fixtures = THETA3_FIXTURES_DIR;

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string &args, bool merge_stderr = false)
{
    const std::string cmd = cli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        r.out.append(buf, n);
    }
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

int count_prefix(const std::string &s, const std::string &prefix)
{
    int n = 0;
    for (const auto &l : lines(s)) {
        n += l.rfind(prefix, 0) == 0;
    }
    return n;
}

} // namespace

TEST_CASE("chars")
{
    const Run r = run("chars");
    REQUIRE(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() > 64);
    int odd = 0;
    for (int i = 0; i < 64; ++i) {
        odd += ls[static_cast<std::size_t>(i)].find(" odd") != std::string::npos;
    }
    CHECK(odd == 28);
    CHECK(ls[0] == "000.000 even");
    CHECK(r.out.find("# w1 001.101 odd") != std::string::npos);
    CHECK(r.out.find("# w4' 111.000 even") != std::string::npos);
}

TEST_CASE("reconstruct the Klein fixture")
{
    const Run r = run("reconstruct " + fixtures + "/klein.period --method both");
    CHECK(r.status == 0);
    CHECK(count_prefix(r.out, "QUARTIC") == 2);
    CHECK(r.out.find("# theta_null evaluations 18") != std::string::npos);
    CHECK(r.out.find("# proportionality factor") != std::string::npos);

    // Relative names resolve against --fixture-dir.
    const Run rel = run("--fixture-dir " + fixtures + " reconstruct klein.period");
    CHECK(rel.status == 0);
    CHECK(count_prefix(rel.out, "QUARTIC") == 1);
}

TEST_CASE("malformed input exits 2 and names the line")
{
    const std::string path = "theta3_cli_bad.period";
    {
        std::ofstream f(path);
        f << "# broken\nPERIOD 3 6\n1 2 3\n";
    }
    const Run r = run("reconstruct " + path, true);
    CHECK(r.status == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run("reconstruct /nonexistent/file.period").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("chars --bogus").status == 2);
    CHECK(run("--format xml chars").status == 2);
    CHECK(run("verify nothing").status == 2);
}

TEST_CASE("a product of elliptic curves fails the reconstruction with exit 1")
{
    const std::string path = "theta3_cli_product.period";
    {
        std::ofstream f(path);
        f << "PERIOD 3 6\n"
             "1 0 0 0 0 0 0.1 1.1 0 0 0 0\n"
             "0 0 1 0 0 0 0 0 -0.2 0.9 0 0\n"
             "0 0 0 0 1 0 0 0 0 0 0.3 1.3\n";
    }
    const Run r = run("reconstruct " + path + " --method both", true);
    CHECK(r.status == 1);
    CHECK(r.out.find("conditioning floor") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("bitangents are 28 stable records")
{
    const std::string args = "bitangents " + fixtures + "/klein.period";
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.status == 0);
    CHECK(count_prefix(a.out, "LINE ") == 28);
    CHECK(a.out == b.out);
}

TEST_CASE("json output parses")
{
    const Run r = run("--format json reconstruct " + fixtures + "/klein.period --method both");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("results").size() == 2);
    CHECK(j.at("results")[0].at("quartic").size() == 15);

    const Run v = run("--format json --trials 2 --instances 3 verify all");
    REQUIRE(v.status == 0);
    CHECK_NOTHROW(static_cast<void>(nlohmann::json::parse(v.out)));

    const Run c = run("--format json chars");
    REQUIRE(c.status == 0);
    CHECK_NOTHROW(static_cast<void>(nlohmann::json::parse(c.out)));
}

TEST_CASE("verify exit codes and seeds")
{
    const Run a = run("--trials 2 --instances 3 verify all --seed 3");
    CHECK(a.status == 0);
    CHECK(lines(a.out).back() == "PASS");
    const Run b = run("--trials 2 --instances 3 verify all --seed 4");
    CHECK(b.status == 0);
    CHECK(a.out != b.out);
    CHECK(run("--trials 2 --instances 3 verify all --seed 3").out == a.out);
    CHECK(run("--trials 0 verify frobenius").status == 2);
}
