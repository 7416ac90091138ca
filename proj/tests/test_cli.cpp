#include "abreu/cli.hpp"
#include "abreu/expr.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace abreu;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args)
{
    std::ostringstream o, e;
    int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

fs::path scratch(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("abreu_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_domain(const fs::path& dir, const std::string& json)
{
    fs::path p = dir / "domain.json";
    std::ofstream(p) << json;
    return p;
}

const char* kInterval = R"({"kind": "interval", "bounds": [-1, 1]})";
const char* kDisk = R"({"kind": "disk", "center": [0, 0], "radius": 1})";

}  // namespace

TEST_CASE("expression parser")
{
    Point p(2.0, 3.0);
    CHECK(Expr::parse("1 + 2 * 3")(p) == doctest::Approx(7));
    CHECK(Expr::parse("2^3^2")(p) == doctest::Approx(512));
    CHECK(Expr::parse("-x1^2")(p) == doctest::Approx(-4));
    CHECK(Expr::parse("(x1 + xi2) / 5")(p) == doctest::Approx(1));
    CHECK(Expr::parse("log(exp(y)) + sqrt(abs(-x*8))")(p) == doctest::Approx(7));
    CHECK(Expr::parse("pi")(p) == doctest::Approx(M_PI));
    CHECK(Expr::parse("1e-2 * x2")(p) == doctest::Approx(0.03));
    CHECK(parse_field_spec("const:2.5")(p) == doctest::Approx(2.5));
    CHECK(parse_field_spec("expr:0.5*(x1^2+x2^2)")(p) == doctest::Approx(6.5));
    CHECK(parse_field_spec("x1*x2")(p) == doctest::Approx(6));
    CHECK_THROWS(Expr::parse("1 +"));
    CHECK_THROWS(Expr::parse("foo(1)"));
    CHECK_THROWS(Expr::parse("(1"));
    CHECK_THROWS(parse_field_spec("const:abc"));
}

TEST_CASE("solve writes deterministic artifacts")
{
    auto dir = scratch("solve");
    auto dom = write_domain(dir, kInterval);
    std::vector<std::string> args = {"solve", "--domain", dom.string(), "--h", "0.02", "--K", "const:2", "--phi", "const:0.6931471805599453",
                                     "--t", "0.1", "--out", (dir / "a").string()};
    auto r = cli(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    for (const char* f : {"fields/u.csv", "fields/u.json", "fields/w.csv", "fields/w.json", "residuals.json", "manifest.json"})
        CHECK(fs::exists(dir / "a" / f));
    auto res = nlohmann::json::parse(slurp(dir / "a" / "residuals.json"));
    CHECK(res["sup_linear"].get<double>() < 1e-5);
    args.back() = (dir / "b").string();
    REQUIRE(cli(args).code == 0);
    CHECK(slurp(dir / "a" / "fields/u.csv") == slurp(dir / "b" / "fields/u.csv"));
    CHECK(slurp(dir / "a" / "fields/w.csv") == slurp(dir / "b" / "fields/w.csv"));

    // Rerun from the manifest reproduces the fields byte for byte.
    auto m = cli({"solve", "--from-manifest", (dir / "a" / "manifest.json").string(), "--out", (dir / "c").string()});
    REQUIRE_MESSAGE(m.code == 0, m.err);
    CHECK(slurp(dir / "a" / "fields/u.csv") == slurp(dir / "c" / "fields/u.csv"));

    auto v = cli({"verify", "--run", (dir / "a").string(), "--lemmas", "2.1"});
    CHECK_MESSAGE(v.code == 0, (v.out + v.err));
    CHECK(fs::exists(dir / "a" / "estimates.json"));
    fs::remove_all(dir);
}

TEST_CASE("thread count does not change results")
{
    auto dir = scratch("threads");
    auto dom = write_domain(dir, kDisk);
    auto run = [&](const std::string& threads, const std::string& name) {
        setenv("ABREU_THREADS", threads.c_str(), 1);
        auto r = cli({"solve", "--domain", dom.string(), "--h", "0.125", "--K", "const:4", "--phi", "const:0", "--t", "0.1", "--out",
                      (dir / name).string()});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        auto l = cli({"legendre", "--run", (dir / name).string(), "--dual-h", "0.1"});
        REQUIRE_MESSAGE(l.code == 0, l.err);
    };
    run("1", "one");
    run("4", "four");
    unsetenv("ABREU_THREADS");
    CHECK(slurp(dir / "one" / "fields/u.csv") == slurp(dir / "four" / "fields/u.csv"));
    CHECK(slurp(dir / "one" / "legendre.json") == slurp(dir / "four" / "legendre.json"));
    fs::remove_all(dir);
}

TEST_CASE("exit codes")
{
    auto dir = scratch("codes");
    auto bad = dir / "bad.json";
    std::ofstream(bad) << "{ not json";
    auto out = dir / "never";
    CHECK(cli({"solve", "--domain", bad.string(), "--h", "0.1", "--out", out.string()}).code == kExitConfig);
    CHECK_FALSE(fs::exists(out));
    auto dom = write_domain(dir, kDisk);
    CHECK(cli({"solve", "--domain", dom.string(), "--h", "-1", "--out", out.string()}).code == kExitConfig);
    CHECK(cli({"solve", "--domain", dom.string(), "--h", "0.1", "--theta", "3", "--out", out.string()}).code == kExitConfig);
    CHECK(cli({"verify", "--run", (dir / "missing").string(), "--checks", "det-lower"}).code == kExitConfig);
    CHECK(cli({"nonsense"}).code == kExitConfig);

    // A strongly concave boundary datum makes the starting guess nonconvex.
    auto s = cli({"solve", "--domain", dom.string(), "--h", "0.125", "--K", "const:1", "--phi", "expr:-10*(x1^2+x2^2)", "--t", "0.1", "--out",
                  (dir / "concave").string()});
    CHECK(s.code == kExitSolver);

    // Two entries whose oscillation differs by far more than 5%.
    auto line = write_domain(dir, kInterval);
    auto c = cli({"continuate", "--domain", line.string(), "--h", "0.05", "--K", "const:2", "--phi", "const:0", "--t-schedule", "1,0.01",
                  "--out", (dir / "cont").string()});
    REQUIRE_MESSAGE(c.code == 0, c.err);
    CHECK(fs::exists(dir / "cont" / "trace.json"));
    CHECK(cli({"verify", "--run", (dir / "cont").string(), "--checks", "osc-bound"}).code == kExitVerification);
    CHECK(cli({"verify", "--run", (dir / "cont").string(), "--checks", "no-such-check"}).code == kExitConfig);
    fs::remove_all(dir);
}

TEST_CASE("selftest and version")
{
    CHECK(cli({"selftest"}).code == 0);
    auto v = cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(kToolVersion) != std::string::npos);
}
