#include "hermitian/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace hcodes;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(HERMITIAN_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string &name, const std::string &content)
{
    const auto dir = std::filesystem::temp_directory_path() / "hermitian_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

std::size_t lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("points lists q^3+1 rows")
{
    const auto csv = run("points --q 4 --format csv");
    CHECK(csv.code == 0);
    CHECK(lines(csv.out) == 66);
    const auto j = run("points --q 4");
    CHECK(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["schema"] == schema_version);
    CHECK(doc["count"] == 65);
    CHECK(doc["points"].size() == 65);
}

TEST_CASE("tangents report contact q+1")
{
    const json doc = json::parse(run("tangents --q 3").out);
    CHECK(doc["tangents"].size() == 28);
    for (const auto &t : doc["tangents"])
        CHECK(t["contact"] == 4);
}

TEST_CASE("h1 matches the library oracle")
{
    const auto curve = hermitian_curve(4);
    const auto &pts = curve->rational_points();
    const auto Z = build_scheme(*curve, {{pts[0], 3}, {pts[1], 2}, {pts[9], 4}});
    const auto path = write_temp("scheme.json", scheme_to_json(Z).dump());
    const auto r = run("h1 --q 4 --d 3 --scheme " + path);
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    const auto h = cohomology(Z, 3);
    CHECK(doc["h0"] == h.h0);
    CHECK(doc["h1"] == h.h1);
    CHECK(doc["rank"] == h.rank);
}

TEST_CASE("code output re-parses to the same spec and dualdist is reproducible")
{
    const auto curve = hermitian_curve(4);
    const auto &pts = curve->rational_points();
    CodeSpec spec;
    spec.q = 4;
    spec.d = 3;
    spec.points = {{pts[0], 2}, {pts[1], 2}};
    const auto path = write_temp("code.json", code_spec_to_json(spec).dump());
    const auto built = run("code --spec " + path);
    CHECK(built.code == 0);
    const json doc = json::parse(built.out);
    CHECK(code_spec_from_json(doc["spec"]) == spec);
    CHECK(doc["n"] == 63);
    CHECK(doc["k"] == 6);
    CHECK(doc["generator"].size() == 6);

    const auto a = run("dualdist --spec " + path + " --w-max 3 --mode structured --samples 5000 --seed 9");
    const auto b = run("dualdist --spec " + path + " --w-max 3 --mode structured --samples 5000 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const json dd = json::parse(a.out);
    CHECK(dd["dual_distance"] == 3);
    CHECK(dd["seed"] == 9);
}

TEST_CASE("verify over a capped box passes")
{
    const auto r = run("verify --theorem u0.1 --q 4 --all --cap 10 --format csv");
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 1 + 5 * 10);
    CHECK(r.out.find(",FAIL,") == std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("").code == 2);
    CHECK(run("points --q 4 --bogus").code == 2);
    CHECK(run("points").code == 2);
    CHECK(run("points --q 6").code == 2);
    const auto bad = write_temp("bad.json", "{\"q\": 4, ");
    CHECK(run("dualdist --spec " + bad).code == 2);
    CHECK(run("h1 --q 4 --d 3 --scheme /nonexistent/file.json").code == 2);
    CHECK(run("verify --theorem u5 --q 7 --d 6 --a 6,6,1").code == 0);
    CHECK(run("verify --theorem lemma_u500 --q 3 --d 2 --format pretty").code == 0);
}
