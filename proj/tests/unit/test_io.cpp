#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "app.hpp"
#include "nashlift/blowup.hpp"
#include "support.hpp"

using namespace nashlift;
namespace fs = std::filesystem;

namespace {

const fs::path kData = NASHLIFT_TEST_DATA;

fs::path scratch_file(const std::string& name, const std::string& text) {
    fs::path dir = fs::temp_directory_path() / "nashlift_io_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(app::JobSpec job) {
    std::ostringstream out, err;
    int code = app::run(job, out, err);
    return {code, out.str(), err.str()};
}

app::JobSpec job(const std::string& command, const std::string& variety = "", const std::string& arc = "") {
    app::JobSpec j;
    j.command = command;
    if (!variety.empty()) j.variety = (kData / variety).string();
    if (!arc.empty()) j.arc = (kData / arc).string();
    return j;
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("variety files") {
    auto v = parse_variety("# the cusp\nvars x y;\nideal y^2 - x^3; # plane curve\ncenter x^2, y;\n");
    CHECK(v.chart->dim() == 1);
    CHECK(v.chart->ring()->names() == std::vector<std::string>{"x", "y"});
    REQUIRE(v.center.has_value());
    CHECK(v.center->size() == 2);

    auto loaded = load_variety(kData / "cusp_center.var");
    CHECK(chart_to_text(*loaded.chart) == chart_to_text(*v.chart));
    REQUIRE(loaded.center.has_value());

    CHECK(parse_variety("vars x y z\n; ideal x*y - z^2").chart->dim() == 2);
    CHECK(parse_variety("vars a; ideal 0;").chart->dim() == 1);
}

TEST_CASE("variety parse errors") {
    try {
        parse_variety("vars x y;\nideal y^2 - * x;");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 13);
    }
    try {
        parse_variety("vars x y;\n\n  frobnicate x;");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_variety("ideal x;"), ParseError);
    CHECK_THROWS_AS(parse_variety("vars x x;"), ParseError);
    CHECK_THROWS_AS(parse_variety("vars x; vars y;"), ParseError);
    CHECK_THROWS_AS(parse_variety("vars x y; ideal x, , y;"), ParseError);
    CHECK_THROWS_AS(parse_variety("vars x y; dim two;"), ParseError);
    CHECK_THROWS_AS(parse_variety("vars x y; ideal y^2 - x^3; dim 0;"), Error);

    auto p = scratch_file("bad.var", "vars x y;\nideal y^^2;\n");
    try {
        load_variety(p);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.file() == p.string());
        CHECK(e.line() == 2);
    }
}

TEST_CASE("include cycles are rejected") {
    scratch_file("a.var", "include \"b.var\";\nvars x;\n");
    auto b = scratch_file("b.var", "include \"a.var\";\n");
    CHECK_THROWS_AS(load_variety(b), ParseError);
    CHECK_THROWS_AS(load_variety(scratch_file("c.var", "include \"missing.var\";")), Error);
}

TEST_CASE("chart text round trips") {
    std::vector<ChartPtr> charts{support::cusp(), support::cone(), support::a4()};
    for (const auto& bc : nash_blowup(support::cone()).charts) charts.push_back(bc.chart);
    for (const auto& bc : nash_blowup(support::cusp()).charts) charts.push_back(bc.chart);
    for (const auto& c : charts) {
        std::string text = chart_to_text(*c);
        auto back = parse_variety(text).chart;
        CHECK(chart_to_text(*back) == text);
        CHECK(same_ideal(Ideal(c->ring(), back->ideal().generators()), c->ideal()));
        CHECK(back->dim() == c->dim());
    }
    CHECK(chart_to_text(*support::cusp()) == "vars x y;\nideal -x^3 + y^2;\ndim 1;\n");
}

TEST_CASE("arc files") {
    auto c = support::cusp();
    auto a = parse_arc("x = t^2;\ny = t^3 + 2t^5; # exact\n", c);
    CHECK(a.exact());
    CHECK(a.truncation() == 64);
    auto b = parse_arc("x = t^2 + O(t^6); y = t^3 + O(t^6); trunc 20;", c);
    CHECK_FALSE(b.exact());
    CHECK(b.truncation() == 5);
    CHECK(parse_arc("x = 1; y = 1; trunc 12;", c).truncation() == 12);
    CHECK(parse_arc("x = 1; y = 1;", c).center() == std::vector<Rational>{1, 1});

    CHECK(arc_to_text(parse_arc(arc_to_text(a), c)) == arc_to_text(a));
    CHECK(arc_to_text(parse_arc(arc_to_text(b), c)) == arc_to_text(b));

    CHECK_THROWS_AS(parse_arc("x = t^2;", c), ParseError);
    CHECK_THROWS_AS(parse_arc("x = t^2; y = t^3; w = t;", c), ParseError);
    CHECK_THROWS_AS(parse_arc("x = t^2; x = t; y = t^3;", c), ParseError);
    CHECK_THROWS_AS(parse_arc("x = s^2; y = t^3;", c), ParseError);
    CHECK_THROWS_AS(parse_arc("x t^2; y = t^3;", c), ParseError);
}

TEST_CASE("command line jobs") {
    auto tower = run([] { auto j = job("tower", "cusp.var"); j.max_iter = 3; return j; }());
    CHECK(tower.code == 0);
    CHECK(has(tower.out, "smooth at level 1"));

    auto crit = run([] { auto j = job("criterion", "cusp.var", "cusp.arc"); j.depth = 3; return j; }());
    CHECK(crit.code == 0);
    CHECK(has(crit.out, "verdict: eventually-geometric ratio 3 (onset v_1)"));
    CHECK(has(crit.out, "v_3 (F_27) = 45"));

    auto dlog = run([] { auto j = job("dlog-check"); j.trials = 10; j.seed = 7; return j; }());
    CHECK(dlog.code == 0);
    CHECK(has(dlog.out, "10/10 identities hold"));

    CHECK(run(job("smooth", "parabola.var")).code == 0);
    CHECK(run(job("nash", "cone.var")).code == 0);
    CHECK(run(job("ladder", "cusp.var")).code == 0);
    CHECK(has(run(job("probe", "cylinder.var", "cylinder.arc")).out, "stable by level 1"));

    auto lifted = run(job("lift", "cusp_center.var", "cusp.arc"));
    CHECK(lifted.code == 0);
}

TEST_CASE("command line failures") {
    auto origin = run(job("lift", "cusp.var", "cusp_origin.arc"));
    CHECK(origin.code == 2);
    CHECK(has(origin.err, kNonsingularPointHypothesis));

    auto center = run(job("lift", "plane_center.var", "plane_line.arc"));
    CHECK(center.code == 2);
    CHECK(has(center.err, "inside the blowup center"));

    CHECK(run(job("lift", "cusp.var")).code == 1);
    CHECK(run(job("tower", "missing.var")).code == 1);
    auto deep = job("ladder", "cusp.var");
    deep.depth = 99;
    CHECK(run(deep).code == 1);
    auto unknown = job("frobnicate", "cusp.var");
    CHECK(run(unknown).code == 1);
}

TEST_CASE("json output is deterministic") {
    auto j = job("criterion", "a4.var", "a4.arc");
    j.format = "json";
    auto first = run(j);
    auto second = run(j);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    auto doc = nlohmann::json::parse(first.out);
    CHECK(doc["tool"] == "nashlift");
    CHECK(doc["version"] == app::kVersion);
    CHECK(doc["result"]["verdict"] == "eventually-geometric");
    CHECK(doc["hypotheses"]["nonsingular_point_on_image"] == true);
}
