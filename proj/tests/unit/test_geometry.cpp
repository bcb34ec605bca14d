#include <doctest.h>

#include "nashlift/blowup.hpp"
#include "nashlift/chart.hpp"
#include "support.hpp"

using namespace nashlift;
using support::poly;

namespace {

bool in_zero_set(const Ideal& ideal, const std::vector<Rational>& point) {
    for (const auto& g : ideal.generators())
        if (evaluate(g, point) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("chart construction validates the dimension") {
    auto r = Ring::make({"x", "y"});
    Ideal cusp(r, {poly("y^2 - x^3", r)});
    CHECK_NOTHROW(AffineChart(cusp, 1));
    CHECK_THROWS_AS(AffineChart(cusp, 2), Error);
    auto empty = AffineChart::make(Ideal::unit(r));
    CHECK(empty->is_empty());
    CHECK(empty->dim() == -1);
    CHECK(is_smooth(*empty));
    CHECK(AffineChart::make(cusp)->codim() == 1);
}

TEST_CASE("jacobian and singular locus") {
    auto c = support::cusp();
    auto j = jacobian(*c);
    REQUIRE(j.size() == 1);
    CHECK(j[0][0] == poly("-3x^2", c->ring()));
    CHECK(j[0][1] == poly("2y", c->ring()));
    auto sing = singular_locus(*c);
    CHECK(dimension(sing) == 0);
    CHECK(contains(sing, poly("x^2", c->ring())));
    CHECK(contains(sing, poly("y", c->ring())));
    CHECK_FALSE(contains(sing, poly("x", c->ring())));
    CHECK_FALSE(is_smooth(*c));
    CHECK(is_smooth(*support::chart_of("vars x y; ideal y - x^2;")));
    CHECK(is_smooth(*support::chart_of("vars x y; ideal x^2 + y^2 - 1;")));
    CHECK_FALSE(is_smooth(*support::cone()));
}

TEST_CASE("pointwise smoothness matches the singular locus") {
    struct Case {
        ChartPtr chart;
        std::vector<std::vector<Rational>> points;
    };
    std::vector<Case> cases{
        {support::cusp(), {{0, 0}, {1, 1}, {1, -1}, {4, 8}}},
        {support::cone(), {{0, 0, 0}, {1, 1, 1}, {4, 1, 2}, {0, 5, 0}}},
        {support::a4(), {{0, 0}, {1, 1}, {4, 32}}},
    };
    for (const auto& c : cases) {
        auto sing = singular_locus(*c.chart);
        for (const auto& p : c.points) {
            REQUIRE(in_zero_set(c.chart->ideal(), p));
            CHECK(is_smooth_at(*c.chart, p) == !in_zero_set(sing, p));
        }
    }
}

TEST_CASE("differential frame of the cusp") {
    auto c = support::cusp();
    auto f = differential_frame(c);
    CHECK(f.basis == std::vector<std::size_t>{0});
    CHECK(f.dependent == std::vector<std::size_t>{1});
    CHECK(f.certificate == poly("2y", c->ring()));
    CHECK(equivalent(f.expansion(0, 0),
                     RationalFunction(poly("3x^2", c->ring()), poly("2y", c->ring()))));
    CHECK(frame_relations_hold(f));
    CHECK(f.basis_names() == std::vector<std::string>{"x"});
}

TEST_CASE("differential frame of the cone") {
    auto c = support::cone();
    auto f = differential_frame(c);
    CHECK(f.basis == std::vector<std::size_t>{0, 1});
    const auto& r = c->ring();
    CHECK(equivalent(f.expansion(0, 0), RationalFunction(poly("y", r), poly("2z", r))));
    CHECK(equivalent(f.expansion(0, 1), RationalFunction(poly("x", r), poly("2z", r))));
    CHECK(frame_relations_hold(f));
    // D_x (z^2) = 2z * y / (2z) = y
    CHECK(equivalent(f.derivative(RationalFunction(poly("z^2", r)), 0), RationalFunction(poly("y", r))));
    CHECK(f.scaled_derivative(poly("z", r), 0) == poly("-y", r));
}

TEST_CASE("preferred frames") {
    auto c = support::cone();
    auto f = differential_frame(c, std::vector<std::size_t>{1, 2});
    CHECK(f.basis == std::vector<std::size_t>{1, 2});
    CHECK(frame_relations_hold(f));
    auto line = support::chart_of("vars x y; ideal y;");
    auto g = differential_frame(line, std::vector<std::size_t>{1});
    CHECK(g.basis == std::vector<std::size_t>{0});
    auto doubled = support::chart_of("vars x y z; ideal x^2, x*y, y^2; dim 1;");
    try {
        differential_frame(doubled);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateFrame);
    }
}

TEST_CASE("frame relations on random graphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 12; ++i) {
        auto chart = support::random_graph_chart(rng, 2 + i % 3);
        CHECK(is_smooth(*chart));
        CHECK(frame_relations_hold(differential_frame(chart)));
    }
}

TEST_CASE("gauss minor ideals") {
    auto c = support::cusp();
    auto g = gauss_minors(c);
    CHECK(g.ideal.to_string() == "(-3*x^2, 2*y)");
    CHECK_FALSE(g.path.row_reduced);
    CHECK(g.path.to_string() == "complete-intersection");
    CHECK(gauss_minor_ideal(support::cone()).to_string() == "(y, x, -2*z)");
    auto plane = support::chart_of("vars x y; ideal 0;");
    CHECK(gauss_minor_ideal(plane).to_string() == "(1)");
}

TEST_CASE("over-determined jacobians are row reduced") {
    auto twisted = support::chart_of("vars x y z; ideal y - x^2, z - x*y, x*z - y^2;");
    REQUIRE(twisted->dim() == 1);
    for (std::uint64_t seed : {0u, 9u, 1234u}) {
        auto g = gauss_minors(twisted, {seed, 5});
        CHECK(g.path.row_reduced);
        CHECK(g.path.seed == seed);
        // agrees with the Gauss map off a proper closed subset
        CHECK(dimension(numerator_ideal(g.ideal)) < twisted->dim());
    }
    auto again = gauss_minors(twisted, {9, 5});
    CHECK(again.ideal.to_string() == gauss_minors(twisted, {9, 5}).ideal.to_string());
}

TEST_CASE("blowing up the cusp") {
    auto c = support::cusp();
    auto b = nash_blowup(c);
    REQUIRE(b.charts.size() == 2);
    const auto& k0 = b.charts[0];
    CHECK(k0.selected == 0);
    CHECK(chart_to_text(*k0.chart) == "vars x u1_1;\nideal x*u1_1^2 - 4/9;\ndim 1;\n");
    const auto& k1 = b.charts[1];
    CHECK(k1.selected == 1);
    CHECK(chart_to_text(*k1.chart) == "vars u1_0;\nideal 0;\ndim 1;\n");
    const auto& r = k1.chart->ring();
    CHECK(k1.chart->parent()->coordinates[0] == poly("4/9 u1_0^2", r));
    CHECK(k1.chart->parent()->coordinates[1] == poly("-8/27 u1_0^3", r));
    CHECK(k1.sources[0].kind == VariableSource::Kind::Ratio);
    CHECK(k1.sources[0].index == 0);
    for (const auto& bc : b.charts) {
        CHECK(is_smooth(*bc.chart));
        CHECK(parent_map_consistent(*bc.chart));
        CHECK(chart_level(*bc.chart) == 1);
    }
    CHECK(chart_level(*c) == 0);
}

TEST_CASE("blowing up the cone") {
    auto b = nash_blowup(support::cone());
    REQUIRE(b.charts.size() == 3);
    CHECK(chart_to_text(*b.charts[0].chart) == "vars y u1_2;\nideal 0;\ndim 2;\n");
    CHECK(chart_to_text(*b.charts[2].chart) == "vars y u1_0 u1_1;\nideal u1_0*u1_1 - 1/4;\ndim 2;\n");
    for (const auto& bc : b.charts) {
        CHECK(is_smooth(*bc.chart));
        CHECK(parent_map_consistent(*bc.chart));
    }
}

TEST_CASE("centers") {
    auto c = support::cusp();
    const auto& r = c->ring();
    auto principal = blowup_charts(c, FractionalIdeal(c, {poly("x", r)}));
    REQUIRE(principal.size() == 1);
    CHECK(principal[0].chart->dim() == 1);
    CHECK_FALSE(is_smooth(*principal[0].chart));
    // the second generator vanishes on the chart and contributes no chart
    auto partial = blowup_charts(c, FractionalIdeal(c, {poly("x", r), poly("y", r), poly("y^2 - x^3", r)}));
    CHECK(partial.size() == 2);
    CHECK_THROWS_AS(FractionalIdeal(c, {poly("y^2 - x^3", r)}), Error);
}

TEST_CASE("towers") {
    auto cusp = iterate_until_smooth(support::cusp(), 4);
    CHECK(cusp.smooth_level == 1);
    CHECK(cusp.charts_per_level == std::vector<std::size_t>{1, 2});
    CHECK_FALSE(cusp.hit_max_iter);
    CHECK(cusp.nodes[0].path == "root");
    CHECK(cusp.nodes[1].path == "root/k0");

    CHECK(iterate_until_smooth(support::a4(), 4).smooth_level == 2);
    CHECK(iterate_until_smooth(support::cone(), 4).smooth_level == 1);
    CHECK(iterate_until_smooth(support::chart_of("vars x y; ideal y - x^2;"), 4).smooth_level == 0);

    auto capped = iterate_until_smooth(support::a4(), 1);
    CHECK(capped.hit_max_iter);
    CHECK_FALSE(capped.smooth_level.has_value());
    CHECK_THROWS_AS(iterate_until_smooth(support::cusp(), 0), Error);
}

TEST_CASE("smooth charts are fixed by the blowup") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 8; ++i) {
        auto chart = support::random_graph_chart(rng, 2 + i % 2);
        CHECK(numerator_ideal(gauss_minor_ideal(chart)).is_unit());
        auto b = nash_blowup(chart);
        for (const auto& bc : b.charts) CHECK(is_smooth(*bc.chart));
        CHECK(iterate_until_smooth(chart, 2).smooth_level == 0);
    }
}
