#include <doctest.h>

#include "nashlift/identity.hpp"
#include "nashlift/ladder.hpp"
#include "support.hpp"

using namespace nashlift;
using support::poly;

namespace {

bool same_fractional_ideal(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.denominator_polynomial() == b.denominator_polynomial() &&
           same_ideal(numerator_ideal(a), numerator_ideal(b));
}

RationalFunction rf(const char* text, const RingPtr& r) { return RationalFunction(poly(text, r)); }

} // namespace

TEST_CASE("principal parts wedges") {
    auto line = support::chart_of("vars x y; ideal y;");
    auto f = differential_frame(line);
    const auto& r = line->ring();
    CHECK(equivalent(principal_parts_wedge(f, {rf("x", r), rf("x^2", r)}), rf("x^2", r)));
    CHECK(principal_parts_wedge(f, {rf("x + 1", r), rf("x + 1", r)}).is_zero());

    auto c = support::cusp();
    auto fc = differential_frame(c);
    const auto& rc = c->ring();
    auto w = principal_parts_wedge(fc, {rf("x", rc), rf("y", rc)});
    CHECK(equivalent(w, RationalFunction(poly("3x^3 - 2y^2", rc), poly("2y", rc))));
    CHECK(equivalent(dlog_wedge(fc, {rf("x", rc), rf("y", rc)}), w));
    CHECK(equivalent(connection_wedge(fc, {rf("x", rc), rf("y", rc)}, {rf("x - 2y", rc)}), w));

    CHECK_THROWS_AS(principal_parts_wedge(fc, {rf("x", rc)}), Error);
    CHECK_THROWS_AS(dlog_wedge(fc, {rf("0", rc), rf("x", rc)}), Error);
}

TEST_CASE("wedge identities on random sections") {
    for (int n = 1; n <= 2; ++n) {
        auto s = run_identity_suite(n, 15, 42);
        CHECK(s.passed == 15);
        CHECK(s.dlog == 15);
        CHECK(s.connection == 15);
        CHECK(s.homogeneity == 15);
    }
    CHECK(identity_chart(3)->dim() == 3);
    CHECK_THROWS_AS(identity_chart(0), Error);
}

TEST_CASE("scaled jets") {
    auto c = support::cone();
    auto f = differential_frame(c);
    auto j = scaled_jet(f, poly("z", c->ring()));
    REQUIRE(j.size() == 3);
    CHECK(j[0] == poly("z", c->ring()));
    CHECK(j[1] == poly("-y", c->ring()));
    CHECK(j[2] == poly("-x", c->ring()));
}

TEST_CASE("cusp ladder entries") {
    auto l = build_ladder(support::cusp(), 2);
    CHECK(l.n == 1);
    CHECK(l.depth() == 2);
    CHECK(l.index_of_entry(0) == 1);
    CHECK(l.index_of_entry(2) == 9);
    CHECK(l.entries[0].to_string() == "(-3*x^2, 2*y)");
    CHECK(l.entries[1].to_string() == "(y^3, x*y^2) / (y)");
    CHECK(l.entries[2].to_string() == "(y^8, x^2*y^7) / (y)^3");
    CHECK(l.running_product.to_string() == "(y^12, x*y^11) / (y)^4");
}

TEST_CASE("structured and literal constructions agree") {
    auto cusp = start_ladder(support::cusp());
    CHECK(same_fractional_ideal(next_F(cusp), next_F_literal(cusp)));
    extend_ladder(cusp);
    CHECK(same_fractional_ideal(next_F(cusp), next_F_literal(cusp)));
    auto cone = start_ladder(support::cone());
    CHECK(same_fractional_ideal(next_F(cone), next_F_literal(cone)));
}

TEST_CASE("smooth curves have principal ladders") {
    auto l = build_ladder(support::chart_of("vars x y; ideal y;"), 3);
    for (const auto& e : l.entries) {
        CHECK(e.is_polynomial());
        CHECK(numerator_ideal(e).is_unit());
    }
    auto p = build_ladder(support::chart_of("vars x y; ideal y - x^2;"), 2);
    for (const auto& e : p.entries) CHECK(numerator_ideal(e).is_unit());
}

TEST_CASE("composite digits") {
    using D = std::vector<std::pair<unsigned, unsigned>>;
    CHECK(composite_F_digits(5, 1) == D{{0, 2}, {1, 1}});
    CHECK(composite_F_digits(1, 2) == D{{0, 1}});
    CHECK(composite_F_digits(16, 2) == D{{2, 1}});
    CHECK_THROWS_AS(composite_F_digits(0, 1), Error);
    CHECK(composite_F_digits(7, 3) == D{{0, 2}, {1, 1}});
    auto l = build_ladder(support::cusp(), 1);
    auto f5 = composite_F(l, 5);
    CHECK(same_fractional_ideal(f5, fractional_product(fractional_power(l.entries[0], 2), l.entries[1])));
    CHECK_THROWS_AS(composite_F(l, 9), Error);
}

TEST_CASE("fractional ideal bookkeeping") {
    auto c = support::cusp();
    const auto& r = c->ring();
    FractionalIdeal f(c, {poly("x", r), poly("2x", r), poly("y^2 - x^3", r), poly("y", r)},
                      {{poly("y", r), 1}, {poly("3y", r), 2}});
    CHECK(f.size() == 2);
    CHECK(f.denominator_polynomial() == poly("y^3", r));
    CHECK(merge_factors({{poly("x", r), 1}, {poly("-x", r), 2}, {poly("5", r), 4}}).size() == 1);
    CHECK_THROWS_AS(FractionalIdeal(c, {poly("x", r)}, {{poly("y^2 - x^3", r), 1}}), Error);
    auto m = FractionalIdeal(c, {poly("x^3", r), poly("y^2", r), poly("y", r)}).minimized();
    CHECK(same_ideal(numerator_ideal(m), Ideal(r, {poly("y", r), poly("x^3", r), poly("y^2 - x^3", r)})));
    CHECK(FractionalIdeal::unit(c).to_string() == "(1)");
}
