#include <doctest.h>

#include <thread>

#include "nashlift/groebner.hpp"
#include "nashlift/matrix.hpp"
#include "nashlift/rational_function.hpp"
#include "support.hpp"

using namespace nashlift;
using support::poly;

TEST_CASE("polynomial text round trip") {
    auto r = Ring::make({"x", "y", "z"});
    CHECK(poly("3/2x^2y - y + 1/3", r).to_string() == "3/2*x^2*y - y + 1/3");
    CHECK(poly("y^2 - x^3", r).to_string() == "-x^3 + y^2");
    CHECK(poly("2 x y", r) == poly("2*x*y", r));
    CHECK(poly("0", r).is_zero());
    auto p = poly("x^3*z - 7/5*y^2 + x - 2", r);
    CHECK(poly(p.to_string(), r) == p);
}

TEST_CASE("parse errors carry line and column") {
    auto r = Ring::make({"x", "y"});
    try {
        parse_polynomial("x + * y", r, 3, 7);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 11);
    }
    CHECK_THROWS_AS(parse_polynomial("x + w", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
}

TEST_CASE("rings reject duplicate and empty names") {
    CHECK_THROWS_AS(Ring::make({"x", "x"}), Error);
    CHECK_THROWS_AS(Ring::make({"x", ""}), Error);
}

TEST_CASE("monomial orders") {
    Monomial a(Monomial::Exponents{1, 0, 2}); // x z^2
    Monomial b(Monomial::Exponents{0, 3, 0}); // y^3
    Monomial c(Monomial::Exponents{2, 0, 0}); // x^2
    CHECK(compare(a, b, MonomialOrder::lex()) > 0);
    CHECK(compare(c, b, MonomialOrder::lex()) > 0);
    CHECK(compare(b, a, MonomialOrder::grevlex()) > 0);
    CHECK(compare(a, a, MonomialOrder::grevlex()) == 0);
    // block: {x} dominates {y, z}
    CHECK(compare(a, b, MonomialOrder::block(1)) > 0);
    CHECK(compare(b, Monomial(Monomial::Exponents{0, 0, 1}), MonomialOrder::block(1)) > 0);
    CHECK(a.lcm(b) == Monomial(Monomial::Exponents{1, 3, 2}));
    CHECK(c.divides(a * c));
    CHECK((a * c).quotient(c) == a);
}

TEST_CASE("arithmetic") {
    auto r = Ring::make({"x", "y"});
    CHECK(pow(poly("x + 1", r), 3) == poly("x^3 + 3x^2 + 3x + 1", r));
    CHECK(poly("x + y", r) * poly("x - y", r) == poly("x^2 - y^2", r));
    CHECK(partial_derivative(poly("x^3 y^2 + 5y", r), 1) == poly("2x^3 y + 5", r));
    CHECK(evaluate(poly("x^2 - 3y", r), {Rational(2), Rational(1, 3)}) == 3);
    auto q = exact_divide(poly("x^3 - y^3", r), poly("x - y", r));
    REQUIRE(q.has_value());
    CHECK(*q == poly("x^2 + x y + y^2", r));
    CHECK_FALSE(exact_divide(poly("x^2 + 1", r), poly("x", r)).has_value());
    CHECK(poly("6x^2 + 4y", r).primitive() == poly("3x^2 + 2y", r));
    CHECK(poly("2x + 4", r).monic() == poly("x + 2", r));
}

TEST_CASE("substitution and embedding") {
    auto r = Ring::make({"x", "y"});
    auto s = Ring::make({"t"});
    auto f = poly("y^2 - x^3", r);
    CHECK(substitute(f, {poly("t^2", s), poly("t^3", s)}, s).is_zero());
    auto big = Ring::make({"a", "x", "b", "y"});
    CHECK(embed(f, big, {1, 3}) == poly("y^2 - x^3", big));
}

TEST_CASE("operands from different rings are rejected") {
    auto r = Ring::make({"x"});
    auto s = Ring::make({"y"});
    CHECK_THROWS_AS(poly("x", r) + poly("y", s), Error);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937_64 rng(11);
    auto r = Ring::make({"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
        auto a = support::random_polynomial(r, rng, 3, 4);
        auto b = support::random_polynomial(r, rng, 3, 4);
        auto c = support::random_polynomial(r, rng, 2, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial(r));
        CHECK(partial_derivative(a * b, 0) ==
              partial_derivative(a, 0) * b + a * partial_derivative(b, 0));
        if (!b.is_zero()) {
            auto q = exact_divide(a * b, b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
        CHECK(a.in_ring(r->with_order(MonomialOrder::lex())).in_ring(r) == a);
    }
}

TEST_CASE("rational functions") {
    auto r = Ring::make({"x", "y"});
    RationalFunction f(poly("x^2 - 1", r), poly("x - 1", r));
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == poly("x + 1", r));
    RationalFunction g(poly("3x^2", r), poly("2y", r));
    CHECK(g.to_string() == "(3/2*x^2)/(y)");
    CHECK(equivalent(g, RationalFunction(poly("6x^3", r), poly("4x y", r))));
    CHECK(equivalent(g * RationalFunction(poly("y", r)), RationalFunction(poly("3/2 x^2", r))));
    CHECK(equivalent(g - g, RationalFunction(Polynomial(r))));
    // quotient rule
    auto d = partial_derivative(RationalFunction(poly("x", r), poly("x + y", r)), 0);
    CHECK(equivalent(d, RationalFunction(poly("y", r), poly("x^2 + 2x y + y^2", r))));
    CHECK_THROWS_AS(RationalFunction(poly("x", r), Polynomial(r)), Error);
    CHECK_THROWS_AS(g / RationalFunction(Polynomial(r)), Error);
}

TEST_CASE("matrices") {
    CHECK(subsets(4, 2).size() == 6);
    CHECK(subsets(3, 2) == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(subsets(3, 0).size() == 1);
    auto r = Ring::make({"x", "y"});
    PolyMatrix m{{poly("x", r), poly("y", r), poly("1", r)},
                 {poly("1", r), poly("x", r), poly("0", r)},
                 {poly("0", r), poly("1", r), poly("y", r)}};
    // x(xy) - y(y) + 1(1) by the first row
    CHECK(determinant(m) == poly("x^2 y - y^2 + 1", r));
    auto minors = matrix_minors(m, 2, 3, r);
    CHECK(minors.size() == 9);
    CHECK(minors.front() == poly("x^2 - y", r));
    Matrix<Rational> q{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(q) == 2);
    CHECK_THROWS_AS(determinant(PolyMatrix{{poly("x", r), poly("y", r)}}), Error);
}

TEST_CASE("groebner basis examples") {
    auto r = Ring::make({"x", "y"}, MonomialOrder::lex());
    Ideal i(r, {poly("x^2 + y^2 - 1", r), poly("x - y", r)});
    auto gb = i.groebner();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == poly("y^2 - 1/2", r));
    CHECK(gb[1] == poly("x - y", r));
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(Ideal(r, {poly("x", r), poly("1 - x y", r)}).is_unit());
    CHECK(Ideal(r, {poly("0", r)}).is_zero());
    CHECK(Ideal::unit(r).groebner() == std::vector<Polynomial>{poly("1", r)});
    CHECK(contains(i, poly("x^2 - 1/2", r)));
    CHECK_FALSE(contains(i, poly("x", r)));
}

TEST_CASE("dimension") {
    auto r = Ring::make({"x", "y", "z"});
    CHECK(dimension(Ideal(r, {poly("x y - z^2", r)})) == 2);
    CHECK(dimension(Ideal(r, {poly("y - x^2", r), poly("z - x^3", r)})) == 1);
    CHECK(dimension(Ideal(r, {poly("x", r), poly("y", r), poly("z", r)})) == 0);
    CHECK(dimension(Ideal::unit(r)) == -1);
    CHECK(dimension(Ideal::zero(r)) == 3);
}

TEST_CASE("elimination, saturation and colon") {
    auto r = Ring::make({"t", "x", "y"});
    Ideal graph(r, {poly("x - t^2", r), poly("y - t^4", r)});
    auto e = eliminate(graph, {1, 2});
    CHECK(same_ideal(e, Ideal(r, {poly("y - x^2", r)})));

    auto s = Ring::make({"x", "y"});
    Ideal i(s, {poly("x^2", s), poly("x y", s)});
    CHECK(saturate(i, poly("x", s)).is_unit());
    CHECK(same_ideal(colon(i, poly("x", s)), Ideal(s, {poly("x", s), poly("y", s)})));
    Ideal j(s, {poly("x y", s)});
    CHECK(same_ideal(saturate(j, poly("x", s)), Ideal(s, {poly("y", s)})));

    CHECK(same_ideal(ideal_product(Ideal(s, {poly("x", s)}), Ideal(s, {poly("x", s), poly("y", s)})),
                     Ideal(s, {poly("x^2", s), poly("x y", s)})));
    CHECK(same_ideal(ideal_sum(Ideal(s, {poly("x", s)}), Ideal(s, {poly("y", s)})),
                     Ideal(s, {poly("x", s), poly("y", s)})));
}

TEST_CASE("groebner invariants on random ideals") {
    std::mt19937_64 rng(5);
    auto r = Ring::make({"x", "y", "z"});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        std::size_t k = 1 + trial % 3;
        for (std::size_t j = 0; j < k; ++j) gens.push_back(support::random_polynomial(r, rng, 2, 3));
        Ideal ideal(r, gens);
        const auto& gb = ideal.groebner();
        CHECK(satisfies_buchberger_criterion(gb));
        for (const auto& g : gens) CHECK(contains(ideal, g));
        Polynomial combo(r);
        for (const auto& g : gens) combo += support::random_polynomial(r, rng, 1, 2) * g;
        CHECK(contains(ideal, combo));
        auto lex = ideal.groebner(MonomialOrder::lex());
        CHECK(satisfies_buchberger_criterion(lex));
        auto e = eliminate(ideal, {1, 2});
        CHECK(same_ideal(eliminate(e, {1, 2}), e));
        auto f = support::random_polynomial(r, rng, 1, 2);
        if (!f.is_zero()) {
            auto s = saturate(ideal, f);
            CHECK(same_ideal(saturate(s, f), s));
            CHECK(contains(s, ideal));
        }
    }
}

TEST_CASE("shared groebner cache under concurrent readers") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal ideal(r, {poly("x^3 - y z", r), poly("y^2 - x z", r), poly("z^2 - x^2 y", r)});
    Ideal copy = ideal;
    std::vector<Polynomial> a, b;
    std::thread t1([&] { a = ideal.groebner(); });
    std::thread t2([&] { b = copy.groebner(); });
    t1.join();
    t2.join();
    CHECK(a == b);
    CHECK(&ideal.groebner() == &copy.groebner());
}
