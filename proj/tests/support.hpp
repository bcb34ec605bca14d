#ifndef NASHLIFT_TESTS_SUPPORT_HPP
#define NASHLIFT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "nashlift/arcs.hpp"
#include "nashlift/io.hpp"
#include "nashlift/polynomial.hpp"

namespace support {

using namespace nashlift;

inline ChartPtr chart_of(const std::string& text) { return parse_variety(text).chart; }

inline Polynomial poly(const std::string& text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

inline std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

inline Arc arc_of(const ChartPtr& chart, const std::string& text, int order = 64) {
    return parse_arc(text, chart, order);
}

inline std::vector<std::int64_t> finite_values(const std::vector<Valuation>& vs) {
    std::vector<std::int64_t> out;
    for (const auto& v : vs) out.push_back(v.is_finite() ? v.value : -1);
    return out;
}

inline ChartPtr cusp() { return chart_of("vars x y; ideal y^2 - x^3; dim 1;"); }
inline ChartPtr a4() { return chart_of("vars x y; ideal y^2 - x^5; dim 1;"); }
inline ChartPtr cone() { return chart_of("vars x y z; ideal x*y - z^2; dim 2;"); }

// Small random polynomial: up to `terms` terms of degree <= `degree`,
// coefficients in [-c, c].
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned degree,
                                    std::size_t terms, int c = 3) {
    std::uniform_int_distribution<int> coeff(-c, c);
    std::uniform_int_distribution<std::size_t> count(1, terms);
    std::uniform_int_distribution<unsigned> deg(0, degree);
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    std::vector<Term> out;
    std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        Monomial m(ring->nvars());
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) {
            std::size_t v = var(rng);
            m.set(v, m[v] + 1);
        }
        out.push_back({m, Rational(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(out));
}

// Graph of a random polynomial: the last variable minus p(other variables).
// Smooth by construction.
inline ChartPtr random_graph_chart(std::mt19937_64& rng, std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    auto ring = Ring::make(names);
    Polynomial p = Polynomial::constant(ring, 0);
    while (p.is_constant()) {
        p = random_polynomial(ring, rng, 3, 4);
        // drop the last variable from p
        std::vector<Polynomial> vals;
        for (std::size_t i = 0; i < nvars; ++i)
            vals.push_back(i + 1 == nvars ? Polynomial::constant(ring, 0) : Polynomial::variable(ring, i));
        p = substitute(p, vals, ring);
    }
    Polynomial f = Polynomial::variable(ring, nvars - 1) - p;
    return AffineChart::make(Ideal(ring, {f}), static_cast<int>(nvars) - 1);
}

} // namespace support

#endif
