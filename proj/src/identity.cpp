#include "nashlift/identity.hpp"

namespace nashlift {

ChartPtr identity_chart(int n) {
    if (n < 1) throw Error(ErrorKind::Argument, "identity checks need n >= 1");
    if (n == 1) {
        auto ring = Ring::make({"x", "y"});
        return AffineChart::make(Ideal(ring, {parse_polynomial("y^2 - x^3", ring)}), 1);
    }
    std::vector<std::string> names;
    for (int i = 1; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
    auto ring = Ring::make(names);
    Polynomial f = Polynomial::variable(ring, 0) * Polynomial::variable(ring, 1);
    for (std::size_t i = 2; i < names.size(); ++i) {
        Polynomial v = Polynomial::variable(ring, i);
        f -= v * v;
    }
    return AffineChart::make(Ideal(ring, {f}), n);
}

namespace {

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree,
                             std::size_t max_terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    std::vector<Term> out;
    std::size_t k = terms(rng);
    for (std::size_t i = 0; i < k; ++i) {
        Monomial m(ring->nvars());
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) {
            std::size_t v = var(rng);
            m.set(v, m[v] + 1);
        }
        int c = coeff(rng);
        if (c != 0) out.push_back({m, Rational(c)});
    }
    return Polynomial::from_terms(ring, std::move(out));
}

Polynomial random_section(const AffineChart& chart, std::mt19937_64& rng) {
    for (;;) {
        Polynomial p = random_polynomial(chart.ring(), rng, 2, 3);
        if (!p.is_zero() && !chart.vanishes(p)) return p;
    }
}

} // namespace

IdentityTrial run_identity_trial(const DifferentialFrame& frame, std::mt19937_64& rng) {
    const auto& chart = *frame.chart;
    std::size_t n = frame.rank();
    std::vector<RationalFunction> s;
    for (std::size_t i = 0; i <= n; ++i) s.emplace_back(random_section(chart, rng));
    std::vector<RationalFunction> eta;
    for (std::size_t b = 0; b < n; ++b) eta.emplace_back(random_polynomial(chart.ring(), rng, 1, 2));
    RationalFunction lambda(random_section(chart, rng), random_section(chart, rng));

    IdentityTrial t;
    RationalFunction w = principal_parts_wedge(frame, s);
    t.dlog = equivalent(w, dlog_wedge(frame, s));
    t.connection = equivalent(w, connection_wedge(frame, s, eta));
    std::vector<RationalFunction> scaled;
    for (const auto& si : s) scaled.push_back(lambda * si);
    t.homogeneity = equivalent(principal_parts_wedge(frame, scaled),
                               pow(lambda, static_cast<unsigned>(n + 1)) * w);
    return t;
}

IdentitySuite run_identity_suite(int n, int trials, std::uint64_t seed) {
    if (trials < 0) throw Error(ErrorKind::Argument, "trial count must be non-negative");
    auto chart = identity_chart(n);
    auto frame = differential_frame(chart);
    std::mt19937_64 rng(seed);
    IdentitySuite suite;
    suite.n = n;
    suite.trials = trials;
    suite.seed = seed;
    for (int i = 0; i < trials; ++i) {
        auto t = run_identity_trial(frame, rng);
        suite.dlog += t.dlog;
        suite.connection += t.connection;
        suite.homogeneity += t.homogeneity;
        suite.passed += t.all();
    }
    return suite;
}

} // namespace nashlift
