#include "nashlift/blowup.hpp"

#include <random>

namespace nashlift {

std::string GaussPath::to_string() const {
    if (!row_reduced) return "complete-intersection";
    return "row-reduced(seed=" + std::to_string(seed) + ", attempt=" + std::to_string(attempt) + ")";
}

namespace {

std::vector<Polynomial> nonzero_minors(const AffineChart& chart, const PolyMatrix& rows,
                                       std::size_t c) {
    std::vector<Polynomial> out;
    for (auto& m : matrix_minors(rows, c, chart.nvars(), chart.ring())) {
        Polynomial r = chart.reduce(m);
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    return out;
}

} // namespace

GaussMinors gauss_minors(const ChartPtr& chart, const GaussOptions& options) {
    if (chart->is_empty()) throw Error(ErrorKind::Argument, "Gauss minors of an empty chart");
    std::size_t c = static_cast<std::size_t>(chart->codim());
    if (c == 0) return {FractionalIdeal::unit(chart), {}};
    PolyMatrix jac = jacobian(*chart);
    if (jac.size() < c)
        throw Error(ErrorKind::DegenerateInput, "fewer generators than the codimension");
    if (jac.size() == c) {
        auto minors = nonzero_minors(*chart, jac, c);
        if (minors.empty())
            throw Error(ErrorKind::DegenerateInput, "all Jacobian minors vanish on the chart");
        return {FractionalIdeal(chart, std::move(minors)), {}};
    }
    for (int attempt = 0; attempt < options.attempts; ++attempt) {
        std::uint64_t seed = options.seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        PolyMatrix combined;
        for (std::size_t i = 0; i < c; ++i) {
            std::vector<Polynomial> row(chart->nvars(), Polynomial(chart->ring()));
            for (const auto& jr : jac) {
                int a = coeff(rng);
                if (a == 0) continue;
                for (std::size_t v = 0; v < row.size(); ++v) row[v] += jr[v] * Rational(a);
            }
            combined.push_back(std::move(row));
        }
        auto minors = nonzero_minors(*chart, combined, c);
        if (!minors.empty())
            return {FractionalIdeal(chart, std::move(minors)), {true, seed, attempt}};
    }
    throw Error(ErrorKind::DegenerateInput,
                "all minors of the row-reduced Jacobian vanish on the chart after " +
                    std::to_string(options.attempts) + " attempts");
}

int chart_level(const AffineChart& chart) {
    int level = 0;
    for (const AffineChart* c = &chart; c->parent(); c = c->parent()->parent.get()) ++level;
    return level;
}

namespace {

struct Simplified {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> coordinates;
    std::vector<VariableSource> sources;
};

// g = c*v + h with c constant and h free of v.
bool linear_in(const Polynomial& g, std::size_t v) {
    bool found = false;
    for (const auto& t : g.terms()) {
        if (t.mono[v] == 0) continue;
        if (t.mono[v] != 1 || t.mono.degree() != 1) return false;
        found = true;
    }
    return found;
}

Simplified simplify(Simplified s) {
    for (;;) {
        auto basis = groebner_basis(s.generators, s.ring);
        std::optional<std::pair<std::size_t, std::size_t>> pick; // (variable, basis index)
        if (s.ring->nvars() > 1) {
            for (std::size_t v = s.ring->nvars(); v-- > 0 && !pick;) {
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    if (linear_in(basis[i], v)) {
                        pick = {v, i};
                        break;
                    }
                }
            }
        }
        if (!pick) {
            s.generators = std::move(basis);
            return s;
        }
        auto [v, gi] = *pick;
        const Polynomial& g = basis[gi];
        Rational c;
        std::vector<Term> rest;
        for (const auto& t : g.terms()) {
            if (t.mono[v] == 1)
                c = t.coeff;
            else
                rest.push_back(t);
        }
        std::vector<std::string> names;
        std::vector<std::size_t> map;
        for (std::size_t w = 0; w < s.ring->nvars(); ++w) {
            if (w == v) {
                map.push_back(0);
                continue;
            }
            map.push_back(names.size());
            names.push_back(s.ring->name(w));
        }
        RingPtr target = Ring::make(names, s.ring->order());
        std::vector<Polynomial> values;
        Polynomial h = Polynomial::from_terms(s.ring, std::move(rest)) * (Rational(-1) / c);
        // h is free of v, so embedding ignores the placeholder map[v].
        Polynomial hv = embed(h, target, map);
        for (std::size_t w = 0; w < s.ring->nvars(); ++w)
            values.push_back(w == v ? hv : Polynomial::variable(target, map[w]));
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == gi) continue;
            Polynomial p = substitute(basis[i], values, target);
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        for (auto& coord : s.coordinates) coord = substitute(coord, values, target);
        s.sources.erase(s.sources.begin() + static_cast<std::ptrdiff_t>(v));
        s.ring = std::move(target);
        s.generators = std::move(gens);
    }
}

} // namespace

std::vector<BlowupChart> blowup_charts(const ChartPtr& chart, const FractionalIdeal& center) {
    if (center.size() == 0) throw Error(ErrorKind::Argument, "empty blowup center");
    if (center.chart() != chart && !center.chart()->ring()->same_variables(*chart->ring()))
        throw Error(ErrorKind::Context, "blowup center lives on another chart");
    const auto& g = center.numerators();
    std::size_t nv = chart->nvars();
    std::string prefix = "u" + std::to_string(chart_level(*chart) + 1) + "_";
    std::vector<BlowupChart> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (chart->vanishes(g[k])) continue;
        std::vector<std::string> names = chart->ring()->names();
        std::vector<VariableSource> sources;
        for (std::size_t i = 0; i < nv; ++i) sources.push_back({VariableSource::Kind::Parent, i});
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (j == k) continue;
            std::string name = prefix + std::to_string(j);
            if (chart->ring()->index_of(name))
                throw Error(ErrorKind::Context, "chart already has a variable named " + name);
            names.push_back(name);
            sources.push_back({VariableSource::Kind::Ratio, j});
        }
        RingPtr ring = Ring::make(names);
        std::vector<std::size_t> map(nv);
        for (std::size_t i = 0; i < nv; ++i) map[i] = i;
        std::vector<Polynomial> gens;
        for (const auto& f : chart->ideal().generators()) gens.push_back(embed(f, ring, map));
        Polynomial gk = embed(g[k], ring, map);
        for (std::size_t j = 0, u = nv; j < g.size(); ++j) {
            if (j == k) continue;
            gens.push_back(Polynomial::variable(ring, u++) * gk - embed(g[j], ring, map));
        }
        Ideal closure = saturate(Ideal(ring, std::move(gens)), gk);
        if (closure.is_unit()) continue;
        Simplified s{ring, closure.groebner(), {}, std::move(sources)};
        for (std::size_t i = 0; i < nv; ++i) s.coordinates.push_back(Polynomial::variable(ring, i));
        s = simplify(std::move(s));
        Polynomial num = substitute(g[k], s.coordinates, s.ring);
        Polynomial den = substitute(center.denominator_polynomial(), s.coordinates, s.ring);
        auto child = AffineChart::make(Ideal(s.ring, std::move(s.generators)), std::nullopt,
                                       ParentMap{chart, s.coordinates});
        out.push_back({child, k, RationalFunction(num, den), std::move(s.sources)});
    }
    return out;
}

NashBlowup nash_blowup(const ChartPtr& chart, const GaussOptions& options) {
    if (chart->dim() <= 0)
        throw Error(ErrorKind::Argument, "Nash blowup needs a positive-dimensional chart");
    auto gm = gauss_minors(chart, options);
    auto charts = blowup_charts(chart, gm.ideal);
    return {std::move(charts), std::move(gm.ideal), gm.path};
}

TowerReport iterate_until_smooth(const ChartPtr& chart, int max_iter, const GaussOptions& options) {
    if (max_iter < 1) throw Error(ErrorKind::Argument, "max-iter must be at least 1");
    TowerReport report;
    report.max_iter = max_iter;
    report.nodes.push_back({"root", 0, chart, is_smooth(*chart), std::nullopt, std::nullopt});
    report.charts_per_level.push_back(1);
    std::size_t level_begin = 0;
    for (int level = 0;; ++level) {
        std::size_t level_end = report.nodes.size();
        std::vector<std::size_t> singular;
        for (std::size_t i = level_begin; i < level_end; ++i)
            if (!report.nodes[i].smooth) singular.push_back(i);
        if (singular.empty()) {
            report.smooth_level = level;
            break;
        }
        if (level == max_iter) {
            report.hit_max_iter = true;
            break;
        }
        for (auto i : singular) {
            auto nb = nash_blowup(report.nodes[i].chart, options);
            report.nodes[i].gauss = nb.path;
            std::string base = report.nodes[i].path;
            for (auto& bc : nb.charts) {
                TowerNode node{base + "/k" + std::to_string(bc.selected), level + 1, bc.chart,
                               is_smooth(*bc.chart), bc.selected, std::nullopt};
                report.nodes.push_back(std::move(node));
            }
        }
        report.charts_per_level.push_back(report.nodes.size() - level_end);
        level_begin = level_end;
    }
    return report;
}

} // namespace nashlift
