#include "nashlift/arcs.hpp"

#include <algorithm>
#include <limits>

namespace nashlift {

int Arc::truncation() const {
    int t = std::numeric_limits<int>::max();
    for (const auto& s : components) t = std::min(t, s.order());
    return components.empty() ? 0 : t;
}

bool Arc::exact() const {
    return std::all_of(components.begin(), components.end(),
                       [](const TruncatedSeries& s) { return s.exact(); });
}

std::vector<Rational> Arc::center() const {
    std::vector<Rational> p;
    for (const auto& s : components) p.push_back(s.coeff(0));
    return p;
}

namespace {

void require_match(const Polynomial& f, const Arc& arc) {
    if (f.ring()->nvars() != arc.components.size())
        throw Error(ErrorKind::Context, "arc has " + std::to_string(arc.components.size()) +
                                            " components but the polynomial ring has " +
                                            std::to_string(f.ring()->nvars()) + " variables");
}

} // namespace

TruncatedSeries evaluate_on_arc(const Polynomial& f, const Arc& arc) {
    require_match(f, arc);
    int order = arc.truncation();
    std::vector<std::vector<TruncatedSeries>> powers(arc.components.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const TruncatedSeries& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(TruncatedSeries::constant(1, order));
        while (cache.size() <= e) cache.push_back(cache.back() * arc.components[v]);
        return cache[e];
    };
    TruncatedSeries sum({}, order, true);
    for (const auto& t : f.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(t.coeff, order);
        for (std::size_t v = 0; v < t.mono.size(); ++v)
            if (t.mono[v]) term = term * power(v, t.mono[v]);
        sum = sum + term;
    }
    return sum;
}

TruncatedSeries evaluate_on_arc(const RationalFunction& f, const Arc& arc) {
    TruncatedSeries num = evaluate_on_arc(f.numerator(), arc);
    if (f.denominator().is_constant()) return num;
    TruncatedSeries den = evaluate_on_arc(f.denominator(), arc);
    if (!den.valuation().is_finite())
        throw Error(ErrorKind::IndeterminatePullback, "denominator " + f.denominator().to_string() +
                                                          " vanishes along the arc");
    return num / den;
}

bool lies_on_chart(const Arc& arc) {
    for (const auto& g : arc.chart->ideal().generators())
        if (!evaluate_on_arc(g, arc).vanishes()) return false;
    return true;
}

Valuation ideal_valuation_along_arc(const FractionalIdeal& f, const Arc& arc) {
    std::optional<std::int64_t> finite, bound;
    for (const auto& g : f.numerators()) {
        auto v = evaluate_on_arc(g, arc).valuation();
        if (v.kind == Valuation::Kind::Finite)
            finite = finite ? std::min(*finite, v.value) : v.value;
        else if (v.kind == Valuation::Kind::AtLeast)
            bound = bound ? std::min(*bound, v.value) : v.value;
    }
    // all numerators vanish identically
    if (!finite && !bound) return Valuation::infinite();
    std::int64_t shift = 0;
    for (const auto& [base, e] : f.denominator()) {
        auto v = evaluate_on_arc(base, arc).valuation();
        if (!v.is_finite())
            throw Error(ErrorKind::IndeterminatePullback,
                        "denominator factor " + base.to_string() + " vanishes along the arc");
        shift += v.value * e;
    }
    if (finite && (!bound || *finite < *bound)) return Valuation::finite(*finite - shift);
    return Valuation::at_least(std::min(*bound, finite.value_or(*bound)) - shift);
}

void require_smooth_generic_point(const Arc& arc) {
    const auto& chart = *arc.chart;
    std::size_t c = static_cast<std::size_t>(chart.codim());
    if (c == 0) return;
    PolyMatrix jac = jacobian(chart);
    if (jac.size() >= c) {
        for (const auto& m : matrix_minors(jac, c, chart.nvars(), chart.ring())) {
            if (m.is_zero()) continue;
            if (evaluate_on_arc(m, arc).valuation().is_finite()) return;
        }
    }
    throw Error(ErrorKind::HypothesisViolation,
                std::string(kNonsingularPointHypothesis) +
                    " fails: the arc lies in the singular locus of the chart");
}

BlowupLift lift_through_blowup(const Arc& arc, const FractionalIdeal& center,
                               const std::vector<BlowupChart>& charts) {
    const auto& g = center.numerators();
    std::vector<TruncatedSeries> values;
    std::optional<std::size_t> best;
    std::optional<std::int64_t> best_value;
    std::optional<std::int64_t> unresolved;
    for (const auto& gk : g) values.push_back(evaluate_on_arc(gk, arc));
    for (std::size_t i = 0; i < charts.size(); ++i) {
        auto v = values.at(charts[i].selected).valuation();
        if (v.kind == Valuation::Kind::AtLeast)
            unresolved = unresolved ? std::min(*unresolved, v.value) : v.value;
        if (!v.is_finite()) continue;
        if (!best_value || v.value < *best_value) {
            best = i;
            best_value = v.value;
        }
    }
    if (best && unresolved && *unresolved <= *best_value)
        throw InsufficientPrecisionError(
            "center generators are not resolved at truncation " + std::to_string(arc.truncation()),
            arc.truncation() + 1 + static_cast<int>(*best_value - *unresolved));
    if (!best) {
        if (unresolved)
            throw InsufficientPrecisionError("every center generator vanishes through truncation " +
                                                 std::to_string(arc.truncation()),
                                             arc.truncation() + 1);
        throw Error(ErrorKind::HypothesisViolation,
                    std::string(kNonsingularPointHypothesis) +
                        " fails: the arc lies inside the blowup center");
    }
    const auto& bc = charts[*best];
    const TruncatedSeries& gk = values[bc.selected];
    Arc lifted{bc.chart, {}};
    for (const auto& src : bc.sources) {
        if (src.kind == VariableSource::Kind::Parent)
            lifted.components.push_back(arc.components.at(src.index));
        else
            lifted.components.push_back(values.at(src.index) / gk);
    }
    // Components kept from the parent carry its precision; the ratios lost
    // the valuation of g_k.
    int order = std::min(arc.truncation() - static_cast<int>(*best_value), lifted.truncation());
    if (!arc.exact() || !lifted.exact())
        for (auto& s : lifted.components) s = s.truncated(std::min(order, s.order()));
    if (!lies_on_chart(lifted))
        throw Error(ErrorKind::Context, "lifted arc does not satisfy the chart ideal");
    return {*best, std::move(lifted), *best_value};
}

bool round_trip_holds(const Arc& lifted, const Arc& original) {
    const auto& pm = lifted.chart->parent();
    if (!pm || pm->parent->nvars() != original.components.size()) return false;
    for (std::size_t i = 0; i < original.components.size(); ++i) {
        TruncatedSeries back = evaluate_on_arc(pm->coordinates[i], lifted);
        if (!agree(back, original.components[i])) return false;
    }
    return true;
}

TowerLiftReport lift_through_tower(const Arc& arc, int max_levels, const GaussOptions& options) {
    if (max_levels < 1) throw Error(ErrorKind::Argument, "max levels must be at least 1");
    if (!lies_on_chart(arc)) throw Error(ErrorKind::Argument, "the arc does not lie on the chart");
    require_smooth_generic_point(arc);
    TowerLiftReport report;
    report.max_levels = max_levels;
    report.steps.push_back({"root", arc, false, std::nullopt, std::nullopt, 0});
    for (int level = 0;; ++level) {
        auto& step = report.steps.back();
        if (step.arc.truncation() < 0)
            throw InsufficientPrecisionError("truncation exhausted at level " + std::to_string(level),
                                             arc.truncation() - step.arc.truncation() + 1);
        step.smooth_at_center = is_smooth_at(*step.arc.chart, step.arc.center());
        if (step.smooth_at_center) {
            report.success = true;
            break;
        }
        if (level == max_levels) break;
        auto nb = nash_blowup(step.arc.chart, options);
        auto lift = lift_through_blowup(step.arc, nb.center, nb.charts);
        step.gauss = nb.path;
        step.selected = nb.charts[lift.chart].selected;
        step.loss = lift.loss;
        std::string path = step.path + "/k" + std::to_string(*step.selected);
        report.steps.push_back({path, std::move(lift.arc), false, std::nullopt, std::nullopt, 0});
    }
    return report;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::EventuallyGeometric: return "eventually-geometric";
    case Verdict::NotYetDetermined: return "not-yet-determined";
    case Verdict::DivergentPattern: return "divergent-pattern";
    }
    return "?";
}

CriterionReport geometric_criterion_test(const Arc& arc, const FIdealLadder& ladder) {
    if (!arc.chart->ring()->same_variables(*ladder.chart->ring()))
        throw Error(ErrorKind::Context, "arc and ladder live on different charts");
    CriterionReport r;
    r.n = ladder.n;
    r.depth = ladder.depth();
    r.base = ideal_valuation_along_arc(ladder.entries[0], arc);
    for (int i = 1; i <= ladder.depth(); ++i)
        r.values.push_back(ideal_valuation_along_arc(ladder.entries[static_cast<std::size_t>(i)], arc));
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (r.values[i].kind == Valuation::Kind::Infinite) {
            r.verdict = Verdict::DivergentPattern;
            r.divergent_index = static_cast<int>(i) + 1;
            return r;
        }
        if (r.values[i].kind == Valuation::Kind::AtLeast) r.truncation_adequate = false;
    }
    if (!r.truncation_adequate) return r;
    std::int64_t q = ladder.n + 2;
    // Scan backwards for the longest geometric tail with a positive start.
    std::optional<int> onset;
    for (int j = static_cast<int>(r.values.size()) - 1; j >= 1; --j) {
        if (r.values[j].value != q * r.values[j - 1].value) break;
        if (r.values[j - 1].value > 0) onset = j; // 1-based index of values[j-1]
    }
    if (onset) {
        r.verdict = Verdict::EventuallyGeometric;
        r.onset = onset;
        r.ratio = q;
    }
    return r;
}

StableTransformReport stable_transform_probe(const Arc& curve, int max_levels,
                                             const GaussOptions& options) {
    if (!curve.exact())
        throw Error(ErrorKind::Argument, "the probe needs a polynomial parametrization");
    auto lift = lift_through_tower(curve, max_levels, options);
    StableTransformReport report;
    report.max_levels = max_levels;
    for (std::size_t i = 0; i < lift.steps.size(); ++i) {
        const auto& s = lift.steps[i];
        report.levels.push_back({static_cast<int>(i), s.path, s.arc.center(), s.smooth_at_center});
        if (s.smooth_at_center && !report.stable_level) report.stable_level = static_cast<int>(i);
    }
    return report;
}

} // namespace nashlift
