#include "nashlift/ladder.hpp"

#include <algorithm>

namespace nashlift {

std::vector<Polynomial> scaled_jet(const DifferentialFrame& frame, const Polynomial& t) {
    std::vector<Polynomial> out{t};
    for (std::size_t b = 0; b < frame.rank(); ++b) out.push_back(frame.scaled_derivative(t, b));
    return out;
}

namespace {

void require_sections(const DifferentialFrame& frame, const std::vector<RationalFunction>& s) {
    if (s.size() != frame.rank() + 1)
        throw Error(ErrorKind::Size, "the wedge takes n+1 = " + std::to_string(frame.rank() + 1) +
                                         " sections");
    for (const auto& si : s)
        if (frame.chart->vanishes(si.numerator()))
            throw Error(ErrorKind::Argument, "section vanishes on the chart");
}

RationalFunction rf_one(const RingPtr& ring) { return RationalFunction::constant(ring, 1); }

} // namespace

RationalFunction principal_parts_wedge(const DifferentialFrame& frame,
                                       const std::vector<RationalFunction>& sections) {
    require_sections(frame, sections);
    const RingPtr& ring = frame.chart->ring();
    std::vector<Polynomial> dens;
    Polynomial q = Polynomial::constant(ring, 1);
    for (const auto& s : sections) {
        Polynomial d = s.denominator().monic();
        if (d.is_constant() || std::find(dens.begin(), dens.end(), d) != dens.end()) continue;
        dens.push_back(d);
        q *= d;
    }
    PolyMatrix jets;
    for (const auto& s : sections) {
        auto factor = exact_divide(q, s.denominator());
        jets.push_back(scaled_jet(frame, s.numerator() * *factor));
    }
    unsigned n = static_cast<unsigned>(frame.rank());
    Polynomial det = determinant(jets);
    return RationalFunction(det, pow(q, n + 1) * pow(frame.certificate, n));
}

RationalFunction dlog_wedge(const DifferentialFrame& frame,
                            const std::vector<RationalFunction>& sections) {
    require_sections(frame, sections);
    std::size_t n = frame.rank();
    Matrix<RationalFunction> logs;
    for (std::size_t j = 1; j <= n; ++j) {
        RationalFunction r = sections[j] / sections[0];
        std::vector<RationalFunction> row;
        for (std::size_t b = 0; b < n; ++b) row.push_back(frame.derivative(r, b) / r);
        logs.push_back(std::move(row));
    }
    RationalFunction prod = rf_one(frame.chart->ring());
    for (const auto& s : sections) prod *= s;
    return prod * determinant(logs);
}

RationalFunction connection_wedge(const DifferentialFrame& frame,
                                  const std::vector<RationalFunction>& sections,
                                  const std::vector<RationalFunction>& eta) {
    require_sections(frame, sections);
    std::size_t n = frame.rank();
    if (eta.size() != n) throw Error(ErrorKind::Size, "connection form needs n coefficients");
    Matrix<RationalFunction> nabla;
    for (const auto& s : sections) {
        std::vector<RationalFunction> row;
        for (std::size_t b = 0; b < n; ++b) row.push_back(frame.derivative(s, b) + eta[b] * s);
        nabla.push_back(std::move(row));
    }
    RationalFunction sum(Polynomial(frame.chart->ring()));
    for (std::size_t i = 0; i <= n; ++i) {
        Matrix<RationalFunction> minor;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) minor.push_back(nabla[j]);
        RationalFunction term = sections[i] * determinant(minor);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

std::uint64_t FIdealLadder::index_of_entry(int i) const {
    std::uint64_t p = 1;
    for (int k = 0; k < i; ++k) p *= static_cast<std::uint64_t>(n + 2);
    return p;
}

FIdealLadder start_ladder(const ChartPtr& chart, const LadderOptions& options) {
    if (chart->dim() <= 0)
        throw Error(ErrorKind::Argument, "the ladder needs a positive-dimensional chart");
    auto gm = gauss_minors(chart, options.gauss);
    FIdealLadder ladder{chart,
                        chart->dim(),
                        differential_frame(chart, options.frame),
                        gm.path,
                        {gm.ideal},
                        gm.ideal.minimized()};
    return ladder;
}

namespace {

std::vector<FractionalIdeal::Factor> next_denominator(const FIdealLadder& ladder) {
    unsigned n = static_cast<unsigned>(ladder.n);
    std::vector<FractionalIdeal::Factor> den;
    for (const auto& [base, e] : ladder.running_product.denominator()) den.emplace_back(base, e * (n + 1));
    den.emplace_back(ladder.frame.certificate, n);
    return den;
}

void collect(std::vector<Polynomial>& out, const AffineChart& chart, Polynomial p) {
    p = chart.reduce(p);
    if (!p.is_zero()) out.push_back(std::move(p));
}

} // namespace

FractionalIdeal next_F(const FIdealLadder& ladder) {
    const auto& chart = *ladder.chart;
    const auto& frame = ladder.frame;
    std::size_t n1 = static_cast<std::size_t>(ladder.n) + 1;
    const auto& t = ladder.running_product.numerators();

    PolyMatrix jets;
    for (const auto& ta : t) jets.push_back(scaled_jet(frame, ta));
    // Jets of dx_k: zero value, scaled derivatives of the coordinate.
    PolyMatrix dx;
    for (std::size_t v = 0; v < chart.nvars(); ++v) {
        auto j = scaled_jet(frame, Polynomial::variable(chart.ring(), v));
        j[0] = Polynomial(chart.ring());
        if (std::all_of(j.begin(), j.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
        if (std::find(dx.begin(), dx.end(), j) != dx.end()) continue;
        dx.push_back(std::move(j));
    }

    std::vector<Polynomial> numerators;
    for (std::size_t p = 1; p <= n1; ++p) {
        if (p > jets.size() || n1 - p > dx.size()) continue;
        std::vector<Polynomial> kp;
        for (const auto& a : subsets(jets.size(), p)) {
            for (const auto& w : subsets(dx.size(), n1 - p)) {
                PolyMatrix m;
                for (auto i : a) m.push_back(jets[i]);
                for (auto i : w) m.push_back(dx[i]);
                collect(kp, chart, determinant(m));
            }
        }
        if (kp.empty()) continue;
        FractionalIdeal k(ladder.chart, std::move(kp));
        FractionalIdeal powered = fractional_power(
            FractionalIdeal(ladder.chart, t), static_cast<unsigned>(n1 - p));
        FractionalIdeal part = fractional_product(powered, k.minimized());
        for (const auto& g : part.numerators()) numerators.push_back(g);
    }
    if (numerators.empty())
        throw Error(ErrorKind::DegenerateLadder, "every wedge of the spanning set vanishes");
    return FractionalIdeal(ladder.chart, std::move(numerators), next_denominator(ladder)).minimized();
}

FractionalIdeal next_F_literal(const FIdealLadder& ladder) {
    const auto& chart = *ladder.chart;
    std::size_t n1 = static_cast<std::size_t>(ladder.n) + 1;
    PolyMatrix jets;
    for (const auto& ta : ladder.running_product.numerators()) {
        jets.push_back(scaled_jet(ladder.frame, ta));
        for (std::size_t v = 0; v < chart.nvars(); ++v)
            jets.push_back(scaled_jet(ladder.frame, ta * Polynomial::variable(chart.ring(), v)));
    }
    if (jets.size() < n1)
        throw Error(ErrorKind::DegenerateLadder, "fewer than n+1 sections in the spanning set");
    std::vector<Polynomial> numerators;
    for (const auto& s : subsets(jets.size(), n1)) {
        PolyMatrix m;
        for (auto i : s) m.push_back(jets[i]);
        collect(numerators, chart, determinant(m));
    }
    if (numerators.empty())
        throw Error(ErrorKind::DegenerateLadder, "every wedge of the spanning set vanishes");
    return FractionalIdeal(ladder.chart, std::move(numerators), next_denominator(ladder)).minimized();
}

void extend_ladder(FIdealLadder& ladder) {
    FractionalIdeal next = next_F(ladder);
    ladder.running_product = fractional_product(ladder.running_product, next).minimized();
    ladder.entries.push_back(std::move(next));
}

FIdealLadder build_ladder(const ChartPtr& chart, int depth, const LadderOptions& options) {
    if (depth < 0) throw Error(ErrorKind::Argument, "ladder depth must be non-negative");
    FIdealLadder ladder = start_ladder(chart, options);
    while (ladder.depth() < depth) extend_ladder(ladder);
    return ladder;
}

std::vector<std::pair<unsigned, unsigned>> composite_F_digits(std::uint64_t i, int n) {
    if (i < 1 || n < 1) throw Error(ErrorKind::Argument, "composite index needs i >= 1 and n >= 1");
    std::uint64_t base = static_cast<std::uint64_t>(n) + 2;
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned pos = 0; i > 0; ++pos, i /= base)
        if (i % base != 0) out.emplace_back(pos, static_cast<unsigned>(i % base));
    return out;
}

FractionalIdeal composite_F(const FIdealLadder& ladder, std::uint64_t i) {
    FractionalIdeal out = FractionalIdeal::unit(ladder.chart);
    for (auto [pos, digit] : composite_F_digits(i, ladder.n)) {
        if (static_cast<int>(pos) > ladder.depth())
            throw Error(ErrorKind::Argument, "F_" + std::to_string(i) + " needs ladder depth " +
                                                 std::to_string(pos));
        out = fractional_product(out, fractional_power(ladder.entries[pos], digit)).minimized();
    }
    return out;
}

} // namespace nashlift
