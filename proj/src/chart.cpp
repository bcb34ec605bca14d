#include "nashlift/chart.hpp"

#include <algorithm>

namespace nashlift {

AffineChart::AffineChart(Ideal ideal, int dim, std::optional<ParentMap> parent)
    : ideal_(std::move(ideal)), dim_(dim), parent_(std::move(parent)) {
    int actual = dimension(ideal_);
    if (actual != dim_)
        throw Error(ErrorKind::Argument, "declared dimension " + std::to_string(dim_) +
                                             " but the ideal has dimension " +
                                             std::to_string(actual));
    if (parent_) {
        if (!parent_->parent)
            throw Error(ErrorKind::Argument, "parent map without a parent chart");
        if (parent_->coordinates.size() != parent_->parent->nvars())
            throw Error(ErrorKind::Argument, "parent map needs one coordinate per parent variable");
    }
}

ChartPtr AffineChart::make(Ideal ideal, std::optional<int> dim, std::optional<ParentMap> parent) {
    int d = dim ? *dim : dimension(ideal);
    return std::make_shared<const AffineChart>(std::move(ideal), d, std::move(parent));
}

bool parent_map_consistent(const AffineChart& chart) {
    if (!chart.parent()) return true;
    const auto& pm = *chart.parent();
    for (const auto& g : pm.parent->ideal().generators()) {
        Polynomial pulled = substitute(g, pm.coordinates, chart.ring());
        if (!chart.vanishes(pulled)) return false;
    }
    return true;
}

PolyMatrix jacobian(const AffineChart& chart) {
    PolyMatrix j;
    for (const auto& g : chart.ideal().generators()) {
        std::vector<Polynomial> row;
        row.reserve(chart.nvars());
        for (std::size_t v = 0; v < chart.nvars(); ++v) row.push_back(partial_derivative(g, v));
        j.push_back(std::move(row));
    }
    return j;
}

Ideal singular_locus(const AffineChart& chart) {
    if (chart.is_empty()) return Ideal::unit(chart.ring());
    std::size_t c = static_cast<std::size_t>(chart.codim());
    std::vector<Polynomial> gens = chart.ideal().generators();
    for (auto& m : matrix_minors(jacobian(chart), c, chart.nvars(), chart.ring()))
        if (!m.is_zero()) gens.push_back(std::move(m));
    return Ideal(chart.ring(), std::move(gens));
}

bool is_smooth(const AffineChart& chart) {
    if (chart.is_empty()) return true;
    return singular_locus(chart).is_unit();
}

bool is_smooth_at(const AffineChart& chart, const std::vector<Rational>& point) {
    if (point.size() != chart.nvars())
        throw Error(ErrorKind::Argument, "point has the wrong number of coordinates");
    Matrix<Rational> values;
    for (const auto& row : jacobian(chart)) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(evaluate(e, point));
        values.push_back(std::move(r));
    }
    return rank(std::move(values)) == static_cast<std::size_t>(chart.codim());
}

Polynomial DifferentialFrame::scaled_derivative(const Polynomial& f, std::size_t b) const {
    Polynomial out = certificate * partial_derivative(f, basis[b]);
    for (std::size_t k = 0; k < dependent.size(); ++k) {
        if (numerators[k][b].is_zero()) continue;
        Polynomial d = partial_derivative(f, dependent[k]);
        if (!d.is_zero()) out += numerators[k][b] * d;
    }
    return out;
}

RationalFunction DifferentialFrame::derivative(const RationalFunction& f, std::size_t b) const {
    const Polynomial& p = f.numerator();
    const Polynomial& q = f.denominator();
    RationalFunction dp(scaled_derivative(p, b), certificate);
    if (q.is_constant()) return dp * RationalFunction(Polynomial::constant(p.ring(), 1), q);
    RationalFunction dq(scaled_derivative(q, b), certificate);
    RationalFunction qf(q), pf(p);
    return (dp * qf - pf * dq) / RationalFunction(q * q);
}

std::vector<std::string> DifferentialFrame::basis_names() const {
    std::vector<std::string> out;
    for (auto b : basis) out.push_back(chart->ring()->name(b));
    return out;
}

namespace {

std::optional<DifferentialFrame> try_frame(const ChartPtr& chart, const PolyMatrix& jac,
                                           const std::vector<std::size_t>& basis) {
    std::size_t nv = chart->nvars();
    std::vector<std::size_t> dependent;
    for (std::size_t v = 0; v < nv; ++v)
        if (std::find(basis.begin(), basis.end(), v) == basis.end()) dependent.push_back(v);
    std::size_t c = dependent.size();
    DifferentialFrame frame{chart, basis, dependent, {}, Polynomial::constant(chart->ring(), 1), {}};
    if (c == 0) return frame;
    for (const auto& rows : subsets(jac.size(), c)) {
        Polynomial det = chart->reduce(determinant(submatrix(jac, rows, dependent)));
        if (det.is_zero()) continue;
        frame.certificate_rows = rows;
        frame.certificate = det;
        // Cramer: column k replaced by -J[rows, basis_b].
        frame.numerators.assign(c, {});
        PolyMatrix block = submatrix(jac, rows, dependent);
        for (std::size_t k = 0; k < c; ++k) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                PolyMatrix m = block;
                for (std::size_t r = 0; r < c; ++r) m[r][k] = -jac[rows[r]][basis[b]];
                frame.numerators[k].push_back(chart->reduce(determinant(m)));
            }
        }
        return frame;
    }
    return std::nullopt;
}

} // namespace

DifferentialFrame differential_frame(const ChartPtr& chart,
                                     const std::optional<std::vector<std::size_t>>& preferred) {
    if (chart->dim() <= 0)
        throw Error(ErrorKind::Argument, "differential frame needs a positive-dimensional chart");
    std::size_t n = static_cast<std::size_t>(chart->dim());
    PolyMatrix jac = jacobian(*chart);
    if (preferred) {
        auto cols = *preferred;
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        if (cols.size() != n || cols.back() >= chart->nvars())
            throw Error(ErrorKind::Argument, "preferred frame must name " + std::to_string(n) +
                                                 " distinct chart variables");
        if (auto f = try_frame(chart, jac, cols)) return *f;
    }
    for (const auto& cols : subsets(chart->nvars(), n))
        if (auto f = try_frame(chart, jac, cols)) return *f;
    throw Error(ErrorKind::DegenerateFrame,
                "every " + std::to_string(chart->codim()) +
                    "x" + std::to_string(chart->codim()) +
                    " Jacobian minor vanishes on the chart (non-reduced or dimension-mismatched input)");
}

bool frame_relations_hold(const DifferentialFrame& frame) {
    const auto& chart = *frame.chart;
    PolyMatrix jac = jacobian(chart);
    for (const auto& row : jac) {
        for (std::size_t b = 0; b < frame.basis.size(); ++b) {
            Polynomial rel = frame.certificate * row[frame.basis[b]];
            for (std::size_t k = 0; k < frame.dependent.size(); ++k)
                rel += row[frame.dependent[k]] * frame.numerators[k][b];
            if (!chart.vanishes(rel)) return false;
        }
    }
    return true;
}

} // namespace nashlift
