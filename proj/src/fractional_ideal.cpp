#include "nashlift/fractional_ideal.hpp"

#include <algorithm>

namespace nashlift {

namespace {

void push_unique(std::vector<Polynomial>& out, std::vector<Polynomial>& monics, Polynomial p) {
    Polynomial key = p.monic();
    if (std::find(monics.begin(), monics.end(), key) != monics.end()) return;
    monics.push_back(std::move(key));
    out.push_back(std::move(p));
}

} // namespace

std::vector<FractionalIdeal::Factor> merge_factors(std::vector<FractionalIdeal::Factor> factors) {
    std::vector<FractionalIdeal::Factor> out;
    for (auto& [base, e] : factors) {
        if (e == 0 || base.is_constant()) continue;
        Polynomial key = base.monic();
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const FractionalIdeal::Factor& f) { return f.first == key; });
        if (it == out.end())
            out.emplace_back(std::move(key), e);
        else
            it->second += e;
    }
    return out;
}

FractionalIdeal::FractionalIdeal(ChartPtr chart, std::vector<Polynomial> numerators,
                                 std::vector<Factor> denominator)
    : chart_(std::move(chart)), denominator_(merge_factors(std::move(denominator))) {
    std::vector<Polynomial> monics;
    for (auto& p : numerators) {
        if (p.ring() != chart_->ring()) p = p.in_ring(chart_->ring());
        if (p.is_zero() || chart_->vanishes(p)) continue;
        push_unique(numerators_, monics, std::move(p));
    }
    if (numerators_.empty())
        throw Error(ErrorKind::DegenerateInput, "every generator of the fractional ideal vanishes on the chart");
    for (const auto& [base, e] : denominator_)
        if (chart_->vanishes(base))
            throw Error(ErrorKind::DegenerateInput, "fractional ideal denominator vanishes on the chart");
}

FractionalIdeal FractionalIdeal::unit(const ChartPtr& chart) {
    return FractionalIdeal(chart, {Polynomial::constant(chart->ring(), 1)});
}

Polynomial FractionalIdeal::denominator_polynomial() const {
    Polynomial d = Polynomial::constant(chart_->ring(), 1);
    for (const auto& [base, e] : denominator_) d *= pow(base, e);
    return d;
}

RationalFunction FractionalIdeal::generator(std::size_t i) const {
    return RationalFunction(numerators_.at(i), denominator_polynomial());
}

FractionalIdeal FractionalIdeal::minimized() const {
    std::vector<Polynomial> gens = numerators_;
    for (const auto& g : chart_->ideal().generators()) gens.push_back(g);
    std::vector<Polynomial> kept;
    for (const auto& g : groebner_basis(gens, chart_->ring()))
        if (!chart_->vanishes(g)) kept.push_back(g);
    return FractionalIdeal(chart_, std::move(kept), denominator_);
}

std::string FractionalIdeal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < numerators_.size(); ++i) {
        if (i) s += ", ";
        s += numerators_[i].to_string();
    }
    s += ")";
    if (!denominator_.empty()) {
        s += " / ";
        for (std::size_t i = 0; i < denominator_.size(); ++i) {
            if (i) s += " * ";
            s += "(" + denominator_[i].first.to_string() + ")";
            if (denominator_[i].second != 1) s += "^" + std::to_string(denominator_[i].second);
        }
    }
    return s;
}

FractionalIdeal fractional_product(const FractionalIdeal& a, const FractionalIdeal& b) {
    if (a.chart() != b.chart())
        throw Error(ErrorKind::Context, "fractional ideals on different charts");
    std::vector<Polynomial> nums;
    nums.reserve(a.size() * b.size());
    for (const auto& p : a.numerators())
        for (const auto& q : b.numerators()) nums.push_back(a.chart()->reduce(p * q));
    auto den = a.denominator();
    den.insert(den.end(), b.denominator().begin(), b.denominator().end());
    return FractionalIdeal(a.chart(), std::move(nums), std::move(den));
}

FractionalIdeal fractional_power(const FractionalIdeal& a, unsigned exponent) {
    FractionalIdeal out = FractionalIdeal::unit(a.chart());
    for (unsigned i = 0; i < exponent; ++i) out = fractional_product(out, a).minimized();
    return out;
}

Ideal numerator_ideal(const FractionalIdeal& f) {
    std::vector<Polynomial> gens = f.numerators();
    for (const auto& g : f.chart()->ideal().generators()) gens.push_back(g);
    return Ideal(f.chart()->ring(), std::move(gens));
}

} // namespace nashlift
