#ifndef NASHLIFT_FRACTIONAL_IDEAL_HPP
#define NASHLIFT_FRACTIONAL_IDEAL_HPP

#include <utility>
#include <vector>

#include "nashlift/chart.hpp"

namespace nashlift {

/// Submodule of the function field of a chart: the polynomial numerators
/// divided by one common denominator, kept as a product of powers so that
/// valuations never need the expanded product.
class FractionalIdeal {
public:
    using Factor = std::pair<Polynomial, unsigned>;

    FractionalIdeal() = default;
    /// Drops numerators vanishing on the chart and duplicates up to a
    /// constant factor. Throws when nothing survives.
    FractionalIdeal(ChartPtr chart, std::vector<Polynomial> numerators,
                    std::vector<Factor> denominator = {});

    static FractionalIdeal unit(const ChartPtr& chart);

    const ChartPtr& chart() const noexcept { return chart_; }
    const std::vector<Polynomial>& numerators() const noexcept { return numerators_; }
    const std::vector<Factor>& denominator() const noexcept { return denominator_; }
    std::size_t size() const noexcept { return numerators_.size(); }

    Polynomial denominator_polynomial() const;
    RationalFunction generator(std::size_t i) const;
    bool is_polynomial() const noexcept { return denominator_.empty(); }

    /// Same fractional ideal with the numerator set replaced by a reduced
    /// Groebner basis of (numerators + chart ideal), minus members of the
    /// chart ideal.
    FractionalIdeal minimized() const;

    std::string to_string() const;

private:
    ChartPtr chart_;
    std::vector<Polynomial> numerators_;
    std::vector<Factor> denominator_;
};

/// Numerators of both multiplied pairwise, denominators merged.
FractionalIdeal fractional_product(const FractionalIdeal& a, const FractionalIdeal& b);

FractionalIdeal fractional_power(const FractionalIdeal& a, unsigned exponent);

/// Ideal generated by the numerators (ignoring the denominator) plus the
/// chart ideal. Two fractional ideals with equal denominators are equal on
/// the chart iff these agree.
Ideal numerator_ideal(const FractionalIdeal& f);

/// Merges powers of equal (up to a constant) bases; constants are dropped.
std::vector<FractionalIdeal::Factor> merge_factors(std::vector<FractionalIdeal::Factor> factors);

} // namespace nashlift

#endif
