#ifndef NASHLIFT_SERIES_HPP
#define NASHLIFT_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashlift/polynomial.hpp"

namespace nashlift {

/// Valuation of a series or ideal along an arc. AtLeast means every known
/// coefficient vanished; `value` is then the first unknown exponent.
struct Valuation {
    enum class Kind { Finite, Infinite, AtLeast };
    Kind kind = Kind::Finite;
    std::int64_t value = 0;

    static Valuation finite(std::int64_t v) { return {Kind::Finite, v}; }
    static Valuation infinite() { return {Kind::Infinite, 0}; }
    static Valuation at_least(std::int64_t v) { return {Kind::AtLeast, v}; }

    bool is_finite() const noexcept { return kind == Kind::Finite; }
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Power series in t known through t^order. An exact series is a
/// polynomial: every coefficient past the stored ones is zero, and `order`
/// is only the working precision used when an exact operation has to
/// truncate (a non-terminating quotient).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::vector<Rational> coeffs, int order, bool exact);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries monomial(const Rational& c, unsigned exponent, int order);

    int order() const noexcept { return order_; }
    bool exact() const noexcept { return exact_; }
    /// Coefficient of t^k; throws when k lies past the known precision.
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Valuation valuation() const;
    /// Every stored coefficient is zero.
    bool vanishes() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
    /// Requires valuation(a) >= valuation(b) and b with a known nonzero
    /// coefficient; the relative precision of the quotient is the smaller of
    /// the two inputs'.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Same series known only through t^order.
    TruncatedSeries truncated(int order) const;

    std::string to_string(const std::string& var = "t") const;

    /// Equal coefficients through the smaller known order.
    friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    void trim();

    std::vector<Rational> coeffs_;
    int order_ = 0;
    bool exact_ = true;
};

/// a(b(t)), requires valuation(b) >= 1.
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// Exact series from a polynomial in one variable.
TruncatedSeries series_from_polynomial(const Polynomial& p, int order);

} // namespace nashlift

#endif
