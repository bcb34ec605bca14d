#ifndef NASHLIFT_RATIONAL_FUNCTION_HPP
#define NASHLIFT_RATIONAL_FUNCTION_HPP

#include <string>

#include "nashlift/polynomial.hpp"

namespace nashlift {

/// Quotient of polynomials in one ring. Normalization is lazy: common
/// content is removed and the fraction collapses when the denominator
/// divides the numerator, but no multivariate gcd is taken.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Polynomial numerator); // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction constant(const RingPtr& ring, const Rational& c) {
        return RationalFunction(Polynomial::constant(ring, c));
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    const RingPtr& ring() const noexcept { return num_.ring(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// Equality as elements of the fraction field (cross multiplication).
bool equivalent(const RationalFunction& a, const RationalFunction& b);

RationalFunction partial_derivative(const RationalFunction& f, std::size_t var);

RationalFunction pow(const RationalFunction& f, unsigned exponent);

} // namespace nashlift

#endif
