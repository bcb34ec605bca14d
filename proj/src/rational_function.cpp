#include "nashlift/rational_function.hpp"

namespace nashlift {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.ring(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_same_ring(num_, den_);
    den_ = den_.in_ring(num_.ring());
    if (den_.is_zero()) throw Error(ErrorKind::Argument, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ring(), 1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ *= Rational(1) / den_.leading_coefficient();
            den_ = Polynomial::constant(num_.ring(), 1);
        }
        return;
    }
    if (auto q = exact_divide(num_, den_)) {
        num_ = std::move(*q);
        den_ = Polynomial::constant(num_.ring(), 1);
        return;
    }
    // Primitive denominator with positive leading coefficient.
    Polynomial prim = den_.primitive();
    Rational scale = prim.leading_coefficient() / den_.leading_coefficient();
    den_ = std::move(prim);
    num_ *= scale;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (den_ == other.den_) {
        num_ += other.num_;
    } else if (other.den_.is_constant()) {
        num_ += other.num_ * den_;
    } else if (den_.is_constant()) {
        num_ = num_ * other.den_ + other.num_;
        den_ = other.den_;
    } else if (auto q = exact_divide(other.den_, den_)) {
        num_ = num_ * *q + other.num_;
        den_ = other.den_;
    } else if (auto q2 = exact_divide(den_, other.den_)) {
        num_ += other.num_ * *q2;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
    return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    if (is_zero()) return *this;
    if (other.is_zero()) return *this = other;
    Polynomial a = num_, b = den_, c = other.num_, d = other.den_;
    // Cross-cancel whole factors when they divide.
    if (!d.is_constant()) {
        if (auto q = exact_divide(a, d)) {
            a = std::move(*q);
            d = Polynomial::constant(a.ring(), 1);
        }
    }
    if (!b.is_constant()) {
        if (auto q = exact_divide(c, b)) {
            c = std::move(*q);
            b = Polynomial::constant(a.ring(), 1);
        }
    }
    num_ = a * c;
    den_ = b * d;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
    if (other.is_zero()) throw Error(ErrorKind::Argument, "division by the zero rational function");
    return *this *= RationalFunction(other.den_, other.num_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

RationalFunction partial_derivative(const RationalFunction& f, std::size_t var) {
    const auto& n = f.numerator();
    const auto& d = f.denominator();
    if (d.is_constant()) return RationalFunction(partial_derivative(n, var));
    return RationalFunction(partial_derivative(n, var) * d - n * partial_derivative(d, var), d * d);
}

RationalFunction pow(const RationalFunction& f, unsigned exponent) {
    return RationalFunction(pow(f.numerator(), exponent), pow(f.denominator(), exponent));
}

} // namespace nashlift
