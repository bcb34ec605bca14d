#include "nashlift/series.hpp"

#include <algorithm>
#include <limits>

namespace nashlift {

std::string Valuation::to_string() const {
    switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::AtLeast: return ">=" + std::to_string(value);
    }
    return "?";
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order, bool exact)
    : coeffs_(std::move(coeffs)), order_(order), exact_(exact) {
    if (order_ < -1) order_ = -1;
    if (!exact_) coeffs_.resize(static_cast<std::size_t>(order_ + 1));
    trim();
}

void TruncatedSeries::trim() {
    if (!exact_) return;
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    return TruncatedSeries({c}, order, true);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, unsigned exponent, int order) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return TruncatedSeries(std::move(v), order, true);
}

Rational TruncatedSeries::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    if (exact_) return 0;
    throw InsufficientPrecisionError("coefficient of t^" + std::to_string(k) +
                                         " lies past the truncation order " + std::to_string(order_),
                                     static_cast<int>(k));
}

Valuation TruncatedSeries::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return Valuation::finite(static_cast<std::int64_t>(k));
    if (exact_) return Valuation::infinite();
    return Valuation::at_least(order_ + 1);
}

bool TruncatedSeries::vanishes() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    bool exact = a.exact_ && b.exact_;
    int order;
    if (exact)
        order = std::min(a.order_, b.order_);
    else if (!a.exact_ && !b.exact_)
        order = std::min(a.order_, b.order_);
    else
        order = a.exact_ ? b.order_ : a.order_;
    std::size_t n = exact ? std::max(a.coeffs_.size(), b.coeffs_.size())
                          : static_cast<std::size_t>(order + 1);
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return TruncatedSeries(std::move(c), order, exact);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries r(a);
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

namespace {

// Lower bound for the valuation, usable for precision bookkeeping.
std::int64_t valuation_bound(const TruncatedSeries& s) {
    auto v = s.valuation();
    if (v.kind == Valuation::Kind::Infinite) return std::numeric_limits<int>::max() / 4;
    return v.value;
}

} // namespace

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    bool exact = a.exact_ && b.exact_;
    if ((a.exact_ && a.coeffs_.empty()) || (b.exact_ && b.coeffs_.empty()))
        return TruncatedSeries({}, std::min(a.order_, b.order_), true);
    std::size_t n;
    int order;
    if (exact) {
        order = std::min(a.order_, b.order_);
        n = a.coeffs_.size() + b.coeffs_.size() - 1;
    } else {
        std::int64_t top = std::numeric_limits<int>::max();
        if (!a.exact_) top = std::min<std::int64_t>(top, a.order_ + valuation_bound(b));
        if (!b.exact_) top = std::min<std::int64_t>(top, b.order_ + valuation_bound(a));
        order = static_cast<int>(top);
        n = static_cast<std::size_t>(std::max(order + 1, 0));
    }
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j)
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(c), order, exact);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    auto vbv = b.valuation();
    if (!vbv.is_finite())
        throw Error(ErrorKind::IndeterminatePullback,
                    "division by a series with no known nonzero coefficient");
    std::int64_t vb = vbv.value;
    auto vav = a.valuation();
    if (vav.kind == Valuation::Kind::Infinite) return TruncatedSeries({}, std::min(a.order_, b.order_), true);
    if (vav.kind == Valuation::Kind::AtLeast)
        return TruncatedSeries({}, static_cast<int>(a.order_ - vb), false);
    std::int64_t va = vav.value;
    if (va < vb)
        throw Error(ErrorKind::NonLiftableDivision,
                    "quotient has a pole: valuation " + std::to_string(va) + " over " + std::to_string(vb));

    auto divide = [&](std::int64_t r) {
        // q'_i = (a_{va+i} - sum_{j>=1} b_{vb+j} q'_{i-j}) / b_vb
        std::vector<Rational> q(static_cast<std::size_t>(va - vb + r + 1));
        const Rational& lead = b.coeffs_[static_cast<std::size_t>(vb)];
        for (std::int64_t i = 0; i <= r; ++i) {
            std::size_t ai = static_cast<std::size_t>(va + i);
            Rational acc = ai < a.coeffs_.size() ? a.coeffs_[ai] : Rational(0);
            for (std::int64_t j = 1; j <= i; ++j) {
                std::size_t bj = static_cast<std::size_t>(vb + j);
                if (bj >= b.coeffs_.size()) break;
                if (b.coeffs_[bj] != 0) acc -= b.coeffs_[bj] * q[static_cast<std::size_t>(va - vb + i - j)];
            }
            q[static_cast<std::size_t>(va - vb + i)] = acc / lead;
        }
        return q;
    };

    if (a.exact_ && b.exact_) {
        std::int64_t da = static_cast<std::int64_t>(a.coeffs_.size()) - 1;
        std::int64_t db = static_cast<std::int64_t>(b.coeffs_.size()) - 1;
        if (da - db >= va - vb) {
            auto q = divide(da - db - (va - vb));
            TruncatedSeries qs(q, std::min(a.order_, b.order_), true);
            if (agree(qs * b, a)) return qs;
        }
        std::int64_t r = std::min(a.order_, b.order_);
        return TruncatedSeries(divide(r), static_cast<int>(va - vb + r), false);
    }
    std::int64_t r = std::numeric_limits<int>::max();
    if (!a.exact_) r = std::min<std::int64_t>(r, a.order_ - va);
    if (!b.exact_) r = std::min<std::int64_t>(r, b.order_ - vb);
    return TruncatedSeries(divide(r), static_cast<int>(va - vb + r), false);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (!exact_ && order >= order_) return *this;
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                                       std::max(order + 1, 0)));
    return TruncatedSeries(std::move(c), order, false);
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n;
    if (a.exact_ && b.exact_)
        n = std::max(a.coeffs_.size(), b.coeffs_.size());
    else if (a.exact_)
        n = static_cast<std::size_t>(b.order_ + 1);
    else if (b.exact_)
        n = static_cast<std::size_t>(a.order_ + 1);
    else
        n = static_cast<std::size_t>(std::min(a.order_, b.order_) + 1);
    for (std::size_t k = 0; k < n; ++k) {
        Rational x = k < a.coeffs_.size() ? a.coeffs_[k] : Rational(0);
        Rational y = k < b.coeffs_.size() ? b.coeffs_[k] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    // ascending powers, unlike Polynomial::to_string
    RingPtr ring = Ring::make({var});
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Monomial m(1);
        m.set(0, static_cast<std::uint32_t>(k));
        std::string term = Polynomial::monomial(ring, m, coeffs_[k]).to_string();
        if (s.empty())
            s = term;
        else if (term.front() == '-')
            s += " - " + term.substr(1);
        else
            s += " + " + term;
    }
    if (!exact_) {
        std::string tail = "O(" + var + "^" + std::to_string(order_ + 1) + ")";
        return s.empty() ? tail : s + " + " + tail;
    }
    return s.empty() ? "0" : s;
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    auto vb = b.valuation();
    if (vb.kind == Valuation::Kind::Finite && vb.value < 1)
        throw Error(ErrorKind::Argument, "composition needs an inner series of valuation >= 1");
    if (vb.kind == Valuation::Kind::Infinite) {
        return TruncatedSeries({a.coeff(0)}, std::min(a.order(), b.order()), true);
    }
    std::int64_t v = vb.value;
    const auto& ac = a.coefficients();
    int work = std::min(a.order(), b.order());
    TruncatedSeries acc({}, work, true);
    for (std::size_t i = ac.size(); i-- > 0;) {
        acc = acc * b + TruncatedSeries::constant(ac[i], work);
    }
    if (!a.exact()) {
        std::int64_t top = (static_cast<std::int64_t>(a.order()) + 1) * v - 1;
        acc = acc.truncated(static_cast<int>(std::min<std::int64_t>(top, std::numeric_limits<int>::max() / 4)));
    }
    return acc;
}

TruncatedSeries series_from_polynomial(const Polynomial& p, int order) {
    if (p.ring()->nvars() > 1)
        throw Error(ErrorKind::Argument, "series need a polynomial in one variable");
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        std::size_t k = t.mono.size() ? t.mono[0] : 0;
        if (c.size() <= k) c.resize(k + 1);
        c[k] += t.coeff;
    }
    return TruncatedSeries(std::move(c), order, true);
}

} // namespace nashlift
