#include "nashlift/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nashlift {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Context: return "context";
    case ErrorKind::Size: return "size";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DegenerateFrame: return "degenerate-frame";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::DegenerateLadder: return "degenerate-ladder";
    case ErrorKind::NonLiftableDivision: return "non-liftable-division";
    case ErrorKind::IndeterminatePullback: return "indeterminate-pullback";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::InsufficientPrecision: return "insufficient-precision";
    }
    return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const MonomialOrder& order) {
    switch (order.kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Block: return "block(" + std::to_string(order.split) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial q(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= other.exps_[i];
    q.degree_ -= other.degree_;
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial l(*this);
    l.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        l.exps_[i] = std::max(exps_[i], other.exps_[i]);
        l.degree_ += l.exps_[i];
    }
    return l;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
    m.degree_ += b.degree_;
    return m;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    switch (order.kind) {
    case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case MonomialOrder::Kind::GrevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    case MonomialOrder::Kind::Block: {
        std::size_t split = std::min(order.split, a.size());
        if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
        return grevlex_range(a, b, split, a.size());
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
    for (const auto& n : names_)
        if (n.empty()) throw Error(ErrorKind::Argument, "empty variable name");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error(ErrorKind::Context, "duplicate variable name '" + names_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
    return std::make_shared<const Ring>(std::move(names), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

RingPtr Ring::with_order(const MonomialOrder& order) const {
    return make(names_, order);
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() == b.ring()) return;
    if (!a.ring() || !b.ring() || !a.ring()->same_variables(*b.ring()))
        throw Error(ErrorKind::Context, "polynomials belong to different ring contexts");
}

namespace {

// Bring b into a's ring when only the order differs.
const Polynomial& aligned(const Polynomial& a, const Polynomial& b, Polynomial& storage) {
    require_same_ring(a, b);
    if (a.ring() == b.ring() || a.ring()->order() == b.ring()->order()) return b;
    storage = b.in_ring(a.ring());
    return storage;
}

} // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw Error(ErrorKind::Argument, "variable index out of range");
    Monomial m(ring->nvars());
    m.set(index, 1);
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& order = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare(a.mono, b.mono, order) > 0;
    });
    Polynomial p(ring);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff == 1;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale_b, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = compare(a[i].mono, b[j].mono, order);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, scale_b * b[j].coeff});
            ++j;
        } else {
            Rational s = a[i].coeff + scale_b * b[j].coeff;
            if (s != 0) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, scale_b * b[j].coeff});
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (!ring_) {
        *this = other;
        return *this;
    }
    Polynomial storage;
    const Polynomial& b = aligned(*this, other, storage);
    terms_ = merge_terms(terms_, b.terms_, Rational(1), ring_->order());
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (!ring_) {
        *this = -other;
        return *this;
    }
    Polynomial storage;
    const Polynomial& b = aligned(*this, other, storage);
    terms_ = merge_terms(terms_, b.terms_, Rational(-1), ring_->order());
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial storage;
    const Polynomial& bb = aligned(a, b, storage);
    if (a.is_zero() || bb.is_zero()) return Polynomial(a.ring());
    if (bb.size() == 1) return a.scaled(bb.terms_[0].coeff, bb.terms_[0].mono);
    if (a.size() == 1) return bb.scaled(a.terms_[0].coeff, a.terms_[0].mono).in_ring(a.ring());
    std::vector<Term> prod;
    prod.reserve(a.size() * bb.size());
    for (const auto& s : a.terms_)
        for (const auto& t : bb.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(a.ring(), std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial storage;
    const Polynomial& bb = aligned(a, b, storage);
    if (a.terms_.size() != bb.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == bb.terms_[i].mono) || a.terms_[i].coeff != bb.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order of terms.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (!ring_->same_variables(*target))
        throw Error(ErrorKind::Context, "cannot move polynomial between unrelated rings");
    if (target->order() == ring_->order()) {
        Polynomial p(*this);
        p.ring_ = target;
        return p;
    }
    return from_terms(target, terms_);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coefficient();
    return *this * inv;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool need_star = false;
        if (t.mono.is_one() || c != 1) {
            out << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (need_star) out << "*";
            out << ring_->name(i);
            if (t.mono[i] > 1) out << "^" << t.mono[i];
            need_star = true;
        }
    }
    return out.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(base.ring(), 1);
    Polynomial b = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    if (var >= f.ring()->nvars())
        throw Error(ErrorKind::Argument, "derivative variable out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        auto e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        terms.push_back({std::move(m), t.coeff * e});
    }
    // Dividing the surviving terms by x_i keeps them strictly decreasing.
    return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& values,
                      const RingPtr& target) {
    if (values.size() != f.ring()->nvars())
        throw Error(ErrorKind::Argument, "substitution needs one value per variable");
    std::vector<std::vector<Polynomial>> powers(values.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
        return cache[e];
    };
    std::vector<Term> acc;
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < t.mono.size() && !term.is_zero(); ++i)
            if (t.mono[i] > 0) term *= power_of(i, t.mono[i]);
        for (const auto& s : term.terms()) acc.push_back(s);
    }
    return Polynomial::from_terms(target, std::move(acc));
}

Polynomial embed(const Polynomial& f, const RingPtr& target,
                 const std::vector<std::size_t>& map) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] != 0) m.set(map.at(i), m[map[i]] + t.mono[i]);
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
    Rational sum = 0;
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.mono.size() && v != 0; ++i) {
            for (std::uint32_t k = 0; k < t.mono[i]; ++k) v *= point.at(i);
        }
        sum += v;
    }
    return sum;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw Error(ErrorKind::Argument, "division by the zero polynomial");
    Polynomial rem = a.in_ring(a.ring());
    Polynomial bb = b.in_ring(a.ring());
    std::vector<Term> quotient;
    const auto& lm = bb.leading_monomial();
    const auto& lc = bb.leading_coefficient();
    while (!rem.is_zero()) {
        // A single divisor is a Groebner basis of its ideal: the leading term
        // must be divisible or b does not divide a.
        const auto& lt = rem.leading_term();
        if (!lm.divides(lt.mono)) return std::nullopt;
        Term q{lt.mono.quotient(lm), lt.coeff / lc};
        rem -= bb.scaled(q.coeff, q.mono);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_sorted_terms(a.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column)
        : text_(text), ring_(ring), line_(line), column_(column) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = expression();
        skip_ws();
        if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = line_, col = column_;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial expression() {
        Polynomial acc(ring_);
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        Polynomial t = term();
        acc = negate ? -t : t;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= factor();
            } else if (peek('/')) {
                ++pos_;
                skip_ws();
                Rational d = number();
                if (d == 0) fail("division by zero");
                acc *= Rational(1) / d;
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            base = pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q = number();
            // p/q directly after an integer literal binds as a rational.
            if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                Rational d = number();
                if (d == 0) fail("zero denominator");
                q /= d;
            }
            return Polynomial::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ring_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column) {
    return PolyParser(text, ring, line, column).parse();
}

} // namespace nashlift
