#ifndef NASHLIFT_POLYNOMIAL_HPP
#define NASHLIFT_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "nashlift/errors.hpp"

namespace nashlift {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };

    Kind kind = Kind::GrevLex;
    // Block orders: variables [0, split) form the first block; both blocks are
    // compared with grevlex, the first block dominating.
    std::size_t split = 0;

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string to_string(const MonomialOrder& order);

class Monomial {
public:
    using Exponents = boost::container::small_vector<std::uint32_t, 8>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(Exponents exps);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const noexcept { return degree_; }
    const Exponents& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, std::uint32_t e);

    bool divides(const Monomial& other) const;
    // this / other; requires other.divides(*this)
    Monomial quotient(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

private:
    Exponents exps_;
    std::uint32_t degree_ = 0;
};

// Three-way comparison under `order`: negative when a < b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered variable names plus the active monomial order.
class Ring {
public:
    Ring(std::vector<std::string> names, MonomialOrder order);

    static RingPtr make(std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::grevlex());

    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const MonomialOrder& order() const noexcept { return order_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    RingPtr with_order(const MonomialOrder& order) const;

    bool same_variables(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
};

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept strictly decreasing in the
/// ring's monomial order with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);
    // Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    // Terms must already be strictly decreasing and nonzero.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }
    bool is_one() const;
    Rational constant_term() const;

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coefficient() const { return terms_.front().coeff; }

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Multiply by c * m.
    Polynomial scaled(const Rational& c, const Monomial& m) const;
    // Same variables, different order (or a permutation-free re-sort).
    Polynomial in_ring(const RingPtr& target) const;
    // Scale so the leading coefficient is 1.
    Polynomial monic() const;
    // Scale to integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, unsigned exponent);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Substitute values[i] for variable i. All values share the target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& values,
                      const RingPtr& target);

/// Rename into `target`, sending variable i of f's ring to variable map[i].
Polynomial embed(const Polynomial& f, const RingPtr& target,
                 const std::vector<std::size_t>& map);

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

/// Quotient when b divides a exactly in Q[vars], nothing otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

/// Parse the text syntax: identifiers, `^`, optional `*`, rationals `p/q`.
/// `line`/`column` locate the first character for error messages.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            std::size_t line = 1, std::size_t column = 1);

} // namespace nashlift

#endif
