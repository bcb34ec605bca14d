#ifndef NASHLIFT_GROEBNER_HPP
#define NASHLIFT_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "nashlift/polynomial.hpp"

namespace nashlift {

/// Reduced Groebner basis of `generators` under `ring`'s order. Leading
/// coefficients are 1 and elements are sorted by increasing leading monomial.
/// The zero ideal yields an empty basis, the unit ideal yields {1}.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const RingPtr& ring);

/// Remainder of f modulo a Groebner basis of f's ring order.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

/// Finitely generated ideal with a write-once Groebner cache per order.
/// Copies share the cache; generators never change after construction.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal unit(RingPtr ring);
    static Ideal zero(RingPtr ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    /// Reduced basis under the ring's own order.
    const std::vector<Polynomial>& groebner() const;
    /// Reduced basis under `order`; elements live in a ring with that order.
    const std::vector<Polynomial>& groebner(const MonomialOrder& order) const;

    bool is_unit() const;
    bool is_zero() const { return groebner().empty(); }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>>
            bases;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
bool contains(const Ideal& ideal, const Polynomial& f);
/// inner is a subset of outer
bool contains(const Ideal& outer, const Ideal& inner);
bool same_ideal(const Ideal& a, const Ideal& b);

/// Generators of ideal meet Q[keep], via a block elimination order.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep);

/// ideal : f^infinity, computed by adjoining w with w*f - 1 and eliminating w.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// ideal : f (one step), via the intersection ideal meet (f).
Ideal colon(const Ideal& ideal, const Polynomial& f);

Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Krull dimension of the quotient ring; -1 for the unit ideal.
int dimension(const Ideal& ideal);

} // namespace nashlift

#endif
