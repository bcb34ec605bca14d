#include "nashlift/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace nashlift {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free kernel: integer coefficients, content removed as we go.
// ---------------------------------------------------------------------------

struct ITerm {
    Monomial mono;
    Integer coeff;
};

using IPoly = std::vector<ITerm>; // strictly decreasing, nonzero coefficients

IPoly to_integer(const Polynomial& p) {
    Polynomial prim = p.primitive();
    IPoly out;
    out.reserve(prim.size());
    for (const auto& t : prim.terms()) out.push_back({t.mono, t.coeff.get_num()});
    return out;
}

Polynomial to_rational(const IPoly& p, const RingPtr& ring, bool make_monic) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    Rational scale = 1;
    if (make_monic && !p.empty()) scale = Rational(1) / Rational(p.front().coeff);
    for (const auto& t : p) terms.push_back({t.mono, Rational(t.coeff) * scale});
    return Polynomial::from_sorted_terms(ring, std::move(terms));
}

Integer content(const IPoly& p) {
    Integer g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_exact(IPoly& p, const Integer& d) {
    for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
}

void make_primitive(IPoly& p) {
    if (p.empty()) return;
    Integer g = content(p);
    if (g < 0) g = -g;
    if (g != 1 && g != 0) divide_exact(p, g);
    if (p.front().coeff < 0)
        for (auto& t : p) t.coeff = -t.coeff;
}

// a*f[skip_f..] - b*(mono*g[1..]); the leading terms are known to cancel.
IPoly combine(const IPoly& f, const Integer& a, const IPoly& g, const Integer& b,
              const Monomial& mono, const MonomialOrder& order, std::size_t skip_f) {
    IPoly out;
    out.reserve(f.size() - skip_f + g.size());
    std::size_t i = skip_f, j = 1;
    Monomial gm;
    if (j < g.size()) gm = g[j].mono * mono;
    while (i < f.size() || j < g.size()) {
        int c = (i >= f.size()) ? -1 : (j >= g.size() ? 1 : compare(f[i].mono, gm, order));
        if (c > 0) {
            out.push_back({f[i].mono, a * f[i].coeff});
            ++i;
        } else {
            if (c < 0) {
                out.push_back({std::move(gm), -b * g[j].coeff});
            } else {
                Integer v = a * f[i].coeff - b * g[j].coeff;
                if (v != 0) out.push_back({f[i].mono, std::move(v)});
                ++i;
            }
            ++j;
            if (j < g.size()) gm = g[j].mono * mono;
        }
    }
    return out;
}

struct Reducer {
    const std::vector<IPoly>& basis;
    const std::vector<char>* active = nullptr;
    const MonomialOrder& order;

    const IPoly* find_divisor(const Monomial& m, std::size_t skip = SIZE_MAX) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip) continue;
            if (active && !(*active)[k]) continue;
            if (!basis[k].empty() && basis[k].front().mono.divides(m)) return &basis[k];
        }
        return nullptr;
    }

    // Full reduction. `scale` accumulates the factor the input was multiplied by.
    IPoly reduce(IPoly f, Rational* scale = nullptr, std::size_t skip = SIZE_MAX) const {
        IPoly rem;
        std::size_t start = 0; // f[0, start) has moved to rem
        std::size_t steps = 0;
        while (start < f.size()) {
            const IPoly* g = find_divisor(f[start].mono, skip);
            if (!g) {
                rem.push_back(std::move(f[start]));
                ++start;
                continue;
            }
            const Integer& lf = f[start].coeff;
            const Integer& lg = g->front().coeff;
            Integer d;
            mpz_gcd(d.get_mpz_t(), lf.get_mpz_t(), lg.get_mpz_t());
            Integer a = lg / d;
            Integer b = lf / d;
            Monomial q = f[start].mono.quotient(g->front().mono);
            f = combine(f, a, *g, b, q, order, start + 1);
            start = 0;
            if (a != 1) {
                for (auto& t : rem) t.coeff *= a;
                if (scale) *scale *= a;
            }
            if (++steps % 8 == 0 || f.empty()) {
                Integer c = content(f);
                for (const auto& t : rem) {
                    if (c == 1) break;
                    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
                }
                if (c < 0) c = -c;
                if (c > 1) {
                    divide_exact(f, c);
                    divide_exact(rem, c);
                    if (scale) *scale /= c;
                }
            }
        }
        return rem;
    }
};

IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
    Monomial l = f.front().mono.lcm(g.front().mono);
    const Integer& lf = f.front().coeff;
    const Integer& lg = g.front().coeff;
    Integer d;
    mpz_gcd(d.get_mpz_t(), lf.get_mpz_t(), lg.get_mpz_t());
    Integer a = lg / d;
    Integer b = lf / d;
    // a * (l/lm f) * f - b * (l/lm g) * g
    IPoly fs;
    Monomial mf = l.quotient(f.front().mono);
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.mono * mf, t.coeff});
    return combine(fs, a, g, b, l.quotient(g.front().mono), order, 1);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

class Buchberger {
public:
    explicit Buchberger(const MonomialOrder& order) : order_(order) {}

    void add(IPoly f) {
        Reducer red{basis_, &active_, order_};
        IPoly h = red.reduce(std::move(f));
        if (h.empty()) return;
        make_primitive(h);
        update(std::move(h));
    }

    void run() {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (better(pairs_[k], pairs_[best])) best = k;
            Pair p = std::move(pairs_[best]);
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            IPoly s = spoly(basis_[p.i], basis_[p.j], order_);
            Reducer red{basis_, &active_, order_};
            IPoly h = red.reduce(std::move(s));
            if (h.empty()) continue;
            make_primitive(h);
            update(std::move(h));
        }
    }

    std::vector<IPoly> reduced() const {
        std::vector<IPoly> g;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (active_[k]) g.push_back(basis_[k]);
        // Minimality already holds; interreduce tails.
        std::vector<IPoly> out;
        out.reserve(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) {
            Reducer red{g, nullptr, order_};
            IPoly head;
            head.push_back(g[k].front());
            IPoly tail(g[k].begin() + 1, g[k].end());
            // Reduce the tail; the head is untouched by construction.
            Rational scale = 1;
            IPoly r = red.reduce(std::move(tail), &scale, k);
            IPoly full;
            full.reserve(r.size() + 1);
            Integer hc = head.front().coeff;
            // r = scale * tail (mod basis); rescale the head to match.
            Rational hs = Rational(hc) * scale;
            Integer num = hs.get_num(), den = hs.get_den();
            full.push_back({head.front().mono, num});
            for (auto& t : r) full.push_back({t.mono, t.coeff * den});
            make_primitive(full);
            out.push_back(std::move(full));
        }
        std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) {
            return compare(a.front().mono, b.front().mono, order_) < 0;
        });
        return out;
    }

private:
    bool better(const Pair& a, const Pair& b) const {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = compare(a.lcm, b.lcm, order_);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    // Gebauer-Moeller installation of a new basis element.
    void update(IPoly h) {
        const Monomial lh = h.front().mono;
        std::size_t hi = basis_.size();
        basis_.push_back(std::move(h));
        active_.push_back(1);

        std::vector<Pair> c;
        for (std::size_t k = 0; k < hi; ++k)
            if (active_[k]) c.push_back({k, hi, basis_[k].front().mono.lcm(lh)});

        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool coprime = basis_[p.i].front().mono.coprime(lh);
            bool keep = coprime;
            if (!keep) {
                keep = true;
                for (std::size_t m = k + 1; m < c.size() && keep; ++m)
                    if (c[m].lcm.divides(p.lcm)) keep = false;
                for (const auto& q : d)
                    if (keep && q.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> e;
        for (auto& p : d)
            if (!basis_[p.i].front().mono.coprime(lh)) e.push_back(std::move(p));

        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + e.size());
        for (auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) &&
                        !(basis_[p.i].front().mono.lcm(lh) == p.lcm) &&
                        !(basis_[p.j].front().mono.lcm(lh) == p.lcm);
            if (!drop) kept.push_back(std::move(p));
        }
        for (auto& p : e) kept.push_back(std::move(p));
        pairs_ = std::move(kept);

        for (std::size_t k = 0; k < hi; ++k)
            if (active_[k] && lh.divides(basis_[k].front().mono)) active_[k] = 0;
    }

    const MonomialOrder& order_;
    std::vector<IPoly> basis_;
    std::vector<char> active_;
    std::vector<Pair> pairs_;
};

} // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const RingPtr& ring) {
    std::vector<IPoly> inputs;
    for (const auto& g : generators) {
        if (g.ring() != ring && !g.ring()->same_variables(*ring))
            throw Error(ErrorKind::Context, "generator from a different ring");
        Polynomial p = g.in_ring(ring);
        if (p.is_zero()) continue;
        if (p.is_constant()) return {Polynomial::constant(ring, 1)};
        inputs.push_back(to_integer(p));
    }
    // Feed small generators first; it keeps the intermediate basis short.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
        return compare(a.front().mono, b.front().mono, ring->order()) < 0;
    });
    Buchberger engine(ring->order());
    for (auto& f : inputs) engine.add(std::move(f));
    engine.run();
    std::vector<Polynomial> out;
    for (const auto& g : engine.reduced()) out.push_back(to_rational(g, ring, true));
    return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    std::vector<IPoly> ib;
    ib.reserve(basis.size());
    for (const auto& g : basis) ib.push_back(to_integer(g.in_ring(ring)));
    Reducer red{ib, nullptr, ring->order()};
    Polynomial prim = f.primitive();
    Rational fscale = prim.is_zero() ? Rational(1) : prim.leading_coefficient() / f.leading_coefficient();
    Rational scale = 1;
    IPoly r = red.reduce(to_integer(prim), &scale);
    // r = scale * prim = scale * fscale * f (mod basis)
    Polynomial out = to_rational(r, ring, false);
    return out * (Rational(1) / (scale * fscale));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    Polynomial gg = g.in_ring(f.ring());
    Monomial l = f.leading_monomial().lcm(gg.leading_monomial());
    return f.scaled(1 / f.leading_coefficient(), l.quotient(f.leading_monomial())) -
           gg.scaled(1 / gg.leading_coefficient(), l.quotient(gg.leading_monomial()));
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.ring() != ring_ && !g.ring()->same_variables(*ring_))
            throw Error(ErrorKind::Context, "ideal generator from a different ring");
        generators_.push_back(g.in_ring(ring_));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

const std::vector<Polynomial>& Ideal::groebner() const { return groebner(ring_->order()); }

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const {
    {
        std::lock_guard lock(cache_->mutex);
        for (const auto& [ord, basis] : cache_->bases)
            if (ord == order) return *basis;
    }
    RingPtr target = order == ring_->order() ? ring_ : ring_->with_order(order);
    auto basis = std::make_shared<const std::vector<Polynomial>>(groebner_basis(generators_, target));
    std::lock_guard lock(cache_->mutex);
    for (const auto& [ord, existing] : cache_->bases)
        if (ord == order) return *existing; // another thread won
    cache_->bases.emplace_back(order, basis);
    return *basis;
}

bool Ideal::is_unit() const {
    const auto& g = groebner();
    return g.size() == 1 && g.front().is_constant();
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
    require_same_ring(f, Polynomial(ideal.ring()));
    return reduce(f.in_ring(ideal.ring()), ideal.groebner());
}

bool contains(const Ideal& ideal, const Polynomial& f) { return normal_form(f, ideal).is_zero(); }

bool contains(const Ideal& outer, const Ideal& inner) {
    for (const auto& g : inner.generators())
        if (!contains(outer, g)) return false;
    return true;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_variables(*b.ring()))
        throw Error(ErrorKind::Context, "ideals in different rings");
    const auto& ga = a.groebner(MonomialOrder::grevlex());
    const auto& gb = b.groebner(MonomialOrder::grevlex());
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep) {
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();
    std::vector<char> kept(n, 0);
    for (auto k : keep) {
        if (k >= n) throw Error(ErrorKind::Argument, "kept variable out of range");
        kept[k] = 1;
    }
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) drop.push_back(i);
    if (drop.empty()) return ideal;

    // Permute: eliminated variables first, block order on the split.
    std::vector<std::string> names;
    std::vector<std::size_t> to_elim(n), from_elim(n);
    for (auto i : drop) {
        to_elim[i] = names.size();
        from_elim[names.size()] = i;
        names.push_back(ring->name(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!kept[i]) continue;
        to_elim[i] = names.size();
        from_elim[names.size()] = i;
        names.push_back(ring->name(i));
    }
    RingPtr elim_ring = Ring::make(names, MonomialOrder::block(drop.size()));
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, elim_ring, to_elim));
    std::vector<Polynomial> out;
    for (const auto& g : groebner_basis(gens, elim_ring)) {
        bool free = true;
        for (std::size_t k = 0; k < drop.size() && free; ++k)
            if (g.involves(k)) free = false;
        if (free) out.push_back(embed(g, ring, from_elim));
    }
    return Ideal(ring, std::move(out));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::Argument, "cannot saturate by the zero polynomial");
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();
    std::string w = "sat_w";
    while (ring->index_of(w)) w += "_";
    std::vector<std::string> names{w};
    for (const auto& nm : ring->names()) names.push_back(nm);
    RingPtr ext = Ring::make(names, MonomialOrder::block(1));
    std::vector<std::size_t> shift(n), back(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = i + 1;
        back[i + 1] = i;
    }
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext, shift));
    gens.push_back(Polynomial::variable(ext, 0) * embed(f.in_ring(ring), ext, shift) -
                   Polynomial::constant(ext, 1));
    std::vector<Polynomial> out;
    for (const auto& g : groebner_basis(gens, ext))
        if (!g.involves(0)) out.push_back(embed(g, ring, back));
    return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) return Ideal::unit(ideal.ring());
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();
    std::string s = "colon_s";
    while (ring->index_of(s)) s += "_";
    std::vector<std::string> names{s};
    for (const auto& nm : ring->names()) names.push_back(nm);
    RingPtr ext = Ring::make(names, MonomialOrder::block(1));
    std::vector<std::size_t> shift(n), back(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = i + 1;
        back[i + 1] = i;
    }
    Polynomial sv = Polynomial::variable(ext, 0);
    Polynomial fe = embed(f.in_ring(ring), ext, shift);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(sv * embed(g, ext, shift));
    gens.push_back((Polynomial::constant(ext, 1) - sv) * fe);
    std::vector<Polynomial> out;
    for (const auto& g : groebner_basis(gens, ext)) {
        if (g.involves(0)) continue;
        auto q = exact_divide(g, fe);
        if (!q) throw Error(ErrorKind::Argument, "colon: intersection element not divisible");
        out.push_back(embed(*q, ring, back));
    }
    return Ideal(ring, std::move(out));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_variables(*b.ring()))
        throw Error(ErrorKind::Context, "ideals in different rings");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) {
            Polynomial p = f * g;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_variables(*b.ring()))
        throw Error(ErrorKind::Context, "ideals in different rings");
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

int dimension(const Ideal& ideal) {
    const auto& gb = ideal.groebner(MonomialOrder::grevlex());
    std::size_t n = ideal.ring()->nvars();
    if (gb.size() == 1 && gb.front().is_constant()) return -1;
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.leading_monomial()[i] > 0) s |= (std::uint64_t{1} << i);
        supports.push_back(s);
    }
    if (n > 30) throw Error(ErrorKind::Size, "dimension: too many variables");
    // Largest variable set containing the support of no leading monomial.
    int best = 0;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
        int size = __builtin_popcountll(set);
        if (size <= best) continue;
        bool independent = true;
        for (auto s : supports)
            if ((s & ~set) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

} // namespace nashlift
