#!/usr/bin/env python3
"""Independent sympy oracle for ladder valuations along arcs.

Builds the ladder literally: the spanning set {t_j * x_k} of the product
ideal, every (n+1)-subset pushed through
s_0...s_n * dlog(s_1/s_0) ^ ... ^ dlog(s_n/s_0),
generator lists shrunk with sympy's groebner between steps.  Valuations are
computed by exact substitution of a polynomial arc.

Usage: ladder_oracle.py {cusp|a4|cone|cone2} DEPTH
"""
import itertools
import sys

import sympy as sp

t = sp.Symbol("t")


def frame(f, gens, basis):
    # dx_k = sum_b e[k][b] dx_b from the single relation df = 0.
    (k,) = [v for v in gens if v not in basis]
    fk = sp.diff(f, k)
    return {k: {b: sp.cancel(-sp.diff(f, b) / fk) for b in basis}}


def derivation(expr, gens, basis, exp, b):
    out = sp.diff(expr, b)
    for k, row in exp.items():
        out += sp.diff(expr, k) * row[b]
    return out


def dlog_wedge(secs, gens, basis, exp):
    s0 = secs[0]
    rows = []
    for s in secs[1:]:
        q = s / s0
        rows.append([derivation(q, gens, basis, exp, b) / q for b in basis])
    det = sp.Matrix(rows).det(method="berkowitz") if rows else sp.Integer(1)
    return sp.cancel(sp.prod(secs) * det)


def shrink(elems, f, gens):
    """Smaller generating set of the same fractional ideal modulo f."""
    elems = [sp.cancel(e) for e in elems]
    elems = [e for e in elems if e != 0]
    dens = [sp.fraction(e)[1] for e in elems]
    common = sp.lcm_list(dens) if dens else sp.Integer(1)
    nums = [sp.expand(sp.cancel(e * common)) for e in elems]
    gb = sp.groebner(nums + [f], *gens, order="grevlex", domain=sp.QQ)
    fgb = sp.groebner([f], *gens, order="grevlex", domain=sp.QQ)
    keep = []
    for g in gb.exprs:
        if fgb.reduce(g)[1] != 0:
            keep.append(sp.cancel(g / common))
    return keep


def valuation(expr, arc, gens):
    num, den = sp.fraction(sp.cancel(expr))
    sub = dict(zip(gens, arc))

    def order(p):
        p = sp.Poly(sp.expand(p.subs(sub)), t)
        if p.is_zero:
            return None
        return min(m[0] for m in p.monoms())

    a, b = order(num), order(den)
    if a is None:
        return None
    return a - b


def ladder_valuations(f, gens, basis, arc, depth):
    n = len(basis)
    exp = frame(f, gens, basis)
    gauss = [sp.diff(f, v) for v in gens]
    fgb = sp.groebner([f], *gens, order="grevlex", domain=sp.QQ)
    gauss = [g for g in gauss if fgb.reduce(g)[1] != 0]
    entries = [shrink(gauss, f, gens)]
    vals = [min(valuation(g, arc, gens) for g in entries[0])]
    coords = [sp.Integer(1)] + list(gens)
    for _ in range(depth):
        prod = [sp.Integer(1)]
        for e in entries:
            prod = shrink([a * b for a in prod for b in e], f, gens)
        span = []
        for tj in prod:
            for xk in coords:
                s = sp.cancel(tj * xk)
                if fgb.reduce(sp.fraction(s)[0])[1] != 0:
                    span.append(s)
        wedges = []
        for sub in itertools.combinations(span, n + 1):
            w = dlog_wedge(list(sub), gens, basis, exp)
            if w != 0 and fgb.reduce(sp.expand(sp.fraction(w)[0]))[1] != 0:
                wedges.append(w)
        nxt = shrink(wedges, f, gens)
        entries.append(nxt)
        vals.append(min(v for v in (valuation(g, arc, gens) for g in nxt) if v is not None))
        print("  entry", len(entries) - 1, "gens", len(nxt), "v", vals[-1], file=sys.stderr, flush=True)
    return vals


CASES = {
    "cusp": lambda x, y: (y**2 - x**3, [x, y], [x], [t**2, t**3]),
    "a4": lambda x, y: (y**2 - x**5, [x, y], [x], [t**2, t**5]),
}


def main():
    name, depth = sys.argv[1], int(sys.argv[2])
    x, y, z = sp.symbols("x y z")
    if name in CASES:
        f, gens, basis, arc = CASES[name](x, y)
    elif name == "cone":
        f, gens, basis, arc = x * y - z**2, [x, y, z], [x, y], [t, t, t]
    elif name == "cone2":
        f, gens, basis, arc = x * y - z**2, [x, y, z], [x, y], [t, 4 * t, 2 * t]
    else:
        raise SystemExit("unknown case " + name)
    print(name, ladder_valuations(f, gens, basis, arc, depth))


if __name__ == "__main__":
    main()
