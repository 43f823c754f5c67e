"""Independent cross-check implementations used by the tests.

Nothing here calls the library's Euclidean machinery: the lcrm oracle
finds least common right multiples by brute-force linear algebra, and
the commutative oracle mirrors rational-coefficient computations in
sympy.  Agreement between these and the package is the point.
"""

from __future__ import annotations

from skewfrac import CentralPoly
from skewfrac.quaternion import rand_rational


def left_null_vector(rows, ncols, coeff):
    """A nonzero z with sum_j rows[i][j] * z[j] == 0 for all i, or None.

    Gaussian elimination over the division ring `coeff`.  Each row is
    a left-linear functional of z, so rows may be left-scaled and
    subtracted; the back substitution reads z off the reduced form.
    """
    rows = [list(r) for r in rows]
    pivots = []  # (row, col)
    r = 0
    for col in range(ncols):
        p = next((p for p in range(r, len(rows)) if rows[p][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = coeff.inv(rows[r][col])
        rows[r] = [inv * a for a in rows[r]]
        for p2 in range(len(rows)):
            if p2 != r and rows[p2][col]:
                f = rows[p2][col]
                rows[p2] = [a - f * b for a, b in zip(rows[p2], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == len(rows):
            break
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    if not free:
        return None
    f0 = free[0]
    z = [coeff.one if c == f0 else coeff.zero for c in range(ncols)]
    for r, c in pivots:
        z[c] = -rows[r][f0]
    return z


def lcrm_oracle(x: CentralPoly, y: CentralPoly) -> CentralPoly:
    """Minimal-degree monic common right multiple, by degree scan.

    At trial degree d, m = x*u = y*v of degree <= d exists iff the
    homogeneous left-linear system x*u - y*v = 0 in the coefficients
    of (u, v) has a nonzero solution; the first d that admits one is
    the lcrm degree, and the monic lcrm at that degree is unique.
    """
    assert x and y
    ring = x.ring
    for d in range(max(x.degree, y.degree), x.degree + y.degree + 1):
        ucols = d - x.degree + 1
        vcols = d - y.degree + 1
        rows = []
        for s in range(d + 1):
            row = [x[s - n] for n in range(ucols)]
            row += [-y[s - n] for n in range(vcols)]
            rows.append(row)
        z = left_null_vector(rows, ucols + vcols, ring.coeff)
        if z is None:
            continue
        u = CentralPoly(ring, tuple(z[:ucols]))
        m = x * u
        assert m, "nonzero null vector must give a nonzero multiple"
        return m.scale_right(ring.coeff.inv(m.lead()))
    raise AssertionError("no common right multiple up to deg x + deg y")


# -- commutative mirror -------------------------------------------------------

def run_commutative_comparison(rng, n_ops: int = 300) -> int:
    """Mirror QQ-coefficient polynomial/fraction ops in sympy.

    Returns the number of operations whose results disagreed (0 is a
    pass).  Covers polynomial +, *, divmod, gcd, lcm and fraction
    +, -, *, /, inverse against sympy's cancel-based normal form.
    """
    import sympy

    from skewfrac import QFRAC, QPOLY, gcrd, lcrm

    x = sympy.Symbol("x")

    def to_sympy(p):
        return sympy.Poly(list(reversed([sympy.Rational(c.numerator,
                                                        c.denominator)
                                         for c in p.coeffs])) or [0],
                          x, domain="QQ")

    def from_rf(f):
        return to_sympy(f.num), to_sympy(f.den)

    def rand_poly(deg):
        return QPOLY.poly([rand_rational(rng, 6)
                           for _ in range(rng.randint(0, deg) + 1)])

    def rand_frac():
        num = rand_poly(3)
        den = rand_poly(3)
        while not den:
            den = rand_poly(3)
        return QFRAC(num, den)

    bad = 0
    for step in range(n_ops):
        kind = step % 10
        if kind < 2:            # polynomial ring ops
            p, q = rand_poly(4), rand_poly(4)
            sp, sq = to_sympy(p), to_sympy(q)
            if to_sympy(p + q) != sp + sq or to_sympy(p * q) != sp * sq:
                bad += 1
        elif kind == 2:         # euclidean division
            p, q = rand_poly(4), rand_poly(3)
            if not q:
                q = QPOLY.one
            quo, rem = p.divmod_right(q)
            squo, srem = sympy.div(to_sympy(p), to_sympy(q))
            if to_sympy(quo) != squo or to_sympy(rem) != srem:
                bad += 1
        elif kind == 3:         # gcd / lcm (monic on both sides)
            p, q = rand_poly(3), rand_poly(3)
            c = rand_poly(2)
            p, q = p * c, q * c
            if not p or not q:
                continue
            g = gcrd(p, q)
            m = lcrm(p, q)
            if (to_sympy(g) != sympy.gcd(to_sympy(p), to_sympy(q))
                    or to_sympy(m) != sympy.lcm(to_sympy(p),
                                                to_sympy(q)).monic()):
                bad += 1
        else:                   # fraction field ops, compared cross-multiplied
            a, b = rand_frac(), rand_frac()
            an, ad = from_rf(a)
            bn, bd = from_rf(b)
            pairs = [(a + b, an * bd + bn * ad, ad * bd),
                     (a - b, an * bd - bn * ad, ad * bd),
                     (a * b, an * bn, ad * bd)]
            if b:
                pairs.append((a / b, an * bd, ad * bn))
                pairs.append((b.inverse(), bd, bn))
            for got, wn, wd in pairs:
                gn, gd = from_rf(got)
                if gn * wd != wn * gd:
                    bad += 1
    return bad
