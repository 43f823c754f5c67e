"""Polynomials in one central variable over a division ring.

Elements of D_c[t] are finite sums sum_n a_n t^n with a_n in D and t
commuting with every coefficient, stored as a dense coefficient tuple
(constant term first).  Coefficients need not commute with each other,
so left and right division are distinct; both are implemented, along
with greatest common right/left divisors and least common right/left
multiples, which is everything the right fraction field needs.

Degree is additive on products (lead coefficients multiply to a
nonzero lead since D has no zero divisors), so the ring has no zero
divisors and degree arguments work as over a field.  The zero
polynomial has degree -infinity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .quaternion import DivisionRing

NEG_INF = float("-inf")


class PolyRing:
    """Descriptor for D_c[var] over the coefficient ring `coeff`."""

    __slots__ = ("coeff", "var", "zero", "one", "t")

    def __init__(self, coeff: DivisionRing, var: str = "t"):
        self.coeff = coeff
        self.var = var
        self.zero = CentralPoly(self, ())
        self.one = CentralPoly(self, (coeff.one,))
        self.t = CentralPoly(self, (coeff.zero, coeff.one))

    def poly(self, coeffs: Sequence) -> "CentralPoly":
        """Build from a coefficient sequence, constant term first."""
        return CentralPoly(self, tuple(coeffs))

    def constant(self, a) -> "CentralPoly":
        return CentralPoly(self, (a,))

    def coerce_rational(self, r) -> "CentralPoly":
        return CentralPoly(self, (self.coeff.coerce_rational(r),))

    def sample(self, rng, deg: int, bound: int) -> "CentralPoly":
        """Random polynomial of degree exactly `deg` (deg < 0 gives 0)."""
        if deg < 0:
            return self.zero
        coeffs = [self.coeff.sample(rng, bound) for _ in range(deg + 1)]
        while not coeffs[-1]:
            coeffs[-1] = self.coeff.sample(rng, bound)
        return CentralPoly(self, tuple(coeffs))

    def __repr__(self):
        return f"{self.coeff!r}_c[{self.var}]"


class CentralPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: tuple):
        # strip trailing zeros so equality is structural
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.ring = ring
        self.coeffs = coeffs[:n]

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.coeff.zero

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else self.ring.coeff.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.coeff.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for n, c in enumerate(b):
            merged[n] = merged[n] + c
        return CentralPoly(self.ring, tuple(merged))

    __radd__ = __add__

    def __neg__(self):
        return CentralPoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero
        zero = self.ring.coeff.zero
        out = [zero] * (len(a) + len(b) - 1)
        for m, am in enumerate(a):
            if not am:
                continue
            for n, bn in enumerate(b):
                if bn:
                    out[m + n] = out[m + n] + am * bn
        return CentralPoly(self.ring, tuple(out))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_left(self, a) -> "CentralPoly":
        return CentralPoly(self.ring, tuple(a * c for c in self.coeffs))

    def scale_right(self, a) -> "CentralPoly":
        return CentralPoly(self.ring, tuple(c * a for c in self.coeffs))

    def _coerce(self, value):
        if isinstance(value, CentralPoly):
            return value if value.ring is self.ring else None
        if isinstance(value, (int, Fraction)):
            return self.ring.coerce_rational(value)
        if self.ring.coeff.contains(value):
            return self.ring.constant(value)
        return None

    # -- division -----------------------------------------------------------

    def divmod_right(self, g: "CentralPoly"):
        """q, r with self == q*g + r and deg r < deg g."""
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        inv_lead = ring.coeff.inv(g.lead())
        dg = len(g.coeffs) - 1
        rem = list(self.coeffs)
        zero = ring.coeff.zero
        q = [zero] * max(len(rem) - dg, 0)
        gc = g.coeffs
        while len(rem) > dg and rem:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) <= dg:
                break
            shift = len(rem) - 1 - dg
            c = rem[-1] * inv_lead
            q[shift] = c
            for n in range(dg + 1):
                rem[shift + n] = rem[shift + n] - c * gc[n]
            rem.pop()
        return CentralPoly(ring, tuple(q)), CentralPoly(ring, tuple(rem))

    def divmod_left(self, g: "CentralPoly"):
        """q, r with self == g*q + r and deg r < deg g."""
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        inv_lead = ring.coeff.inv(g.lead())
        dg = len(g.coeffs) - 1
        rem = list(self.coeffs)
        zero = ring.coeff.zero
        q = [zero] * max(len(rem) - dg, 0)
        gc = g.coeffs
        while len(rem) > dg and rem:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) <= dg:
                break
            shift = len(rem) - 1 - dg
            c = inv_lead * rem[-1]
            q[shift] = c
            for n in range(dg + 1):
                rem[shift + n] = rem[shift + n] - gc[n] * c
            rem.pop()
        return CentralPoly(ring, tuple(q)), CentralPoly(ring, tuple(rem))

    def monic_left(self) -> "CentralPoly":
        """lead^-1 * self (monic; same right divisors)."""
        if not self or self.is_monic():
            return self
        return self.scale_left(self.ring.coeff.inv(self.lead()))

    def monic_right(self) -> "CentralPoly":
        """self * lead^-1 (monic; same left divisors)."""
        if not self or self.is_monic():
            return self
        return self.scale_right(self.ring.coeff.inv(self.lead()))

    # -- evaluation ----------------------------------------------------------

    def eval_central(self, x):
        """Evaluate at a scalar that commutes with all coefficients.

        Horner from the top coefficient; only meaningful when x is
        central in the coefficient ring (e.g. rational), since t is a
        central variable.
        """
        if not self.coeffs:
            return self.ring.coeff.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.ring.var, self.ring.coeff.one)

    def __repr__(self) -> str:
        return f"<{self.ring!r}: {self}>"


def format_poly(coeffs: tuple, var: str, one) -> str:
    """Descending powers, coefficient printed left of the variable.

    Frozen elision rules (golden tests depend on these exactly):
    coefficient 1 before a power is dropped; a coefficient whose text
    starts with '-' is negated and the term joined with ' - '; a
    coefficient with internal additive structure is parenthesized; the
    exponent is dropped for degree 1; the constant term is spliced in
    bare, reusing its own leading sign.  Every output re-parses to the
    same polynomial (rationals print p/q, a rational-literal token).
    """
    if not coeffs:
        return "0"
    parts = []
    for n in range(len(coeffs) - 1, -1, -1):
        c = coeffs[n]
        if not c:
            continue
        if n == 0:
            # additive splice: a leading '-' belongs to the first summand
            # of the constant only, so strip it off and rejoin with ' - '
            text = str(c)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(" - " + text[1:])
            else:
                parts.append(" + " + text)
            continue
        pow_str = var if n == 1 else f"{var}^{n}"
        text = str(c)
        neg = text.startswith("-")
        if neg:
            text = str(-c)
        if text == "1":
            body = pow_str
        elif _is_simple(text):
            body = f"{text}*{pow_str}"
        else:
            body = f"({text})*{pow_str}"
        if not parts:
            parts.append(("-" + body) if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _is_simple(text: str) -> bool:
    """No additive structure (safe as a bare left factor of '*')."""
    return ("+" not in text) and ("-" not in text) and (" " not in text)


# ---------------------------------------------------------------------------
# One-sided gcd / lcm
# ---------------------------------------------------------------------------

def gcrd(f: CentralPoly, g: CentralPoly) -> CentralPoly:
    """Greatest common right divisor, monic (left-normalized).

    Euclid on right division: the right divisors of {f, g} and of
    {g, f mod g} coincide.  gcrd(0, 0) == 0.
    """
    a, b = f, g
    while b:
        _, r = a.divmod_right(b)
        a, b = b.monic_left(), r
    return a.monic_left()


def gcld(f: CentralPoly, g: CentralPoly) -> CentralPoly:
    """Greatest common left divisor, monic (right-normalized)."""
    a, b = f, g
    while b:
        _, r = a.divmod_left(b)
        a, b = b.monic_right(), r
    return a.monic_right()


def lcrm_with_cofactors(x: CentralPoly, y: CentralPoly):
    """Least common right multiple m = x*u = y*v, with m monic.

    Returns (m, u, v).  Runs the extended Euclidean scheme on LEFT
    division, maintaining r_n == x*u_n + y*v_n; when the remainder
    hits zero the relation 0 == x*u + y*v gives the common right
    multiple m = x*u = y*(-v).  Both inputs must be nonzero.
    """
    if not x or not y:
        raise ZeroDivisionError("lcrm requires nonzero inputs")
    ring = x.ring
    one, zero = ring.one, ring.zero
    r0, r1 = x, y
    u0, u1 = one, zero
    v0, v1 = zero, one
    while r1:
        q, r2 = r0.divmod_left(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - u1 * q
        v0, v1 = v1, v0 - v1 * q
        # keep the invariant's remainder monic to limit coefficient growth:
        # scaling (r, u, v) on the right by a unit preserves r == x*u + y*v
        if r1:
            c = ring.coeff.inv(r1.lead())
            r1 = r1.scale_right(c)
            u1 = u1.scale_right(c)
            v1 = v1.scale_right(c)
    m = x * u1
    if not m:
        raise ArithmeticError("lcrm cofactor degenerated to zero")
    c = ring.coeff.inv(m.lead())
    return m.scale_right(c), u1.scale_right(c), (-v1).scale_right(c)


def lcrm(x: CentralPoly, y: CentralPoly) -> CentralPoly:
    return lcrm_with_cofactors(x, y)[0]


def lclm(x: CentralPoly, y: CentralPoly) -> CentralPoly:
    """Least common left multiple m = u*x = v*y, monic."""
    if not x or not y:
        raise ZeroDivisionError("lclm requires nonzero inputs")
    ring = x.ring
    one, zero = ring.one, ring.zero
    r0, r1 = x, y
    u0, u1 = one, zero
    while r1:
        q, r2 = r0.divmod_right(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        if r1:
            c = ring.coeff.inv(r1.lead())
            r1 = r1.scale_left(c)
            u1 = u1.scale_left(c)
    m = u1 * x
    return m.monic_left()
