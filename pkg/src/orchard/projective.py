"""Exact projective plane over the rationals.

Points and lines are homogeneous integer triples in a canonical form
(gcd 1, first nonzero coordinate positive), so projective equality is
plain tuple equality and both types can key dictionaries directly.
All predicates are computed in arbitrary-precision integer arithmetic;
there is no epsilon anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

Rat = Union[int, Fraction]


class DegenerateError(ValueError):
    """Raised when an operation's inputs are geometrically degenerate."""


def canonical_triple(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Reduce an integer triple to canonical homogeneous form."""
    if a == 0 and b == 0 and c == 0:
        raise ValueError("zero triple is not a projective object")
    g = gcd(a, b, c)
    # fold the sign of the first nonzero coordinate into g
    if a:
        if a < 0:
            g = -g
    elif b:
        if b < 0:
            g = -g
    elif c < 0:
        g = -g
    return (a // g, b // g, c // g)


def _clear_denominators(a: Rat, b: Rat, c: Rat) -> tuple[int, int, int]:
    fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
    m = fa.denominator * fb.denominator * fc.denominator
    return (int(fa * m), int(fb * m), int(fc * m))


@dataclass(frozen=True)
class ProjPoint:
    """A point of the real projective plane, canonical (X, Y, Z)."""

    h: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "h", canonical_triple(*self.h))

    @property
    def at_infinity(self) -> bool:
        return self.h[2] == 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.h
        if z == 0:
            raise ValueError(f"{self} is at infinity, no affine coordinates")
        return Fraction(x, z), Fraction(y, z)

    def __repr__(self):
        return f"ProjPoint{self.h}"


@dataclass(frozen=True)
class ProjLine:
    """A line aX + bY + cZ = 0, canonical (a, b, c)."""

    l: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "l", canonical_triple(*self.l))

    def __repr__(self):
        return f"ProjLine{self.l}"


LINE_AT_INFINITY = ProjLine((0, 0, 1))


def mk_point(x: Rat, y: Rat) -> ProjPoint:
    """Affine point (x, y) as a canonical projective point."""
    fx, fy = Fraction(x), Fraction(y)
    return ProjPoint((fx.numerator * fy.denominator,
                      fy.numerator * fx.denominator,
                      fx.denominator * fy.denominator))


def point_from_rationals(hx: Rat, hy: Rat, hz: Rat) -> ProjPoint:
    """Homogeneous rational triple (cleared and canonicalized)."""
    return ProjPoint(_clear_denominators(hx, hy, hz))


def direction_point(slope: Rat | None) -> ProjPoint:
    """Point at infinity of all lines with the given slope (None = vertical)."""
    if slope is None:
        return ProjPoint((0, 1, 0))
    s = Fraction(slope)
    return ProjPoint((s.denominator, s.numerator, 0))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """True iff det[p; q; r] = 0 over the integers."""
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = p.h, q.h, r.h
    det = (x1 * (y2 * z3 - z2 * y3)
           - y1 * (x2 * z3 - z2 * x3)
           + z1 * (x2 * y3 - y2 * x3))
    return det == 0


def _cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if p == q:
        raise DegenerateError(f"degenerate join: {p} = {q}")
    return ProjLine(_cross(p.h, q.h))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines (possibly at infinity)."""
    if l == m:
        raise DegenerateError(f"degenerate meet: {l} = {m}")
    return ProjPoint(_cross(l.l, m.l))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    (x, y, z), (a, b, c) = p.h, l.l
    return a * x + b * y + c * z == 0


def apply_transform(m: Sequence[Sequence[Rat]], p: ProjPoint) -> ProjPoint:
    """Image of p under the projective map with matrix m (must be invertible)."""
    rows = [[Fraction(e) for e in row] for row in m]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("transform matrix must be 3x3")
    det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
           - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
           + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    if det == 0:
        raise ValueError("singular transform matrix")
    img = [sum(rows[i][k] * p.h[k] for k in range(3)) for i in range(3)]
    return point_from_rationals(*img)


def signed_ratio(x: ProjPoint, a: ProjPoint, b: ProjPoint) -> Fraction:
    """Signed affine ratio AX/XB of a point X on the line AB.

    A and B must be distinct affine points; X may be the point at
    infinity of the line (ratio -1).  X = B is rejected: the ratio has
    a pole there and no construction here evaluates it.
    """
    if a == b:
        raise DegenerateError("signed_ratio: base points coincide")
    if a.h[2] == 0 or b.h[2] == 0:
        raise ValueError("signed_ratio: base points must be affine")
    if x == b:
        raise DegenerateError("signed_ratio: pole at X = B")
    if not incident(x, join(a, b)):
        raise ValueError("signed_ratio: X not on line AB")
    # write x = lam*a + mu*b using an invertible 2x2 coordinate minor;
    # the ratio mu*b3/(lam*a3) is independent of all representative scalings
    ah, bh, xh = a.h, b.h, x.h
    for i in range(3):
        for j in range(i + 1, 3):
            d = ah[i] * bh[j] - ah[j] * bh[i]
            if d != 0:
                lam = Fraction(xh[i] * bh[j] - xh[j] * bh[i], d)
                mu = Fraction(ah[i] * xh[j] - ah[j] * xh[i], d)
                # lam = 0 would mean x = b, rejected above
                return (mu * bh[2]) / (lam * ah[2])
    raise DegenerateError("signed_ratio: base points coincide")  # unreachable
