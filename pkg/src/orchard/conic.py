"""Parabola secants through an external point, and their involutions.

A point E = (a, b) off the parabola y = x^2 pairs parabola points by
collinearity: (x, x^2), (y, y^2), E are collinear iff
xy - ax - ay + b = 0, i.e. y = (ax - b)/(x - a).  That map is an exact
involution of the x-axis with a pole at x = a.  The module also holds
the 4-vector representatives (a, -b, 1, -a) whose affine dependence is
equivalent to plane collinearity of the external points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .projective import Rat


@dataclass(frozen=True)
class ExternalPoint:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == self.a * self.a:
            raise ValueError(f"({self.a}, {self.b}) lies on the parabola")

    def rep4(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, -self.b, Fraction(1), -self.a)


def parabola_collinear(x: Rat, y: Rat, e: ExternalPoint) -> bool:
    """True iff (x, x^2), (y, y^2) and E are collinear (x != y)."""
    fx, fy = Fraction(x), Fraction(y)
    if fx == fy:
        raise ValueError("parabola_collinear needs distinct parabola points")
    return fx * fy - e.a * fx - e.a * fy + e.b == 0


def involution_value(e: ExternalPoint, x: Rat) -> Fraction:
    """The unique y with (x,x^2), (y,y^2), E collinear; pole at x = a."""
    fx = Fraction(x)
    if fx == e.a:
        raise ValueError(f"involution has a pole at x = {e.a}")
    return (e.a * fx - e.b) / (fx - e.a)


def image_count(e: ExternalPoint, xs: Iterable[Rat]) -> int:
    """How many x in X the involution of E maps back into X.

    Fixed points are excluded (a collinear triple needs two distinct
    parabola points), as is the pole x = a.
    """
    xset = {Fraction(x) for x in xs}
    count = 0
    for x in xset:
        if x == e.a:
            continue
        y = involution_value(e, x)
        if y != x and y in xset:
            count += 1
    return count


def filter_by_image_count(points: Sequence[ExternalPoint],
                          xs: Iterable[Rat],
                          threshold: int) -> list[ExternalPoint]:
    """Keep the external points whose involution maps at least
    threshold sample values back into the sample."""
    xset = [Fraction(x) for x in xs]
    return [e for e in points if image_count(e, xset) >= threshold]


def reps_collinear(e1: ExternalPoint, e2: ExternalPoint,
                   e3: ExternalPoint) -> bool:
    """Affine dependence of the three 4-vector representatives.

    The 1 in the third coordinate forces affine (not merely linear)
    combinations, so this is rank <= 1 of the two difference vectors.
    """
    if len({(e.a, e.b) for e in (e1, e2, e3)}) != 3:
        raise ValueError("reps_collinear needs three distinct points")
    r1, r2, r3 = e1.rep4(), e2.rep4(), e3.rep4()
    u = [r2[i] - r1[i] for i in range(4)]
    v = [r3[i] - r1[i] for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if u[i] * v[j] - u[j] * v[i] != 0:
                return False
    return True


def combination_weight(e1: ExternalPoint, e2: ExternalPoint,
                       e3: ExternalPoint) -> Optional[Fraction]:
    """The weight lam with rep(e3) = lam*rep(e1) + (1-lam)*rep(e2),
    when the representatives are affinely dependent; None otherwise."""
    if not reps_collinear(e1, e2, e3):
        return None
    if e1.a != e2.a:
        return (e3.a - e2.a) / (e1.a - e2.a)
    return (e3.b - e2.b) / (e1.b - e2.b)
