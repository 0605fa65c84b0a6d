"""Abelian-group descriptions of collinearity on (degenerate) cubics.

Each description assigns to the points of three curve pieces values in
an abelian group so that three distinct points, one per piece, are
collinear exactly when their values combine to the identity.  Shipped
families: the cuspidal cubic y = x^3, Weierstrass curves, three
parallel lines, triangle sides (signed-ratio products), and a conic
plus the line at infinity (parabola and hyperbola variants).

All values are exact rationals; verification always runs against the
integer collinearity determinant, never against itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .projective import (DegenerateError, ProjPoint, Rat, collinear, incident,
                         join, mk_point, signed_ratio)
from .richlines import PointSet

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class GroupElement:
    value: Fraction
    operation: str

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.operation not in (ADDITIVE, MULTIPLICATIVE):
            raise ValueError(f"unknown group operation {self.operation!r}")
        if self.operation == MULTIPLICATIVE and self.value == 0:
            raise ValueError("multiplicative group element cannot be 0")

    @property
    def is_identity(self) -> bool:
        return self.value == (0 if self.operation == ADDITIVE else 1)

    def combine(self, other: "GroupElement") -> "GroupElement":
        if self.operation != other.operation:
            raise ValueError("mixed group operations")
        if self.operation == ADDITIVE:
            return GroupElement(self.value + other.value, ADDITIVE)
        return GroupElement(self.value * other.value, MULTIPLICATIVE)

    def inverse(self) -> "GroupElement":
        if self.operation == ADDITIVE:
            return GroupElement(-self.value, ADDITIVE)
        return GroupElement(1 / self.value, MULTIPLICATIVE)


def combine_all(elements: Sequence[GroupElement]) -> GroupElement:
    out = elements[0]
    for e in elements[1:]:
        out = out.combine(e)
    return out


# --- cuspidal cubic y = x^3 -------------------------------------------------

def cuspidal_third(p: Rat, q: Rat) -> Fraction:
    """Parameter of the third intersection of the chord through the
    curve points with parameters p and q on y = x^3."""
    fp, fq = Fraction(p), Fraction(q)
    if fp == fq:
        raise DegenerateError("cuspidal_third: tangent case p = q excluded")
    return -fp - fq


class CuspidalCubic:
    """y = x^3 with its additive parametrization by x."""

    def lift(self, t: Rat) -> ProjPoint:
        ft = Fraction(t)
        return mk_point(ft, ft ** 3)

    def contains(self, p: ProjPoint) -> bool:
        x, y, z = p.h
        return z != 0 and x ** 3 == y * z * z

    def param(self, p: ProjPoint) -> Fraction:
        if not self.contains(p):
            raise ValueError(f"{p} is not an affine point of y = x^3")
        return p.affine()[0]

    def third(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.lift(cuspidal_third(self.param(p), self.param(q)))


# --- Weierstrass curves y^2 = x^3 + ax + b ----------------------------------

WEIERSTRASS_IDENTITY = ProjPoint((0, 1, 0))


@dataclass(frozen=True)
class WeierstrassCurve:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def contains(self, p: ProjPoint) -> bool:
        if p == WEIERSTRASS_IDENTITY:
            return True
        if p.at_infinity:
            return False
        x, y = p.affine()
        return y * y == x ** 3 + self.a * x + self.b

    def _require(self, p: ProjPoint):
        if not self.contains(p):
            raise ValueError(f"{p} is not on y^2 = x^3 + {self.a}x + {self.b}")

    def neg(self, p: ProjPoint) -> ProjPoint:
        self._require(p)
        if p == WEIERSTRASS_IDENTITY:
            return p
        x, y = p.affine()
        return mk_point(x, -y)

    def third(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        """Third intersection of the chord (tangent if p = q)."""
        self._require(p)
        self._require(q)
        if p == WEIERSTRASS_IDENTITY and q == WEIERSTRASS_IDENTITY:
            return WEIERSTRASS_IDENTITY     # inflection at infinity
        if p == WEIERSTRASS_IDENTITY:
            return self.neg(q)
        if q == WEIERSTRASS_IDENTITY:
            return self.neg(p)
        x1, y1 = p.affine()
        x2, y2 = q.affine()
        if x1 == x2 and y1 == -y2:
            return WEIERSTRASS_IDENTITY     # vertical chord or tangent
        if p == q:
            m = (3 * x1 * x1 + self.a) / (2 * y1)
        else:
            m = (y2 - y1) / (x2 - x1)
        x3 = m * m - x1 - x2
        y3 = y1 + m * (x3 - x1)
        return mk_point(x3, y3)

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.neg(self.third(p, q))

    def mul(self, k: int, p: ProjPoint) -> ProjPoint:
        out = WEIERSTRASS_IDENTITY
        step = p if k >= 0 else self.neg(p)
        for _ in range(abs(k)):
            out = self.add(out, step)
        return out


def weierstrass_third(a: Rat, b: Rat, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    return WeierstrassCurve(Fraction(a), Fraction(b)).third(p, q)


def weierstrass_add(a: Rat, b: Rat, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    return WeierstrassCurve(Fraction(a), Fraction(b)).add(p, q)


# --- triangle sides: signed-ratio products ----------------------------------

def menelaus_params(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint,
                    x1: ProjPoint, x2: ProjPoint, x3: ProjPoint
                    ) -> tuple[tuple[GroupElement, GroupElement, GroupElement], bool]:
    """Multiplicative side parameters of three points on a triangle's sides.

    u_i is the signed ratio of distances from X_i to the two vertices
    on its side, oriented so that X_1, X_2, X_3 are collinear exactly
    when u_1 u_2 u_3 = 1 (a convention locked by the determinant
    oracle in the test suite).
    """
    if collinear(p1, p2, p3):
        raise DegenerateError("menelaus_params: degenerate triangle")
    verts = {1: p1, 2: p2, 3: p3}
    xs = {1: x1, 2: x2, 3: x3}
    us = []
    for i in (1, 2, 3):
        a = verts[(i - 2) % 3 + 1]   # P_{i-1}
        b = verts[i % 3 + 1]         # P_{i+1}
        x = xs[i]
        if x in (p1, p2, p3):
            raise ValueError(f"menelaus_params: X_{i} is a vertex")
        if not incident(x, join(a, b)):
            raise ValueError(f"menelaus_params: X_{i} not on side {i}")
        us.append(GroupElement(-signed_ratio(x, a, b), MULTIPLICATIVE))
    prod = combine_all(us)
    return (us[0], us[1], us[2]), prod.is_identity


# --- three parallel lines ----------------------------------------------------

def parallel_lines_params(x1: Rat, x2: Rat, x3: Rat
                          ) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Additive parameters of (x1,0), (x2,1), (x3,2); sum 0 iff collinear."""
    return (GroupElement(Fraction(x1), ADDITIVE),
            GroupElement(-2 * Fraction(x2), ADDITIVE),
            GroupElement(Fraction(x3), ADDITIVE))


# --- conic plus the line at infinity -----------------------------------------

def _slope_of_direction(d: ProjPoint) -> Fraction:
    dx, dy, dz = d.h
    if dz != 0:
        raise ValueError(f"{d} is not a point at infinity")
    if dx == 0:
        raise ValueError("vertical direction has no finite slope")
    return Fraction(dy, dx)


def conic_line_params(variant: str, p: ProjPoint, q: ProjPoint, d: ProjPoint
                      ) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Parameters for two conic points plus a direction.

    parabola: points (p, p^2), (q, q^2) and slope s map to p, q, -s in
    the additive group (chord slope is p + q).
    hyperbola: points (p, 1/p), (q, 1/q) and slope s map to p, q, -s in
    the multiplicative group (chord slope is -1/(pq)).
    """
    s = _slope_of_direction(d)
    if variant == "parabola":
        xp, yp = p.affine()
        xq, yq = q.affine()
        if yp != xp * xp or yq != xq * xq:
            raise ValueError("points must lie on y = x^2")
        if xp == xq:
            raise DegenerateError("conic_line_params: equal conic points")
        return (GroupElement(xp, ADDITIVE), GroupElement(xq, ADDITIVE),
                GroupElement(-s, ADDITIVE))
    if variant == "hyperbola":
        xp, yp = p.affine()
        xq, yq = q.affine()
        if xp * yp != 1 or xq * yq != 1:
            raise ValueError("points must lie on xy = 1")
        if xp == xq:
            raise DegenerateError("conic_line_params: equal conic points")
        if s == 0:
            raise ValueError("slope 0 has no multiplicative parameter")
        return (GroupElement(xp, MULTIPLICATIVE),
                GroupElement(xq, MULTIPLICATIVE),
                GroupElement(-s, MULTIPLICATIVE))
    raise ValueError(f"unknown conic variant {variant!r}")


# --- descriptions and their exhaustive verification ---------------------------

@dataclass(frozen=True)
class GroupDescription:
    """A parametrization bundle realizing collinearity as a group law."""

    kind: str
    operation: str
    # piece indices (subset of 1,2,3) a point belongs to; raises off-piece
    assign: Callable[[ProjPoint], tuple[int, ...]]
    # exact group value of a point on the given piece
    value: Callable[[int, ProjPoint], Fraction]

    def element(self, piece: int, p: ProjPoint) -> GroupElement:
        return GroupElement(self.value(piece, p), self.operation)


def cuspidal_description() -> GroupDescription:
    curve = CuspidalCubic()

    def assign(p):
        if not curve.contains(p):
            raise ValueError(f"{p} not on y = x^3")
        return (1, 2, 3)

    return GroupDescription("cuspidal-cubic", ADDITIVE, assign,
                            lambda i, p: curve.param(p))


def parallel_lines_description() -> GroupDescription:
    def assign(p):
        if not p.at_infinity:
            x, y = p.affine()
            if y in (0, 1, 2):
                return (int(y) + 1,)
        raise ValueError(f"{p} not on the rows y = 0, 1, 2")

    def value(i, p):
        x, y = p.affine()
        if int(y) + 1 != i:
            raise ValueError(f"{p} not on row {i}")
        return x if i != 2 else -2 * x

    return GroupDescription("three-parallel-lines", ADDITIVE, assign, value)


def triangle_description(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint
                         ) -> GroupDescription:
    if collinear(p1, p2, p3):
        raise DegenerateError("triangle_description: collinear vertices")
    verts = {1: p1, 2: p2, 3: p3}
    sides = {i: join(verts[(i - 2) % 3 + 1], verts[i % 3 + 1])
             for i in (1, 2, 3)}

    def assign(p):
        if p in (p1, p2, p3):
            raise ValueError("vertices are singular points of the side cubic")
        on = tuple(i for i in (1, 2, 3) if incident(p, sides[i]))
        if not on:
            raise ValueError(f"{p} not on any triangle side")
        return on

    def value(i, p):
        a = verts[(i - 2) % 3 + 1]
        b = verts[i % 3 + 1]
        return -signed_ratio(p, a, b)

    return GroupDescription("triangle-menelaus", MULTIPLICATIVE, assign, value)


def parabola_infinity_description() -> GroupDescription:
    def assign(p):
        if p.at_infinity:
            _slope_of_direction(p)   # vertical tangent direction excluded
            return (3,)
        x, y = p.affine()
        if y == x * x:
            return (1, 2)
        raise ValueError(f"{p} not on y = x^2 or the line at infinity")

    def value(i, p):
        if i == 3:
            return -_slope_of_direction(p)
        return p.affine()[0]

    return GroupDescription("parabola-plus-infinity", ADDITIVE, assign, value)


def hyperbola_infinity_description() -> GroupDescription:
    def assign(p):
        if p.at_infinity:
            s = _slope_of_direction(p)
            if s == 0:
                raise ValueError("asymptotic direction excluded")
            return (3,)
        x, y = p.affine()
        if x * y == 1:
            return (1, 2)
        raise ValueError(f"{p} not on xy = 1 or the line at infinity")

    def value(i, p):
        if i == 3:
            return -_slope_of_direction(p)
        return p.affine()[0]

    return GroupDescription("hyperbola-plus-infinity", MULTIPLICATIVE,
                            assign, value)


def verify_group_description(ps: PointSet, desc: GroupDescription) -> bool:
    """Exhaustive check: distinct cross-piece triples are collinear
    exactly when their group values combine to the identity."""
    parts: dict[int, list[tuple[ProjPoint, Fraction]]] = {1: [], 2: [], 3: []}
    for p in ps.points:
        for i in desc.assign(p):
            parts[i].append((p, desc.value(i, p)))
    additive = desc.operation == ADDITIVE
    for pt1, v1 in parts[1]:
        for pt2, v2 in parts[2]:
            if pt2 == pt1:
                continue
            for pt3, v3 in parts[3]:
                if pt3 == pt1 or pt3 == pt2:
                    continue
                if additive:
                    alg = (v1 + v2 + v3) == 0
                else:
                    alg = (v1 * v2 * v3) == 1
                if alg != collinear(pt1, pt2, pt3):
                    return False
    return True


def sphere_membership(x: Rat, y: Rat, z: Rat) -> tuple[bool, Fraction]:
    """Additive description of the unit sphere: (x,y,z) lies on it iff
    the parameters t^2 - 1/3 of the coordinates sum to zero."""
    s = sum((Fraction(t) ** 2 - Fraction(1, 3)) for t in (x, y, z))
    return s == 0, s
