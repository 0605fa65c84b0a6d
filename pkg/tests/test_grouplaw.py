import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, assume
import hypothesis.strategies as st

from orchard import (CuspidalCubic, DegenerateError, GroupElement,
                     WeierstrassCurve, WEIERSTRASS_IDENTITY, collinear,
                     conic_line_params, cuspidal_description, cuspidal_third,
                     direction_point, gen_cubic_power, gen_parallel_aps,
                     gen_triangle_ratios, menelaus_params, mk_point,
                     parallel_lines_description, parallel_lines_params,
                     PointSet, ratio_point, sphere_membership,
                     triangle_description, verify_group_description,
                     weierstrass_add, weierstrass_third)

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=6)

CURVE = WeierstrassCurve(0, 17)
GENS = [mk_point(-2, 3), mk_point(-1, 4), mk_point(2, 5), mk_point(4, 9),
        mk_point(8, 23)]


def test_group_element_rules():
    with pytest.raises(ValueError):
        GroupElement(0, "multiplicative")
    a = GroupElement(F(2, 3), "multiplicative")
    assert a.combine(a.inverse()).is_identity
    b = GroupElement(-4, "additive")
    assert b.combine(b.inverse()).is_identity
    with pytest.raises(ValueError):
        a.combine(b)


def test_cuspidal_third_values():
    assert cuspidal_third(1, -3) == 2
    assert cuspidal_third(F(5), 0) == -5
    assert cuspidal_third(F(1, 2), F(1, 3)) == F(-5, 6)
    with pytest.raises(DegenerateError):
        cuspidal_third(2, 2)


@given(rationals, rationals)
def test_cuspidal_third_collinear_and_involutive(p, q):
    assume(p != q)
    r = cuspidal_third(p, q)
    c = CuspidalCubic()
    assume(r not in (p, q))
    assert collinear(c.lift(p), c.lift(q), c.lift(r))
    assert cuspidal_third(p, r) == q


def test_weierstrass_third_examples():
    assert weierstrass_third(0, 17, mk_point(-2, 3), mk_point(-1, 4)) \
        == mk_point(4, 9)
    assert weierstrass_third(0, 17, mk_point(-2, 3), mk_point(-2, -3)) \
        == WEIERSTRASS_IDENTITY
    t = weierstrass_third(0, 17, mk_point(2, 5), mk_point(2, 5))
    assert CURVE.contains(t)
    assert weierstrass_add(0, 17, mk_point(-2, 3), mk_point(-1, 4)) \
        == mk_point(4, -9)
    with pytest.raises(ValueError):
        weierstrass_third(0, 17, mk_point(0, 0), mk_point(2, 5))


def test_weierstrass_identity_and_inverse():
    for p in GENS:
        assert CURVE.add(p, WEIERSTRASS_IDENTITY) == p
        assert CURVE.add(p, CURVE.neg(p)) == WEIERSTRASS_IDENTITY


def _word_values(max_len):
    vals = {}
    for length in range(1, max_len + 1):
        for word in product(GENS, repeat=length):
            acc = word[0]
            for g in word[1:]:
                acc = CURVE.add(acc, g)
            vals[tuple(p.h for p in word)] = acc
    return vals


def test_weierstrass_word_set_axioms():
    # commutativity on all generator pairs
    for p in GENS:
        for q in GENS:
            assert CURVE.add(p, q) == CURVE.add(q, p)
    # associativity: all parenthesizations of words of length <= 4 agree
    for w in product(GENS, repeat=3):
        a, b, c = w
        assert CURVE.add(CURVE.add(a, b), c) == CURVE.add(a, CURVE.add(b, c))
    for w in product(GENS, repeat=4):
        a, b, c, d = w
        left = CURVE.add(CURVE.add(CURVE.add(a, b), c), d)
        others = (
            CURVE.add(CURVE.add(a, CURVE.add(b, c)), d),
            CURVE.add(a, CURVE.add(CURVE.add(b, c), d)),
            CURVE.add(a, CURVE.add(b, CURVE.add(c, d))),
            CURVE.add(CURVE.add(a, b), CURVE.add(c, d)),
        )
        assert all(o == left for o in others)
    # chord-third closure and the defining relation P + Q + third(P,Q) = 0
    vals = list(_word_values(2).values())
    for p in vals:
        for q in vals:
            t = CURVE.third(p, q)
            assert CURVE.contains(t)
            s = CURVE.add(CURVE.add(p, q), t)
            assert s == WEIERSTRASS_IDENTITY


def test_menelaus_transversal_vs_oracle():
    p1, p2, p3 = mk_point(0, 0), mk_point(1, 0), mk_point(0, 1)
    # a transversal: y = x/2 + 1/4 meets all three side lines
    x1 = mk_point(F(1, 2), F(1, 2))
    x2 = mk_point(0, F(1, 4))
    x3 = mk_point(F(-1, 2), 0)
    (u1, u2, u3), verdict = menelaus_params(p1, p2, p3, x1, x2, x3)
    assert verdict and collinear(x1, x2, x3)
    assert u1.value * u2.value * u3.value == 1
    # all midpoints: product is -1, and indeed they are not collinear
    mids = [ratio_point(p3, p2, 1), ratio_point(p1, p3, 1),
            ratio_point(p2, p1, 1)]
    us, verdict = menelaus_params(p1, p2, p3, *mids)
    assert not verdict and not collinear(*mids)
    assert us[0].value * us[1].value * us[2].value == -1


def test_menelaus_infinity_point():
    p1, p2, p3 = mk_point(0, 0), mk_point(1, 0), mk_point(0, 1)
    # X3 at infinity on the x-axis, X1, X2 from the horizontal y = 1/3
    x3 = direction_point(0)
    x1 = mk_point(F(2, 3), F(1, 3))
    x2 = mk_point(0, F(1, 3))
    us, verdict = menelaus_params(p1, p2, p3, x1, x2, x3)
    assert us[2].value == 1
    assert verdict and collinear(x1, x2, x3)


def test_menelaus_randomized_oracle():
    rng = random.Random(42)
    p1, p2, p3 = mk_point(0, 0), mk_point(4, 0), mk_point(1, 3)
    sides = [(p3, p2), (p1, p3), (p2, p1)]
    checked = 0
    for trial in range(800):
        ts = []
        for _ in range(3):
            t = F(rng.randint(-30, 30), rng.randint(1, 8))
            if t in (0, -1):
                t = F(1, 7)
            ts.append(t)
        xs = [ratio_point(a, b, t) for (a, b), t in zip(sides, ts)]
        if any(x in (p1, p2, p3) for x in xs):
            continue
        _, verdict = menelaus_params(p1, p2, p3, *xs)
        assert verdict == collinear(*xs)
        checked += 1
    assert checked > 700


def test_menelaus_vertex_rejected():
    p1, p2, p3 = mk_point(0, 0), mk_point(1, 0), mk_point(0, 1)
    with pytest.raises(ValueError):
        menelaus_params(p1, p2, p3, p2, mk_point(0, F(1, 2)),
                        mk_point(F(1, 2), 0))


def test_parallel_lines_params():
    vals = parallel_lines_params(0, 1, 2)
    assert sum(e.value for e in vals) == 0
    assert collinear(mk_point(0, 0), mk_point(1, 1), mk_point(2, 2))
    vals = parallel_lines_params(0, 0, 0)
    assert sum(e.value for e in vals) == 0
    vals = parallel_lines_params(0, 1, 0)
    assert sum(e.value for e in vals) == -2


def test_conic_line_params():
    els = conic_line_params("parabola", mk_point(1, 1), mk_point(2, 4),
                            direction_point(3))
    assert sum(e.value for e in els) == 0
    els = conic_line_params("parabola", mk_point(1, 1), mk_point(-1, 1),
                            direction_point(0))
    assert sum(e.value for e in els) == 0
    els = conic_line_params("hyperbola", mk_point(1, 1),
                            mk_point(F(1, 2), 2), direction_point(-2))
    assert els[0].value * els[1].value * els[2].value == 1
    with pytest.raises(ValueError):
        conic_line_params("hyperbola", mk_point(1, 1), mk_point(2, F(1, 2)),
                          direction_point(0))
    with pytest.raises(ValueError):
        conic_line_params("parabola", mk_point(1, 1), mk_point(2, 4),
                          direction_point(None))


def test_verify_descriptions_on_examples():
    assert verify_group_description(gen_parallel_aps(6),
                                    parallel_lines_description())
    assert verify_group_description(gen_cubic_power(5),
                                    cuspidal_description())


def test_verify_detects_perturbation():
    # perturbing the parametrization at a single point breaks the iff
    from orchard import GroupDescription
    base = parallel_lines_description()
    target = mk_point(1, 1)

    def bad_value(i, p):
        v = base.value(i, p)
        return v + 1 if p == target else v

    broken = GroupDescription(base.kind, base.operation, base.assign,
                              bad_value)
    ps = gen_parallel_aps(4)
    assert verify_group_description(ps, base)
    assert not verify_group_description(ps, broken)


def test_verify_rejects_off_piece_points():
    ps = PointSet((mk_point(0, 0), mk_point(1, 1), mk_point(5, 7)),
                  (1, 2, 3))
    with pytest.raises(ValueError):
        verify_group_description(ps, parallel_lines_description())


def test_triangle_description_on_example2():
    ps = gen_triangle_ratios(2)
    desc = triangle_description(mk_point(0, 0), mk_point(1, 0),
                                mk_point(0, 1))
    assert verify_group_description(ps, desc)


def test_sphere_membership():
    assert sphere_membership(1, 0, 0) == (True, 0)
    on, s = sphere_membership(0, 0, 0)
    assert not on and s == -1
    assert sphere_membership(F(3, 5), F(4, 5), 0) == (True, 0)
    on, s = sphere_membership(F(1, 3), F(2, 3), F(2, 3))
    assert on and s == 0
