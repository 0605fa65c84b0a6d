import math
from fractions import Fraction as F

import pytest

from orchard import (ConvergenceError, CuspidalCubic, DegenerateError,
                     SampledArc, WeierstrassCurve, build_tenpoint_cuspidal,
                     build_tenpoint_weierstrass, collinear, cuspidal_form,
                     extend_cantilever, fit_cubics, halve_parameter_demo,
                     incident, join, meet, mk_point, nine_point_check,
                     parallel_lines_arcs, standard_system_ok,
                     three_lines_multiplicative_arcs, verify_lattice,
                     weierstrass_form)
from orchard.tenpoint import middle_offset_multiplicative

CURVE = WeierstrassCurve(0, 17)
W_BASE = (mk_point(-2, 3), mk_point(-1, 4), mk_point(4, 9))
W_DELTA = mk_point(8, 23)


def w_config():
    return build_tenpoint_weierstrass(CURVE, *W_BASE, W_DELTA)


def test_build_cuspidal_points():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    assert cfg.b3 == mk_point(F(3, 10), F(27, 1000))
    assert cfg.b0 == mk_point(0, 0)
    assert cfg.b0 not in cfg.points()
    assert cfg.params["A2"] == F(-12, 10)
    # A2 carries parameter a0 - 2*step (integer step needs 3 to avoid
    # parameter collisions for this base)
    cfg2 = build_tenpoint_cuspidal(-1, 0, 1, 3)
    assert cfg2.a2 == mk_point(-7, -343)


def test_defining_incidences():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    assert incident(cfg.a1, join(cfg.b1, cfg.c0))
    assert incident(cfg.c1, join(cfg.b1, cfg.a0))
    assert incident(cfg.b2, join(cfg.a1, cfg.c1))
    assert incident(cfg.a2, join(cfg.b2, cfg.c0))
    assert incident(cfg.c2, join(cfg.b2, cfg.a0))
    assert incident(cfg.b3, join(cfg.a1, cfg.c2))
    assert incident(cfg.b4, join(cfg.a2, cfg.c2))
    # the line A2 B3 C1 is not part of the definition yet must hold
    assert collinear(cfg.a2, cfg.b3, cfg.c1)


def test_build_rejects_bad_bases():
    with pytest.raises(ValueError):
        build_tenpoint_cuspidal(-1, 0, 2, F(1, 10))   # sum nonzero
    with pytest.raises(ValueError):
        build_tenpoint_cuspidal(-1, 0, 1, 0)          # zero step
    with pytest.raises(DegenerateError):
        # step makes B2 collide with C0: b0 + 2d = c0 at d = 1/2
        build_tenpoint_cuspidal(-1, 0, 1, F(1, 2))


def test_verify_lattice_and_breakage():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    assert verify_lattice(cfg)
    from dataclasses import replace
    broken = replace(cfg, b3=cfg.b4)
    # B4 in the B3 slot: the non-defining line A2 B3 C1 now fails
    assert not verify_lattice(broken)


def test_cantilever_matches_parametrized_points():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    cant = extend_cantilever(cfg, 20)
    curve = CuspidalCubic()
    step = F(1, 10)
    assert all(cant.a_seq[i] == curve.lift(-1 - i * step) for i in range(23))
    assert all(cant.b_seq[j - 1] == curve.lift(j * step)
               for j in range(1, 25))
    assert all(cant.c_seq[k] == curve.lift(1 - k * step) for k in range(23))
    assert verify_lattice(cant)
    # the sequences genuinely revisit curve points; the lattice check
    # must survive those coincidences
    assert cant.b_seq[8] == cant.c_seq[1]
    assert cant.a_seq[0] == cant.c_seq[20]


def test_cantilever_zero_extension_is_input():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 7))
    cant = extend_cantilever(cfg, 0)
    assert list(cant.a_seq) == [cfg.a0, cfg.a1, cfg.a2]
    assert list(cant.b_seq) == [cfg.b1, cfg.b2, cfg.b3, cfg.b4]
    assert list(cant.c_seq) == [cfg.c0, cfg.c1, cfg.c2]


def test_nine_point_check_cuspidal():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    assert nine_point_check(cfg)
    nine = [p for name, p in cfg.as_dict().items() if name != "B3"]
    basis = fit_cubics(nine)
    assert len(basis) == 1 and basis[0] == cuspidal_form()
    assert len(fit_cubics(cfg.points())) == 1


def test_nine_point_check_detects_perturbation():
    cfg = build_tenpoint_cuspidal(-1, 0, 1, F(1, 10))
    from dataclasses import replace
    broken = replace(cfg, b3=mk_point(F(3, 10), F(28, 1000)))
    assert not nine_point_check(broken)


def test_weierstrass_configuration():
    cfg = w_config()
    assert verify_lattice(cfg)
    assert nine_point_check(cfg)
    basis = fit_cubics(cfg.points())
    assert len(basis) == 1 and basis[0] == weierstrass_form(0, 17)


def test_weierstrass_cantilever_membership():
    cfg = w_config()
    cant = extend_cantilever(cfg, 10)
    assert all(CURVE.contains(p) for p in cant.points())
    assert verify_lattice(cant)


def test_weierstrass_rejects_special_step():
    # delta = A0 - C0 collides A1 with C0
    bad = CURVE.add(W_BASE[0], CURVE.neg(W_BASE[2]))
    with pytest.raises(DegenerateError):
        build_tenpoint_weierstrass(CURVE, *W_BASE, bad)


def test_standard_system_check():
    arcs = parallel_lines_arcs()
    assert standard_system_ok(*arcs)
    bad = (SampledArc(lambda x: 1.0, -1, 1), SampledArc(lambda x: 0.0, -1, 1),
           SampledArc(lambda x: -1.0, -1, 1))
    assert not standard_system_ok(*bad)


def test_halving_additive():
    arcs = parallel_lines_arcs()
    px, py = halve_parameter_demo(*arcs, 1.0)
    assert abs(px - 0.5) < 1e-10 and py == 0.0
    px, _ = halve_parameter_demo(*arcs, 0.0)
    assert abs(px) < 1e-10
    px, _ = halve_parameter_demo(*arcs, -2.5)
    assert abs(px + 1.25) < 1e-10


def test_halving_multiplicative():
    alpha, beta, gamma = three_lines_multiplicative_arcs()
    x_b = -3.0 / 5.0                       # middle offset 4
    assert abs(middle_offset_multiplicative(x_b) - 4.0) < 1e-12
    p1 = halve_parameter_demo(alpha, beta, gamma, x_b)
    assert abs(p1[0] - (-1.0 / 3.0)) < 1e-10     # offset 2
    p2 = halve_parameter_demo(alpha, beta, gamma, p1[0])
    assert abs(p2[0] - (2.0 * math.sqrt(2.0) - 3.0)) < 2e-10  # offset sqrt 2


def test_halving_out_of_range():
    alpha, beta, gamma = three_lines_multiplicative_arcs()
    with pytest.raises(ConvergenceError):
        halve_parameter_demo(alpha, beta, gamma, 0.89)
