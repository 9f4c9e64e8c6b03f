import random

import pytest

from curvemap import (
    CertificationFailed,
    ProjPoint1,
    ProjPointN,
    QQ,
    SyzygyMatrix,
    ZeroRow,
    apply_map,
    fiber,
    form,
    gcd_forms,
    hilbert_burch,
    hilbert_table_a,
    j_multiplicity,
    map_degree,
    multiplicity_a,
    parse_form,
    row_ideal,
)
from curvemap.fiber import OFF_IMAGE_NOTE


def proportional(field, h, text):
    want = parse_form(field, text)
    if h.degree != want.degree:
        return False
    return gcd_forms([h]).monic().coeffs == want.monic().coeffs


def test_apply_map(field, build):
    P = build("x^2", "x*y", "y^2")
    p = apply_map(P, ProjPoint1.of(field, 1, 2))
    assert p.coords == (1, field.conv(2), field.conv(4))


def test_fiber_on_image_nonbirational(field, build):
    P = build("x^4", "x^2*y^2", "y^4")
    phi = hilbert_burch(P)
    p = apply_map(P, ProjPoint1.of(field, 1, 1))
    rep = fiber(P, phi, p)
    assert rep.on_image and rep.fiber_degree == 2
    # the fiber form is defined up to a unit
    assert proportional(field, rep.fiber_form, "y^2 - x^2")
    assert rep.to_json()["fiberForm"] == "x^2 - y^2"


def test_fiber_identity_map(field, build):
    P = build("x", "y")
    phi = hilbert_burch(P)
    rep = fiber(P, phi, ProjPointN.of(field, [2, 3]))
    assert rep.on_image and rep.fiber_degree == 1
    assert proportional(field, rep.fiber_form, "3*x - 2*y")


def test_fiber_off_image(field, build):
    P = build("x^2", "x*y", "y^2")
    phi = hilbert_burch(P)
    rep = fiber(P, phi, ProjPointN.of(field, [0, 1, 0]))
    assert not rep.on_image and rep.fiber_degree == 0
    assert rep.to_json()["note"] == OFF_IMAGE_NOTE


def test_row_ideal_is_m_primary_off_image(field, build):
    P = build("x^2", "x*y", "y^2")
    phi = hilbert_burch(P)
    J = row_ideal(phi, ProjPointN.of(field, [0, 1, 0]))
    assert gcd_forms(J.gens).degree == 0


def test_fiber_rejects_zero_row(field, build):
    # a synthetic matrix with a zero combination row
    P = build("x", "y")
    zero = form(field, [])
    phi = SyzygyMatrix(field, 2, (1,), ((zero, zero),))
    with pytest.raises(ZeroRow):
        fiber(P, phi, ProjPointN.of(field, [1, 1]))


def test_multiplicity_fixed_values(field, build):
    assert multiplicity_a(build("x^2", "x*y", "y^2")) == 2
    assert multiplicity_a(build("x^3", "x^2*y", "y^3")) == 3
    assert multiplicity_a(build("x^4", "x^2*y^2", "y^4")) == 2
    assert multiplicity_a(build("x^6", "x^3*y^3", "y^6")) == 2
    assert multiplicity_a(build("x", "y")) == 1


def test_hilbert_table_transient_plateau_regression(field, build):
    # exponents (0,2,3,7,8): first differences run 4,9,9,9 before settling at
    # 8, so a three-equal-differences window alone would report e = 9 > d
    P = build("x^8", "x^6*y^2", "x^5*y^3", "x*y^7", "y^8")
    e, hf = hilbert_table_a(P)
    assert e == 8
    assert hf == [1, 5, 14, 23, 32]
    phi = hilbert_burch(P)
    assert map_degree(P, phi, e=e) == 1


def test_hilbert_table_agrees_between_prime_and_rational_paths(field, build):
    texts = ("x^3 + y^3", "x^2*y", "x*y^2 - y^3")
    e_p, hf_p = hilbert_table_a(build(*texts))
    e_q, hf_q = hilbert_table_a(build(*texts, f=QQ))
    assert e_p == e_q
    assert hf_p[: min(len(hf_p), len(hf_q))] == hf_q[: min(len(hf_p), len(hf_q))]


def test_map_degree_fixed_values(field, build):
    for texts, want in [
        (("x^2", "x*y", "y^2"), 1),
        (("x^3", "x^2*y", "y^3"), 1),
        (("x^4", "x^2*y^2", "y^4"), 2),
        (("x^6", "x^3*y^3", "y^6"), 3),
        (("x^5", "y^5"), 5),
        (("x", "y"), 1),
    ]:
        P = build(*texts)
        assert map_degree(P, hilbert_burch(P)) == want


def test_map_degree_certifies_against_multiplicity(field, build):
    P = build("x^4", "x^2*y^2", "y^4")
    phi = hilbert_burch(P)
    with pytest.raises(CertificationFailed):
        map_degree(P, phi, e=3)  # r * 3 = 4 has no solution among sampled degrees


def test_j_multiplicity_is_d_squared(field, build):
    assert j_multiplicity(build("x^2", "x*y", "y^2")) == 4
    assert j_multiplicity(build("x^3", "x^2*y", "y^3")) == 9
    assert j_multiplicity(build("x^4", "x^2*y^2", "y^4")) == 16
    assert j_multiplicity(build("x", "y")) == 1


def test_fiber_degree_at_random_image_points_matches_r(field, build):
    P = build("x^6", "x^3*y^3", "y^6")
    phi = hilbert_burch(P)
    rng = random.Random("fiber-sample")
    for _ in range(10):
        q = ProjPoint1.of(field, 1, field.rand(rng))
        rep = fiber(P, phi, apply_map(P, q))
        assert rep.on_image and rep.fiber_degree == 3
