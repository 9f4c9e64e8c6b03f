import random

import pytest

from curvemap import (
    Parameterization,
    QQ,
    SyzygyMatrix,
    form,
    hilbert_burch,
    parse_form,
    verify_hilbert_burch,
)
from curvemap.syzygy import syzygies_in_degree


def frozen_cases():
    return [
        # (generators, column degrees, matrix rows as printed)
        (("x^2", "x*y", "y^2"), (1, 1), [["y", "0"], ["-x", "y"], ["0", "-x"]]),
        (("x^3", "x^2*y", "y^3"), (1, 2), [["y", "0"], ["-x", "y^2"], ["0", "-x^2"]]),
        (
            ("x^4", "x^2*y^2", "y^4"),
            (2, 2),
            [["y^2", "0"], ["-x^2", "y^2"], ["0", "-x^2"]],
        ),
        (("x", "y"), (1,), [["y"], ["-x"]]),
    ]


def test_hilbert_burch_frozen_matrices(field, build):
    for texts, degrees, rows in frozen_cases():
        phi = hilbert_burch(build(*texts))
        assert phi.col_degrees == degrees
        assert phi.matrix_strings() == rows


def test_hilbert_burch_shape_and_conventions(field, build):
    P = build("x^5", "x^3*y^2 + x*y^4", "x*y^4 - y^5", "y^5")
    phi = hilbert_burch(P)
    assert phi.n == P.n and len(phi.columns) == P.n - 1
    assert sum(phi.col_degrees) == P.d
    assert list(phi.col_degrees) == sorted(phi.col_degrees)
    for col, D in zip(phi.columns, phi.col_degrees):
        lead = next(e for e in col if not e.is_zero)
        assert next(c for c in lead.coeffs if c != field.zero) == field.one
        assert all(e.is_zero or e.degree == D for e in col)
    assert verify_hilbert_burch(P, phi)


def test_columns_are_syzygies(field, build):
    P = build("x^4", "x^3*y - y^4", "x*y^3")
    phi = hilbert_burch(P)
    for col in phi.columns:
        acc = form(field, [])
        for g, e in zip(P.gens, col):
            if not e.is_zero:
                acc = acc.add(g.mul(e)) if not acc.is_zero else g.mul(e)
        assert acc.is_zero
    assert verify_hilbert_burch(P, phi)


def test_syzygies_in_degree_dimension(field, build):
    # for (x^2, xy, y^2) the syzygy module is generated in degree 1 only
    P = build("x^2", "x*y", "y^2")
    assert len(syzygies_in_degree(P, 0)) == 0
    assert len(syzygies_in_degree(P, 1)) == 2


def test_verify_rejects_perturbations(field, build):
    P = build("x^3", "x^2*y", "y^3")
    phi = hilbert_burch(P)
    # break one entry: no longer a syzygy
    bad_col = list(phi.columns[0])
    bad_col[0] = parse_form(field, "x")
    broken = SyzygyMatrix(field, phi.n, phi.col_degrees, (tuple(bad_col), phi.columns[1]))
    assert not verify_hilbert_burch(P, broken)
    # a syzygy matrix of the wrong map
    other = hilbert_burch(build("x^3", "x*y^2", "y^3"))
    assert not verify_hilbert_burch(P, other)


def test_verify_rejects_nonminimal_degrees(field, build):
    P = build("x^2", "x*y", "y^2")
    phi = hilbert_burch(P)
    # scale a column by x: columns still syzygies, degrees no longer sum to d
    col = tuple(e.mul(parse_form(field, "x")) for e in phi.columns[0])
    padded = SyzygyMatrix(field, phi.n, (2, 1), (col, phi.columns[1]))
    assert not verify_hilbert_burch(P, padded)


def test_verify_accepts_column_swap(field, build):
    # swapping columns flips every minor sign, absorbed by the global unit
    P = build("x^4", "x^2*y^2", "y^4")
    phi = hilbert_burch(P)
    swapped = SyzygyMatrix(
        field, phi.n, (phi.col_degrees[1], phi.col_degrees[0]), (phi.columns[1], phi.columns[0])
    )
    assert verify_hilbert_burch(P, swapped)


def test_hilbert_burch_over_rationals(build):
    P = build("x^3", "x^2*y", "y^3", f=QQ)
    phi = hilbert_burch(P)
    assert phi.col_degrees == (1, 2)
    assert verify_hilbert_burch(P, phi)


def test_hilbert_burch_dense_random(field):
    rng = random.Random("syzygy-dense")
    for _ in range(5):
        while True:
            gens = [form(field, [rng.randrange(field.p) for _ in range(6)]) for _ in range(4)]
            try:
                P = Parameterization.build(field, gens)
                break
            except Exception:
                continue
        phi = hilbert_burch(P)
        assert sum(phi.col_degrees) == P.d
        assert verify_hilbert_burch(P, phi)


def test_n_equals_two_column_degree_is_d(field, build):
    P = build("x^7", "y^7")
    phi = hilbert_burch(P)
    assert phi.col_degrees == (7,)
    assert verify_hilbert_burch(P, phi)
