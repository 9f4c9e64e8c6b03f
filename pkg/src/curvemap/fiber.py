"""Fibers, image membership, and the multiplicities attached to the map.

A scalar point p of P^(n-1) pulls back to the row vector p*phi; the gcd of
its entries cuts out the fiber over p, so p lies on the image exactly when
that gcd is nonconstant.  The degree of a general fiber is the degree r of
the map onto its image, and r * e(A) = d, where e(A) is the multiplicity of
the homogeneous coordinate ring A of the image.  That identity, together
with the fact that r divides every column degree of phi, turns a sampled
fiber degree into a certified one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import linalg
from .errors import (
    CertificationFailed,
    InternalInvariantViolation,
    SlopeNotStabilized,
    ZeroRow,
)
from .field import PrimeField
from .forms import (
    BinaryForm,
    ProjPoint1,
    ProjPointN,
    form,
    format_form,
    gcd_forms,
)
from .ideals import GradedIdeal
from .param import Parameterization
from .syzygy import SyzygyMatrix

OFF_IMAGE_NOTE = (
    "membership is decided for rational points over the configured field; "
    "a point off the image here may still lie on it over the algebraic closure"
)


@dataclass(frozen=True)
class FiberReport:
    point: ProjPointN
    on_image: bool
    fiber_form: BinaryForm
    fiber_degree: int

    def to_json(self, variables=("x", "y")) -> dict:
        out = {
            "point": str(self.point),
            "onImage": self.on_image,
            "fiberForm": format_form(self.fiber_form, variables),
            "fiberDegree": self.fiber_degree,
        }
        if not self.on_image:
            out["note"] = OFF_IMAGE_NOTE
        return out


def apply_map(P: Parameterization, q: ProjPoint1) -> ProjPointN:
    vals = [g.eval_proj(q) for g in P.gens]
    if not any(vals):
        raise InternalInvariantViolation(
            "all generators vanish at a point; the ideal cannot be m-primary"
        )
    return ProjPointN.of(P.field, vals)


def row_combination(phi: SyzygyMatrix, p: ProjPointN) -> list:
    """The n-1 entries of the row vector p * phi."""
    field = phi.field
    out = []
    for col in phi.columns:
        acc = form(field, [])
        for c, e in zip(p.coords, col):
            if c and not e.is_zero:
                acc = acc.add(e.scale(c))
        out.append(acc)
    return out


def row_ideal(phi: SyzygyMatrix, p: ProjPointN) -> GradedIdeal:
    entries = [e for e in row_combination(phi, p) if not e.is_zero]
    if not entries:
        raise ZeroRow(f"p * phi vanishes identically at p = {p}")
    return GradedIdeal.of(phi.field, entries)


def fiber(P: Parameterization, phi: SyzygyMatrix, p: ProjPointN) -> FiberReport:
    entries = [e for e in row_combination(phi, p) if not e.is_zero]
    if not entries:
        raise ZeroRow(f"p * phi vanishes identically at p = {p}")
    g = gcd_forms(entries)
    return FiberReport(p, g.degree >= 1, g, g.degree)


# ---------------------------------------------------------------------------
# Hilbert function of the image ring A = k[(I)_d] and its multiplicity


def _slope(hf: list, d: int):
    """Stabilized slope candidate: three equal consecutive first differences.

    Transient plateaus exist (sumset growth can overshoot before settling),
    so a candidate is only plausible when it divides d; the r * e = d
    certificate downstream rejects anything that still slips through.
    """
    if len(hf) >= 4:
        e = hf[-1] - hf[-2]
        if e == hf[-2] - hf[-3] == hf[-3] - hf[-4] and 1 <= e <= d and d % e == 0:
            return e
    return None


def _semigroup_gap_count(steps: list) -> int:
    """Number of gaps of the numerical semigroup generated by steps (gcd 1).

    Walks upward until min(steps) consecutive reachable integers appear,
    after which everything is reachable.
    """
    smallest = min(steps)
    if smallest == 1:
        return 0
    reachable = [True]
    gaps = 0
    streak = 1
    i = 0
    while streak < smallest:
        i += 1
        ok = any(i >= s and reachable[i - s] for s in steps)
        reachable.append(ok)
        if ok:
            streak += 1
        else:
            streak = 0
            gaps += 1
    return gaps


def _table_monomial(P: Parameterization, cap: int):
    # y-free exponents; 0 is always present, so the sumsets are nested and
    # only the frontier of new sums needs expanding
    steps = sorted(P.d - g.y_order for g in P.gens)
    g = 0
    for s in steps:
        g = gcd(g, s)
    top = P.d // g
    # |S_j| <= top*j + 1 - deficit always, with equality exactly once the
    # sumset is a full interval flanked by the frozen semigroup gap sets;
    # from that point the growth per step is exactly top
    low = _semigroup_gap_count([s // g for s in steps if s])
    high = _semigroup_gap_count([top - s // g for s in steps if s != P.d])
    deficit = low + high
    seen = {0}
    new = {0}
    hf = [1]
    j = 0
    while True:
        j += 1
        grown = {s + t for s in new for t in steps[1:]} - seen
        seen |= grown
        new = grown
        hf.append(len(seen))
        if len(seen) == top * j + 1 - deficit:
            return top, hf
        if j >= cap:
            raise SlopeNotStabilized(
                f"Hilbert function of the image ring not linear by degree {cap}"
            )


def _table_prime(P: Parameterization, cap: int):
    fld = P.field
    p = fld.p
    n, d = P.n, P.d
    G = np.array([list(g.coeffs) for g in P.gens], dtype=np.int64)
    R, piv = linalg.np_rref(G.copy(), p)
    R = R[: len(piv)]
    pivots = list(piv)
    W = R.copy()
    hrow = next(i for i in range(n) if G[i, 0])
    h = G[hrow]
    hf = [1, R.shape[0]]
    j = 1
    while True:
        H = linalg.np_shift_mul(R, h, p)
        C = np.vstack(
            [linalg.np_shift_mul(W, G[i], p) for i in range(n) if i != hrow]
        )
        # forward-eliminate C against H; H[t] leads at pivots[t] since
        # multiplying by h (nonzero x^d coefficient) preserves leading columns
        for t in range(len(pivots)):
            col = C[:, pivots[t]]
            nz = np.nonzero(col)[0]
            if len(nz) == 0:
                continue
            f = col[nz] * pow(int(H[t, pivots[t]]), p - 2, p) % p
            C[nz] = (C[nz] - np.outer(f, H[t])) % p
        Cr, cpiv = linalg.np_rref(C, p)
        N = Cr[: len(cpiv)]
        merged = pivots + cpiv
        order = np.argsort(merged, kind="stable")
        R = np.vstack([H, N])[order]
        pivots = [merged[i] for i in order]
        W = N
        j += 1
        hf.append(R.shape[0])
        e = _slope(hf, P.d)
        if e is not None:
            return e, hf
        if j >= cap:
            raise SlopeNotStabilized(
                f"Hilbert function of the image ring not linear by degree {cap}"
            )


def _table_generic(P: Parameterization, cap: int):
    field = P.field
    basis_rows, piv = linalg.rref([list(g.coeffs) for g in P.gens], field)
    basis = [form(field, row) for row in basis_rows[: len(piv)]]
    hf = [1, len(basis)]
    j = 1
    while True:
        products = [b.mul(g) for b in basis for g in P.gens]
        rows, piv = linalg.rref([list(f.coeffs) for f in products], field)
        basis = [form(field, row) for row in rows[: len(piv)]]
        j += 1
        hf.append(len(basis))
        e = _slope(hf, P.d)
        if e is not None:
            return e, hf
        if j >= cap:
            raise SlopeNotStabilized(
                f"Hilbert function of the image ring not linear by degree {cap}"
            )


def hilbert_table_a(P: Parameterization, cap=None):
    """(e(A), [HF_A(0), HF_A(1), ...]) up to the degree where the slope locked in.

    The slope is declared once three consecutive first differences agree;
    the cap (default 2d+4) bounds the search.
    """
    if cap is None:
        cap = 2 * P.d + 4
    if P.is_monomial:
        return _table_monomial(P, cap)
    if isinstance(P.field, PrimeField):
        return _table_prime(P, cap)
    return _table_generic(P, cap)


def multiplicity_a(P: Parameterization, cap=None) -> int:
    """Multiplicity of the coordinate ring of the image curve."""
    return hilbert_table_a(P, cap)[0]


def map_degree(P: Parameterization, phi: SyzygyMatrix, seed=0, samples=7, e=None) -> int:
    """Degree r of the map onto its image, sampled and then certified.

    r is the fiber degree over the image of a general point; special points
    only enlarge fibers, so the minimum over samples is the candidate.  The
    candidate is accepted only if it divides every column degree and
    satisfies r * e(A) = d against the independently computed e(A), which
    pins r = d/e(A) regardless of sampling luck.
    """
    if samples < 1:
        raise ValueError("need at least one fiber sample")
    rng = random.Random(f"map-degree:{seed}")
    field = P.field
    best = None
    got = 0
    attempts = 0
    while got < samples:
        attempts += 1
        if attempts > samples + 16:
            raise CertificationFailed(
                "fiber sampling kept hitting degenerate points; "
                "retry with a different seed or a larger prime"
            )
        q = ProjPoint1.of(field, field.one, field.rand(rng))
        try:
            rep = fiber(P, phi, apply_map(P, q))
        except ZeroRow:
            continue
        got += 1
        if rep.fiber_degree < 1:
            raise InternalInvariantViolation(
                f"image point {rep.point} reported off the image"
            )
        best = rep.fiber_degree if best is None else min(best, rep.fiber_degree)
    if e is None:
        e = multiplicity_a(P)
    if any(D % best for D in phi.col_degrees) or best * e != P.d:
        raise CertificationFailed(
            f"sampled fiber degree {best} fails certification against "
            f"column degrees {list(phi.col_degrees)} and e(A) = {e} with d = {P.d}; "
            "resample with a different seed or a larger prime"
        )
    return best


def j_multiplicity(P: Parameterization, phi=None, seed=0, samples=7) -> int:
    """j-multiplicity of the ideal: d * r * e(A), always d^2 here."""
    from .syzygy import hilbert_burch

    if phi is None:
        phi = hilbert_burch(P)
    e = multiplicity_a(P)
    r = map_degree(P, phi, seed=seed, samples=samples, e=e)
    j = P.d * r * e
    if j != P.d * P.d:
        raise InternalInvariantViolation(f"j-multiplicity {j} differs from d^2 = {P.d * P.d}")
    return j
