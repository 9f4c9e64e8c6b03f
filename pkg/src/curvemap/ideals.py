"""Homogeneous ideals of k[x, y] presented by finitely many binary forms.

All questions are answered degree slice by degree slice: the degree-t slice
of an ideal is the span of the monomial multiples of its generators, a plain
linear-algebra object.  Hilbert functions, lengths, minimal generator counts,
powers, and ideal equality all reduce to slice ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import linalg
from .errors import InternalInvariantViolation, NotMPrimary, ZeroIdeal
from .forms import BinaryForm, form, format_form, gcd_forms, monomial


@dataclass(frozen=True)
class GradedIdeal:
    field: object
    gens: tuple

    @classmethod
    def of(cls, field, gens) -> "GradedIdeal":
        kept = tuple(g.monic() for g in gens if not g.is_zero)
        if not kept:
            raise ZeroIdeal("an ideal needs at least one nonzero generator")
        return cls(field, kept)

    @property
    def max_gen_degree(self) -> int:
        return max(g.degree for g in self.gens)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.gens)

    def gen_strings(self, variables=("x", "y")) -> list:
        return [format_form(g, variables) for g in self.gens]

    def __repr__(self):
        return f"GradedIdeal({', '.join(self.gen_strings())})"


def maximal_ideal_power(field, t: int) -> GradedIdeal:
    """m**t, generated by the degree-t monomials; m**0 is the unit ideal."""
    if t < 0:
        raise ValueError("negative power of the maximal ideal")
    if t == 0:
        return GradedIdeal.of(field, [form(field, [field.one])])
    return GradedIdeal.of(field, [monomial(field, t, i) for i in range(t + 1)])


def _slice_rows(J: GradedIdeal, t: int) -> list:
    """Coefficient rows of all monomial multiples of the generators in degree t."""
    rows = []
    zero = J.field.zero
    for g in J.gens:
        dg = g.degree
        if dg > t:
            continue
        pad = t - dg
        base = list(g.coeffs)
        for k in range(pad + 1):
            rows.append([zero] * k + base + [zero] * (pad - k))
    return rows


def slice_rank(J: GradedIdeal, t: int) -> int:
    return linalg.rank(_slice_rows(J, t), J.field)


def slice_basis(J: GradedIdeal, t: int) -> list:
    """A reduced basis of the degree-t slice, as forms."""
    rows = _slice_rows(J, t)
    if not rows:
        return []
    red, piv = linalg.rref(rows, J.field)
    return [form(J.field, r) for r in red[: len(piv)]]


def hf_quotient(J: GradedIdeal, t: int) -> int:
    """Hilbert function of k[x, y]/J in degree t."""
    return (t + 1) - slice_rank(J, t)


def is_m_primary(J: GradedIdeal) -> bool:
    return gcd_forms(J.gens).degree == 0


def length_quotient(J: GradedIdeal) -> int:
    """Total length of k[x, y]/J; requires J to be m-primary."""
    if not is_m_primary(J):
        raise NotMPrimary("the generators share a common factor")
    total = 0
    cap = 4 * J.max_gen_degree + 8
    for t in range(cap + 1):
        h = hf_quotient(J, t)
        if h == 0:
            return total
        total += h
    raise InternalInvariantViolation("Hilbert function failed to vanish below the cap")


def hilbert_table(J: GradedIdeal) -> list:
    """Hilbert function values of the quotient through the first zero."""
    if not is_m_primary(J):
        raise NotMPrimary("the generators share a common factor")
    vals = []
    cap = 4 * J.max_gen_degree + 8
    for t in range(cap + 1):
        h = hf_quotient(J, t)
        vals.append(h)
        if h == 0:
            return vals
    raise InternalInvariantViolation("Hilbert function failed to vanish below the cap")


def min_gens(J: GradedIdeal) -> int:
    """Number of minimal generators, by comparing J with m*J slice by slice."""
    mJ_gens = []
    for g in J.gens:
        mJ_gens.append(g.shift(1, 0))
        mJ_gens.append(g.shift(0, 1))
    mJ = GradedIdeal.of(J.field, mJ_gens)
    total = 0
    for t in range(J.max_gen_degree + 1):
        total += slice_rank(J, t) - slice_rank(mJ, t)
    return total


def power(J: GradedIdeal, t: int) -> GradedIdeal:
    """J**t, generated by all t-fold products of the generators."""
    if t < 0:
        raise ValueError("negative ideal power")
    if t == 0:
        return maximal_ideal_power(J.field, 0)
    prods = []
    for combo in combinations_with_replacement(J.gens, t):
        acc = combo[0]
        for g in combo[1:]:
            acc = acc.mul(g)
        prods.append(acc)
    return GradedIdeal.of(J.field, prods)


def ideal_equals(J1: GradedIdeal, J2: GradedIdeal) -> bool:
    """Exact equality of ideals, decided on slices up to max degree + 1.

    Beyond the top generator degree every slice is R_1 times the previous
    one, so agreement through max(gen degrees) + 1 certifies equality.
    """
    top = max(J1.max_gen_degree, J2.max_gen_degree) + 1
    for t in range(top + 1):
        rows1 = _slice_rows(J1, t)
        rows2 = _slice_rows(J2, t)
        r1 = linalg.rank(rows1, J1.field)
        r2 = linalg.rank(rows2, J2.field)
        if r1 != r2:
            return False
        if r1 and linalg.rank(rows1 + rows2, J1.field) != r1:
            return False
    return True
