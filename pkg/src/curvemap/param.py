"""The input object: n independent forms of one degree d with no common zero.

Such a tuple defines a morphism P^1 -> P^(n-1) whose image is a curve once
n >= 3 (for n = 2 the map is a branched cover of P^1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import InstanceError
from .forms import BinaryForm, format_form, gcd_forms, li_dim


@dataclass(frozen=True)
class Parameterization:
    field: object
    gens: tuple
    d: int
    n: int
    variables: tuple = ("x", "y")

    @classmethod
    def build(cls, field, gens, variables=("x", "y")) -> "Parameterization":
        gens = tuple(gens)
        if len(gens) < 2:
            raise InstanceError("need at least two generators")
        if any(g.is_zero for g in gens):
            raise InstanceError("zero generator")
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise InstanceError(
                f"degree mismatch: generators of degrees {sorted(degrees)}"
            )
        d = degrees.pop()
        if d < 1:
            raise InstanceError("generators must have positive degree")
        n = len(gens)
        if li_dim(gens) != n:
            raise InstanceError("linearly dependent generators")
        common = gcd_forms(gens)
        if common.degree != 0:
            raise InstanceError(
                f"generators share the common factor {format_form(common, variables)}"
            )
        return cls(field, gens, d, n, tuple(variables))

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.gens)

    def gen_strings(self) -> list:
        return [format_form(g, self.variables) for g in self.gens]

    def __repr__(self):
        return f"Parameterization({', '.join(self.gen_strings())})"
