"""The fan of X_I: cones over the faces of K(I) in R^{n-1}.

Cone generators are indices into ``[n]``: index ``k >= 1`` is the standard
basis vector ``e_k`` of Z^{n-1} and index ``0`` is ``e_0 = -(e_1 + ... + e_{n-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .arrangements import (
    IndexSet,
    SimplicialComplex,
    ValidationError,
    mask_of,
    set_of,
)
from .exact import solve

__all__ = [
    "Cone",
    "Fan",
    "Position",
    "build_fan",
    "one_cones",
    "primitive_sets",
    "r_sigma",
    "orbit_limit",
    "cone_contains",
    "generator_vector",
]


@dataclass(frozen=True, order=True)
class Cone:
    generators: IndexSet

    @property
    def dim(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class Fan:
    n: int
    cones: frozenset[Cone]

    def __contains__(self, generators) -> bool:
        return Cone(tuple(sorted(generators))) in self.cones

    def sorted_cones(self) -> list[Cone]:
        return sorted(self.cones, key=lambda c: (c.dim, c.generators))

    def to_json(self) -> dict:
        return {"n": self.n, "cones": [list(c.generators) for c in self.sorted_cones()]}


class Position(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def build_fan(K: SimplicialComplex) -> Fan:
    full = tuple(range(K.n))
    if full in K.faces:
        raise ValidationError("K contains [n]; Cone_[n] is not defined")
    return Fan(K.n, frozenset(Cone(f) for f in K.faces))


def one_cones(F: Fan) -> list[Cone]:
    return sorted(c for c in F.cones if c.dim == 1)


def primitive_sets(F: Fan) -> list[IndexSet]:
    """Generator sets spanning no cone while every proper subset spans one.

    Returned in (cardinality, lexicographic) order.
    """
    cone_masks = {mask_of(c.generators) for c in F.cones}
    out = []
    for s in range(1 << F.n):
        if s in cone_masks:
            continue
        # the empty subset always spans the zero cone, so singletons qualify vacuously
        sub = s
        ok = True
        while sub:
            low = sub & -sub
            if (s ^ low) not in cone_masks:
                ok = False
                break
            sub ^= low
        if ok:
            out.append(set_of(s))
    out.sort(key=lambda x: (len(x), x))
    return out


def r_sigma(F: Fan) -> int:
    prims = primitive_sets(F)
    if not prims:
        raise ValidationError("fan has no primitive set; r_sigma is undefined")
    return min(len(p) for p in prims)


def orbit_limit(u: Sequence[int], n: int) -> IndexSet:
    """Index set of the cone whose relative interior contains ``u``.

    With ``v = (0, u_1, ..., u_{n-1})`` this is ``{k : v_k > min(v)}``: the
    coordinates of ``[1 : t^{u_1} : ... : t^{u_{n-1}}]`` that vanish as t -> 0.
    """
    if len(u) != n - 1:
        raise ValidationError(f"u must have length n-1 = {n - 1}, got {len(u)}")
    v = (0, *u)
    low = min(v)
    return tuple(k for k in range(n) if v[k] > low)


def generator_vector(k: int, n: int) -> list[int]:
    if k == 0:
        return [-1] * (n - 1)
    vec = [0] * (n - 1)
    vec[k - 1] = 1
    return vec


def cone_contains(u: Sequence[int], c: Cone | Sequence[int], n: int) -> Position:
    gens = c.generators if isinstance(c, Cone) else tuple(sorted(c))
    if len(u) != n - 1:
        raise ValidationError(f"u must have length n-1 = {n - 1}, got {len(u)}")
    if not gens:
        return Position.INTERIOR if all(x == 0 for x in u) else Position.OUTSIDE
    # columns are the generator vectors; solve sum_j lam_j * e_{g_j} = u
    cols = [generator_vector(g, n) for g in gens]
    a = [[Fraction(cols[j][i]) for j in range(len(gens))] for i in range(n - 1)]
    lam = solve(a, [Fraction(x) for x in u])
    if lam is None or any(x < 0 for x in lam):
        return Position.OUTSIDE
    if all(x > 0 for x in lam):
        return Position.INTERIOR
    return Position.BOUNDARY
