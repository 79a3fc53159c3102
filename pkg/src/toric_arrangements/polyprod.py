"""Membership in polyhedral products Z_K(X, *) and generalized wedges.

A point of X^n is abstracted to its support, the set of coordinates
that differ from the basepoint. Both spaces are unions of coordinate
blocks, so membership depends only on the support.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangements import (
    IndexSet,
    SimplicialComplex,
    SubsetCollection,
    ValidationError,
    build_KI,
    mask_of,
    set_of,
)

__all__ = [
    "SupportPattern",
    "in_polyhedral_product",
    "in_generalized_wedge",
    "lemma63_check",
    "lemma63_counterexample",
]


@dataclass(frozen=True)
class SupportPattern:
    n: int
    support: IndexSet

    def __post_init__(self):
        s = tuple(sorted(set(self.support)))
        if any(not 0 <= i < self.n for i in s):
            raise ValidationError(f"support {list(s)} not inside [0, {self.n})")
        object.__setattr__(self, "support", s)

    @classmethod
    def from_bits(cls, bits: str) -> "SupportPattern":
        """Parse a bitstring; character j is '1' when coordinate j is off the basepoint."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValidationError(f"pattern must be a nonempty 0/1 string, got {bits!r}")
        return cls(len(bits), tuple(j for j, c in enumerate(bits) if c == "1"))

    def to_bits(self) -> str:
        return "".join("1" if j in self.support else "0" for j in range(self.n))


def in_polyhedral_product(p: SupportPattern, K: SimplicialComplex) -> bool:
    """True when some face block ``(X, *)^sigma`` holds a point with this support."""
    if p.n != K.n:
        raise ValidationError("pattern and complex live on different index sets")
    m = mask_of(p.support)
    return any(m & ~f == 0 for f in _facet_masks(K))


def in_generalized_wedge(p: SupportPattern, I: SubsetCollection) -> bool:
    """True when every member of I has a coordinate sitting at the basepoint."""
    if p.n != I.n:
        raise ValidationError("pattern and collection live on different index sets")
    m = mask_of(p.support)
    return all(t & ~m for t in I.masks)


@lru_cache(maxsize=128)
def _facet_masks(K: SimplicialComplex) -> tuple[int, ...]:
    # blocks of non-maximal faces sit inside the block of a maximal one
    facets: list[int] = []
    for f in sorted((mask_of(x) for x in K.faces), key=lambda m: -m.bit_count()):
        if not any(f & ~g == 0 for g in facets):
            facets.append(f)
    return tuple(facets)


def lemma63_counterexample(I: SubsetCollection) -> SupportPattern | None:
    """First support pattern on which the two predicates disagree, if any."""
    K = build_KI(I)
    for m in range(1 << I.n):
        p = SupportPattern(I.n, set_of(m))
        if in_polyhedral_product(p, K) != in_generalized_wedge(p, I):
            return p
    return None


def lemma63_check(I: SubsetCollection) -> bool:
    """Exhaustively compare the wedge and the polyhedral product over all 2^n supports."""
    return lemma63_counterexample(I) is None
