"""Collections of index subsets and the simplicial complex K(I).

A collection ``I`` of subsets of ``[n] = {0, ..., n-1}`` determines the
complex ``K(I)`` of all subsets of ``[n]`` that contain no member of ``I``.
Subsets are stored as sorted tuples of ints; internally the enumeration
runs over bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "MAX_EXPLICIT_N",
    "IndexSet",
    "SubsetCollection",
    "SimplicialComplex",
    "LazyComplex",
    "ValidationError",
    "build_KI",
    "r_min",
    "minimalize",
    "is_downward_closed",
    "I_full",
    "J_pairs",
    "antichains",
    "mask_of",
    "set_of",
]

# Largest ambient n for which K(I) is enumerated face by face.
MAX_EXPLICIT_N = 20

IndexSet = tuple[int, ...]


class ValidationError(ValueError):
    """Raised when input data violates a documented invariant."""


def mask_of(s: Iterable[int]) -> int:
    m = 0
    for i in s:
        m |= 1 << i
    return m


def set_of(mask: int) -> IndexSet:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _canonical_index_set(raw: Iterable[int], n: int) -> IndexSet:
    items = list(raw)
    for x in items:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"index {x!r} is not an integer")
        if not 0 <= x < n:
            raise ValidationError(f"index {x} outside [0, {n})")
    s = tuple(sorted(items))
    if len(set(s)) != len(s):
        raise ValidationError(f"repeated index in {items}")
    return s


def _face_key(face: IndexSet) -> tuple[int, IndexSet]:
    return (len(face), face)


@dataclass(frozen=True)
class SubsetCollection:
    """A family ``I`` of subsets of ``[n]``.

    In strict mode (the default) every member has at least two elements;
    relaxed mode admits singletons. Duplicate members are rejected.
    """

    n: int
    members: tuple[IndexSet, ...]
    strict: bool = True

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"ambient dimension must be an integer >= 2, got {self.n!r}")
        members = tuple(_canonical_index_set(m, self.n) for m in self.members)
        if len(set(members)) != len(members):
            raise ValidationError("duplicate members in I")
        floor = 2 if self.strict else 1
        for m in members:
            if len(m) < floor:
                raise ValidationError(
                    f"member {list(m)} has cardinality {len(m)} < {floor}"
                    + (" (strict mode)" if self.strict else "")
                )
        object.__setattr__(self, "members", members)

    @classmethod
    def from_lists(cls, n: int, members: Iterable[Iterable[int]], strict: bool = True):
        return cls(n, tuple(tuple(m) for m in members), strict)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(m) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.members)

    def to_json(self) -> dict:
        return {"n": self.n, "I": [list(m) for m in self.members], "strict": self.strict}

    @classmethod
    def from_json(cls, doc: dict) -> "SubsetCollection":
        if not isinstance(doc, dict) or "n" not in doc or "I" not in doc:
            raise ValidationError('collection document needs keys "n" and "I"')
        if not isinstance(doc["I"], list) or not all(isinstance(m, list) for m in doc["I"]):
            raise ValidationError('"I" must be a list of integer lists')
        return cls.from_lists(doc["n"], doc["I"], bool(doc.get("strict", True)))


@dataclass(frozen=True)
class SimplicialComplex:
    """An explicit face family on ``[n]``; always contains the empty face."""

    n: int
    faces: frozenset[IndexSet]

    def __post_init__(self):
        faces = frozenset(_canonical_index_set(f, self.n) for f in self.faces)
        if () not in faces:
            raise ValidationError("a simplicial complex must contain the empty face")
        object.__setattr__(self, "faces", faces)

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, frozenset(tuple(f) for f in faces))

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def sorted_faces(self) -> list[IndexSet]:
        """Faces ordered lexicographically, the empty face first."""
        return sorted(self.faces)

    def to_json(self) -> dict:
        return {"n": self.n, "faces": [list(f) for f in self.sorted_faces()]}

    @classmethod
    def from_json(cls, doc: dict) -> "SimplicialComplex":
        return cls.from_faces(doc["n"], doc["faces"])


@dataclass(frozen=True)
class LazyComplex:
    """K(I) for large ``n``: answers membership queries without enumeration."""

    n: int
    minimal_masks: tuple[int, ...]

    def __contains__(self, face) -> bool:
        m = mask_of(face)
        if m >> self.n:
            return False
        return not any(t & m == t for t in self.minimal_masks)


def build_KI(I: SubsetCollection, lazy: bool = False) -> SimplicialComplex | LazyComplex:
    """Return ``K(I) = {sigma : no member of I is contained in sigma}``.

    Explicit enumeration is limited to ``n <= MAX_EXPLICIT_N``; pass
    ``lazy=True`` to get a membership-only complex for any ``n``.
    """
    masks = I.masks
    if lazy:
        return LazyComplex(I.n, masks)
    if I.n > MAX_EXPLICIT_N:
        raise ValidationError(
            f"n={I.n} exceeds the explicit enumeration cap {MAX_EXPLICIT_N}; use lazy=True"
        )
    faces = frozenset(
        set_of(s) for s in range(1 << I.n) if not any(t & s == t for t in masks)
    )
    return SimplicialComplex(I.n, faces)


def r_min(I: SubsetCollection) -> int:
    """Smallest cardinality of a member of ``I``."""
    if not I.members:
        raise ValidationError("r_min is undefined for an empty collection")
    return min(len(m) for m in I.members)


def minimalize(I: SubsetCollection) -> SubsetCollection:
    masks = [(mask_of(m), m) for m in I.members]
    keep = [
        m
        for mk, m in masks
        if not any(other != mk and other & mk == other for other, _ in masks)
    ]
    keep.sort(key=_face_key)
    return SubsetCollection(I.n, tuple(keep), I.strict)


def is_downward_closed(K: SimplicialComplex) -> bool:
    for face in K.faces:
        # checking codimension-one faces suffices by induction
        for i in range(len(face)):
            if face[:i] + face[i + 1:] not in K.faces:
                return False
    return True


def I_full(n: int) -> SubsetCollection:
    """The collection ``{[n]}``, whose space is projective (n-1)-space."""
    return SubsetCollection(n, (tuple(range(n)),))


def J_pairs(n: int) -> SubsetCollection:
    """All two-element subsets of ``[n]``."""
    return SubsetCollection(n, tuple(combinations(range(n), 2)))


def antichains(n: int, min_card: int = 2) -> Iterator[SubsetCollection]:
    """Every nonempty antichain of subsets of ``[n]`` with members of size >= min_card."""
    pool = [mask_of(c) for r in range(min_card, n + 1) for c in combinations(range(n), r)]

    def grow(start: int, chosen: list[int]):
        if chosen:
            yield list(chosen)
        for idx in range(start, len(pool)):
            m = pool[idx]
            if any(c & m == c or c & m == m for c in chosen):
                continue
            chosen.append(m)
            yield from grow(idx + 1, chosen)
            chosen.pop()

    strict = min_card >= 2
    for chain in grow(0, []):
        yield SubsetCollection(n, tuple(set_of(m) for m in chain), strict)
