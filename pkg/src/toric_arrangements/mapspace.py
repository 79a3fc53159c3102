"""Based holomorphic maps S^2 -> X_I as tuples of monic polynomials.

A degree-d map is an n-tuple of monic degree-d polynomials, given either
by coefficients or by root multisets, over the Gaussian rationals so that
every membership question is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangements import SubsetCollection, ValidationError
from .exact import GaussianRational, gr, rank

__all__ = [
    "MonicPolynomial",
    "RootMultiset",
    "MapTuple",
    "multiset_to_poly",
    "poly_gcd",
    "in_E",
    "in_hol",
    "discriminant_member",
    "stabilize",
    "default_shift_points",
    "interpolation_rank",
]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


@dataclass(frozen=True)
class MonicPolynomial:
    """``z^d + a_{d-1} z^{d-1} + ... + a_0``; ``coeffs`` holds ``a_0 .. a_{d-1}``."""

    coeffs: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(gr(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def dense(self) -> list[GaussianRational]:
        """Coefficients low to high, leading 1 included."""
        return [*self.coeffs, ONE]

    @classmethod
    def from_dense(cls, coeffs: Sequence[GaussianRational]) -> "MonicPolynomial":
        coeffs = _trim(list(coeffs))
        if not coeffs:
            raise ValueError("zero polynomial has no monic form")
        lead = coeffs[-1]
        return cls(tuple(c / lead for c in coeffs[:-1]))

    def __call__(self, x) -> GaussianRational:
        x = gr(x)
        acc = ONE
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RootMultiset:
    """A formal sum of distinct points with positive multiplicities."""

    entries: tuple[tuple[GaussianRational, int], ...]

    def __post_init__(self):
        entries = []
        for point, mult in self.entries:
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise ValidationError(f"multiplicity must be a positive integer, got {mult!r}")
            entries.append((gr(point), mult))
        entries.sort()
        points = [p for p, _ in entries]
        if len(set(points)) != len(points):
            raise ValidationError("root multiset lists a point twice")
        object.__setattr__(self, "entries", tuple(entries))

    @classmethod
    def of(cls, *points) -> "RootMultiset":
        """Build from a point list in which repetition means multiplicity."""
        counts: dict[GaussianRational, int] = {}
        for p in points:
            p = gr(p)
            counts[p] = counts.get(p, 0) + 1
        return cls(tuple(counts.items()))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def support(self) -> frozenset[GaussianRational]:
        return frozenset(p for p, _ in self.entries)

    def add_point(self, x: GaussianRational) -> "RootMultiset":
        counts = dict(self.entries)
        counts[x] = counts.get(x, 0) + 1
        return RootMultiset(tuple(counts.items()))


@dataclass(frozen=True)
class MapTuple:
    """n components of common degree d, all in root form or all in coefficient form."""

    components: tuple[RootMultiset, ...] | tuple[MonicPolynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValidationError("a map tuple needs at least one component")
        kinds = {type(c) for c in comps}
        if len(kinds) != 1 or not kinds <= {RootMultiset, MonicPolynomial}:
            raise ValidationError("components must all be root multisets or all monic polynomials")
        if len({c.degree for c in comps}) != 1:
            raise ValidationError("components have different degrees")
        object.__setattr__(self, "components", comps)

    @property
    def form(self) -> str:
        return "roots" if isinstance(self.components[0], RootMultiset) else "coeffs"

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return self.components[0].degree

    def to_coeffs(self) -> "MapTuple":
        if self.form == "coeffs":
            return self
        return MapTuple(tuple(multiset_to_poly(c) for c in self.components))

    def to_json(self) -> dict:
        if self.form == "roots":
            comps = [[[str(p), m] for p, m in c.entries] for c in self.components]
        else:
            comps = [[str(a) for a in c.coeffs] for c in self.components]
        return {"d": self.d, "n": self.n, "form": self.form, "components": comps}

    @classmethod
    def from_json(cls, doc: dict) -> "MapTuple":
        try:
            form, comps = doc["form"], doc["components"]
            d, n = doc["d"], doc["n"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"map tuple document missing field: {exc}") from exc
        try:
            if form == "roots":
                parsed = tuple(
                    RootMultiset(tuple((GaussianRational.parse(p), m) for p, m in c))
                    for c in comps
                )
            elif form == "coeffs":
                parsed = tuple(
                    MonicPolynomial(tuple(GaussianRational.parse(a) for a in c)) for c in comps
                )
            else:
                raise ValidationError(f"unknown form {form!r}")
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        F = cls(parsed)
        if F.d != d or F.n != n:
            raise ValidationError(f"declared (d, n) = ({d}, {n}) but components give ({F.d}, {F.n})")
        return F


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul(p: Sequence[GaussianRational], q: Sequence[GaussianRational]) -> list[GaussianRational]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _rem(p: list[GaussianRational], q: list[GaussianRational]) -> list[GaussianRational]:
    """Remainder of p modulo a monic q (both dense, low to high)."""
    p = list(p)
    dq = len(q) - 1
    while len(p) - 1 >= dq and p:
        lead = p[-1]
        shift = len(p) - 1 - dq
        if lead != 0:
            for i in range(dq + 1):
                p[shift + i] = p[shift + i] - lead * q[i]
        p.pop()
        _trim(p)
    return p


def multiset_to_poly(x: RootMultiset) -> MonicPolynomial:
    """Expand ``prod (z - x_k)^{n_k}``."""
    dense = [ONE]
    for point, mult in x.entries:
        for _ in range(mult):
            dense = _mul(dense, [-point, ONE])
    return MonicPolynomial.from_dense(dense)


def poly_gcd(fs: Iterable[MonicPolynomial]) -> MonicPolynomial:
    """Monic gcd by the Euclidean algorithm, normalizing to monic at every step."""
    fs = list(fs)
    if not fs:
        raise ValueError("poly_gcd needs at least one polynomial")
    g = fs[0].dense()
    for f in fs[1:]:
        a, b = f.dense(), g
        while len(b) > 1:
            r = _rem(a, b)
            if not r:
                break
            a, b = b, MonicPolynomial.from_dense(r).dense()
        g = b
        if len(g) == 1:
            break
    return MonicPolynomial.from_dense(g)


def _check_arity(F: MapTuple, I: SubsetCollection) -> None:
    if F.n != I.n:
        raise ValidationError(f"map tuple has {F.n} components but I lives on [{I.n}]")


def in_E(F: MapTuple, I: SubsetCollection) -> bool:
    """No point is a common root of all components indexed by any member of I."""
    if F.form != "roots":
        raise ValidationError("in_E needs a root-form tuple")
    _check_arity(F, I)
    supports = [c.support for c in F.components]
    for sigma in I.members:
        common = supports[sigma[0]]
        for j in sigma[1:]:
            common = common & supports[j]
            if not common:
                break
        if common:
            return False
    return True


def in_hol(F: MapTuple, I: SubsetCollection) -> bool:
    """Coefficient-form membership: the gcd along every member of I is constant."""
    _check_arity(F, I)
    polys = F.to_coeffs().components
    return all(poly_gcd(polys[j] for j in sigma).degree == 0 for sigma in I.members)


def discriminant_member(F: MapTuple, I: SubsetCollection) -> bool:
    return not in_hol(F, I)


def default_shift_points(n: int, d: int) -> list[GaussianRational]:
    """``x_{k;d} = (d + 1/2) + k i``: distinct, real part strictly between d and d+1."""
    return [GaussianRational(Fraction(2 * d + 1, 2), k) for k in range(n)]


def stabilize(
    F: MapTuple, shift_points: Sequence | None = None
) -> MapTuple:
    """Append the point ``x_{k;d}`` to component k, raising the degree by one.

    Every existing root must have real part < d; shift points must be
    pairwise distinct with real part strictly inside (d, d+1).
    """
    if F.form != "roots":
        raise ValidationError("stabilize needs a root-form tuple")
    d = F.d
    for k, comp in enumerate(F.components):
        for p, _ in comp.entries:
            if p.re >= d:
                raise ValidationError(
                    f"component {k} has root {p} with real part >= d = {d}"
                )
    if shift_points is None:
        pts = default_shift_points(F.n, d)
    else:
        pts = [gr(x) for x in shift_points]
        if len(pts) != F.n:
            raise ValidationError(f"need {F.n} shift points, got {len(pts)}")
        if len(set(pts)) != len(pts):
            raise ValidationError("shift points must be pairwise distinct")
        for x in pts:
            if not d < x.re < d + 1:
                raise ValidationError(f"shift point {x} must have real part in ({d}, {d + 1})")
    return MapTuple(tuple(c.add_point(x) for c, x in zip(F.components, pts)))


def interpolation_rank(points: Sequence, d: int) -> int:
    """Rank of the k x d matrix with rows ``(1, x_j, ..., x_j^{d-1})``."""
    pts = [gr(p) for p in points]
    if not pts:
        raise ValidationError("need at least one point")
    if d < 1:
        raise ValidationError("degree must be >= 1")
    if len(set(pts)) != len(pts):
        raise ValidationError("interpolation points must be distinct")
    rows = [[x ** e for e in range(d)] for x in pts]
    return rank(rows)
