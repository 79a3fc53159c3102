"""Exact scalars and row reduction.

``GaussianRational`` is an element of Q(i) with ``Fraction`` parts. The
elimination routines below work for any field type supporting ``+ - * /``
and comparison with zero, so they serve both ``Fraction`` and
``GaussianRational`` matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["GaussianRational", "gr", "row_reduce", "rank", "solve"]

_RAT = r"[+-]?\d+(?:/\d+)?"
_FULL = re.compile(rf"^\s*({_RAT})\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*i\s*$")
_IMAG = re.compile(rf"^\s*({_RAT})\s*\*\s*i\s*$")
_REAL = re.compile(rf"^\s*({_RAT})\s*$")


@dataclass(frozen=True, order=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return cls.parse(x)
        return cls(Fraction(x))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Read ``"p/q+r/s*i"``; the bare forms ``"p/q"`` and ``"r/s*i"`` also parse."""
        m = _FULL.match(text)
        if m:
            im = Fraction(m.group(3))
            return cls(Fraction(m.group(1)), -im if m.group(2) == "-" else im)
        m = _IMAG.match(text)
        if m:
            return cls(Fraction(0), Fraction(m.group(1)))
        m = _REAL.match(text)
        if m:
            return cls(Fraction(m.group(1)), Fraction(0))
        raise ValueError(f"cannot parse Gaussian rational {text!r}")

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = GaussianRational(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


def _coerce(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    return None


def gr(x) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions, complex or strings."""
    return GaussianRational.coerce(x)


def row_reduce(rows: Sequence[Sequence], augmented: int = 0):
    """Reduced row echelon form over an exact field.

    Returns ``(matrix, pivot_columns)``. The last ``augmented`` columns are
    carried along but never chosen as pivots.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0]) - augmented
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence):
    """Solve ``a x = b`` exactly. Returns a solution list or None if inconsistent.

    Free variables (if any) are set to zero.
    """
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = row_reduce(aug, augmented=1)
    for row in red[len(pivots):]:
        if row[-1] != 0:
            return None
    x = [0] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][-1]
    return x
