"""Stability dimensions and the spectral-sequence band scan.

The closed forms live next to a brute-force bookkeeping engine. The engine
knows only which E^1 cells vanish and which are matched by the
stabilization map. It marks every cell that a differential can connect
to an unmatched cell and reads the stability range off the lowest
contaminated total degree ``s - k``.

Grid conventions: ``k`` is the filtration index and ``s`` the second
index. The differential ``d^t`` runs from ``(k, s)`` to ``(k+t, s+t-1)``,
so a cell's total degree ``s - k`` drops by one along it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .arrangements import SubsetCollection, ValidationError, r_min as _r_min

__all__ = [
    "StabilityParams",
    "SpectralGrid",
    "BandScanResult",
    "WindowError",
    "D",
    "Dstar",
    "bundle_rank",
    "config_dim",
    "top_stratum_dim",
    "vanishing_threshold",
    "a_t",
    "a_t_closed_form",
    "a_t_sets",
    "band_scan",
    "band_scan_report",
    "connectivity",
]

ZERO, KNOWN, UNKNOWN = "zero", "known", "unknown"


class WindowError(RuntimeError):
    """The scan answer changed when the grid window was enlarged."""


@dataclass(frozen=True)
class StabilityParams:
    n: int
    r_min: int
    d: int

    def __post_init__(self):
        if not 2 <= self.r_min <= self.n:
            raise ValidationError(f"need 2 <= r_min <= n, got r_min={self.r_min}, n={self.n}")
        if self.d < 1:
            raise ValidationError(f"degree must be >= 1, got {self.d}")


def D(p: StabilityParams) -> int:
    """Homotopy stability dimension ``(2 r_min - 3) d - 2``."""
    return (2 * p.r_min - 3) * p.d - 2


def Dstar(d: int, n: int) -> int:
    """Stability dimension ``(2n - 3)(d + 1) - 1`` for projective targets."""
    if n < 2:
        raise ValidationError("n must be >= 2")
    return (2 * n - 3) * (d + 1) - 1


def bundle_rank(n: int, d: int, k: int) -> int:
    """Rank ``2n(d-k) + k - 1`` of the affine bundle over the k-th configuration stratum."""
    if not 1 <= k <= d:
        raise ValidationError(f"need 1 <= k <= d, got k={k}, d={d}")
    return 2 * n * (d - k) + k - 1


def config_dim(n: int, r_min: int, k: int) -> int:
    """Real dimension ``2(1 + n - r_min) k`` of k labelled points in C x L(I)."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    return 2 * (1 + n - r_min) * k


def top_stratum_dim(n: int, r_min: int, d: int) -> int:
    if d < 1:
        raise ValidationError("d must be >= 1")
    return 2 * n * d + 3 * d - 2 * r_min * d


def vanishing_threshold(n: int, r_min: int, d: int) -> int:
    """Largest s for which the truncation column ``k = d+1`` is forced to vanish."""
    return (2 * r_min - 2) * d - 1


def a_t_sets(r_min: int, d: int, t: int, k_floor: int | None = 1) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """Yield ``(k_1, (l_1..l_t), s_min)`` for every admissible step sequence.

    The step lengths are strictly increasing positive integers summing to
    ``d + 1 - k_1``. ``s_min`` is the least ``s_1`` with
    ``s_1 + sum(l_j - 1) >= (2 r_min - 2) d``. ``k_floor`` bounds ``k_1``
    from below; with None the set is infinite and is cut off at a finite
    step sum, which cannot affect the minimum of ``s - k``.
    """
    target = (2 * r_min - 2) * d
    max_sum = d + 1 - k_floor if k_floor is not None else (t + 1) * (d + 1) + t * t
    for steps in _increasing_sequences(t, max_sum):
        k1 = d + 1 - sum(steps)
        yield k1, steps, target - sum(l - 1 for l in steps)


def _increasing_sequences(t: int, max_sum: int, start: int = 1) -> Iterator[tuple[int, ...]]:
    if t == 0:
        yield ()
        return
    # smallest possible tail after choosing l: l + (l+1) + ... (t terms)
    l = start
    while l * t + t * (t - 1) // 2 <= max_sum:
        for rest in _increasing_sequences(t - 1, max_sum - l, l + 1):
            yield (l, *rest)
        l += 1


def a_t(r_min: int, d: int, t: int, k_floor: int | None = 1, s_window: int | None = None) -> int | None:
    """Brute-force ``min {s - k : (k, s) in A_t}``; None when A_t is empty.

    Every ``s`` in the search window is tested against the defining
    inequality, so the answer does not lean on the closed form. With a
    column floor the window is ``[0, s_window]``; without one ``s`` may
    also go negative.
    """
    target = (2 * r_min - 2) * d
    if s_window is None:
        s_window = target + (t + 1) * (d + 1) + t * t + 2
    s_lo = 0 if k_floor is not None else -s_window
    best = None
    for k1, steps, _ in a_t_sets(r_min, d, t, k_floor):
        shift = sum(l - 1 for l in steps)
        for s1 in range(s_lo, s_window + 1):
            if s1 + shift >= target:
                if best is None or s1 - k1 < best:
                    best = s1 - k1
                break
    return best


def a_t_closed_form(r_min: int, d: int, t: int) -> int:
    return (2 * r_min - 2) * d - (d + 1) + t


def connectivity(I: SubsetCollection) -> int:
    """Connectivity ``2(r_min - 2)`` of the double loop space of X_I."""
    if not I.strict:
        raise ValidationError("connectivity is stated for strict collections")
    return 2 * (_r_min(I) - 2)


@dataclass
class SpectralGrid:
    """Cells ``(k, s)`` with ``k_lo <= k <= k_hi`` and ``0 <= s <= s_hi``.

    Each column is held as two bitmasks over ``s``, one for zero cells and
    one for unknown cells; the rest are known. Anything outside the window
    is zero.
    """

    k_lo: int
    k_hi: int
    s_hi: int
    zero: dict[int, int] = field(default_factory=dict)
    unknown: dict[int, int] = field(default_factory=dict)

    @property
    def full(self) -> int:
        return (1 << (self.s_hi + 1)) - 1

    def columns(self) -> range:
        return range(self.k_lo, self.k_hi + 1)

    def state(self, k: int, s: int) -> str:
        if not (self.k_lo <= k <= self.k_hi and 0 <= s <= self.s_hi):
            return ZERO
        bit = 1 << s
        if self.unknown.get(k, 0) & bit:
            return UNKNOWN
        if self.zero.get(k, 0) & bit:
            return ZERO
        return KNOWN

    def propagate(self) -> None:
        """Mark every non-zero cell whose image under some d^t is unknown.

        Targets sit in higher columns, so one sweep from the right settles
        the fixed point.
        """
        full = self.full
        for k in range(self.k_hi, self.k_lo - 1, -1):
            live = full & ~self.zero.get(k, 0)
            acc = self.unknown.get(k, 0)
            for t in range(1, self.k_hi - k + 1):
                # cell (k, s) hits (k+t, s+t-1)
                acc |= self.unknown.get(k + t, 0) >> (t - 1)
            self.unknown[k] = acc & live

    def min_unknown(self, k_min: int | None = None, k_max: int | None = None) -> int | None:
        best = None
        for k in self.columns():
            if (k_min is not None and k < k_min) or (k_max is not None and k > k_max):
                continue
            col = self.unknown.get(k, 0)
            if col:
                low = (col & -col).bit_length() - 1
                if best is None or low - k < best:
                    best = low - k
        return best

    def cells(self) -> list[dict]:
        return [
            {"k": k, "s": s, "state": self.state(k, s)}
            for k in self.columns()
            for s in range(self.s_hi + 1)
        ]


@dataclass(frozen=True)
class BandScanResult:
    mode: str
    answer: int
    closed_form: int
    min_contaminated_s_minus_k: int
    min_propagated_s_minus_k: int | None
    unclamped_answer: int
    window: tuple[int, int, int]
    grid: SpectralGrid = field(compare=False, repr=False)

    @property
    def agree(self) -> bool:
        return self.answer == self.closed_form

    def to_json(self, include_cells: bool = True) -> dict:
        doc = {
            "mode": self.mode,
            "answer": self.answer,
            "min_contaminated_s_minus_k": self.min_contaminated_s_minus_k,
            "min_propagated_s_minus_k": self.min_propagated_s_minus_k,
            "unclamped_answer": self.unclamped_answer,
            "closed_form": self.closed_form,
            "agree": self.agree,
            "window": {"k_lo": self.window[0], "k_hi": self.window[1], "s_hi": self.window[2]},
        }
        if include_cells:
            doc["cells"] = self.grid.cells()
        return doc


def _default_window(p: StabilityParams, mode: str) -> tuple[int, int, int]:
    return (-5, p.d + 3, 6 * p.n * (p.d + 1))


def _build_grid(p: StabilityParams, mode: str, seed: str, window, clamp: bool) -> SpectralGrid:
    k_lo, k_hi, s_hi = window
    g = SpectralGrid(k_lo, k_hi, s_hi)
    full = g.full
    d = p.d
    for k in g.columns():
        if k < 0:
            # negative filtration vanishes; the unclamped variant lets contamination through
            g.zero[k] = full if clamp else 0
        elif k == 0:
            g.zero[k] = full & ~1
        elif k <= d:
            g.zero[k] = 0
        elif k == d + 1:
            if mode == "general":
                if seed == "threshold":
                    start = vanishing_threshold(p.n, p.r_min, d) + 1
                elif seed == "sharp":
                    start = (2 * p.r_min - 2) * (d + 1)
                else:
                    raise ValidationError(f"unknown seed {seed!r}")
            else:
                # page d vanishes past column d; page d+1 is nonzero only below the
                # configuration-space dimension bound 2nk - s <= 2k
                start = 2 * p.n * k - config_dim(p.n, p.n, k)
            start = max(start, 0)
            unmatched = (full >> start) << start if start <= s_hi else 0
            g.zero[k] = full & ~unmatched
            g.unknown[k] = unmatched
        else:
            g.zero[k] = full
    return g


def _scan_once(p: StabilityParams, mode: str, seed: str, window) -> tuple[SpectralGrid, int, int | None, int]:
    d = p.d
    g = _build_grid(p, mode, seed, window, clamp=True)
    g.propagate()
    lowest = g.min_unknown(0, d + 1)
    if lowest is None:
        raise WindowError(f"window {window} holds no unmatched cell; enlarge s_hi")
    propagated = g.min_unknown(0, d)
    loose = _build_grid(p, mode, seed, window, clamp=False)
    loose.propagate()
    loose_low = loose.min_unknown()
    return g, lowest, propagated, loose_low


def band_scan_report(
    p: StabilityParams,
    mode: str = "general",
    window: tuple[int, int, int] | None = None,
    seed: str = "threshold",
) -> BandScanResult:
    """Run the scan, certify it against a doubled window, and return the full record.

    The stability range ends one below the lowest contaminated total
    degree: every cell with ``s - k`` at most the answer has matched
    E^infinity terms on both pages.
    """
    if mode not in ("general", "projective"):
        raise ValidationError(f"unknown mode {mode!r}")
    if mode == "projective" and p.r_min != p.n:
        raise ValidationError("projective mode needs r_min == n")
    if window is None:
        window = _default_window(p, mode)
    k_lo, k_hi, s_hi = window
    if k_lo > 0 or k_hi < p.d + 1 or s_hi < 0:
        raise ValidationError(f"window {window} must cover columns 0..d+1")
    g, lowest, propagated, loose = _scan_once(p, mode, seed, window)
    span = k_hi - k_lo
    bigger = (k_lo - span, k_hi + span, 2 * s_hi + 1)
    _, lowest2, propagated2, loose2 = _scan_once(p, mode, seed, bigger)
    if (lowest, propagated, loose) != (lowest2, propagated2, loose2):
        raise WindowError(
            f"scan depends on the window: {window} gives {lowest}, {bigger} gives {lowest2}"
        )
    closed = D(p) if mode == "general" else Dstar(p.d, p.n)
    return BandScanResult(
        mode=mode,
        answer=lowest - 1,
        closed_form=closed,
        min_contaminated_s_minus_k=lowest,
        min_propagated_s_minus_k=propagated,
        unclamped_answer=(loose if loose is not None else lowest) - 1,
        window=tuple(window),
        grid=g,
    )


def band_scan(p: StabilityParams, mode: str = "general", **kwargs) -> int:
    return band_scan_report(p, mode, **kwargs).answer
