"""Floating-point unimodal families: itineraries, renormalization, validation.

Floats live only in this module; every symbol carries a reliability flag
marking orbit points that came within eta of the critical point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

_BOUNDARY_TOL = 1e-12


class OrbitEscapeError(RuntimeError):
    """The orbit left [0, 1]; the parameter is outside the family's range."""


class NotRenormalizableError(RuntimeError):
    """The map has no admissible (a, b) geometry for renormalization."""


@dataclass(frozen=True)
class UnimodalMap:
    family: str
    parameter: float
    fn: Callable[[float], float]
    c0: float
    eta: float = 1e-9

    def __post_init__(self):
        if not 0 < self.c0 < 1:
            raise ValueError("critical point must lie in (0, 1)")
        if self.eta <= 0:
            raise ValueError("reliability band must be positive")
        for e in (0.0, 1.0):
            if abs(self.fn(e)) > 1e-9:
                raise ValueError("endpoints must map to 0")


def logistic_map(r: float, eta: float = 1e-9) -> UnimodalMap:
    if r <= 0:
        raise ValueError("parameter must be positive")
    return UnimodalMap("logistic", r, lambda x: r * x * (1.0 - x), 0.5, eta)


def tent_map(slope: float = 2.0, eta: float = 1e-9) -> UnimodalMap:
    if slope <= 0:
        raise ValueError("slope must be positive")
    return UnimodalMap(
        "tent", slope,
        lambda x: slope * x if x < 0.5 else slope * (1.0 - x),
        0.5, eta,
    )


def skew_tent_map(c0: float, eta: float = 1e-9) -> UnimodalMap:
    """Full-height piecewise-linear map with its peak at c0."""
    if not 0 < c0 < 1:
        raise ValueError("peak must lie in (0, 1)")
    return UnimodalMap(
        "custom-piecewise-linear", c0,
        lambda x: x / c0 if x < c0 else (1.0 - x) / (1.0 - c0),
        c0, eta,
    )


def itinerary(m: UnimodalMap, x: float, n: int) -> tuple[str, tuple[bool, ...]]:
    """n symbols of the orbit of x; 1 when the point is >= c0.

    A symbol is flagged unreliable when the orbit point sits within eta
    of the critical point, where float error can flip it.
    """
    if n < 1:
        raise ValueError("need at least one symbol")
    if not -_BOUNDARY_TOL <= x <= 1 + _BOUNDARY_TOL:
        raise ValueError("starting point outside [0, 1]")
    u = min(max(x, 0.0), 1.0)
    symbols = []
    flags = []
    for i in range(n):
        symbols.append("1" if u >= m.c0 else "0")
        flags.append(abs(u - m.c0) >= m.eta)
        u = m.fn(u)
        if not -_BOUNDARY_TOL <= u <= 1 + _BOUNDARY_TOL:
            raise OrbitEscapeError(f"orbit left [0, 1] at step {i + 1}: {u!r}")
        u = min(max(u, 0.0), 1.0)
    return "".join(symbols), tuple(flags)


def kneading(m: UnimodalMap, n: int) -> tuple[str, tuple[bool, ...]]:
    """Itinerary of the critical value f(c0)."""
    c1 = m.fn(m.c0)
    if not -_BOUNDARY_TOL <= c1 <= 1 + _BOUNDARY_TOL:
        raise OrbitEscapeError(f"critical value outside [0, 1]: {c1!r}")
    return itinerary(m, c1, n)


def renormalize_word(word: str, flags=None):
    """Inverse of the duplicate-flip substitution on a kneading word.

    The rescaling that conjugates f^2 back to a unimodal map reverses
    orientation, so the renormalized symbols are the complemented
    even-position symbols; odd positions carry no information.
    """
    n = len(word) // 2
    out = "".join("1" if word[2 * i + 1] == "0" else "0" for i in range(n))
    if flags is None:
        return out
    return out, tuple(flags[2 * i + 1] for i in range(n))


def _bisect(g: Callable[[float], float], lo: float, hi: float,
            tol: float = 0.0, iters: int = 200) -> float:
    glo = g(lo)
    ghi = g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if (glo > 0) == (ghi > 0):
        raise ValueError("no sign change on the bracket")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi or hi - lo <= tol:
            break
        gm = g(mid)
        if gm == 0:
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def renormalize_map(m: UnimodalMap) -> UnimodalMap:
    """Rescaled second iterate L o f^2 o L^-1 with L(x) = (x-b)/(a-b).

    b is the fixed point above c0, a its preimage below c0; the second
    image of the critical point must stay inside [a, b] or the second
    iterate is not unimodal on the rescaled interval.
    """
    fc = m.fn(m.c0)
    if fc <= m.c0:
        raise NotRenormalizableError("no fixed point above the critical point")
    b = _bisect(lambda x: m.fn(x) - x, m.c0, 1.0)
    a = _bisect(lambda x: m.fn(x) - b, 0.0, m.c0)
    if not 0 < a < m.c0 < b < 1:
        raise NotRenormalizableError("degenerate rescaling interval")
    if m.fn(fc) < a:
        raise NotRenormalizableError(
            "second image of the critical point leaves the core interval"
        )
    scale = a - b
    fn = m.fn

    def rf(y: float) -> float:
        u = b + y * scale
        return (fn(fn(u)) - b) / scale

    return UnimodalMap(
        f"R({m.family})", m.parameter, rf,
        (m.c0 - b) / scale, m.eta / abs(scale),
    )


def superstable_parameter(period: int, lo: float, hi: float,
                          tol: float = 1e-12) -> float:
    """Logistic parameter where the critical orbit returns in `period` steps.

    Bisection on the sign of f^period(c0) - c0, which is the kneading
    symbol that flips across the superstable parameter.
    """
    if period < 1:
        raise ValueError("period must be positive")

    def g(r: float) -> float:
        m = logistic_map(r)
        u = m.c0
        for _ in range(period):
            u = m.fn(u)
        return u - m.c0

    return _bisect(g, lo, hi, tol)


def band_merging_parameter(lo: float = 3.6, hi: float = 3.7,
                           tol: float = 1e-12) -> float:
    """Logistic parameter where the third critical image hits the fixed point."""

    def g(r: float) -> float:
        m = logistic_map(r)
        u = m.c0
        for _ in range(3):
            u = m.fn(u)
        return u - (1.0 - 1.0 / r)

    return _bisect(g, lo, hi, tol)


def _digit_word(word: str) -> str:
    out = []
    p = 0
    for ch in word:
        p ^= int(ch)
        out.append("01"[p])
    return "".join(out)


@dataclass(frozen=True)
class Lemma1Report:
    pairs_tested: int
    pairs_decided: int
    pairs_excluded: int
    violations: int


def lemma1_validate(m: UnimodalMap, pairs: int, n: int, seed: int = 0) -> Lemma1Report:
    """Sampled check that digit-stream order never contradicts point order.

    Pairs whose digit words agree to length n, or whose symbols are
    unreliable anywhere up to the first discrepancy, are excluded.
    """
    rng = random.Random(seed)
    tested = decided = excluded = violations = 0
    while tested < pairs:
        x, y = rng.random(), rng.random()
        if x == y:
            continue
        if x > y:
            x, y = y, x
        tested += 1
        wx, fx = itinerary(m, x, n)
        wy, fy = itinerary(m, y, n)
        tx, ty = _digit_word(wx), _digit_word(wy)
        d = next((i for i in range(n) if tx[i] != ty[i]), None)
        if d is None or not (all(fx[: d + 1]) and all(fy[: d + 1])):
            excluded += 1
            continue
        decided += 1
        if tx[d] > ty[d]:
            violations += 1
    return Lemma1Report(tested, decided, excluded, violations)


@dataclass(frozen=True)
class ScanRow:
    r: float
    tau: float | None
    reliable_prefix: int


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    decreases: int


def monotonicity_scan(r_grid, n: int) -> ScanReport:
    """Truncated tau along a logistic parameter grid; decreases are counted,
    not asserted away (plateaux and short reliable prefixes are expected)."""
    grid = list(r_grid)
    if not grid or min(grid) < 2.9 or max(grid) > 4.0:
        raise ValueError("grid must stay within [2.9, 4.0]")
    rows = []
    for r in grid:
        word, flags = kneading(logistic_map(r), n)
        k = 0
        while k < n and flags[k]:
            k += 1
        if k == 0:
            rows.append(ScanRow(r, None, 0))
            continue
        digits = _digit_word(word[:k])
        tau = sum(int(c) / 2.0 ** (i + 1) for i, c in enumerate(digits))
        rows.append(ScanRow(r, tau, k))
    vals = [row.tau for row in rows if row.tau is not None]
    decreases = sum(1 for u, v in zip(vals, vals[1:]) if v < u)
    return ScanReport(tuple(rows), decreases)
