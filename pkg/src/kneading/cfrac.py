"""Exact continued fractions: canonical expansions, certified prefixes, convergents."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .feigenbaum import tau_level

__all__ = [
    "ContinuedFraction",
    "ContinuationReport",
    "Convergent",
    "cf_continuation_check",
    "cf_of_enclosure",
    "cf_of_rational",
    "cf_table",
    "convergents",
]


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical expansion [a1, a2, ..., an] of a rational in (0, 1]."""

    quotients: tuple

    def __post_init__(self):
        q = tuple(int(a) for a in self.quotients)
        object.__setattr__(self, "quotients", q)
        if not q:
            raise ValueError("empty expansion")
        if any(a < 1 for a in q):
            raise ValueError("quotients must be positive")
        # canonical form rewrites [..., a, 1] as [..., a + 1]; a trailing 1
        # survives only in the single-quotient expansion of 1 itself
        if len(q) >= 2 and q[-1] < 2:
            raise ValueError("canonical expansion cannot end in 1")

    def value(self) -> Fraction:
        v = Fraction(0)
        for a in reversed(self.quotients):
            v = 1 / (a + v)
        return v

    def __len__(self):
        return len(self.quotients)


@dataclass(frozen=True)
class Convergent:
    """Truncation r/s of an expansion after `index` quotients."""

    r: int
    s: int
    index: int

    def value(self) -> Fraction:
        return Fraction(self.r, self.s)


@dataclass(frozen=True)
class ContinuationReport:
    """How the expansion at level j + 1 extends the expansion at level j."""

    j: int
    n_j: int
    expected: str
    observed: str
    matches: bool


def cf_of_rational(x) -> ContinuedFraction:
    """Canonical continued fraction of a rational x with 0 < x <= 1.

    The quotients are the Euclidean quotients of (denominator, numerator).
    Greedy floor division cannot emit a trailing 1 (remainders strictly
    decrease), so the output is canonical by construction; x = 1 gives the
    lone exception [1].
    """
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"need 0 < x <= 1, got {x}")
    a, b = x.denominator, x.numerator
    out = []
    while b:
        q, r = divmod(a, b)
        out.append(q)
        a, b = b, r
    return ContinuedFraction(tuple(out))


def cf_of_enclosure(enclosure) -> list:
    """Quotients provably shared by every point of an interval in [0, 1].

    Accepts a DyadicEnclosure or any (lo, hi) pair of rationals.  A quotient
    is emitted only when the floors of the reciprocals agree at both
    endpoints, so boundary coincidences are never overclaimed; the result
    may be empty.  A degenerate interval falls back to the full expansion.
    """
    lo, hi = getattr(enclosure, "lo", None), getattr(enclosure, "hi", None)
    if lo is None:
        lo, hi = enclosure
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo <= hi <= 1:
        raise ValueError(f"need 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
    if lo == hi:
        return [] if lo == 0 else list(cf_of_rational(lo).quotients)
    out = []
    while lo > 0:
        a = hi.denominator // hi.numerator
        if a != lo.denominator // lo.numerator:
            break
        out.append(a)
        # taking reciprocals flips the interval: 1/hi - a is the new lower end
        lo, hi = 1 / hi - a, 1 / lo - a
        if lo == 0:
            # the upper endpoint terminated exactly here; interior points
            # continue with arbitrarily large next quotients
            break
    return out


def convergents(cf: ContinuedFraction) -> list:
    """Convergents r_n/s_n of an expansion by the three-term recurrence."""
    r_prev, r_cur = 1, 0
    s_prev, s_cur = 0, 1
    out = []
    for i, a in enumerate(cf.quotients, start=1):
        r_prev, r_cur = r_cur, a * r_cur + r_prev
        s_prev, s_cur = s_cur, a * s_cur + s_prev
        out.append(Convergent(r_cur, s_cur, i))
    return out


def cf_table(jmax: int) -> list:
    """Rows (j, quotients, n_j) for the period-doubling parameters tau_j.

    Capped at j = 12: the denominator of tau_12 already has 617 digits and
    the quotient counts grow steeply past that.
    """
    if not 1 <= jmax <= 12:
        raise ValueError("jmax must be in 1..12")
    rows = []
    for j in range(1, jmax + 1):
        q = list(cf_of_rational(tau_level(j).value).quotients)
        rows.append((j, q, len(q)))
    return rows


def cf_continuation_check(j: int) -> ContinuationReport:
    """Classify how the level j + 1 expansion continues the level j one.

    Observed rule: for even n_j the next level keeps all n_j quotients
    verbatim before appending new ones; for odd n_j the last quotient drops
    by one first.  j = 1 breaks the rule (a_2 jumps 2 -> 4) and is reported
    as an exception.
    """
    if not 1 <= j <= 11:
        raise ValueError("j must be in 1..11")
    cur = cf_of_rational(tau_level(j).value).quotients
    nxt = cf_of_rational(tau_level(j + 1).value).quotients
    n = len(cur)
    head = nxt[:n]
    if head == cur:
        observed = "verbatim"
    elif head[:-1] == cur[:-1] and head[-1] == cur[-1] - 1:
        observed = "decrement"
    else:
        observed = "exception"
    expected = "decrement" if n % 2 else "verbatim"
    return ContinuationReport(j, n, expected, observed, observed == expected)
