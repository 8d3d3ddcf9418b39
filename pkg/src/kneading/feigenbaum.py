"""Exact arithmetic of the period-doubling tau hierarchy.

Everything here is integer/rational; no floating point enters this
module.  tau_j is the encoded value of the j-th cascade kneading
sequence; tau_infinity is its limit at the accumulation point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kneading.encoding import xi, tau_of_periodic
from kneading.symbolic import (
    THUE_MORSE_RULE,
    FixedPointStream,
    FunctionStream,
    PeriodicStream,
    SubstitutionRule,
    SymbolStream,
    complement,
    feigenbaum_limit,
    feigenbaum_stream,
)

# Pair coding of digit streams: two digits at a time, a=00 b=01 c=10 d=11.
PAIR_RULE = SubstitutionRule({"a": "ac", "b": "ad", "c": "da", "d": "db"})
PAIR_TO_DIGITS = {"a": "00", "b": "01", "c": "10", "d": "11"}


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass(frozen=True)
class DyadicEnclosure:
    """Interval [lo, hi] with dyadic endpoints and certified width."""

    lo: Fraction
    hi: Fraction
    bits: int

    def __post_init__(self):
        if not (_is_power_of_two(self.lo.denominator)
                and _is_power_of_two(self.hi.denominator)):
            raise ValueError("endpoints must be dyadic rationals")
        if not self.lo <= self.hi:
            raise ValueError("empty enclosure")
        if self.hi - self.lo > Fraction(1, 2 ** self.bits):
            raise ValueError("enclosure wider than advertised")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersect(self, other: "DyadicEnclosure") -> "DyadicEnclosure":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint enclosures")
        return DyadicEnclosure(lo, hi, max(self.bits, other.bits))

    def to_json(self) -> dict:
        return {
            "lo": f"{self.lo.numerator}/2^{self.lo.denominator.bit_length() - 1}",
            "hi": f"{self.hi.numerator}/2^{self.hi.denominator.bit_length() - 1}",
            "bits": self.bits,
        }


@dataclass(frozen=True)
class TauLevel:
    """Level j of the tau hierarchy: exact value p/q and its digit period."""

    j: int
    p: int
    q: int
    period_digits: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def to_json(self) -> dict:
        return {"j": self.j, "p": self.p, "q": self.q, "digits": self.period_digits}


_TAU_METHODS = ("digit-rule", "pair-substitution", "pq-recursion", "closed-form")


def _digits_from_value(p: int, q: int, n: int) -> str:
    """Digit period of length n for p/q, where q divides 2^n - 1."""
    full = 2 ** n - 1
    if full % q:
        raise ValueError(f"{q} does not divide 2^{n}-1")
    return format(p * (full // q), f"0{n}b")


def _level_from_word(j: int, word: str) -> TauLevel:
    v = Fraction(int(word, 2), 2 ** len(word) - 1)
    return TauLevel(j, v.numerator, v.denominator, word)


def tau_level(j: int, method: str = "digit-rule") -> TauLevel:
    """tau_j by any of four equivalent constructions.

    digit-rule: rewrite the digit period w -> w' of doubled length.
    pair-substitution: expand the pair coding under PAIR_RULE.
    pq-recursion: p' = 2 + p(q-2), q' = 2 + q(q-2) from (2, 3).
    closed-form: q = 2^(2^(j-1)) + 1 and a product formula for p.
    """
    if j < 1:
        raise ValueError("level must be >= 1")
    if method not in _TAU_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "digit-rule":
        w = "10"
        for _ in range(j - 1):
            w = w[:-1] + complement(w[-1]) + complement(w[:-1]) + w[-1]
        return _level_from_word(j, w)
    if method == "pair-substitution":
        w = "c"
        for _ in range(j - 1):
            w = PAIR_RULE.apply(w)
        return _level_from_word(j, "".join(PAIR_TO_DIGITS[c] for c in w))
    if method == "pq-recursion":
        p, q = 2, 3
        for _ in range(j - 1):
            p, q = 2 + p * (q - 2), 2 + q * (q - 2)
        return TauLevel(j, p, q, _digits_from_value(p, q, 2 ** j))
    # closed-form
    q = 2 ** (2 ** (j - 1)) + 1
    prod = 1
    for k in range(j - 1):
        prod *= 2 ** (2 ** k) - 1
    p = q - prod
    return TauLevel(j, p, q, _digits_from_value(p, q, 2 ** j))


def tau_difference(j: int) -> Fraction:
    """Exact gap tau_{j+1} - tau_j, cross-checked against the closed form
    2 (1 - tau_j) / (2^(2^j) + 1)."""
    a = tau_level(j, "closed-form").value
    b = tau_level(j + 1, "closed-form").value
    gap = b - a
    if gap != 2 * (1 - a) / (2 ** (2 ** j) + 1):
        raise ArithmeticError(f"gap formula mismatch at level {j}")
    return gap


def tau_infinity_digit(k: int) -> int:
    """k-th digit of tau_infinity: write k = p 2^l with p odd; the digit
    is the bit-sum parity of p."""
    if k < 1:
        raise IndexError("digit indices are 1-based")
    p = k >> ((k & -k).bit_length() - 1)
    return p.bit_count() % 2


def tau_infinity_digits() -> SymbolStream:
    """The digit stream of tau_infinity (random access, memoized)."""
    return FunctionStream(tau_infinity_digit)


def tau_infinity_enclosure(bits: int, method: str = "digit-sum") -> DyadicEnclosure:
    """Two-sided dyadic enclosure of tau_infinity of width <= 2^-bits.

    digit-sum: partial sum of the digits, plus a one-ulp tail.
    product-formula: partial product of 1 - 1/2 prod (1 - 2^-2^k), with a
    rigorous bound on the discarded factors.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    if method == "digit-sum":
        n = bits
        lo = Fraction(int("".join(
            str(tau_infinity_digit(k)) for k in range(1, n + 1)), 2), 2 ** n)
        return DyadicEnclosure(lo, lo + Fraction(1, 2 ** n), bits)
    if method == "product-formula":
        # Partial product P_K over k <= K; the tail factor lies in
        # [1 - 2^(1 - 2^(K+1)), 1], so the value 1 - P/2 lies in
        # [1 - P_K/2, 1 - P_K/2 + P_K 2^-2^(K+1)].
        K = 0
        while 2 ** (K + 1) < bits + 1:
            K += 1
        prod = Fraction(1)
        for k in range(K + 1):
            prod *= 1 - Fraction(1, 2 ** (2 ** k))
        lo = 1 - prod / 2
        hi = lo + prod * Fraction(1, 2 ** (2 ** (K + 1)))
        return DyadicEnclosure(lo, hi, bits)
    raise ValueError(f"unknown method {method!r}")


def renormalize_tau(t: SymbolStream) -> SymbolStream:
    """Digit renormalization: keep every second digit (t_2 t_4 t_6 ...)."""
    if isinstance(t, PeriodicStream):
        m = len(t.preperiod)
        n = len(t.period)
        pre_len = (m + 1) // 2
        per_len = n if n % 2 else n // 2
        raw = t.prefix(2 * (pre_len + per_len))[1::2]
        return PeriodicStream(raw[:pre_len], raw[pre_len:pre_len + per_len])
    return _EvenKeepStream(t)


class _EvenKeepStream(SymbolStream):
    def __init__(self, base: SymbolStream):
        self.base = base

    def at(self, k: int) -> int:
        self._check_index(k)
        return self.base.at(2 * k)

    def prefix(self, n: int) -> str:
        return self.base.prefix(2 * n)[1::2]


def thue_morse_check(n: int) -> bool:
    """Prepending 0 to the cascade limit and encoding it digit-wise gives
    the fixed point of 0 -> 01, 1 -> 10; verify the first n symbols."""
    u = feigenbaum_limit().prefix(max(n - 1, 0))
    padded = "0" + u
    parity = 0
    digits = []
    for c in padded:
        parity ^= int(c)
        digits.append("01"[parity])
    tm = FixedPointStream(THUE_MORSE_RULE, "0").prefix(n)
    return "".join(digits[:n]) == tm


def tau_from_kneading(j: int) -> Fraction:
    """tau_j obtained independently from the kneading word via xi."""
    return tau_of_periodic(xi(feigenbaum_stream(j)))
