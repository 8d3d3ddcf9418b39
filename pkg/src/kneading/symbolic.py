"""Binary words, infinite symbol streams, substitutions, and the
period-doubling kneading hierarchy.

Finite words are plain '0'/'1' strings.  Infinite streams are exposed
through 1-based access: ``s.at(1)`` is the first symbol.
"""

from __future__ import annotations

import threading

_FLIP = str.maketrans("01", "10")


def check_word(bits: str) -> str:
    """Validate a finite binary word; returns it unchanged."""
    if not isinstance(bits, str) or set(bits) - {"0", "1"}:
        raise ValueError(f"not a binary word: {bits!r}")
    return bits


def complement(bits: str) -> str:
    return bits.translate(_FLIP)


def minimal_period(word: str) -> str:
    """Shortest word whose repetition equals ``word``."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


class SubstitutionRule:
    """Substitution on single-character symbols.

    Images must be nonempty words over the rule's own alphabet.
    """

    def __init__(self, images: dict[str, str]):
        self.images = dict(images)
        self.alphabet = frozenset(self.images)
        for a, w in self.images.items():
            if len(a) != 1:
                raise ValueError(f"symbols must be single characters: {a!r}")
            if not w or set(w) - self.alphabet:
                raise ValueError(f"bad image for {a!r}: {w!r}")

    def apply(self, word: str) -> str:
        return "".join(self.images[c] for c in word)

    def __eq__(self, other):
        return isinstance(other, SubstitutionRule) and self.images == other.images

    def __repr__(self):
        body = ", ".join(f"{a}->{w}" for a, w in sorted(self.images.items()))
        return f"SubstitutionRule({body})"


def substitute(rule: SubstitutionRule, word: str) -> str:
    """Apply ``rule`` once to every symbol of ``word``."""
    return rule.apply(word)


FEIGENBAUM_RULE = SubstitutionRule({"1": "10", "0": "11"})
THUE_MORSE_RULE = SubstitutionRule({"0": "01", "1": "10"})


class SymbolStream:
    """Infinite symbol sequence s_1 s_2 s_3 ... (1-based)."""

    def at(self, k: int) -> int:
        raise NotImplementedError

    def prefix(self, n: int) -> str:
        raise NotImplementedError

    def _check_index(self, k: int) -> None:
        if k < 1:
            raise IndexError(f"stream indices are 1-based, got {k}")


class PeriodicStream(SymbolStream):
    """Eventually periodic stream, stored in canonical form.

    Canonical means the period word is primitive (not a repetition of a
    shorter word) and the preperiod is as short as possible; equality of
    canonical forms is equality of streams.
    """

    def __init__(self, preperiod: str, period: str):
        check_word(preperiod)
        check_word(period)
        if not period:
            raise ValueError("period must be nonempty")
        period = minimal_period(period)
        # Absorb preperiod symbols that the period already produces.
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1] + period[:-1]
        self.preperiod = preperiod
        self.period = minimal_period(period)

    def at(self, k: int) -> int:
        self._check_index(k)
        m = len(self.preperiod)
        if k <= m:
            return int(self.preperiod[k - 1])
        return int(self.period[(k - m - 1) % len(self.period)])

    def prefix(self, n: int) -> str:
        m = len(self.preperiod)
        if n <= m:
            return self.preperiod[:n]
        reps = (n - m) // len(self.period) + 1
        return (self.preperiod + self.period * reps)[:n]

    def __eq__(self, other):
        return (
            isinstance(other, PeriodicStream)
            and self.preperiod == other.preperiod
            and self.period == other.period
        )

    def __hash__(self):
        return hash((self.preperiod, self.period))

    def __repr__(self):
        return f"PeriodicStream({self.preperiod!r}, {self.period!r})"


class _MemoizedStream(SymbolStream):
    """Stream that materializes prefixes on demand, growing geometrically."""

    _MIN_GROW = 64

    def __init__(self):
        self._lock = threading.Lock()
        self._buf = ""

    def _compute_prefix(self, n: int) -> str:
        raise NotImplementedError

    def prefix(self, n: int) -> str:
        if len(self._buf) < n:
            with self._lock:
                if len(self._buf) < n:
                    target = max(n, 2 * len(self._buf), self._MIN_GROW)
                    self._buf = self._compute_prefix(target)
        return self._buf[:n]

    def at(self, k: int) -> int:
        self._check_index(k)
        return int(self.prefix(k)[k - 1])


class FixedPointStream(_MemoizedStream):
    """Fixed point of a substitution, determined by its first letter.

    Requires the image of ``letter`` to start with ``letter`` and the
    iteration to grow, so the fixed point exists and is unique.
    """

    def __init__(self, rule: SubstitutionRule, letter: str):
        super().__init__()
        if letter not in rule.alphabet:
            raise ValueError(f"{letter!r} not in rule alphabet")
        if not rule.images[letter].startswith(letter):
            raise ValueError(f"image of {letter!r} must start with it")
        self.rule = rule
        self.letter = letter

    def _compute_prefix(self, n: int) -> str:
        w = self.letter
        while len(w) < n:
            grown = self.rule.apply(w)
            if len(grown) <= len(w):
                raise ValueError("substitution iteration does not grow")
            w = grown
        return w[:n]

    def __repr__(self):
        return f"FixedPointStream({self.rule!r}, {self.letter!r})"


class _ShiftedStream(SymbolStream):
    def __init__(self, base: SymbolStream, m: int):
        self.base = base
        self.m = m

    def at(self, k: int) -> int:
        self._check_index(k)
        return self.base.at(k + self.m)

    def prefix(self, n: int) -> str:
        return self.base.prefix(n + self.m)[self.m:]


class _EvenComplementStream(SymbolStream):
    """k-th symbol is the complement of the base stream's 2k-th symbol."""

    def __init__(self, base: SymbolStream):
        self.base = base

    def at(self, k: int) -> int:
        self._check_index(k)
        return 1 - self.base.at(2 * k)

    def prefix(self, n: int) -> str:
        return complement(self.base.prefix(2 * n)[1::2])


class FunctionStream(_MemoizedStream):
    """Stream defined by a 1-based symbol function."""

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def _compute_prefix(self, n: int) -> str:
        return "".join(str(self.fn(k)) for k in range(1, n + 1))


def shift(s: SymbolStream, m: int = 1) -> SymbolStream:
    """Drop the first ``m`` symbols."""
    if m < 0:
        raise ValueError("shift distance must be >= 0")
    if m == 0:
        return s
    if isinstance(s, PeriodicStream):
        pre, per = s.preperiod, s.period
        if m < len(pre):
            return PeriodicStream(pre[m:], per)
        r = (m - len(pre)) % len(per)
        return PeriodicStream("", per[r:] + per[:r])
    return _ShiftedStream(s, m)


def fixed_point_prefix(rule: SubstitutionRule, letter: str, n: int) -> str:
    """First ``n`` symbols of the substitution fixed point starting at ``letter``."""
    return FixedPointStream(rule, letter).prefix(n)


def renormalize_seq(s: SymbolStream) -> SymbolStream:
    """Sequence renormalization: k-th output symbol is the complemented
    2k-th input symbol."""
    if isinstance(s, PeriodicStream):
        m = len(s.preperiod)
        n = len(s.period)
        pre_len = (m + 1) // 2
        per_len = n if n % 2 else n // 2
        raw = s.prefix(2 * (pre_len + per_len))
        out = complement(raw[1::2])
        return PeriodicStream(out[:pre_len], out[pre_len:pre_len + per_len])
    return _EvenComplementStream(s)


_FEIGENBAUM_METHODS = ("duplicate-flip", "index-doubling", "substitution")


def feigenbaum_word(j: int, method: str = "duplicate-flip") -> str:
    """Period word of the j-th kneading sequence in the doubling cascade.

    Level 1 is "1"; level j has length 2^(j-1) and an odd number of 1s.
    The three constructions are equivalent; "duplicate-flip" is the
    reference one.
    """
    if j < 1:
        raise ValueError("level must be >= 1")
    if method not in _FEIGENBAUM_METHODS:
        raise ValueError(f"unknown method {method!r}")
    w = "1"
    for _ in range(j - 1):
        if method == "duplicate-flip":
            w = w + w[:-1] + complement(w[-1])
        elif method == "index-doubling":
            w = "".join("1" + complement(c) for c in w)
        else:
            w = FEIGENBAUM_RULE.apply(w)
    return w


def feigenbaum_stream(j: int, method: str = "duplicate-flip") -> PeriodicStream:
    """The j-th cascade kneading sequence as a periodic stream."""
    return PeriodicStream("", feigenbaum_word(j, method))


def feigenbaum_limit() -> FixedPointStream:
    """The aperiodic limit kneading sequence (fixed point of 1->10, 0->11)."""
    return FixedPointStream(FEIGENBAUM_RULE, "1")


# === serialization =====================================================

def stream_to_json(s: SymbolStream) -> dict:
    if isinstance(s, PeriodicStream):
        return {"preperiod": s.preperiod, "period": s.period}
    if isinstance(s, FixedPointStream):
        return {"rule": dict(s.rule.images), "prefix": s.letter}
    raise TypeError(f"cannot serialize {type(s).__name__}")


def stream_from_json(obj: dict) -> SymbolStream:
    if "period" in obj:
        return PeriodicStream(obj.get("preperiod", ""), obj["period"])
    if "rule" in obj:
        return FixedPointStream(SubstitutionRule(obj["rule"]), obj["prefix"])
    raise ValueError(f"unrecognized stream object: {obj!r}")
