"""Admissible-word languages: enumeration, complexity counts, forbidden words."""

from __future__ import annotations

from dataclasses import dataclass

from .encoding import is_maximal, xi
from .symbolic import SymbolStream, shift

MODES = ("core", "full-interval")

# enumeration is exhaustive over a pruned binary tree; past ~24 letters the
# full-shift case alone needs tens of millions of nodes
ENUM_LIMIT = 24
WORD_LIMIT = 16


@dataclass(frozen=True)
class LanguageQuery:
    """A language to enumerate: kneading stream, max word length, criterion.

    core mode keeps words compatible with the two-sided bound on every
    shifted suffix (candidate itineraries inside the core interval);
    full-interval mode drops the lower bound and keeps everything below
    the kneading digit stream.  Comparisons that run off the end of a
    finite word count as satisfiable.
    """

    K: SymbolStream
    nmax: int
    mode: str = "core"

    def __post_init__(self):
        if self.nmax < 1:
            raise ValueError("nmax must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def _references(q: LanguageQuery):
    U = [int(c) for c in xi(q.K).prefix(q.nmax)]
    if q.mode != "core":
        return U, None
    return U, [int(c) for c in xi(shift(q.K, 1)).prefix(q.nmax)]


def _validate(q: LanguageQuery, limit: int):
    if q.nmax > limit:
        raise ValueError(
            f"refusing nmax={q.nmax}: enumeration may touch ~2^{q.nmax + 1} "
            f"nodes; keep nmax <= {limit}"
        )
    if is_maximal(q.K) is not True:
        raise ValueError("K is not a maximal stream")


def _enumerate(q: LanguageQuery, visit):
    """Depth-first walk of viable words, pruning at the first decided violation.

    A shift of the current word stays "live" while its digit word is a
    prefix of the reference expansion; a decided < (upper) or > (lower)
    settles that shift for every extension, so only live shifts carry
    forward.  visit(d) is called once per viable word with the letters
    in word[1..d].
    """
    n = q.nmax
    U, L = _references(q)
    tv = [0] * (n + 1)
    word = [0] * (n + 1)
    # frame: depth, letter, digit parity at depth, live shifts (upper, lower)
    stack = [(0, 0, 0, (), () if L is not None else None)]
    while stack:
        d, letter, tvd, lu, ll = stack.pop()
        tv[d] = tvd
        word[d] = letter
        if d:
            visit(d, word)
        if d == n:
            continue
        for b in (0, 1):
            tvc = tvd ^ b
            nu = []
            ok = True
            for m in lu:
                digit = tvc ^ tv[m]
                ref = U[d - m]
                if digit > ref:
                    ok = False
                    break
                if digit == ref:
                    nu.append(m)
            if not ok:
                continue
            # the fresh shift starting at position d sees digit b
            if b > U[0]:
                continue
            if b == U[0]:
                nu.append(d)
            nl = None
            if ll is not None:
                nl = []
                for m in ll:
                    digit = tvc ^ tv[m]
                    ref = L[d - m]
                    if digit < ref:
                        ok = False
                        break
                    if digit == ref:
                        nl.append(m)
                if not ok:
                    continue
                if b < L[0]:
                    continue
                if b == L[0]:
                    nl.append(d)
            stack.append((d + 1, b, tvc, nu, nl))


def complexity(q: LanguageQuery) -> list[int]:
    """Counts p(1), ..., p(nmax) of viable words of each length."""
    _validate(q, ENUM_LIMIT)
    counts = [0] * (q.nmax + 1)

    def visit(d, word):
        counts[d] += 1

    _enumerate(q, visit)
    return counts[1:]


def language_words(q: LanguageQuery) -> dict[int, list[str]]:
    """The counted words themselves, keyed by length; for closure checks."""
    _validate(q, WORD_LIMIT)
    out: dict[int, list[str]] = {d: [] for d in range(1, q.nmax + 1)}

    def visit(d, word):
        out[d].append("".join(map(str, word[1:d + 1])))

    _enumerate(q, visit)
    return out


def forbidden_words(tdigits: SymbolStream, nmax: int) -> list[str]:
    """Words s_1 .. s_(j-1) s~_j for every zero digit t_j with j <= nmax.

    A zero at digit position j forces the symbol stream to carry s_j
    there; flipping that one letter produces a word no admissible
    sequence can start with.
    """
    if nmax < 1:
        raise ValueError("nmax must be positive")
    t = [int(c) for c in tdigits.prefix(nmax)]
    s = [t[0]] + [t[k] ^ t[k - 1] for k in range(1, nmax)]
    out = []
    for j in range(1, nmax + 1):
        if t[j - 1] == 0:
            out.append("".join(str(b) for b in s[: j - 1]) + str(1 - s[j - 1]))
    return out
