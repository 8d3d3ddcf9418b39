"""Command-line surface: exact tables, series, scans, and reproduction checks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction

from .cfrac import cf_of_enclosure, cf_of_rational, cf_table
from .dynamics import (
    kneading as float_kneading,
    lemma1_validate,
    logistic_map,
    monotonicity_scan,
    tent_map,
)
from .encoding import kneading_from_tau, xi
from .feigenbaum import tau_infinity_enclosure, tau_level
from .frequency import empirical_frequencies, letter_frequencies, pair_frequencies
from .language import LanguageQuery, complexity, forbidden_words
from .spectral import (
    EntropyInconclusive,
    entropy,
    kneading_determinant,
    orbit_counts,
    series_of_rational,
    xi_series,
    zeta_series,
)
from .symbolic import (
    FEIGENBAUM_RULE,
    THUE_MORSE_RULE,
    FixedPointStream,
    feigenbaum_limit,
    feigenbaum_stream,
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    precision_bits: int = 128
    order: int = 30
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.precision_bits < 1 or self.order < 1:
            raise ValueError("numeric limits must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown format {self.output_format!r}")


def _num(x, args):
    """Exact string for a Fraction unless --float was passed."""
    if isinstance(x, Fraction):
        return float(x) if args.as_float else str(x)
    return x


def _emit(text: str, out: str | None):
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _atomic_write(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _tau_stream(spec: str):
    """Stream for a --tau argument: p/q, feigenbaum:j, or feigenbaum:inf."""
    if spec == "feigenbaum:inf":
        return feigenbaum_limit()
    if spec.startswith("feigenbaum:"):
        return feigenbaum_stream(int(spec.split(":", 1)[1]))
    return kneading_from_tau(Fraction(spec))


# ---------------------------------------------------------------- handlers

def _cmd_tau(args) -> int:
    if args.infinity:
        enc = tau_infinity_enclosure(args.bits)
        _emit(_json_text(enc.to_json()), None)
        return 0
    if not 1 <= args.j <= 20:
        raise ValueError("level must be in 1..20")
    lvl = tau_level(args.j)
    if args.format == "text":
        _emit(f"j={lvl.j} tau={lvl.p}/{lvl.q} digits={lvl.period_digits}\n", None)
        return 0
    payload = {"j": lvl.j, "p": str(lvl.p), "q": str(lvl.q),
               "tau": _num(lvl.value, args), "digits": lvl.period_digits}
    _emit(_json_text(payload), None)
    return 0


def _cmd_cf(args) -> int:
    if args.what == "tau-level":
        if not 1 <= args.j <= 12:
            raise ValueError("level must be in 1..12")
        q = list(cf_of_rational(tau_level(args.j).value).quotients)
        if args.format == "text":
            _emit(" ".join(map(str, q)) + "\n", None)
        else:
            _emit(_json_text({"j": args.j, "quotients": q, "count": len(q)}), None)
        return 0
    if args.what == "tau-infinity":
        q = cf_of_enclosure(tau_infinity_enclosure(args.bits))
        _emit(_json_text({"bits": args.bits, "quotients": q, "count": len(q)}), None)
        return 0
    rows = cf_table(args.jmax)
    if args.format == "csv":
        _emit(_csv_text(("j", "n_j", "quotients"),
                        [(j, n, " ".join(map(str, q))) for j, q, n in rows]), args.out)
    else:
        _emit(_json_text([{"j": j, "quotients": q, "count": n} for j, q, n in rows]),
              args.out)
    return 0


def _cmd_zeta(args) -> int:
    stream = _tau_stream(args.tau)
    det = kneading_determinant(stream, args.order)
    zeta = zeta_series(stream, args.order)
    payload = {"tau": args.tau, "order": args.order,
               "determinant": list(det.coefficients), "zeta": list(zeta.coefficients)}
    if args.counts:
        oc = orbit_counts(zeta)
        payload["perCounts"] = {str(n): c for n, c in oc.per_counts.items()}
        payload["primeCounts"] = {str(n): c for n, c in oc.prime_counts.items()}
    if args.entropy:
        try:
            res = entropy(stream, N=args.order, tol=Fraction(args.tol).limit_denominator(10 ** 18)
                          if not isinstance(args.tol, Fraction) else args.tol)
            payload["entropy"] = {"lo": res.lo, "hi": res.hi, "method": res.method,
                                  "bracket": [_num(Fraction(b), args) for b in res.z_bracket]}
        except EntropyInconclusive as e:
            payload["entropy"] = {"error": str(e)}
    _emit(_json_text(payload), None)
    return 0


def _cmd_lang(args) -> int:
    stream = _tau_stream(args.tau)
    if args.what == "complexity":
        counts = complexity(LanguageQuery(stream, args.nmax, args.mode))
        if args.format == "csv":
            _emit(_csv_text(("n", "p_n"), list(enumerate(counts, start=1))), args.out)
        else:
            _emit(_json_text({"tau": args.tau, "mode": args.mode,
                              "counts": counts}), args.out)
        return 0
    words = forbidden_words(xi(stream), args.nmax)
    _emit(_json_text({"tau": args.tau, "nmax": args.nmax, "forbidden": words}), None)
    return 0


_FREQ_STREAMS = {
    "feigenbaum": feigenbaum_limit,
    "thue-morse": lambda: FixedPointStream(THUE_MORSE_RULE, "0"),
    "tau-inf": lambda: xi(feigenbaum_limit()),
}


def _cmd_freq(args) -> int:
    stream = _FREQ_STREAMS[args.stream]()
    freqs = empirical_frequencies(stream, args.block, args.prefix, aligned=args.aligned)
    predicted = None
    if args.stream == "feigenbaum" and args.block == 1:
        predicted = letter_frequencies(FEIGENBAUM_RULE)
    elif args.stream == "tau-inf" and args.block == 2 and args.aligned:
        predicted = pair_frequencies()
    payload = {"stream": args.stream, "block": args.block, "prefix": args.prefix,
               "aligned": args.aligned,
               "frequencies": {k: _num(v, args) for k, v in freqs.items()}}
    if predicted is not None:
        payload["predicted"] = {k: _num(v, args) for k, v in predicted.items()}
    _emit(_json_text(payload), None)
    return 0


def _dyn_map(args):
    if args.family == "logistic":
        return logistic_map(args.r, eta=args.eta)
    return tent_map(args.slope, eta=args.eta)


def _cmd_dyn(args) -> int:
    if args.what == "kneading":
        word, flags = float_kneading(_dyn_map(args), args.n)
        payload = {"family": args.family,
                   "parameter": args.r if args.family == "logistic" else args.slope,
                   "n": args.n, "word": word,
                   "reliable": "".join("R" if f else "u" for f in flags)}
        _emit(_json_text(payload), None)
        return 0
    if args.what == "scan":
        if args.steps < 2:
            raise ValueError("need at least two grid points")
        grid = [args.lo + (args.hi - args.lo) * i / (args.steps - 1)
                for i in range(args.steps)]
        rep = monotonicity_scan(grid, args.n)
        rows = [(row.r, row.tau, row.reliable_prefix) for row in rep.rows]
        if args.format == "json":
            _emit(_json_text({"decreases": rep.decreases,
                              "rows": [{"r": r, "tau": t, "reliablePrefix": k}
                                       for r, t, k in rows]}), args.out)
        else:
            _emit(_csv_text(("r", "tau", "reliable_prefix"), rows), args.out)
        return 0
    rep = lemma1_validate(_dyn_map(args), args.pairs, args.n, seed=args.seed)
    _emit(_json_text({"pairsTested": rep.pairs_tested,
                      "pairsDecided": rep.pairs_decided,
                      "pairsExcluded": rep.pairs_excluded,
                      "violations": rep.violations}), None)
    return 0 if rep.violations == 0 else 1


# ------------------------------------------------------- reproduction targets

# reference values, exact strings only
_GOLDEN_TAU = (
    "2/3", "4/5", "14/17", "212/257", "54062/65537",
    "3542953172/4294967297",
    "15216868001456509742/18446744073709551617",
)

# quotient counts n_j for j = 1..12
_GOLDEN_NJ = (2, 2, 4, 6, 12, 23, 39, 71, 121, 253, 528, 1129)

# continued-fraction quotients of the first eight levels
_GOLDEN_CF = {
    1: "1 2",
    2: "1 4",
    3: "1 4 1 2",
    4: "1 4 1 2 2 6",
    5: "1 4 1 2 2 6 2 1 2 9 1 2",
    6: "1 4 1 2 2 6 2 1 2 9 1 2 2 1 1 21 1 10 2 1 1 1 5",
    7: "1 4 1 2 2 6 2 1 2 9 1 2 2 1 1 21 1 10 2 1 1 1 4 "
       "1 2 29 1 24 1 1 7 11 3 2 5 1 1 1 89",
    8: "1 4 1 2 2 6 2 1 2 9 1 2 2 1 1 21 1 10 2 1 1 1 4 "
       "1 2 29 1 24 1 1 7 11 3 2 5 1 1 1 88 1 1 1 6 1 1 "
       "33 2 6 1 24 1 5 212 2 1 10 1 3 11 2 1 2 1 10 1 1 2 3 2549 1 2",
}

# first 17 coefficients of the alternating lacunary product
_GOLDEN_XI = "1 -1 -1 1 -1 1 1 -1 -1 1 1 -1 1 -1 -1 1 -1"

# limit-word letter and aligned-pair frequencies
_GOLDEN_LETTERS = {"0": "1/3", "1": "2/3"}
_GOLDEN_PAIRS = {"00": "1/3", "01": "1/6", "10": "1/6", "11": "1/3"}
# exact letter counts in the 2^16 prefix
_GOLDEN_LETTERS_64K = {"0": "21845/65536", "1": "43691/65536"}

# closed-form zeta functions: tau, numerator, denominator
_GOLDEN_ZETA = (
    ("1", "1", "1 -2"),
    ("5/6", "1 1", "1 -1 -2 2"),
    ("6/7", "1", "1 -2 0 1"),
)


def _ints(text: str) -> list:
    return [int(tok) for tok in text.split()]


def _target_tau_table():
    rows, ok = [], True
    for j, want in enumerate(_GOLDEN_TAU, start=1):
        got = tau_level(j).value
        match = got == Fraction(want)
        ok = ok and match
        rows.append({"j": j, "want": want, "got": str(got), "match": match})
    return ok, f"{len(rows)} exact parameters", rows


def _target_cf_table():
    rows, ok = [], True
    table = {j: q for j, q, _ in cf_table(8)}
    for j, want in _GOLDEN_CF.items():
        got = " ".join(map(str, table[j]))
        match = got == want
        ok = ok and match
        rows.append({"j": j, "match": match, "quotients": got})
    return ok, "quotients through level 8", rows


def _target_nj_sequence():
    got = tuple(n for _, _, n in cf_table(12))
    ok = got == _GOLDEN_NJ
    return ok, f"counts {list(got)}", [{"want": list(_GOLDEN_NJ), "got": list(got)}]


def _target_xi_series():
    got = list(xi_series(16).coefficients)
    ok = got == _ints(_GOLDEN_XI)
    return ok, "17 coefficients", [{"want": _ints(_GOLDEN_XI), "got": got}]


def _target_frequencies():
    rows, ok = [], True
    checks = (
        ("letters", letter_frequencies(FEIGENBAUM_RULE), _GOLDEN_LETTERS),
        ("pairs", pair_frequencies(), _GOLDEN_PAIRS),
        ("letters-64k", empirical_frequencies(feigenbaum_limit(), 1, 1 << 16),
         _GOLDEN_LETTERS_64K),
    )
    for name, got, want in checks:
        got_s = {k: str(v) for k, v in got.items()}
        match = got_s == want
        ok = ok and match
        rows.append({"check": name, "want": want, "got": got_s, "match": match})
    return ok, "letter and pair profiles", rows


def _target_zeta_examples():
    rows, ok = [], True
    for spec, num, den in _GOLDEN_ZETA:
        got = zeta_series(kneading_from_tau(Fraction(spec)), 30)
        want = series_of_rational(_ints(num), _ints(den), 30)
        match = got.coefficients == want.coefficients
        ok = ok and match
        rows.append({"tau": spec, "numerator": num, "denominator": den,
                     "match": match})
    return ok, "3 closed forms at order 30", rows


def _target_entropy_examples():
    rows, ok = [], True
    refs = (("1", math.log(2.0)),
            ("5/6", math.log(2.0) / 2.0),
            ("6/7", math.log((1.0 + math.sqrt(5.0)) / 2.0)))
    for spec, ref in refs:
        res = entropy(kneading_from_tau(Fraction(spec)))
        good = res.lo <= ref <= res.hi and res.hi - res.lo <= 1.1e-10
        ok = ok and good
        rows.append({"tau": spec, "lo": res.lo, "hi": res.hi,
                     "method": res.method, "match": good})
    for j in range(1, 7):
        res = entropy(feigenbaum_stream(j))
        good = res.lo == 0.0 == res.hi
        ok = ok and good
        rows.append({"tau": f"feigenbaum:{j}", "lo": res.lo, "hi": res.hi,
                     "method": res.method, "match": good})
    return ok, "3 positive enclosures + 6 exact zeros", rows


_TARGETS = {
    "tau-table": _target_tau_table,
    "cf-table": _target_cf_table,
    "nj-sequence": _target_nj_sequence,
    "xi-series": _target_xi_series,
    "frequencies": _target_frequencies,
    "zeta-examples": _target_zeta_examples,
    "entropy-examples": _target_entropy_examples,
}


def _cmd_reproduce(args) -> int:
    names = sorted(_TARGETS) if args.target == "all" else [args.target]
    results = {}

    def run(name):
        try:
            results[name] = _TARGETS[name]()
        except Exception as e:
            results[name] = (False, f"error: {e}", [])

    threads = [threading.Thread(target=run, args=(n,)) for n in names]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    all_ok = True
    for name in names:
        ok, detail, rows = results[name]
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if args.out:
            path = os.path.join(args.out, f"{name}.json")
            _atomic_write(path, _json_text({"target": name, "pass": ok,
                                            "detail": detail, "rows": rows}))
    return 0 if all_ok else 1


# ------------------------------------------------------------ export kinds

def _export_zeta_roots(args) -> int:
    # denominator (1 - z) * prod_{n<=j} (1 - z^(2^n)); every root is a root
    # of unity, listed factor by factor with multiplicity
    j = args.j
    poly = [1, -1]
    for n in range(j + 1):
        e = 2 ** n
        nxt = [0] * (len(poly) + e)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + e] -= c
        poly = nxt
    rows = []
    for n in range(j + 1):
        m = 2 ** n
        for k in range(m):
            ang = 2.0 * math.pi * k / m
            z = complex(math.cos(ang), math.sin(ang))
            val = complex(0.0, 0.0)
            for c in reversed(poly):
                val = val * z + c
            rows.append((n, k, z.real, z.imag,
                         abs(abs(z) - 1.0), abs(val)))
    if args.format == "json":
        text = _json_text([{"factor": n, "k": k, "re": re, "im": im,
                            "modulusError": me, "residual": rv}
                           for n, k, re, im, me, rv in rows])
    else:
        text = _csv_text(("factor", "k", "re", "im", "modulus_error", "residual"),
                         rows)
    _emit(text, args.out)
    return 0


def _export_bifurcation_scan(args) -> int:
    if args.steps < 2:
        raise ValueError("need at least two grid points")
    grid = [args.lo + (args.hi - args.lo) * i / (args.steps - 1)
            for i in range(args.steps)]
    rep = monotonicity_scan(grid, args.n)
    rows = [(row.r, row.tau, row.reliable_prefix) for row in rep.rows]
    if args.format == "json":
        text = _json_text({"decreases": rep.decreases,
                           "rows": [{"r": r, "tau": t, "reliablePrefix": k}
                                    for r, t, k in rows]})
    else:
        text = _csv_text(("r", "tau", "reliable_prefix"), rows)
    _emit(text, args.out)
    return 0


def _export_frequency_convergence(args) -> int:
    if args.kmin < 1 or args.kmin > args.kmax:
        raise ValueError("need 1 <= kmin <= kmax")
    stream = feigenbaum_limit()
    predicted = letter_frequencies(FEIGENBAUM_RULE)
    rows = []
    for k in range(args.kmin, args.kmax + 1):
        n = 1 << k
        obs = empirical_frequencies(stream, 1, n)
        dev = max(abs(obs.get(b, Fraction(0)) - predicted[b]) for b in "01")
        rows.append((k, n, str(dev)))
    if args.format == "json":
        text = _json_text([{"k": k, "n": n, "deviation": d} for k, n, d in rows])
    else:
        text = _csv_text(("k", "n", "deviation"), rows)
    _emit(text, args.out)
    return 0


def _cmd_export(args) -> int:
    return {"zeta-roots": _export_zeta_roots,
            "bifurcation-scan": _export_bifurcation_scan,
            "frequency-convergence": _export_frequency_convergence}[args.kind](args)


# ---------------------------------------------------------------- parser

def _add_common(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--float", dest="as_float", action="store_true",
                   help="emit floats instead of exact fraction strings")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kneading",
        description="Exact kneading-theory tables, series, and scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", help="period-doubling parameter levels")
    _add_common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--j", type=int)
    g.add_argument("--infinity", action="store_true")
    p.add_argument("--bits", "--precision-bits", dest="bits", type=int, default=128)
    p.set_defaults(handler=_cmd_tau)

    p = sub.add_parser("cf", help="continued-fraction expansions")
    _add_common(p)
    p.add_argument("what", choices=("tau-level", "tau-infinity", "table"))
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--bits", "--precision-bits", dest="bits", type=int, default=4096)
    p.add_argument("--jmax", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_cf)

    p = sub.add_parser("zeta", help="kneading determinant and zeta series")
    _add_common(p)
    p.add_argument("--tau", required=True,
                   help="p/q, feigenbaum:j, or feigenbaum:inf")
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--counts", action="store_true")
    p.add_argument("--entropy", action="store_true")
    p.add_argument("--tol", type=Fraction, default=Fraction(1, 10 ** 10))
    p.set_defaults(handler=_cmd_zeta)

    p = sub.add_parser("lang", help="admissible-word language")
    _add_common(p)
    p.add_argument("what", choices=("complexity", "forbidden"))
    p.add_argument("--tau", required=True)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--mode", choices=("core", "full-interval"), default="core")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_lang)

    p = sub.add_parser("freq", help="block frequencies of symbol streams")
    _add_common(p)
    p.add_argument("--stream", choices=sorted(_FREQ_STREAMS), default="feigenbaum")
    p.add_argument("--block", type=int, default=1)
    p.add_argument("--prefix", type=int, default=1 << 16)
    p.add_argument("--aligned", action="store_true")
    p.set_defaults(handler=_cmd_freq)

    p = sub.add_parser("dyn", help="floating-point unimodal dynamics")
    _add_common(p)
    p.add_argument("what", choices=("kneading", "scan", "lemma1"))
    p.add_argument("--family", choices=("logistic", "tent"), default="logistic")
    p.add_argument("--r", type=float, default=3.9)
    p.add_argument("--slope", type=float, default=2.0)
    p.add_argument("--eta", type=float, default=1e-9)
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--from", dest="lo", type=float, default=3.5)
    p.add_argument("--to", dest="hi", type=float, default=4.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_dyn)

    p = sub.add_parser("reproduce", help="regenerate reference tables and diff")
    _add_common(p)
    p.add_argument("target", choices=sorted(_TARGETS) + ["all"])
    p.add_argument("--out", help="directory for per-target JSON reports")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_reproduce)

    p = sub.add_parser("export", help="plot-ready data files")
    _add_common(p)
    p.add_argument("kind", choices=("zeta-roots", "bifurcation-scan",
                                    "frequency-convergence"))
    p.add_argument("--j", type=int, default=6)
    p.add_argument("--from", dest="lo", type=float, default=3.5)
    p.add_argument("--to", dest="hi", type=float, default=4.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--n", type=int, default=24)
    p.add_argument("--kmin", type=int, default=10)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 0
        return 2 if code else 0
    try:
        RunConfig(args.command,
                  precision_bits=getattr(args, "bits", 128),
                  order=getattr(args, "order", 30),
                  output_format=args.format,
                  seed=getattr(args, "seed", 0))
        return args.handler(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        name = getattr(e, "filename", None)
        print(f"error: {name or ''}: {e.strerror or e}", file=sys.stderr)
        return 3
    except Exception as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
