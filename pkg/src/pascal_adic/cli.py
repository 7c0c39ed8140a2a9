"""Command-line front end: ``pascal-adic <subcommand> [flags]``.

Exit status is 0 on success, 1 on a domain error (the error class is named on
stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import complexity, interval, measure, returns, weyl, words
from .errors import PascalAdicError
from .path import HORIZON, Path, adic_inverse_step, adic_step, orbit

CAP_ENV = "PASCAL_ADIC_CAP_MB"


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    cap_word: int
    cap_horizon: int
    lm_cap: int
    cap_search: int
    fmt: str
    out: str | None
    seed: int


def _path_arg(text: str) -> Path:
    try:
        return Path.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _alpha(text: str) -> float:
    v = float(Fraction(text))
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("alpha must lie strictly between 0 and 1")
    return v


def _word_cap(flag: int) -> int:
    """The --cap-word value, further bounded by $PASCAL_ADIC_CAP_MB (one byte per symbol)."""
    mb = os.environ.get(CAP_ENV)
    if mb is None:
        return flag
    try:
        limit = int(float(mb) * 2**20)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be a number, got {mb!r}") from None
    if limit <= 0:
        raise ValueError(f"{CAP_ENV} must be positive")
    return min(flag, limit)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json", "svg"], default=None)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-word", type=_positive, default=words.MATERIALIZATION_CAP,
                        help="largest word length that may be materialized")
    common.add_argument("--cap-horizon", type=_positive, default=HORIZON,
                        help="coordinates scanned per adic step")
    common.add_argument("--cap-search", type=_positive, default=10**6, help="search bound for weyl")

    p = argparse.ArgumentParser(prog="pascal-adic", description="Pascal adic transformation toolkit.")
    sub = p.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, description=help_)

    s = add("step", "Apply the adic map T(0^n 1^m 1 0 x') = 1^m 0^n 0 1 x' (or its inverse) once.")
    s.add_argument("--path", type=_path_arg, required=True, help="bits:tail, e.g. 0011100100:zeros")
    s.add_argument("--inverse", action="store_true")

    s = add("orbit", "List x, Tx, ..., T^n x; the orbit of (n,k)-minimal paths runs through all C(n,k) prefixes.")
    s.add_argument("--path", type=_path_arg, required=True)
    s.add_argument("--n", type=int, required=True, help="number of steps")

    s = add("word", "Print the basic word B(n,k) = B(n-1,k) B(n-1,k-1) of the Pascal triangle of words.")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=int, required=True)

    s = add("code", "Coding window omega_-R..omega_R of an orbit (symbol a for first edge 0, b for 1).")
    s.add_argument("--path", type=_path_arg, required=True)
    s.add_argument("--radius", type=int, default=0)

    s = add("complexity", "Complexity function p_n and the ratio 6 p_n / n^3 (complexity theorem: p_n ~ n^3/6).")
    s.add_argument("--n-max", type=_positive, required=True)

    s = add("classify", "First appearance, five-case triangle of appearances and measure of a block.")
    s.add_argument("--block", required=True)
    s.add_argument("--alpha", type=_alpha, action="append", help="repeatable; default 0.25, 0.5, 0.75")

    s = add("freq", "Frequency a(n,k_n)/C(n,k_n) along k_n ~ alpha n against nu_alpha (directional unique ergodicity).")
    s.add_argument("--block", required=True)
    s.add_argument("--alpha", type=_alpha, required=True)
    s.add_argument("--n", type=_positive, required=True)

    s = add("return-law", "Rescaled return-time law: finite n (with --n, --k) or the limit step function.")
    s.add_argument("--n", type=_positive)
    s.add_argument("--k", type=int)
    s.add_argument("--lm-cap", type=int, default=60)
    s.add_argument("--i-max", type=int, default=12, help="limit law: last jump index")

    s = add("plot", "Sample the graph of the binomial map T_b, symmetric about y = 1 - x.")
    s.add_argument("--n", type=_positive, default=10, help="stage")
    s.add_argument("--samples", type=_positive, default=4, help="points per stage-n interval (even)")

    s = add("stacks", "Cutting-and-stacking stacks at stage n: stack k has C(n,k) levels of width 2^-n.")
    s.add_argument("--n", type=_positive, required=True)

    s = add("weyl", "Weak-mixing witness: n_k with |exp(2 pi i beta C(n_k,k)) + 1| < 1/k and the Kink Lemma path.")
    s.add_argument("--beta", default="golden", help="golden, sqrt:<d> or a decimal in (0,1)")
    s.add_argument("--K", type=_positive, default=8)
    s.add_argument("--radius", type=int, default=1000)
    return p


# -- subcommands ----------------------------------------------------------------


def _step(a, cfg):
    f = adic_inverse_step if a.inverse else adic_step
    return str(f(a.path, cfg.cap_horizon)) + "\n"


def _orbit(a, cfg):
    lines = []
    for i, x in enumerate(orbit(a.path, cfg.cap_horizon)):
        lines.append(str(x))
        if i >= a.n:
            break
    return "\n".join(lines) + "\n"


def _word(a, cfg):
    return words.basic_word(a.n, a.k, cfg.cap_word) + "\n"


def _code(a, cfg):
    return words.code_window(a.path, a.radius, cfg.cap_horizon) + "\n"


def _complexity(a, cfg):
    rows = complexity.complexity_report(a.n_max)
    if cfg.fmt == "json":
        return complexity.report_to_json(rows) + "\n"
    return complexity.report_to_csv(rows)


def _classify(a, cfg):
    return measure.block_report_json(a.block, alphas=tuple(a.alpha or (0.25, 0.5, 0.75))) + "\n"


def _freq(a, cfg):
    f = measure.freq_along_ray(a.block, a.alpha, a.n)
    nu = measure.block_measure(a.block, a.alpha)
    out = {
        "block": a.block,
        "alpha": a.alpha,
        "n": a.n,
        "k_n": measure.ray_k(a.alpha, a.n),
        "freq": f"{f.numerator}/{f.denominator}",
        "freq_float": float(f),
        "nu_alpha": nu,
        "error": abs(float(f) - nu),
    }
    return json.dumps(out, indent=2) + "\n"


def _return_law(a, cfg):
    if a.n is None:
        law = returns.limit_law(a.i_max)
        if cfg.fmt == "json":
            checks = returns.plateau_report(min(a.i_max, 6))
            doc = json.loads(law.to_json())
            doc["plateau_checks"] = [
                {
                    "i": c.i,
                    "j": c.j,
                    "oracle": float(c.oracle),
                    "closed_form": float(c.closed_form),
                    "closed_form_strict_reading": None if c.closed_form_strict is None else float(c.closed_form_strict),
                }
                for c in checks
            ]
            return json.dumps(doc, indent=2) + "\n"
        return law.to_csv()
    k = a.n // 2 if a.k is None else a.k
    law = returns.empirical_law(a.n, k, a.lm_cap)
    return law.to_json() + "\n" if cfg.fmt == "json" else law.to_csv()


def _plot(a, cfg):
    pts = interval.plot_points(a.n, a.samples, cfg.seed)
    if cfg.fmt == "svg":
        return interval.points_to_svg(pts)
    return interval.points_to_csv(pts)


def _stacks(a, cfg):
    doc = [
        {"k": s.k, "height": s.height, "width": str(s.width), "bottom": s.bottom, "top": s.top}
        for s in interval.stack_structure(a.n)
    ]
    return json.dumps(doc, indent=2) + "\n"


def _weyl(a, cfg):
    w = weyl.find_weyl_indices(a.beta, a.K, cfg.cap_search)
    return weyl.witness_report_json(w, a.radius) + "\n"


HANDLERS = {
    "step": _step,
    "orbit": _orbit,
    "word": _word,
    "code": _code,
    "complexity": _complexity,
    "classify": _classify,
    "freq": _freq,
    "return-law": _return_law,
    "plot": _plot,
    "stacks": _stacks,
    "weyl": _weyl,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cap_word = _word_cap(a.cap_word)
    except ValueError as exc:
        print(f"pascal-adic: error: {exc}", file=stderr)
        return 2
    cfg = RunConfig(
        a.subcommand,
        cap_word,
        a.cap_horizon,
        getattr(a, "lm_cap", 60),
        a.cap_search,
        a.format or "text",
        a.out,
        a.seed,
    )
    try:
        text = HANDLERS[a.subcommand](a, cfg)
    except PascalAdicError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except ValueError as exc:
        print(f"pascal-adic {a.subcommand}: error: {exc}", file=stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
