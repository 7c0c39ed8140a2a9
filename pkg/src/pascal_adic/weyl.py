"""A constructive witness for topological weak mixing.

For an irrational beta we look for n_1 < n_2 < ... with
|exp(2 pi i beta C(n_k, k)) + 1| < 1/k, then build the path

    x = 0 1^(n_1) 0 1^(n_2 - n_1 - 1) 0 ...

whose zeros sit at 1, n_1 + 2, n_2 + 2, ...  It has a kink at every level n_k,
so T^C(n_k, k) x agrees with x on a growing window around the origin while
the phase beta C(n_k, k) is pushed towards 1/2.

beta C(n, k) mod 1 is tracked as a P-bit fixed-point residue updated by
Pascal's rule, so C(n, k) itself is never multiplied out.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .combin import binom
from .errors import NoKink, PrecisionExhausted, RationalBeta, SearchExhausted
from .path import Path, RunLengthProgram, adic_inverse_step, adic_step, k_level, kink_power
from .words import SYMBOL

GUARD_BITS = 96
RATIONAL_DENOMINATOR_CAP = 10**6


@dataclass(frozen=True)
class Beta:
    """An irrational in (0, 1) that can produce floor(beta 2^q) for any q.

    ``kind`` is 'golden' (frac of the golden ratio), 'sqrt' (frac of sqrt(d))
    or 'decimal' (a finite decimal, good to ``digits`` places).
    """

    kind: str
    param: object
    text: str

    def fixed(self, q: int) -> int:
        if self.kind == "golden":
            return (math.isqrt(5 << (2 * q)) - (1 << q)) >> 1
        if self.kind == "sqrt":
            return math.isqrt(self.param << (2 * q)) & ((1 << q) - 1)
        frac: Fraction = self.param
        return (frac.numerator << q) // frac.denominator

    @property
    def precision_bits(self) -> float:
        """Bits of beta actually known (inf for exact surds)."""
        if self.kind == "decimal":
            return self.digits * math.log2(10)
        return math.inf

    @property
    def digits(self) -> int:
        return len(self.text.partition(".")[2]) if self.kind == "decimal" else 0

    def __float__(self) -> float:
        return self.fixed(64) / 2**64

    def __str__(self) -> str:
        return self.text


def parse_beta(text) -> Beta:
    """``golden``, ``sqrt:<d>``, a decimal in (0, 1), or a fraction (rejected)."""
    if isinstance(text, Beta):
        return text
    if isinstance(text, Fraction) or (isinstance(text, str) and "/" in text):
        raise RationalBeta(f"beta = {text} is rational")
    text = str(text).strip()
    if text in ("golden", "phi"):
        beta = Beta("golden", None, "golden")
    elif text.startswith("sqrt:"):
        d = int(text[5:])
        if d < 0 or math.isqrt(d) ** 2 == d:
            raise RationalBeta(f"sqrt({d}) is rational")
        beta = Beta("sqrt", d, text)
    else:
        try:
            dec = Decimal(text)
        except InvalidOperation:
            raise ValueError(f"cannot read beta from {text!r}") from None
        if not 0 < dec < 1:
            raise ValueError("beta must lie strictly between 0 and 1")
        beta = Beta("decimal", Fraction(dec), text)
    _reject_rational(beta)
    return beta


def _reject_rational(beta: Beta, q: int = 128) -> None:
    """Heuristic: beta is 'rational' if a denominator <= 10^6 matches it to ~2^-80."""
    x = Fraction(beta.fixed(q), 1 << q)
    approx = x.limit_denominator(RATIONAL_DENOMINATOR_CAP)
    tol = min(2.0**-80, 10.0 ** -(beta.digits - 2)) if beta.kind == "decimal" else 2.0**-80
    if abs(x - approx) <= tol:
        raise RationalBeta(f"beta = {beta} is within {tol:.3g} of {approx}")


def golden() -> Beta:
    return parse_beta("golden")


@dataclass(frozen=True)
class WeylEntry:
    k: int
    n_k: int
    defect: float

    @property
    def power(self) -> int:
        return binom(self.n_k, self.k)


@dataclass(frozen=True)
class WeylWitness:
    beta: Beta
    entries: tuple

    @property
    def indices(self) -> list[int]:
        return [e.n_k for e in self.entries]

    @property
    def K(self) -> int:
        return len(self.entries)


def _phase(residue: int, bits: int) -> float:
    return (residue >> (bits - 64)) / 2**64 if bits >= 64 else residue / 2**bits


def defect_of(theta: float) -> float:
    """|exp(2 pi i theta) + 1|."""
    return 2 * abs(math.cos(math.pi * theta))


def exact_phase(beta: Beta, n: int, k: int) -> float:
    """frac(beta C(n, k)) from one big multiplication, good to ~2^-64."""
    c = binom(n, k)
    q = c.bit_length() + 128
    return _phase((c * beta.fixed(q)) & ((1 << q) - 1), q)


def find_weyl_indices(beta, K: int, search_cap: int = 10**6) -> WeylWitness:
    """Smallest admissible n_k for k = 1..K.

    Admissible means n_k >= n_{k-1} + 2: with n_k = n_{k-1} + 1 the path
    would have a zero at level n_k + 1 and no kink there.
    """
    beta = parse_beta(beta)
    if K < 1:
        raise ValueError("K must be >= 1")
    bits = max(128, binom(search_cap, K).bit_length() + GUARD_BITS)
    mask = (1 << bits) - 1
    r = [0] * (K + 1)
    r[0] = beta.fixed(bits)
    finite_precision = beta.precision_bits < math.inf
    entries = []
    k, last = 1, -1
    for n in range(1, search_cap + 1):
        for j in range(K, 0, -1):
            r[j] = (r[j] + r[j - 1]) & mask
        if n < k or n < last + 2:
            continue
        if finite_precision and math.log2(binom(n, k)) + 20 > beta.precision_bits:
            raise PrecisionExhausted(f"{beta.digits} digits of beta cannot resolve beta C({n},{k}) mod 1")
        d = defect_of(_phase(r[k], bits))
        if d < 1 / k:
            d_exact = defect_of(exact_phase(beta, n, k))
            if abs(d_exact - d) > 1e-9:
                raise AssertionError(f"residue pipeline drifted at (n, k) = ({n}, {k})")
            entries.append(WeylEntry(k, n, d_exact))
            last = n
            k += 1
            if k > K:
                return WeylWitness(beta, tuple(entries))
    raise SearchExhausted(f"found only {len(entries)} of {K} indices below n = {search_cap}")


def weyl_path(w: WeylWitness) -> Path:
    """Zeros at coordinates 1, n_1 + 2, n_2 + 2, ...; ones elsewhere."""
    positions = (1, *(n + 2 for n in w.indices))
    return Path("", RunLengthProgram(positions, "0"))


@dataclass(frozen=True)
class RecurrenceReport:
    k: int
    n_k: int
    power: int
    defect: float
    agreement_radius: int
    radius_cap: int
    level_ones: int


def _agreement_radius(x: Path, y: Path, radius: int) -> int:
    """Largest r <= radius with omega_{-r..r} equal for the codings of x and y; -1 if omega_0 differs."""
    if x.bit(1) != y.bit(1):
        return -1
    fx, fy, bx, by = x, y, x, y
    for r in range(1, radius + 1):
        fx, fy = adic_step(fx), adic_step(fy)
        bx, by = adic_inverse_step(bx), adic_inverse_step(by)
        if SYMBOL[fx.bit(1)] != SYMBOL[fy.bit(1)] or SYMBOL[bx.bit(1)] != SYMBOL[by.bit(1)]:
            return r - 1
    return radius


def recurrence_check(w: WeylWitness, k: int, radius: int) -> RecurrenceReport:
    """Compare the coding of x with that of T^C(n_k, k) x, the latter taken from the kink."""
    if not 1 <= k <= w.K:
        raise ValueError(f"k must lie in 1..{w.K}")
    e = w.entries[k - 1]
    x = weyl_path(w)
    try:
        y = kink_power(x, e.n_k)
    except NoKink as exc:
        raise AssertionError(f"witness path lacks a kink at level {e.n_k}") from exc
    if x.window(e.n_k) != y.window(e.n_k):
        raise AssertionError("kink power moved the first n_k coordinates")
    ones = k_level(x, e.n_k)
    return RecurrenceReport(
        k, e.n_k, binom(e.n_k, ones), e.defect, _agreement_radius(x, y, radius), radius, ones
    )


def witness_report(w: WeylWitness, radius: int = 1000) -> dict:
    rows = [recurrence_check(w, k, radius) for k in range(1, w.K + 1)]
    return {
        "beta": str(w.beta),
        "entries": [
            {"k": r.k, "n_k": r.n_k, "defect": r.defect, "agreement_radius": r.agreement_radius} for r in rows
        ],
    }


def witness_report_json(w: WeylWitness, radius: int = 1000) -> str:
    return json.dumps(witness_report(w, radius), indent=2)
