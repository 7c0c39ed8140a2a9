"""Return times to cylinders and their rescaled limit law.

U_n is the cylinder of a fixed prefix w of length n with k ones.  It splits
into the sub-cylinders C(l, m) = [w 0^l 1^m 1 0], and every point of C(l, m)
first comes back to U_n after exactly

    tau = C(n+l, k) + C(n+m, k+m) - C(n, k)

steps.  With the scaling sqrt(n) mu(U_n) the law of tau converges (p = 1/2)
to a step function with jumps at sqrt(2/pi) (2^i + 2^j - 1).
"""

from __future__ import annotations

import bisect
import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .combin import binom, binom_log
from .errors import Exceeded, SampleAtJump
from .path import HORIZON, Path, adic_step

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)
EXACT_LEVELS = 64


def return_time(k: int, n: int, l: int, m: int) -> int:
    """First return time to U_n of any point of C(l, m), for a prefix with k ones."""
    if n < 1 or l < 0 or m < 0 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1, l, m >= 0, 0 <= k <= n; got {(k, n, l, m)}")
    return binom(n + l, k) + binom(n + m, k + m) - binom(n, k)


def return_time_sim(x: Path, n: int, max_steps: int, horizon: int = HORIZON) -> int:
    """Smallest s >= 1 with T^s x back in the cylinder of x's first n coordinates."""
    if n < 1:
        raise ValueError("n must be >= 1: the empty cylinder is the whole space")
    target = x.window(n)
    y = x
    for s in range(1, max_steps + 1):
        y = adic_step(y, horizon)
        if y.window(n) == target:
            return s
    raise Exceeded(f"no return to the {n}-cylinder within {max_steps} steps")


def sub_cylinder(prefix: str, l: int, m: int) -> str:
    return prefix + "0" * l + "1" * m + "10"


@dataclass(frozen=True)
class SubCylinder:
    l: int
    m: int
    mass: Fraction
    return_time: int


def cylinder_decomposition(prefix: str, lm_cap: int) -> list[SubCylinder]:
    """The sub-cylinders C(l, m), l + m <= lm_cap, with their p = 1/2 relative masses."""
    n, k = len(prefix), prefix.count("1")
    return [
        SubCylinder(l, s - l, Fraction(1, 2 ** (s + 2)), return_time(k, n, l, s - l))
        for s in range(lm_cap + 1)
        for l in range(s + 1)
    ]


# -- step functions -----------------------------------------------------------


@dataclass
class StepFunction:
    """Right-continuous step function: ``values[i]`` on [jumps[i], jumps[i+1])."""

    jumps: list
    values: list
    value_before: float = 1.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.jumps) != len(self.values):
            raise ValueError("need one plateau value per jump")
        if any(b <= a for a, b in zip(self.jumps, self.jumps[1:])):
            raise ValueError("jumps must be strictly increasing")

    def __call__(self, t: float) -> float:
        i = bisect.bisect_right(self.jumps, t) - 1
        return self.value_before if i < 0 else self.values[i]

    def is_non_increasing(self) -> bool:
        vs = [self.value_before, *self.values]
        return all(b <= a for a, b in zip(vs, vs[1:]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t_jump", "value_on_plateau_right_of_jump"])
        for t, v in zip(self.jumps, self.values):
            w.writerow([repr(float(t)), repr(float(v))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, value_before: float = 1.0) -> "StepFunction":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["t_jump", "value_on_plateau_right_of_jump"]:
            raise ValueError("unexpected step-function CSV header")
        return cls([float(r[0]) for r in rows[1:]], [float(r[1]) for r in rows[1:]], value_before)

    def to_json(self) -> str:
        return json.dumps(
            {
                "value_before": float(self.value_before),
                "jumps": [float(t) for t in self.jumps],
                "values": [float(v) for v in self.values],
                **self.meta,
            },
            indent=2,
        )


# -- the limit law ------------------------------------------------------------


def limit_jump(i: int, j: int) -> float:
    return SQRT_2_OVER_PI * (2**i + 2**j - 1)


def limit_jump_indices(i_max: int) -> list[tuple[int, int]]:
    """(i, j), 0 <= j <= i <= i_max, in increasing order of t_{i,j}."""
    return [(i, j) for i in range(i_max + 1) for j in range(i + 1)]


def plateau_oracle(i: int, j: int, truncation: int = 60) -> Fraction:
    """(1/4) sum of 2^-(l+m) over l, m <= truncation with t_{l,m} > t_{i,j}."""
    level = 2**i + 2**j
    total = Fraction(0)
    for l in range(truncation + 1):
        for m in range(truncation + 1):
            if 2**l + 2**m > level:
                total += Fraction(1, 2 ** (l + m))
    return total / 4


def plateau_closed_form(i: int, j: int) -> Fraction:
    """Closed-form height on [t_{i,j}, next jump): the mixed form when j < i, diagonal form when j = i."""
    if j == i:
        return Fraction(2 ** (i + 2) - 1, 2 ** (2 * (i + 1)))
    return Fraction(2 ** (i + 1) + 2 ** (i - j) - 2, 2 ** (1 + 2 * i))


def _closed_form_strict(i: int, j: int):
    """Height when the mixed form is only admitted for i > j + 1; None where no branch applies."""
    if j == i:
        return plateau_closed_form(i, j)
    if i > j + 1:
        return plateau_closed_form(i, j)
    return None


@dataclass(frozen=True)
class PlateauCheck:
    i: int
    j: int
    oracle: Fraction
    closed_form: Fraction
    closed_form_strict: object

    @property
    def agrees(self) -> bool:
        return abs(self.closed_form - self.oracle) <= 1e-9

    @property
    def strict_covers(self) -> bool:
        return self.closed_form_strict is not None and abs(self.closed_form_strict - self.oracle) <= 1e-9


def plateau_report(i_max: int = 6, truncation: int = 60) -> list[PlateauCheck]:
    """Both readings of the plateau conditions against the truncated-sum oracle."""
    return [
        PlateauCheck(i, j, plateau_oracle(i, j, truncation), plateau_closed_form(i, j), _closed_form_strict(i, j))
        for i, j in limit_jump_indices(i_max)
    ]


def limit_law(i_max: int = 12, truncation: int = 60) -> StepFunction:
    """The p = 1/2 limit law up to the jump t_{i_max, i_max}; plateau heights from the oracle."""
    idx = limit_jump_indices(i_max)
    checks = plateau_report(i_max, truncation)
    flagged = [[c.i, c.j] for c in checks if not c.agrees or not c.strict_covers]
    return StepFunction(
        [limit_jump(i, j) for i, j in idx],
        [float(c.oracle) for c in checks],
        1.0,
        meta={"plateaus_not_covered_by_strict_reading": flagged},
    )


# -- finite-n law ---------------------------------------------------------------


def _log_return_time(k: int, n: int, l: int, m: int) -> float:
    base = binom_log(n, k)
    r1 = math.exp(binom_log(n + l, k) - base)
    r2 = math.exp(binom_log(n + m, k + m) - base)
    return base + math.log(r1 + r2 - 1)


def tail_mass(lm_cap: int) -> float:
    """p = 1/2 mass of the sub-cylinders with l + m > lm_cap."""
    return (lm_cap + 3) * 2.0 ** (-lm_cap) / 4


def empirical_law(n: int, k: int, lm_cap: int, p: float = 0.5, c_n: float | None = None) -> StepFunction:
    """Law of c_n mu(U_n) tau over the sub-cylinders with l + m <= lm_cap.

    ``p`` is the mass of label 0; ``c_n`` defaults to sqrt(n).  Below
    ``EXACT_LEVELS`` the return times are exact integers, above they are
    assembled from log-binomials.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    if lm_cap < 0:
        raise ValueError("lm_cap must be >= 0")
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    c = math.sqrt(n) if c_n is None else c_n
    q = 1 - p
    log_mu = (n - k) * math.log(p) + k * math.log(q)
    points = []
    for s in range(lm_cap + 1):
        for l in range(s + 1):
            m = s - l
            if n <= EXACT_LEVELS:
                t = c * math.exp(math.log(return_time(k, n, l, m)) + log_mu)
            else:
                t = c * math.exp(_log_return_time(k, n, l, m) + log_mu)
            points.append((t, p ** (l + 1) * q ** (m + 1)))
    points.sort()
    # Merge jumps that only differ by rounding (t_{l,m} = t_{m,l} when k = n/2).
    jumps, masses = [], []
    for t, w in points:
        if jumps and t - jumps[-1] <= 1e-9 * max(1.0, t):
            masses[-1] += w
        else:
            jumps.append(t)
            masses.append(w)
    total = math.fsum(masses)
    values, acc = [], total
    for w in masses:
        acc -= w
        values.append(max(acc, 0.0))
    return StepFunction(jumps, values, total, meta={"tail_mass": 1 - total if p == 0.5 else None})


def _gap_to_jump(jumps, t: float) -> float:
    i = bisect.bisect_left(jumps, t)
    return min((abs(jumps[r] - t) for r in (i - 1, i) if 0 <= r < len(jumps)), default=math.inf)


def law_distance(F: StepFunction, G: StepFunction, samples, exclusion: float = 0.05) -> float:
    """max |F(t) - G(t)| over samples kept at least ``exclusion`` away from every jump of G."""
    worst = 0.0
    for t in samples:
        if _gap_to_jump(G.jumps, t) < exclusion:
            raise SampleAtJump(f"sample {t} within {exclusion} of a jump")
        worst = max(worst, abs(F(t) - G(t)))
    return worst


def avoiding_samples(G: StepFunction, t_max: float, count: int, exclusion: float = 0.05) -> list[float]:
    """An even grid on [0, t_max] with points near jumps of G removed."""
    grid = [t_max * r / (count - 1) for r in range(count)] if count > 1 else [0.0]
    return [t for t in grid if _gap_to_jump(G.jumps, t) >= exclusion]
