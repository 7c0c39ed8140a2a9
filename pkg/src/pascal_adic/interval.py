"""The binomial (cutting-and-stacking) map T_b on [0, 1].

A point of [0, 1] is identified with the path of its binary expansion,
x = sum x_i 2^-i, and T_b is the adic map read through that identification.
Everything is computed on paths; floats only appear when a point is printed.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .combin import binom
from .errors import DyadicRational
from .path import Cyclic, Path, adic_step, finite_successor, minimal_word, swap_symbols

FLOAT_WINDOW = 64
TAIL_BITS = 48
TAIL_PERIOD = 16


@dataclass(frozen=True)
class DyadicPoint:
    path: Path

    @classmethod
    def from_bits(cls, text: str) -> "DyadicPoint":
        return cls(Path.parse(text))

    @cached_property
    def value(self) -> float:
        w = self.path.window(FLOAT_WINDOW)
        return int(w, 2) / (1 << FLOAT_WINDOW)

    def exact(self, window: int = FLOAT_WINDOW) -> Fraction:
        return Fraction(int(self.path.window(window), 2), 1 << window)

    @property
    def is_dyadic(self) -> bool:
        """Eventually constant expansions are exactly the dyadic rationals."""
        return self.path.base.constant is not None

    def __float__(self) -> float:
        return self.value


def binomial_map(x: DyadicPoint) -> DyadicPoint:
    if x.is_dyadic:
        raise DyadicRational(f"T_b is undefined at the dyadic rational {x.path}")
    return DyadicPoint(adic_step(x.path))


def reflect(x: DyadicPoint) -> DyadicPoint:
    """1 - x."""
    return DyadicPoint(swap_symbols(x.path))


def stacking_image(x: DyadicPoint) -> Fraction:
    """T_b x on a 64-bit window via the stack picture: find the first stage at
    which x is not on a top level and translate one level up."""
    if x.is_dyadic:
        raise DyadicRational(f"T_b is undefined at the dyadic rational {x.path}")
    w = x.path.window(FLOAT_WINDOW)
    for n in range(1, FLOAT_WINDOW + 1):
        up = finite_successor(w[:n])
        if up is not None:
            shift = Fraction(int(up, 2) - int(w[:n], 2), 1 << n)
            return x.exact() + shift
    raise ValueError("point stays on top levels through the whole window")


# -- plot ---------------------------------------------------------------------


def _tops(n: int) -> set:
    return {"0" * a + "1" * (n - a) for a in range(n + 1)}


def _partner(w: str, tops: set) -> str:
    """The stage-n interval that x -> 1 - T_b x maps [w] onto."""
    if w in tops:
        a = len(w) - len(w.lstrip("0"))
        return "0" * (len(w) - a) + "1" * a
    return finite_successor(w).translate(str.maketrans("01", "10"))


def _tails(rng: random.Random, count: int, lead: str) -> list[Path]:
    """``count`` tails closed under complement, each starting with ``lead``."""
    out = []
    for _ in range(count // 2):
        bits = lead + "".join(rng.choice("01") for _ in range(TAIL_BITS))
        cyc = "".join(rng.choice("01") for _ in range(TAIL_PERIOD))
        while Cyclic(cyc).constant is not None:
            cyc = "".join(rng.choice("01") for _ in range(TAIL_PERIOD))
        p = Path(bits, Cyclic(cyc))
        out += [p, swap_symbols(p) if not lead else Path(lead + swap_symbols(p).override[len(lead) :], p.base.complement())]
    return out


def plot_samples(n: int, samples_per_interval: int, seed: int = 0) -> list[DyadicPoint]:
    """Sample points, ``samples_per_interval`` in each stage-n interval.

    The sample set is mapped onto itself by x -> 1 - T_b x, so the emitted
    graph is symmetric about y = 1 - x.  That needs an even sample count.
    """
    if not 1 <= n <= 16:
        raise ValueError("stage must satisfy 1 <= n <= 16")
    if samples_per_interval < 2 or samples_per_interval % 2:
        raise ValueError("samples_per_interval must be a positive even number")
    tops = _tops(n)
    pts = []
    for v in range(1 << n):
        w = format(v, f"0{n}b")
        key = min(w, _partner(w, tops))
        rng = random.Random(f"{seed}:{n}:{key}")
        # Top intervals: a tail starting 10 keeps x -> 1 - T_b x inside the top levels.
        lead = "10" if w in tops else ""
        for t in _tails(rng, samples_per_interval, lead):
            pts.append(DyadicPoint(t.prefixed(w)))
    return pts


def plot_points(n: int, samples_per_interval: int, seed: int = 0) -> list[tuple[float, float]]:
    """(x, T_b x) pairs sorted by x."""
    pts = [(p.value, binomial_map(p).value) for p in plot_samples(n, samples_per_interval, seed)]
    pts.sort()
    return pts


def points_to_csv(points) -> str:
    buf = io.StringIO()
    buf.write("x,y\n")
    for x, y in points:
        buf.write(f"{x:.17g},{y:.17g}\n")
    return buf.getvalue()


def points_from_csv(text: str) -> list[tuple[float, float]]:
    lines = text.strip().splitlines()
    if not lines or lines[0] != "x,y":
        raise ValueError("expected header x,y")
    return [tuple(float(v) for v in ln.split(",")) for ln in lines[1:]]


def points_to_svg(points, size: int = 800) -> str:
    dots = "\n".join(
        f'<circle cx="{x * size:.3f}" cy="{(1 - y) * size:.3f}" r="0.8"/>' for x, y in points
    )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" preserveAspectRatio="xMidYMid meet">\n'
        f'<rect width="{size}" height="{size}" fill="white" stroke="black"/>\n'
        f'<g fill="black">\n{dots}\n</g>\n</svg>\n'
    )


def check_plot(points, n: int, tol: float = 1e-12) -> bool:
    """Translation consistency: off the top levels, y - x is the stage-n shift of x's interval."""
    tops = _tops(n)
    for x, y in points:
        v = int(x * (1 << n))
        w = format(v, f"0{n}b")
        if w in tops:
            continue
        shift = (int(finite_successor(w), 2) - v) / (1 << n)
        if abs(y - x - shift) > tol:
            return False
    return True


def is_symmetric(points, tol: float = 1e-12) -> bool:
    """The reflected set {(1 - y, 1 - x)} matches the set itself."""
    a = sorted(points)
    b = sorted((1 - y, 1 - x) for x, y in points)
    return len(a) == len(b) and all(abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol for p, q in zip(a, b))


# -- stacks -----------------------------------------------------------------------


@dataclass(frozen=True)
class Stack:
    """Stack k at stage n: C(n, k) levels of width 2^-n, bottom [1^k 0^(n-k)]."""

    n: int
    k: int

    @property
    def height(self) -> int:
        return binom(self.n, self.k)

    @property
    def width(self) -> Fraction:
        return Fraction(1, 1 << self.n)

    @property
    def bottom(self) -> str:
        return minimal_word(self.n, self.k)

    @property
    def top(self) -> str:
        return "0" * (self.n - self.k) + "1" * self.k

    def levels(self) -> Iterator[str]:
        w = self.bottom
        while w is not None:
            yield w
            w = finite_successor(w)

    def intervals(self) -> Iterator[tuple[Fraction, Fraction]]:
        for w in self.levels():
            lo = Fraction(int(w, 2), 1 << self.n) if w else Fraction(0)
            yield lo, lo + self.width


def stack_structure(n: int) -> list[Stack]:
    if not 1 <= n <= 20:
        raise ValueError("stage must satisfy 1 <= n <= 20")
    return [Stack(n, k) for k in range(n + 1)]


def measure_preservation_check(n: int) -> bool:
    """Off the top levels T_b moves each width-2^-n level onto the one above it
    by a translation; the images are then exactly the non-bottom levels."""
    probe = Cyclic("0110")
    images, expected = [], []
    for s in stack_structure(n):
        lv = list(s.levels())
        if len(lv) != s.height or lv[-1] != s.top:
            return False
        for lower, upper in zip(lv, lv[1:]):
            x = Path(lower, probe)
            y = adic_step(x)
            # Translation: only the first n coordinates change.
            if y.window(n + 8)[n:] != x.window(n + 8)[n:]:
                return False
            images.append(y.window(n))
            expected.append(upper)
    non_bottom = [format(v, f"0{n}b") for v in range(1 << n)]
    bottoms = {s.bottom for s in stack_structure(n)}
    non_bottom = sorted(w for w in non_bottom if w not in bottoms)
    return images == expected and sorted(images) == non_bottom
