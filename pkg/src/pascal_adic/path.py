"""Infinite paths in the Pascal graph and the adic transformation.

A path is the 0/1 sequence of its edge labels, x_1 x_2 x_3 ...  It is stored
as a finite *override* prefix sitting over a *base rule* that supplies every
later coordinate.  The adic map only ever rewrites a finite prefix, so every
operation here is exact.

Coordinates are 1-based throughout, matching the usual x_1 x_2 ... notation;
``Path.window(n)`` returns x_1 ... x_n as a string.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import (
    HorizonExceeded,
    MaximalPath,
    MinimalPath,
    NoKink,
    Undecidable,
)

HORIZON = 1 << 16

_FLIP = str.maketrans("01", "10")


def _flip(bits: str) -> str:
    return bits.translate(_FLIP)


def _check_bits(bits: str) -> None:
    if bits.strip("01"):
        raise ValueError(f"not a 0/1 word: {bits!r}")


# -- base rules -----------------------------------------------------------


@dataclass(frozen=True)
class AllZeros:
    constant = "0"

    def bit(self, i: int) -> str:
        return "0"

    def bits(self, start: int, stop: int) -> str:
        return "0" * max(0, stop - start + 1)

    def complement(self) -> "AllOnes":
        return AllOnes()

    def shift(self, p: int) -> "AllZeros":
        return self

    def tag(self) -> str:
        return "zeros"


@dataclass(frozen=True)
class AllOnes:
    constant = "1"

    def bit(self, i: int) -> str:
        return "1"

    def bits(self, start: int, stop: int) -> str:
        return "1" * max(0, stop - start + 1)

    def complement(self) -> AllZeros:
        return AllZeros()

    def shift(self, p: int) -> "AllOnes":
        return self

    def tag(self) -> str:
        return "ones"


@dataclass(frozen=True)
class Cyclic:
    """Coordinate i carries ``word[(i - 1) % len(word)]`` (absolute indexing)."""

    word: str

    def __post_init__(self):
        if not self.word:
            raise ValueError("cyclic word must be nonempty")
        _check_bits(self.word)

    @property
    def constant(self) -> Optional[str]:
        return self.word[0] if self.word.count(self.word[0]) == len(self.word) else None

    def bit(self, i: int) -> str:
        return self.word[(i - 1) % len(self.word)]

    def bits(self, start: int, stop: int) -> str:
        if stop < start:
            return ""
        L = len(self.word)
        off = (start - 1) % L
        reps = (stop - start + 1 + off) // L + 1
        return (self.word * reps)[off : off + stop - start + 1]

    def complement(self) -> "Cyclic":
        return Cyclic(_flip(self.word))

    def shift(self, p: int) -> "Cyclic":
        # Cyclic base seen from a path with p extra leading coordinates.
        L = len(self.word)
        r = p % L
        return Cyclic(self.word[L - r :] + self.word[: L - r]) if r else self

    def tag(self) -> str:
        return f"cyc={self.word}"


@dataclass(frozen=True)
class RunLengthProgram:
    """Non-periodic tail: ``mark`` at the listed coordinates, its complement elsewhere.

    After the last listed coordinate the marks continue with gaps growing by
    one (starting from the last listed gap plus one), so the sequence never
    becomes constant and never becomes periodic.
    """

    positions: tuple
    mark: str = "0"

    def __post_init__(self):
        pos = tuple(int(p) for p in self.positions)
        object.__setattr__(self, "positions", pos)
        if not pos or pos[0] < 1 or any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError("positions must be a nonempty increasing sequence of coordinates >= 1")
        if self.mark not in ("0", "1"):
            raise ValueError("mark must be '0' or '1'")
        object.__setattr__(self, "_set", frozenset(pos))

    constant = None

    @property
    def _gap(self) -> int:
        p = self.positions
        return p[-1] - p[-2] if len(p) > 1 else 1

    def is_marked(self, i: int) -> bool:
        last = self.positions[-1]
        if i <= last:
            return i in self._set
        # last + m*g + m(m+1)/2 == i for some m >= 1
        g = self._gap
        d = i - last
        disc = (2 * g + 1) ** 2 + 8 * d
        s = math.isqrt(disc)
        return s * s == disc and (s - (2 * g + 1)) % 2 == 0

    def bit(self, i: int) -> str:
        other = "1" if self.mark == "0" else "0"
        return self.mark if self.is_marked(i) else other

    def bits(self, start: int, stop: int) -> str:
        return "".join(self.bit(i) for i in range(start, stop + 1))

    def complement(self) -> "RunLengthProgram":
        return RunLengthProgram(self.positions, "1" if self.mark == "0" else "0")

    def shift(self, p: int) -> "RunLengthProgram":
        return RunLengthProgram(tuple(q + p for q in self.positions), self.mark)

    def tag(self) -> str:
        name = "rlp" if self.mark == "0" else "rlp1"
        return f"{name}={','.join(map(str, self.positions))}"


BaseRule = Union[AllZeros, AllOnes, Cyclic, RunLengthProgram]


def cyclic(word: str) -> BaseRule:
    """Cyclic base rule, collapsed to a constant rule when the word is constant."""
    base = Cyclic(word)
    if base.constant == "0":
        return AllZeros()
    if base.constant == "1":
        return AllOnes()
    return base


# -- paths ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Path:
    override: str = ""
    base: BaseRule = AllZeros()

    def __post_init__(self):
        _check_bits(self.override)

    def bit(self, i: int) -> str:
        if i < 1:
            raise IndexError("coordinates start at 1")
        if i <= len(self.override):
            return self.override[i - 1]
        return self.base.bit(i)

    def window(self, n: int) -> str:
        """x_1 ... x_n."""
        L = len(self.override)
        if n <= L:
            return self.override[:n]
        return self.override + self.base.bits(L + 1, n)

    def with_prefix(self, bits: str) -> "Path":
        """Same path with coordinates 1..len(bits) replaced by ``bits``."""
        if len(bits) >= len(self.override):
            return Path(bits, self.base)
        return Path(bits + self.override[len(bits) :], self.base)

    def prefixed(self, bits: str) -> "Path":
        """The path ``bits`` followed by all coordinates of ``self``."""
        _check_bits(bits)
        return Path(bits + self.override, self.base.shift(len(bits)))

    def canonical(self) -> tuple:
        base = self.base
        if isinstance(base, Cyclic):
            base = cyclic(base.word)
        ov = self.override
        while ov and ov[-1] == base.bit(len(ov)):
            ov = ov[:-1]
        return ov, base

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __str__(self):
        return f"{self.override}:{self.base.tag()}"

    def __repr__(self):
        return f"Path({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Path":
        """Parse ``<bits>:<tag>`` with tag ``zeros``, ``ones``, ``cyc=<bits>``,
        ``rlp=<ints>`` or ``rlp1=<ints>``."""
        bits, sep, tag = text.strip().partition(":")
        if not sep:
            raise ValueError(f"missing tail tag in {text!r}")
        if tag == "zeros":
            base: BaseRule = AllZeros()
        elif tag == "ones":
            base = AllOnes()
        elif tag.startswith("cyc="):
            base = Cyclic(tag[4:])
        elif tag.startswith("rlp=") or tag.startswith("rlp1="):
            name, _, ints = tag.partition("=")
            base = RunLengthProgram(tuple(int(s) for s in ints.split(",")), "0" if name == "rlp" else "1")
        else:
            raise ValueError(f"unknown tail tag {tag!r}")
        return cls(bits, base)


# -- the adic map -----------------------------------------------------------


def _locate(x: Path, lead: str, horizon: int, extremal_error: type) -> tuple[int, int]:
    """Find x = lead^i other^(j-i) lead ...; return (i, j) with 0-based j.

    Raises ``extremal_error`` when the path provably has no such pattern.
    """
    other = "1" if lead == "0" else "0"
    const = x.base.constant
    L = max(len(x.override) + 2, 64)
    while True:
        L = min(L, horizon)
        w = x.window(L)
        i = w.find(other)
        if i >= 0:
            j = w.find(lead, i)
            if j >= 0:
                return i, j
        if const is not None and L > len(x.override):
            # The undecided remainder is a constant tail: the run never ends.
            raise extremal_error(f"{x} has no {other}{lead} after its leading runs")
        if L >= horizon:
            raise HorizonExceeded(f"no {other}{lead} pattern within {horizon} coordinates")
        L *= 2


def adic_step(x: Path, horizon: int = HORIZON) -> Path:
    """T(0^n 1^m 1 0 x') = 1^m 0^n 0 1 x'."""
    i, j = _locate(x, "0", horizon, MaximalPath)
    return x.with_prefix("1" * (j - i - 1) + "0" * (i + 1) + "1")


def adic_inverse_step(x: Path, horizon: int = HORIZON) -> Path:
    """T^-1(1^m 0^n 0 1 x') = 0^n 1^m 1 0 x'."""
    i, j = _locate(x, "1", horizon, MinimalPath)
    return x.with_prefix("0" * (j - i - 1) + "1" * (i + 1) + "0")


def swap_symbols(x: Path) -> Path:
    return Path(_flip(x.override), x.base.complement())


def k_level(x: Path, n: int) -> int:
    """Number of 1-labels among x_1 ... x_n."""
    if n < 0:
        raise ValueError("level must be >= 0")
    return x.window(n).count("1")


def kink_power(x: Path, n: int) -> Path:
    """T^C(n, k_n(x)) x for a path with x_{n+1} x_{n+2} = 10, without iterating.

    The result flips the kink to 01 and leaves every other coordinate alone.
    """
    w = x.window(n + 2)
    if w[n:] != "10":
        raise NoKink(f"coordinates {n + 1},{n + 2} are {w[n:]!r}, not '10'")
    return x.with_prefix(w[:n] + "01")


def iterate(x: Path, steps: int, horizon: int = HORIZON) -> Path:
    """T^steps x (negative steps use the inverse)."""
    f = adic_step if steps >= 0 else adic_inverse_step
    for _ in range(abs(steps)):
        x = f(x, horizon)
    return x


def orbit(x: Path, horizon: int = HORIZON) -> Iterator[Path]:
    """x, Tx, T^2 x, ... until a maximal path is reached."""
    while True:
        yield x
        try:
            x = adic_step(x, horizon)
        except MaximalPath:
            return


def finite_successor(word: str) -> Optional[str]:
    """Successor of a finite path among paths to the same vertex, or None at the top."""
    i = word.find("1")
    if i < 0:
        return None
    j = word.find("0", i)
    if j < 0:
        return None
    return "1" * (j - i - 1) + "0" * (i + 1) + "1" + word[j + 1 :]


def minimal_word(n: int, k: int) -> str:
    """1^k 0^(n-k), the first finite path to (n, k)."""
    return "1" * k + "0" * (n - k)


# -- extremal paths -----------------------------------------------------------


@dataclass(frozen=True)
class ExtremalClass:
    """``kind`` is 'maximal', 'minimal' or 'neither'; ``index`` is i in
    0^i 1^oo (inf for 1^oo, 0 for 0^oo) or in 1^i 0^oo."""

    kind: str
    index: Optional[float] = None

    @classmethod
    def maximal(cls, i) -> "ExtremalClass":
        return cls("maximal", i)

    @classmethod
    def minimal(cls, i) -> "ExtremalClass":
        return cls("minimal", i)

    @classmethod
    def neither(cls) -> "ExtremalClass":
        return cls("neither")


def classify_extremal(x: Path, depth: int = 256) -> ExtremalClass:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    c = x.base.constant
    if c is not None:
        w = x.override
        if c == "1":
            i = len(w) - len(w.lstrip("0"))
            if "0" not in w[i:]:
                return ExtremalClass.maximal(i if i > 0 else math.inf)
            return ExtremalClass.neither()
        if "1" not in w:
            return ExtremalClass.maximal(0)
        i = len(w) - len(w.lstrip("1"))
        if "1" not in w[i:]:
            return ExtremalClass.minimal(i)
        return ExtremalClass.neither()
    w = x.window(max(depth, len(x.override)))
    if "10" in w and "01" in w:
        return ExtremalClass.neither()
    raise Undecidable(f"depth {depth} does not settle {x}")


# -- sampling ---------------------------------------------------------------


def sample_path(p: float, window: int, seed: int, period: int = 64) -> Path:
    """A path whose override is ``window`` i.i.d. bits (0 with probability p)
    over a fresh non-constant i.i.d. cyclic tail."""
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    if window < 1:
        raise ValueError("window must be >= 1")
    rng = random.Random(seed)

    def draw(n):
        return "".join("0" if rng.random() < p else "1" for _ in range(n))

    bits = draw(window)
    tail = draw(period)
    while Cyclic(tail).constant is not None:
        tail = draw(period)
    return Path(bits, Cyclic(tail))
