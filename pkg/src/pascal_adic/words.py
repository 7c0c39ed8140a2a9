"""The Pascal triangle of words.

Basic words live at vertices (n, k), 0 <= k <= n, n >= 1::

    B(n, n) = b,   B(n, 0) = a,   B(n, k) = B(n-1, k) B(n-1, k-1)

so |B(n, k)| = C(n, k).  Words are plain ``str`` over ``{'a', 'b'}``.  Nothing
here materializes a basic word unless asked to: symbol access, prefixes,
suffixes and occurrence counts all descend the recurrence instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combin import binom
from .errors import (
    IndexOutOfRange,
    LengthTooLarge,
    MaximalPath,
    MinimalPath,
    OrbitEndsWithin,
    TooLarge,
)
from .path import HORIZON, Path, adic_inverse_step, adic_step

MATERIALIZATION_CAP = 10**6

SYMBOL = {"0": "a", "1": "b"}


def check_word(w: str) -> str:
    if w.strip("ab"):
        raise ValueError(f"not a word over {{a,b}}: {w!r}")
    return w


def _check_vertex(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no basic word at vertex ({n}, {k})")


@lru_cache(maxsize=2048)
def _build(n: int, k: int) -> str:
    if k == n:
        return "b"
    if k == 0:
        return "a"
    return _build(n - 1, k) + _build(n - 1, k - 1)


def basic_word(n: int, k: int, cap: int = MATERIALIZATION_CAP) -> str:
    _check_vertex(n, k)
    size = binom(n, k)
    if size > cap:
        raise TooLarge(f"|B({n},{k})| = {size} exceeds cap {cap}")
    return _build(n, k)


def basic_symbol(n: int, k: int, i: int) -> str:
    """B(n, k)[i] by index descent: the left factor B(n-1, k) holds indices < C(n-1, k)."""
    _check_vertex(n, k)
    if not 0 <= i < binom(n, k):
        raise IndexOutOfRange(f"index {i} outside B({n},{k}) of length {binom(n, k)}")
    while 0 < k < n:
        left = binom(n - 1, k)
        if i >= left:
            i -= left
            k -= 1
        n -= 1
    return "b" if k == n else "a"


def basic_prefix(n: int, k: int, length: int, cap: int = MATERIALIZATION_CAP) -> str:
    _check_vertex(n, k)
    if length > binom(n, k):
        raise LengthTooLarge(f"prefix of length {length} from B({n},{k}) of length {binom(n, k)}")
    if length > cap:
        raise TooLarge(f"prefix length {length} exceeds cap {cap}")
    out = []
    while length > 0:
        if k == 0 or k == n:
            out.append("b" if k == n else "a")
            break
        left = binom(n - 1, k)
        if length <= left:
            n -= 1
            continue
        out.append(_build(n - 1, k))
        length -= left
        n, k = n - 1, k - 1
    return "".join(out)


def basic_suffix(n: int, k: int, length: int, cap: int = MATERIALIZATION_CAP) -> str:
    _check_vertex(n, k)
    if length > binom(n, k):
        raise LengthTooLarge(f"suffix of length {length} from B({n},{k}) of length {binom(n, k)}")
    if length > cap:
        raise TooLarge(f"suffix length {length} exceeds cap {cap}")
    out = []
    while length > 0:
        if k == 0 or k == n:
            out.append("b" if k == n else "a")
            break
        right = binom(n - 1, k - 1)
        if length <= right:
            n, k = n - 1, k - 1
            continue
        out.append(_build(n - 1, k - 1))
        length -= right
        n -= 1
    return "".join(reversed(out))


class EndTable:
    """Prefixes and suffixes of every basic word, truncated to ``width``.

    Rows are built level by level on demand; entry (n, k) is the first
    (resp. last) min(width, C(n, k)) symbols of B(n, k).
    """

    def __init__(self, width: int):
        if width < 0:
            raise ValueError("width must be >= 0")
        self.width = width
        w = width
        self._pre = [None, ["a"[:w], "b"[:w]]]
        self._suf = [None, ["a"[:w], "b"[:w]]]

    @property
    def levels(self) -> int:
        return len(self._pre) - 1

    def extend(self, n: int) -> None:
        w = self.width
        while len(self._pre) <= n:
            pp, sp = self._pre[-1], self._suf[-1]
            l = len(pp)
            pre = ["a"[:w]]
            suf = ["a"[:w]]
            for j in range(1, l):
                left = pp[j]
                pre.append(left if len(left) >= w else (left + pp[j - 1])[:w])
                right = sp[j - 1]
                suf.append(right if len(right) >= w else (sp[j] + right)[max(0, len(sp[j]) + len(right) - w) :])
            pre.append("b"[:w])
            suf.append("b"[:w])
            self._pre.append(pre)
            self._suf.append(suf)

    def prefix(self, n: int, k: int) -> str:
        self.extend(n)
        return self._pre[n][k]

    def suffix(self, n: int, k: int) -> str:
        self.extend(n)
        return self._suf[n][k]

    def join(self, n: int, k: int) -> str:
        """suffix(B(n-1, k)) + prefix(B(n-1, k-1)): every window of length
        width+1 here straddles the concatenation point inside B(n, k)."""
        self.extend(n - 1)
        return self._suf[n - 1][k] + self._pre[n - 1][k - 1]


def occurrences(block: str, word: str) -> int:
    """Number of (overlapping) positions where ``block`` occurs in ``word``."""
    if not block:
        raise ValueError("block must be nonempty")
    count = 0
    i = word.find(block)
    while i >= 0:
        count += 1
        i = word.find(block, i + 1)
    return count


class OccurrenceCounter:
    """Recursive occurrence counts a(B, n, k) = a(n-1, k) + a(n-1, k-1) + joins.

    Memoized on (n, k) for one block; independent of any closed form.
    """

    def __init__(self, block: str):
        check_word(block)
        if not block:
            raise ValueError("block must be nonempty")
        self.block = block
        self.ends = EndTable(len(block) - 1)
        self._rows: list[list[int]] = [[]]
        self._at_a = 1 if block == "a" else 0
        self._at_b = 1 if block == "b" else 0

    def created(self, n: int, k: int) -> int:
        """Occurrences in B(n, k) that straddle its concatenation point."""
        if k == 0 or k == n or len(self.block) == 1:
            return 0
        return occurrences(self.block, self.ends.join(n, k))

    def _extend(self, n: int) -> None:
        while len(self._rows) <= n:
            l = len(self._rows)
            if l == 1:
                self._rows.append([self._at_a, self._at_b])
                continue
            prev = self._rows[-1]
            row = [self._at_a]
            for j in range(1, l):
                row.append(prev[j] + prev[j - 1] + self.created(l, j))
            row.append(self._at_b)
            self._rows.append(row)

    def count(self, n: int, k: int) -> int:
        _check_vertex(n, k)
        self._extend(n)
        return self._rows[n][k]

    def row(self, n: int) -> list[int]:
        self._extend(n)
        return list(self._rows[n])


def count_in_basic(block: str, n: int, k: int) -> int:
    return OccurrenceCounter(block).count(n, k)


@dataclass(frozen=True)
class BasicWordRef:
    """Lazy handle on B(n, k)."""

    n: int
    k: int

    def __post_init__(self):
        _check_vertex(self.n, self.k)

    def __len__(self) -> int:
        return binom(self.n, self.k)

    @property
    def length(self) -> int:
        return binom(self.n, self.k)

    def __getitem__(self, i: int) -> str:
        return basic_symbol(self.n, self.k, i)

    def prefix(self, length: int) -> str:
        return basic_prefix(self.n, self.k, length)

    def suffix(self, length: int) -> str:
        return basic_suffix(self.n, self.k, length)

    def materialize(self, cap: int = MATERIALIZATION_CAP) -> str:
        return basic_word(self.n, self.k, cap)

    def count(self, block: str) -> int:
        return count_in_basic(block, self.n, self.k)


# -- coding of adic orbits -----------------------------------------------------


def forward_code(x: Path, length: int, horizon: int = HORIZON) -> str:
    """omega_0 ... omega_{length-1}: 'a' when (T^i x)_1 = 0, 'b' when it is 1."""
    out = []
    for i in range(length):
        if i:
            try:
                x = adic_step(x, horizon)
            except MaximalPath:
                raise OrbitEndsWithin(length - 1, "forward") from None
        out.append(SYMBOL[x.bit(1)])
    return "".join(out)


def code_window(x: Path, radius: int, horizon: int = HORIZON) -> str:
    """omega_{-R} ... omega_R of the coding of the orbit of x."""
    fwd = forward_code(x, radius + 1, horizon)
    back = []
    y = x
    for _ in range(radius):
        try:
            y = adic_inverse_step(y, horizon)
        except MinimalPath:
            raise OrbitEndsWithin(radius, "backward") from None
        back.append(SYMBOL[y.bit(1)])
    return "".join(reversed(back)) + fwd
