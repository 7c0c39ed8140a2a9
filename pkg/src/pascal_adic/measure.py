"""Where a block is first made, how often it occurs afterwards, and its measure.

Convention: alpha is the mass of edge label 1, i.e. of symbol ``b``, so that
the basic word B(n, k) has measure alpha^k (1 - alpha)^(n - k).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .combin import binom
from .errors import NotInLanguage
from .words import EndTable, OccurrenceCounter, basic_word, check_word


def _check_alpha(alpha: float) -> float:
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    return alpha


def first_appearance(block: str, counter: OccurrenceCounter | None = None) -> tuple[int, int]:
    """The vertex (n0, k0) at which ``block`` is first made.

    Every later occurrence lies in the triangle (n0 + i, k0 + j), 0 <= j <= i,
    and nothing new appears past level |block| + 2, so the scan stops there.
    """
    check_word(block)
    if not block:
        raise ValueError("block must be nonempty")
    counter = counter or OccurrenceCounter(block)
    for n in range(1, len(block) + 3):
        row = counter.row(n)
        hits = [k for k, c in enumerate(row) if c]
        if hits:
            if len(hits) != 1:
                raise AssertionError(f"{block!r} first appears at several vertices of level {n}: {hits}")
            return n, hits[0]
    raise NotInLanguage(f"{block!r} does not occur by level {len(block) + 2}")


@dataclass(frozen=True)
class AppearanceClass:
    block: str
    case_id: int
    first_vertex: tuple

    @property
    def i0(self) -> int:
        n0, k0 = self.first_vertex
        return n0 - k0 - 1

    @property
    def j0(self) -> int:
        return self.first_vertex[1] - 1


def _is_case3(block: str, n0: int, k0: int) -> bool:
    if n0 - 2 < 1 or not 0 <= k0 - 1 <= n0 - 2:
        return False
    if binom(n0 - 2, k0 - 1) > len(block):
        return False
    core = basic_word(n0 - 2, k0 - 1)
    i0, j0 = n0 - k0 - 1, k0 - 1
    for i in range(i0):
        head = "a" * i + core
        if block.startswith(head):
            tail = block[len(head) :]
            if len(tail) < j0 and tail == "b" * len(tail):
                return True
    return False


def _split_at_join(block: str, n0: int, k0: int) -> tuple[str, str]:
    w = len(block) - 1
    ends = EndTable(w)
    joint = ends.join(n0, k0)
    cut = len(ends.suffix(n0 - 1, k0))
    for start in range(max(0, cut - w), cut):
        if joint.startswith(block, start):
            return block[: cut - start], block[cut - start :]
    raise AssertionError(f"{block!r} is not made at {(n0, k0)}")


def classify_block(block: str) -> AppearanceClass:
    """Assign one of the five triangle-of-appearance shapes.

    Order: 1 (a^i0 b^j0) and 2 (telltale b a^i0 b^j0 a) are syntactic; 3 is
    tested before 4 and 5 because those exclude it.
    """
    n0, k0 = first_appearance(block)
    i0, j0 = n0 - k0 - 1, k0 - 1
    if len(block) == 1:
        # 'a' = B(1,0) and 'b' = B(1,1) are basic words: plain Pascal triangle.
        case = 2
    elif block == "a" * i0 + "b" * j0:
        case = 1
    elif "b" + "a" * i0 + "b" * j0 + "a" in block:
        case = 2
    elif _is_case3(block, n0, k0):
        case = 3
    else:
        # Split B at the concatenation point of B(n0, k0).
        left, right = _split_at_join(block, n0, k0)
        if not right.strip("b"):
            case = 4
        elif not left.strip("a"):
            case = 5
        else:
            raise AssertionError(f"{block!r} at {(n0, k0)} fits none of the five cases")
    return AppearanceClass(block, case, (n0, k0))


def _count_from_class(cls: AppearanceClass, n: int, k: int) -> int:
    n0, k0 = cls.first_vertex
    if not (n >= n0 and k0 <= k <= k0 + (n - n0)):
        return 0
    c = cls.case_id
    if c == 1:
        return binom(n - n0 + 2, k - k0 + 1) - 1
    if c == 2:
        return binom(n - n0, k - k0)
    if c == 3:
        return binom(n - n0 + 2, k - k0 + 1)
    if c == 4:
        return binom(n - n0 + 1, k - k0)
    return binom(n - n0 + 1, k - k0 + 1)


def appearance_count(block: str, n: int, k: int, cls: AppearanceClass | None = None) -> int:
    """a(block, n, k) from the closed form of the block's case; 0 outside its triangle."""
    cls = cls or classify_block(block)
    return _count_from_class(cls, n, k)


def _measure_from_class(cls: AppearanceClass, alpha: float) -> float:
    n0, k0 = cls.first_vertex
    c = cls.case_id
    # (power of alpha, power of 1-alpha)
    s, t = {
        1: (k0 - 1, n0 - k0 - 1),
        2: (k0, n0 - k0),
        3: (k0 - 1, n0 - k0 - 1),
        4: (k0, n0 - k0 - 1),
        5: (k0 - 1, n0 - k0),
    }[c]
    return alpha**s * (1 - alpha) ** t


def block_measure(block: str, alpha: float, cls: AppearanceClass | None = None) -> float:
    """nu_alpha([block])."""
    _check_alpha(alpha)
    return _measure_from_class(cls or classify_block(block), alpha)


def ray_k(alpha: float, n: int) -> int:
    """k_n = round(alpha n), clamped to [0, n]."""
    return min(n, max(0, floor(alpha * n + 0.5)))


def freq_along_ray(block: str, alpha: float, n: int, cls: AppearanceClass | None = None) -> Fraction:
    """a(block, n, k_n) / C(n, k_n) exactly, with k_n = round(alpha n)."""
    _check_alpha(alpha)
    k = ray_k(alpha, n)
    return Fraction(appearance_count(block, n, k, cls), binom(n, k))


def cylinder_measure(alpha: float, prefix: str) -> float:
    """mu([prefix]) with label 1 of mass alpha and label 0 of mass 1 - alpha."""
    if prefix.strip("01"):
        raise ValueError(f"not a 0/1 word: {prefix!r}")
    return alpha ** prefix.count("1") * (1 - alpha) ** prefix.count("0")


def factor_count(n: int, k: int, m: int) -> int:
    """D(n, k): number of level-m basic words in the factorization of B(n, k)."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    if k == 0 or k == n:
        return 1
    return sum(binom(n - m, k - j) for j in range(m + 1))


def block_report(block: str, alphas=(0.25, 0.5, 0.75), depth: int = 4) -> dict:
    """JSON-ready summary: case, first vertex, a few triangle rows, measures."""
    cls = classify_block(block)
    n0, k0 = cls.first_vertex
    counts = [
        [n, k, appearance_count(block, n, k, cls)]
        for n in range(n0, n0 + depth)
        for k in range(k0 + (n - n0), k0 - 1, -1)
    ]
    return {
        "block": block,
        "case_id": cls.case_id,
        "first_vertex": [n0, k0],
        "counts": counts,
        "measure_at": [[a, block_measure(block, a, cls)] for a in alphas],
    }


def block_report_json(block: str, **kw) -> str:
    return json.dumps(block_report(block, **kw), indent=2)
