"""Exact complexity function p_n of the basic-word subshift.

Every length-n factor of a basic word either sits inside one of its two
halves or straddles the concatenation point, and all n-blocks have shown up
by level n+2.  So the language of n-blocks is the union, over the vertices
(l, j) with l <= n+2, of the windows crossing the join of B(l-1, j) and
B(l-1, j-1).  Only (n-1)-symbol ends of basic words are ever built.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .combin import binom
from .errors import TooLarge
from .words import MATERIALIZATION_CAP, EndTable, basic_word

_TO_BITS = str.maketrans("ab", "01")


def join_windows(ends: EndTable, n: int, l: int, j: int) -> list[str]:
    """Length-n windows of B(l, j) that cross its concatenation point."""
    s = ends.join(l, j)
    return [s[i : i + n] for i in range(len(s) - n + 1)]


@dataclass
class BlockSet:
    """Distinct n-blocks with the level where each first appears."""

    n: int
    levels: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.levels)

    def __contains__(self, w):
        return w in self.levels

    def __iter__(self):
        return iter(sorted(self.levels))

    def new_at(self, level: int) -> set:
        return {w for w, l in self.levels.items() if l == level}


def distinct_subblocks(n: int) -> BlockSet:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = BlockSet(n)
    if n == 1:
        out.levels.update({"a": 1, "b": 1})
    ends = EndTable(n - 1)
    levels = out.levels
    for l in range(2, n + 3):
        for j in range(1, l):
            for w in join_windows(ends, n, l, j):
                if w not in levels:
                    levels[w] = l
    return out


def new_blocks_at(n: int, level: int, ks) -> set:
    """n-blocks that first appear at ``level`` inside one of the B(level, k), k in ks."""
    if level < 2:
        raise ValueError("joins start at level 2")
    known = distinct_subblocks(n).levels
    ends = EndTable(n - 1)
    found = set()
    for k in ks:
        if 1 <= k < level:
            found.update(w for w in join_windows(ends, n, level, k) if known[w] == level)
    return found


def complexity_pn(n: int) -> int:
    """p_n, the number of distinct n-blocks in the language."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 2
    # Same enumeration as distinct_subblocks, deduplicated as n-bit integers.
    ends = EndTable(n - 1)
    mask = (1 << n) - 1
    seen: set[int] = set()
    add = seen.add
    for l in range(2, n + 3):
        ends.extend(l - 1)
        for j in range(1, l):
            s = ends.join(l, j)
            span = len(s) - n
            if span < 0:
                continue
            v = int(s.translate(_TO_BITS), 2)
            for shift in range(span + 1):
                add((v >> shift) & mask)
    return len(seen)


def complexity_brute(n: int, cap: int = MATERIALIZATION_CAP) -> int:
    """p_n by materializing every basic word at level n+2 and windowing it."""
    if n < 1:
        raise ValueError("n must be >= 1")
    level = n + 2
    if binom(level, level // 2) > cap:
        raise TooLarge(f"level {level} words exceed cap {cap}")
    seen = set()
    for k in range(level + 1):
        w = basic_word(level, k, cap)
        seen.update(w[i : i + n] for i in range(len(w) - n + 1))
    return len(seen)


def default_schedule(n_max: int) -> list[int]:
    ns = set(range(1, min(n_max, 10) + 1))
    ns.update(range(20, min(n_max, 100) + 1, 10))
    ns.update(range(150, n_max + 1, 50))
    ns.add(n_max)
    return sorted(ns)


@dataclass
class ComplexityRow:
    n: int
    p_n: int
    ratio: float


def complexity_report(n_max: int, schedule=None) -> list[ComplexityRow]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ns = default_schedule(n_max) if schedule is None else sorted(set(schedule))
    rows = []
    for n in ns:
        p = complexity_pn(n)
        rows.append(ComplexityRow(n, p, 6 * p / n**3))
    return rows


def report_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "p_n", "ratio"])
    for r in rows:
        w.writerow([r.n, r.p_n, repr(r.ratio)])
    return buf.getvalue()


def report_from_csv(text: str) -> list[ComplexityRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["n", "p_n", "ratio"]:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [ComplexityRow(int(r["n"]), int(r["p_n"]), float(r["ratio"])) for r in reader]


def report_to_json(rows) -> str:
    return json.dumps([{"n": r.n, "p_n": r.p_n, "ratio": r.ratio} for r in rows], indent=2)
