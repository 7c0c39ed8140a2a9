"""The thirteen acceptance criteria, each at its pinned tolerance and time limit.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion at the end of the run.
"""

import math
import random
import time
from itertools import combinations

import pytest

from pascal_adic.combin import binom
from pascal_adic.complexity import complexity_brute, complexity_pn, distinct_subblocks, new_blocks_at
from pascal_adic.interval import (
    DyadicPoint,
    binomial_map,
    check_plot,
    is_symmetric,
    measure_preservation_check,
    plot_points,
    points_from_csv,
    points_to_csv,
    reflect,
    stacking_image,
)
from pascal_adic.measure import (
    appearance_count,
    block_measure,
    classify_block,
    first_appearance,
    freq_along_ray,
)
from pascal_adic.path import (
    Cyclic,
    Path,
    adic_step,
    iterate,
    kink_power,
    minimal_word,
    orbit,
    sample_path,
    swap_symbols,
)
from pascal_adic.returns import (
    avoiding_samples,
    empirical_law,
    law_distance,
    limit_law,
    plateau_report,
    return_time,
    return_time_sim,
    sub_cylinder,
)
from pascal_adic.weyl import find_weyl_indices, recurrence_check
from pascal_adic.words import OccurrenceCounter, basic_symbol, basic_word, forward_code

from _oracles import brute_count, expand_powers, figure_words, regex_step, words_by_recursion

TAIL = Cyclic("0110100")


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def criterion(num, title):
    return pytest.mark.criterion(num, title)


@criterion(1, "adic example 0011100100:zeros -> 1100010100:zeros, < 1 ms")
def test_c01_adic_example():
    x = Path.parse("0011100100:zeros")
    assert str(adic_step(x)) == "1100010100:zeros"
    assert adic_step(x).window(10) == regex_step(x.window(12))[:10]
    best = math.inf
    for _ in range(50):
        t0 = time.perf_counter()
        adic_step(x)
        best = min(best, time.perf_counter() - t0)
    assert best < 1e-3


@criterion(2, "kink power equals C(n,k) adic steps for n <= 12, < 10 s")
def test_c02_kink_suite():
    rng = random.Random(2)
    with Clock() as c:
        for n in range(13):
            for k in range(n + 1):
                bits = list(minimal_word(n, k))
                prefixes = {"".join(bits)}
                rng.shuffle(bits)
                prefixes.add("".join(bits))
                for w in prefixes:
                    x = Path(w + "10", TAIL)
                    y = iterate(x, binom(n, k))
                    assert y == kink_power(x, n)
                    assert y.window(n) == w
                    assert y.window(n + 2)[n:] == "01"
    assert c.elapsed < 10


@criterion(3, "T S T = S on 10^4 random paths and orbit completeness for n <= 10, < 30 s")
def test_c03_conjugacy_and_orbits():
    with Clock() as c:
        for seed in range(10_000):
            x = sample_path(0.5, 64, seed)
            lhs = adic_step(swap_symbols(adic_step(x)))
            assert lhs.window(64) == swap_symbols(x).window(64)
        for n in range(1, 11):
            for k in range(n + 1):
                x = Path(minimal_word(n, k) + "10", TAIL)
                seen = []
                for y in orbit(x):
                    seen.append(y.window(n))
                    if len(seen) == binom(n, k):
                        break
                expected = {
                    "".join("1" if i in ones else "0" for i in range(n)) for ones in combinations(range(n), k)
                }
                assert len(set(seen)) == len(seen) == binom(n, k)
                assert set(seen) == expected
    assert c.elapsed < 30


@criterion(4, "Pascal triangle of words matches the figure for n <= 6; lazy access for n <= 14, < 10 s")
def test_c04_word_fixtures():
    with Clock() as c:
        fig = figure_words()
        assert fig[6, 3] == expand_powers("b^3ab^2aba^2b^2aba^2ba^3")
        for (n, k), w in fig.items():
            assert basic_word(n, k) == w
        table = words_by_recursion(14)
        for n in range(1, 15):
            for k in range(n + 1):
                w = basic_word(n, k)
                assert w == table[n, k]
                assert "".join(basic_symbol(n, k, i) for i in range(len(w))) == w
    assert c.elapsed < 10


@criterion(5, "forward code of the minimal path through (n,k) equals B(n,k) for n <= 10, < 30 s")
def test_c05_coding_identity():
    with Clock() as c:
        for n in range(1, 11):
            for k in range(n + 1):
                x = Path(minimal_word(n, k) + "10", TAIL)
                assert forward_code(x, binom(n, k)) == basic_word(n, k)
    assert c.elapsed < 30


@criterion(6, "complexity_pn = complexity_brute for n <= 10 and the six new 5-blocks, < 60 s")
def test_c06_complexity_oracle():
    with Clock() as c:
        for n in range(1, 11):
            # brute force over one level deeper than needed, from an independent word table
            table = words_by_recursion(n + 3)
            windows = {w[i : i + n] for (lvl, _), w in table.items() if lvl == n + 3 for i in range(len(w) - n + 1)}
            assert complexity_pn(n) == complexity_brute(n) == len(windows)
        listed = "bab^3 ab^3a ba^2b^2 a^2b^2a ba^3b a^3ba".split()
        assert new_blocks_at(5, 6, [2, 3, 4]) == {expand_powers(w) for w in listed}
    assert c.elapsed < 60


@criterion(7, "|6 p_n / n^3 - 1| <= 0.15 at n = 200 and below its n = 100 value, < 5 min")
def test_c07_complexity_asymptotic():
    with Clock() as c:
        r100 = abs(6 * complexity_pn(100) / 100**3 - 1)
        r200 = abs(6 * complexity_pn(200) / 200**3 - 1)
    print(f"|6p/n^3 - 1|: n=100 {r100:.5f}, n=200 {r200:.5f}")
    assert r200 <= 0.15 and r200 < r100
    assert c.elapsed < 300


PRINTED_AABB = [[1], [2, 2], [3, 5, 2], [4, 9, 9, 4]]


def aabb_rows():
    return [[appearance_count("aabb", 6 + i, 3 + j) for j in range(i, -1, -1)] for i in range(4)]


@criterion(8, "aabb appearance triangle, closed forms vs recursive counter for |B| <= 5, first counts in {1,2}, < 2 min")
def test_c08_appearance_triangle():
    with Clock() as c:
        assert first_appearance("aabb") == (6, 3)
        rows = aabb_rows()
        direct = [[brute_count("aabb", basic_word(6 + i, 3 + j)) for j in range(i, -1, -1)] for i in range(4)]
        assert rows == direct
        # Every printed entry but one is reproduced; see the literal check below.
        mismatches = [
            (i, j) for i in range(4) for j in range(i + 1) if rows[i][j] != PRINTED_AABB[i][j]
        ]
        assert mismatches == [(2, 2)]
        assert rows[2][2] == binom(4, 1) - 1
        for L in range(1, 6):
            for B in distinct_subblocks(L):
                cls = classify_block(B)
                counter = OccurrenceCounter(B)
                for n in range(1, 15):
                    for k in range(n + 1):
                        assert appearance_count(B, n, k, cls) == counter.count(n, k), (B, n, k)
                n0, k0 = cls.first_vertex
                assert counter.count(n0, k0) in (1, 2)
    assert c.elapsed < 120


@criterion(8, "aabb appearance triangle, closed forms vs recursive counter for |B| <= 5, first counts in {1,2}, < 2 min")
@pytest.mark.xfail(
    strict=True,
    reason="printed row 3 reads 3 5 2; direct counts in the level-8 words give 3 5 3, as do the Case 1 formula and printed row 4",
)
def test_c08_printed_triangle_literal():
    assert aabb_rows() == PRINTED_AABB


def language(max_len):
    return [w for L in range(1, max_len + 1) for w in distinct_subblocks(L)]


@criterion(9, "|freq_along_ray(B, alpha, 400) - nu_alpha(B)| <= 0.01 for |B| <= 4, < 1 min")
def test_c09_directional_frequency():
    worst = 0.0
    with Clock() as c:
        for B in language(4):
            cls = classify_block(B)
            for alpha in (0.3, 0.5, 0.7):
                f = freq_along_ray(B, alpha, 400, cls)
                worst = max(worst, abs(float(f) - block_measure(B, alpha, cls)))
    print(f"worst frequency error at n=400: {worst:.5f}")
    assert worst <= 0.01
    assert c.elapsed < 60


@criterion(10, "return_time = simulation for n <= 8, plateau closed forms vs oracle, 3/4 and t00, < 1 min")
def test_c10_return_times():
    with Clock() as c:
        rng = random.Random(10)
        for n in range(1, 9):
            for k in range(n + 1):
                bits = list(minimal_word(n, k))
                rng.shuffle(bits)
                w = "".join(bits)
                for l in range(5):
                    for m in range(5):
                        x = Path(sub_cylinder(w, l, m), TAIL)
                        assert return_time_sim(x, n, 10**6) == return_time(k, n, l, m)
        report = plateau_report(6)
        for chk in report:
            assert abs(chk.closed_form - chk.oracle) <= 1e-9, (chk.i, chk.j)
        # The j = i - 1 plateaus are the ones a strict "i > j + 1" reading leaves open.
        flagged = [(chk.i, chk.j) for chk in report if not chk.strict_covers]
        print("plateaus outside the strict reading (oracle used):", flagged)
        assert flagged == [(i, i - 1) for i in range(1, 7)]
        G = limit_law(6)
        assert abs(G.values[0] - 0.75) <= 1e-12
        assert abs(G.jumps[0] - math.sqrt(2 / math.pi)) <= 1e-12
    assert c.elapsed < 60


@criterion(11, "law distance decreases over n = 256, 1024, 4096 and is <= 0.05 at 4096, < 1 min")
def test_c11_empirical_convergence():
    with Clock() as c:
        G = limit_law(12)
        ts = avoiding_samples(G, 12.0, 600, exclusion=0.05)
        d = [law_distance(empirical_law(n, n // 2, 60), G, ts, exclusion=0.05) for n in (256, 1024, 4096)]
    print("law distances:", d)
    assert d[0] > d[1] > d[2]
    assert d[2] <= 0.05
    assert c.elapsed < 60


@criterion(12, "interval map symmetry, conjugacy, stage-10 measure preservation and plot, < 30 s")
def test_c12_interval_map():
    with Clock() as c:
        worst = 0.0
        for seed in range(10_000):
            x = DyadicPoint(sample_path(0.5, 64, seed))
            y = binomial_map(x)
            assert y.path.window(64) == adic_step(x.path).window(64)
            assert y.exact() == stacking_image(x)
            z = binomial_map(reflect(y))
            worst = max(worst, abs(z.value - (1 - x.value)))
        assert worst <= 2**-50
        assert measure_preservation_check(10)
        pts = plot_points(10, 4, seed=0)
        assert len(pts) >= 4096
        back = points_from_csv(points_to_csv(pts))
        assert back == pts
        assert check_plot(back, 10) and is_symmetric(back)
    assert c.elapsed < 30


@criterion(13, "golden-ratio Weyl witness with K = 8 under search_cap 10^6, radius non-decreasing, < 2 min")
def test_c13_weyl_witness():
    with Clock() as c:
        w = find_weyl_indices("golden", 8, search_cap=10**6)
        reports = [recurrence_check(w, k, 1000) for k in range(1, 9)]
    radii = [r.agreement_radius for r in reports]
    print("n_k:", w.indices, "radii:", radii)
    assert all(r.defect < 1 / r.k for r in reports)
    assert w.indices == sorted(set(w.indices))
    assert radii == sorted(radii)
    assert c.elapsed < 120
