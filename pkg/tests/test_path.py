import math

import pytest
from hypothesis import given, settings, strategies as st

from pascal_adic.combin import binom
from pascal_adic.errors import MaximalPath, MinimalPath, NoKink, Undecidable, HorizonExceeded
from pascal_adic.path import (
    AllOnes,
    AllZeros,
    Cyclic,
    ExtremalClass,
    Path,
    RunLengthProgram,
    adic_inverse_step,
    adic_step,
    classify_extremal,
    finite_successor,
    iterate,
    k_level,
    kink_power,
    minimal_word,
    orbit,
    sample_path,
    swap_symbols,
)

from _oracles import regex_inverse, regex_step

bits = st.text("01", max_size=40)
tails = st.text("01", min_size=2, max_size=12).filter(lambda w: len(set(w)) == 2)
generic_paths = st.builds(lambda o, t: Path(o, Cyclic(t)), bits, tails)


def P(text):
    return Path.parse(text)


def test_caption_example():
    x = P("0011100100:zeros")
    assert str(adic_step(x)) == "1100010100:zeros"
    assert adic_inverse_step(P("1100010100:zeros")) == x


def test_empty_runs():
    assert adic_step(P("10111:cyc=01")).window(5) == "01111"
    assert adic_inverse_step(P("01111:cyc=01")).window(5) == "10111"


def test_extremal_paths_have_no_successor():
    with pytest.raises(MaximalPath):
        adic_step(P("000:ones"))
    with pytest.raises(MaximalPath):
        adic_step(P(":ones"))
    with pytest.raises(MinimalPath):
        adic_inverse_step(P("11:zeros"))


def test_horizon_cap():
    late = Path("0" * 10, Cyclic("0" * 3000 + "1"))
    with pytest.raises(HorizonExceeded):
        adic_step(late, horizon=1000)
    assert adic_step(late).window(3003)[-3:] == "010"


@given(generic_paths)
def test_step_matches_regex_oracle(x):
    w = x.window(len(x.override) + 64)
    assert adic_step(x).window(len(w) - 2) == regex_step(w)[: len(w) - 2]
    assert adic_inverse_step(x).window(len(w) - 2) == regex_inverse(w)[: len(w) - 2]


@given(generic_paths)
def test_inverse_undoes_step(x):
    assert adic_inverse_step(adic_step(x)) == x
    assert adic_step(adic_inverse_step(x)) == x


@given(generic_paths)
def test_conjugacy_with_symbol_swap(x):
    assert adic_step(swap_symbols(adic_step(x))) == swap_symbols(x)


@given(generic_paths)
def test_swap_is_involution(x):
    assert swap_symbols(swap_symbols(x)) == x


def test_swap_examples():
    assert swap_symbols(P(":zeros")) == P(":ones")
    assert str(swap_symbols(P("0011100100:zeros"))) == "1100011011:ones"


def test_k_level():
    assert k_level(P("110:zeros"), 3) == 2
    assert k_level(P(":zeros"), 50) == 0
    assert k_level(P(":cyc=10"), 10) == 5


def test_kink_examples():
    x = P("11010:zeros")
    assert kink_power(x, 3) == iterate(x, binom(3, 2)) == P("11001:zeros")
    assert kink_power(P("10:zeros"), 0) == adic_step(P("10:zeros"))
    y = P("1101:zeros")
    assert kink_power(y, 1) == adic_step(y)
    with pytest.raises(NoKink):
        kink_power(P("0110:zeros"), 1)


@given(st.integers(0, 8), st.data())
def test_kink_power_is_binomial_iterate(n, data):
    k = data.draw(st.integers(0, n))
    head = data.draw(st.permutations("1" * k + "0" * (n - k)))
    x = Path("".join(head) + "10", Cyclic("0110"))
    y = kink_power(x, n)
    assert iterate(x, binom(n, k)) == y
    assert y.window(n) == x.window(n)


def test_classify_extremal():
    assert classify_extremal(P("11111:zeros")) == ExtremalClass.minimal(5)
    assert classify_extremal(P(":zeros")) == ExtremalClass.maximal(0)
    assert classify_extremal(P("000:ones")) == ExtremalClass.maximal(3)
    assert classify_extremal(P(":ones")) == ExtremalClass.maximal(math.inf)
    assert classify_extremal(P("0110:zeros")).kind == "neither"
    assert classify_extremal(P(":cyc=0011")).kind == "neither"
    with pytest.raises(Undecidable):
        classify_extremal(P(":cyc=0011"), depth=2)


def test_orbit_completeness():
    for n in range(1, 8):
        for k in range(n + 1):
            start = Path(minimal_word(n, k) + "10", AllZeros())
            pref = [y.window(n) for _, y in zip(range(binom(n, k)), orbit(start))]
            assert len(set(pref)) == binom(n, k)
            assert all(w.count("1") == k for w in pref)


def test_finite_successor_tops_out():
    assert finite_successor("0011") is None
    assert finite_successor("1100") == "1010"


@given(bits, st.sampled_from([AllZeros(), AllOnes(), Cyclic("011"), RunLengthProgram((2, 5, 9))]))
def test_serialization_round_trip(o, base):
    x = Path(o, base)
    assert Path.parse(str(x)) == x
    assert str(Path.parse(str(x))) == str(x)


def test_run_length_program_extends_with_growing_gaps():
    r = RunLengthProgram((1, 3, 6))
    zeros = [i for i in range(1, 40) if r.bit(i) == "0"]
    assert zeros == [1, 3, 6, 10, 15, 21, 28, 36]
    assert r.complement().bit(3) == "1"
    assert r.shift(2).bit(5) == "0"


def test_canonical_equality():
    assert Path("0000", AllZeros()) == Path("", AllZeros())
    assert Path("01", Cyclic("01")) == Path("", Cyclic("01"))
    assert Path("1", AllZeros()) != Path("", AllZeros())
    assert len({Path("00", AllZeros()), Path("", AllZeros())}) == 1


def test_sample_path():
    assert sample_path(0.5, 64, 7) == sample_path(0.5, 64, 7)
    x = sample_path(0.5, 10_000, 3)
    assert 0.45 <= x.override.count("0") / 10_000 <= 0.55
    for p in (0.0, 1.0):
        with pytest.raises(ValueError):
            sample_path(p, 10, 0)


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_sample_path_zero_fraction(seed):
    x = sample_path(0.5, 10_000, seed)
    # 99.99% two-sided binomial band; 0.05 is ~10 standard deviations
    assert 0.45 <= x.override.count("0") / 10_000 <= 0.55
