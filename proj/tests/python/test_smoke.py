import random

import pytest

import _netocc as nt


def test_running_example():
    assert nt.eno(b"abbbabbabbab") == [(2, 10)]
    assert nt.mus("abbbabbabbab") == [(2, 4), (5, 10)]
    assert nt.oracle.mus("abbbabbabbab") == [(2, 4), (5, 10)]


def test_small_cases():
    assert nt.eno("ab") == [(1, 2)]
    assert nt.eno("abcc") == [(1, 2), (2, 4)]
    assert nt.eno("aaa") == []
    assert nt.mus("aaa") == [(1, 3)]


def test_conversions():
    assert nt.mus_to_eno([(2, 4), (5, 10)]) == [(2, 10)]
    assert nt.eno_to_mus([(2, 10)], 3, 7, 12) == [(2, 4), (5, 10)]
    with pytest.raises(ValueError):
        nt.eno_to_mus([], 5, 0, 3)


@pytest.mark.parametrize("backend", ["suffix_tree", "cdawg"])
def test_online_matches_oracle(backend):
    rng = random.Random(1)
    for _ in range(30):
        text = bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 25)))
        eng = nt.OnlineEno(backend)
        for i, ch in enumerate(text):
            eng.append(ch)
            assert eng.snapshot() == nt.oracle.eno(text[: i + 1])
        assert len(eng) == len(nt.oracle.eno(text))


def test_events_replay():
    eng = nt.OnlineEno()
    live = set()
    for step, kind, start, end in eng.extend(b"abcabbcab"):
        assert step >= 1
        if kind == "add":
            live.add((start, end))
        else:
            live.remove((start, end))
    assert sorted(live) == eng.snapshot()


def test_sliding_window():
    eng = nt.SlidingEno(3)
    for ch in b"abcc":
        eng.push(ch)
    assert (eng.first, eng.last) == (2, 4)
    assert eng.snapshot() == [(2, 4)]
    with pytest.raises(ValueError):
        nt.SlidingEno(0)


def test_cdawg_edges():
    eng = nt.OnlineEno("cdawg")
    eng.extend("abbbabbabbab")
    assert eng.cdawg_edges() == nt.oracle.implicit_cdawg_edges("abbbabbabbab")
    assert eng.cdawg_edges() <= nt.oracle.explicit_cdawg_edges("abbbabbabbab")


def test_online_mus():
    om = nt.OnlineMus()
    for ch in "abbbabbabbab":
        om.append(ch)
    assert om.snapshot() == [(2, 4), (5, 10)]


def test_verify():
    rep = nt.verify("sliding", max_len=10, cases=50, window=4)
    assert rep["mismatches"] == 0 and rep["cases"] == 50
    with pytest.raises(ValueError):
        nt.verify("nope")


def test_bad_input():
    with pytest.raises(TypeError):
        nt.eno(12)
    with pytest.raises(ValueError):
        nt.OnlineEno().append("ab")
