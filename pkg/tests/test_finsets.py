import pytest
from hypothesis import given, strategies as st

from schreier.finsets import (
    EMPTY,
    Window,
    as_finset,
    format_finset,
    is_initial_segment,
    is_proper_initial_segment,
    mask_of,
    parse_finset,
    parse_window,
    set_of_mask,
    spread,
)

sets = st.builds(as_finset, st.sets(st.integers(1, 40), max_size=8))


def test_as_finset_sorts_and_validates():
    assert as_finset([3, 1, 2]) == (1, 2, 3)
    assert as_finset([]) == EMPTY
    with pytest.raises(ValueError):
        as_finset([0, 1])
    with pytest.raises(ValueError):
        as_finset([2, 2])
    with pytest.raises(TypeError):
        as_finset([True])


@given(sets)
def test_set_literal_roundtrip(s):
    assert parse_finset(format_finset(s)) == s


def test_parse_finset_forms():
    assert parse_finset("{2,3,4}") == (2, 3, 4)
    assert parse_finset("{ 2 , 3 }") == (2, 3)
    assert parse_finset("{}") == EMPTY
    for bad in ("2,3", "{2;3}", "{a}", ""):
        with pytest.raises(ValueError):
            parse_finset(bad)


def test_initial_segments():
    assert is_initial_segment((1, 3), (1, 3, 7))
    assert is_initial_segment(EMPTY, (5,))
    assert is_initial_segment((1, 3), (1, 3))
    assert not is_initial_segment((3,), (1, 3))
    assert not is_proper_initial_segment((1, 3), (1, 3))
    assert is_proper_initial_segment(EMPTY, (5,))


@given(sets, sets)
def test_initial_segment_vs_definition(s, t):
    assert is_initial_segment(s, t) == (s == t[: len(s)])


def test_spread():
    assert spread((1, 3), (4, 7, 9, 12)) == (4, 9)
    assert spread(EMPTY, (4, 7)) == EMPTY
    with pytest.raises(ValueError):
        spread((5,), (4, 7))
    with pytest.raises(ValueError):
        spread((0,), (4, 7))


@given(sets)
def test_mask_roundtrip(s):
    assert set_of_mask(mask_of(s)) == s


def test_window_basics():
    w = Window(1, 5)
    assert w.ground == (1, 2, 3, 4, 5)
    assert list(w.subsets())[:7] == [(), (1,), (2,), (3,), (4,), (5,), (1, 2)]
    assert w.contains_set((2, 5)) and not w.contains_set((2, 6))
    assert w.tail(3) == (4, 5)
    assert 3 in w

    thinned = Window(1, 10, ground=(2, 4, 6))
    assert thinned.ground == (2, 4, 6)
    assert not thinned.contains_set((3,))
    assert thinned.tail(4) == (6,)

    with pytest.raises(ValueError):
        Window(3, 2)
    with pytest.raises(ValueError):
        Window(2, 5, ground=(1, 3))


def test_window_subset_count_and_order():
    w = Window(1, 6)
    subs = list(w.subsets())
    assert len(subs) == 64
    assert len(set(subs)) == 64
    sizes = [len(s) for s in subs]
    assert sizes == sorted(sizes)


def test_parse_window():
    assert parse_window("1..30") == Window(1, 30)
    assert parse_window("4..15", "4,6,8") == Window(4, 15, (4, 6, 8))
    for bad in ("1-30", "a..b", ".."):
        with pytest.raises(ValueError):
            parse_window(bad)
