import pytest

from quasilinkage.subsets import (
    check_n,
    complement,
    elements,
    fmt,
    from_elements,
    lex_key,
    popcount,
    submasks,
)


def test_round_trip():
    for s in range(64):
        assert from_elements(elements(s)) == s


def test_elements_are_one_based():
    assert from_elements([1, 3]) == 0b101
    assert elements(0b110) == [2, 3]


def test_complement():
    assert complement(4, from_elements([1, 2])) == from_elements([3, 4])


def test_submasks_cover_everything_once():
    s = from_elements([1, 3, 4])
    subs = list(submasks(s))
    assert len(subs) == 8 and len(set(subs)) == 8
    assert subs[0] == s and subs[-1] == 0
    assert s not in list(submasks(s, proper=True))


def test_lex_key_orders_by_size_then_elements():
    sets = [from_elements(x) for x in ([2, 3], [1], [1, 4], [3])]
    assert [elements(s) for s in sorted(sets, key=lex_key)] == [[1], [3], [1, 4], [2, 3]]


def test_popcount_and_fmt():
    assert popcount(0b1011) == 3
    assert fmt(from_elements([1, 2])) == "{1,2}"


@pytest.mark.parametrize("n", [0, -1, 17])
def test_check_n_rejects(n):
    with pytest.raises(ValueError):
        check_n(n)
