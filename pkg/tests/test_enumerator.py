from itertools import islice, permutations

import pytest

from hamcircuit.encoding import Initialization
from hamcircuit.enumerator import count_initializations, partition, rank, stream, unrank


def lexicographic(n):
    """Independent reference: itertools yields sorted-input permutations in order."""
    return [(0, *rest) for rest in permutations(range(1, n))]


@pytest.mark.parametrize("n, count", [(10, 362880), (5, 24), (2, 1)])
def test_count(n, count):
    assert count_initializations(n) == count


def test_count_rejects_tiny():
    with pytest.raises(ValueError):
        count_initializations(1)


def test_unrank_examples():
    assert unrank(0, 4).perm == (0, 1, 2, 3)
    assert lexicographic(4)[5] == (0, 3, 2, 1)
    assert unrank(5, 4).perm == (0, 3, 2, 1)
    assert lexicographic(5)[23] == (0, 4, 3, 2, 1)
    assert unrank(23, 5) == Initialization((0, 4, 3, 2, 1), 23)


def test_rank_examples():
    assert lexicographic(4).index((0, 2, 1, 3)) == 2
    assert rank(Initialization((0, 1, 2, 3), 0)) == 0
    assert rank((0, 3, 2, 1)) == 5
    assert rank((0, 2, 1, 3)) == 2


def test_rank_unrank_errors():
    with pytest.raises(IndexError):
        unrank(6, 4)
    with pytest.raises(IndexError):
        unrank(-1, 4)
    with pytest.raises(ValueError):
        rank((1, 0, 2, 3))


@pytest.mark.parametrize("n", range(2, 8))
def test_bijection_and_order(n):
    ref = lexicographic(n)
    for i, perm in enumerate(ref):
        assert unrank(i, n).perm == perm
        assert rank(perm) == i


def test_stream_small():
    assert [s.perm for s in stream(3)] == [(0, 1, 2), (0, 2, 1)]
    assert [s.perm for s in stream(2)] == [(0, 1)]
    five = list(stream(5))
    assert len(five) == 24
    assert five[0].perm == (0, 1, 2, 3, 4) and five[-1].perm == (0, 4, 3, 2, 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_stream_length_and_ranks(n):
    ranks = [s.rank for s in stream(n)]
    assert ranks == list(range(count_initializations(n)))


def test_stream_range_matches_slice():
    full = [s.perm for s in stream(6)]
    assert [s.perm for s in stream(6, 17, 63)] == full[17:63]
    assert list(stream(6, 40, 40)) == []


def test_stream_is_lazy():
    # n=13 has 12! ranks; taking a few must not materialize them.
    first = list(islice(stream(13), 3))
    assert [s.rank for s in first] == [0, 1, 2]


@pytest.mark.parametrize("total, parts", [(6, 2), (6, 4), (7, 3), (1, 4), (0, 3)])
def test_partition_covers(total, parts):
    ranges = partition(total, parts)
    covered = [i for a, b in ranges for i in range(a, b)]
    assert covered == list(range(total))
