from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from charforge.partitions import (
    CycleType,
    Partition,
    Permutation,
    SkewShape,
    border_strip_removals,
    conjugate,
    count_r,
    cycle_type,
    epsilon_of,
    height,
    is_border_strip,
    partitions,
    subpartitions,
    z_of,
)

from oracles import (
    cells_connected_no_square,
    cycle_lengths,
    inversion_sign,
    removals_by_filter,
    size_is_rows_plus_cols_minus_one,
)

P = lambda *parts: Partition(parts)  # noqa: E731


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition.parse("3,x")
    with pytest.raises(ValueError):
        Partition.parse("3,0,1")
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition.parse("") == Partition(())
    assert Partition.parse("3,2,2").n == 7
    assert str(P(3, 2, 2)) == "3,2,2"


def test_part_is_zero_padded():
    lam = P(3, 1)
    assert [lam.part(i) for i in (1, 2, 3, 4)] == [3, 1, 0, 0]


@pytest.mark.parametrize(
    "lam, expected",
    [((2, 2, 2, 1), (4, 3)), ((), ()), ((3, 2, 2), (3, 3, 1)), ((1,), (1,)), ((4,), (1, 1, 1, 1))],
)
def test_conjugate(lam, expected):
    assert conjugate(Partition(lam)) == Partition(expected)


@pytest.mark.parametrize("n", range(0, 31, 3))
def test_conjugate_is_involution(n):
    for lam in partitions(n):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).n == lam.n


def test_partitions_order_and_counts():
    assert [str(p) for p in partitions(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    # p(n) for n = 0..10
    assert [len(list(partitions(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_subpartitions_are_all_contained_shapes():
    lam = P(3, 2)
    subs = set(subpartitions(lam))
    brute = {
        p for n in range(lam.n + 1) for p in partitions(n) if lam.contains(p)
    }
    assert subs == brute
    assert len(subs) == len(list(subpartitions(lam)))


@pytest.mark.parametrize(
    "images, expected",
    [((2, 3, 1, 5, 4, 7, 6), (3, 2, 2)), ((1, 2, 3, 4), (1, 1, 1, 1)), ((2, 1, 3), (2, 1))],
)
def test_cycle_type(images, expected):
    ct = cycle_type(Permutation(images))
    assert ct.partition == Partition(expected)
    assert sum(size * count for size, count in ct.multiplicities.items()) == len(images)


def test_cycle_type_multiplicities():
    assert CycleType(P(3, 2, 2)).multiplicities == {2: 2, 3: 1}


def test_from_cycle_type_matches_standard_representative():
    assert Permutation.from_cycle_type(P(3, 2, 2)).images == (2, 3, 1, 5, 4, 7, 6)
    for n in range(1, 7):
        for mu in partitions(n):
            assert cycle_type(Permutation.from_cycle_type(mu)).partition == mu


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    assert Permutation.parse("2,3,1")(1) == 2


@pytest.mark.parametrize(
    "outer, inner, expected",
    [((2, 2), (1,), True), ((2, 2), (), False), ((3, 1), (1,), False), ((3,), (), True), ((2, 2), (2, 2), False)],
)
def test_is_border_strip(outer, inner, expected):
    s = SkewShape(Partition(outer), Partition(inner))
    assert is_border_strip(s) is expected
    assert cells_connected_no_square(s) is expected


def test_empty_row_inside_shape_disconnects():
    s = SkewShape(P(2, 1, 1), P(1, 1))
    assert not is_border_strip(s)


@pytest.mark.parametrize("outer, inner, h", [((2, 2), (1,), 1), ((3,), (), 0), ((1, 1, 1), (), 2)])
def test_height(outer, inner, h):
    assert height(SkewShape(Partition(outer), Partition(inner))) == h


def test_height_rejects_non_strip():
    with pytest.raises(ValueError):
        height(SkewShape(P(2, 2), P()))


def test_skew_shape_needs_containment():
    with pytest.raises(ValueError):
        SkewShape(P(2), P(1, 1))


def test_border_strip_removals_examples():
    assert sorted(border_strip_removals(P(2, 2), 2)) == sorted([(P(2), 0), (P(1, 1), 1)])
    assert border_strip_removals(P(3), 3) == [(P(), 0)]
    assert border_strip_removals(P(2, 2), 3) == [(P(1), 1)]
    assert border_strip_removals(P(2, 2), 4) == []
    with pytest.raises(ValueError):
        border_strip_removals(P(2), 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_border_strip_removals_match_filter(n):
    for lam in partitions(n):
        for l in range(1, n + 1):
            got = border_strip_removals(lam, l)
            assert len(got) == len(set(got))
            assert sorted(got) == sorted(removals_by_filter(lam, l))


@pytest.mark.parametrize("n", range(1, 9))
def test_row_test_matches_cells_and_conjugation(n):
    for lam in partitions(n):
        for nu in subpartitions(lam):
            s = SkewShape(lam, nu)
            assert is_border_strip(s) == cells_connected_no_square(s)
            assert is_border_strip(s) == is_border_strip(s.conjugate())


@pytest.mark.parametrize("n", range(1, 9))
def test_strip_size_rule_is_exact_on_connected_shapes(n):
    """Strips always have rows + cols - 1 cells, and a connected shape of that size is a strip."""
    for lam in partitions(n):
        for nu in subpartitions(lam):
            s = SkewShape(lam, nu)
            if is_border_strip(s):
                assert size_is_rows_plus_cols_minus_one(s)
            if s.size and _connected(s):
                assert size_is_rows_plus_cols_minus_one(s) == is_border_strip(s)


def test_strip_size_rule_alone_admits_disconnected_shape():
    s = SkewShape(P(3, 3, 1), P(1, 1))
    assert size_is_rows_plus_cols_minus_one(s)
    assert not is_border_strip(s)


def _connected(s):
    cells = s.cells()
    start = next(iter(cells))
    seen, todo = {start}, [start]
    while todo:
        i, j = todo.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == cells


@pytest.mark.parametrize("mu, z", [((1, 1, 1), 6), ((2, 1), 2), ((3, 2, 2), 24)])
def test_z_of(mu, z):
    assert z_of(CycleType(Partition(mu))) == z
    assert z_of(Partition(mu)) == z


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_are_n_factorial_over_z(n):
    counts = {}
    for images in permutations(range(1, n + 1)):
        key = cycle_lengths(images)
        counts[key] = counts.get(key, 0) + 1
    for lam in partitions(n):
        assert counts[lam.parts] == factorial(n) // z_of(lam)
        assert factorial(n) % z_of(lam) == 0


@pytest.mark.parametrize("mu, eps", [((2,), -1), ((3, 2, 2), 1), ((1, 1), 1)])
def test_epsilon_of(mu, eps):
    assert epsilon_of(Partition(mu)) == eps


@pytest.mark.parametrize("n", range(1, 7))
def test_epsilon_is_permutation_sign(n):
    for images in permutations(range(1, n + 1)):
        perm = Permutation(images)
        assert epsilon_of(cycle_type(perm)) == inversion_sign(images)


@pytest.mark.parametrize(
    "mu, lam, r", [((2, 1, 1), (2, 2), 2), ((1, 1), (2,), 1), ((2,), (1, 1), 0), ((1,), (2,), 0)]
)
def test_count_r(mu, lam, r):
    assert count_r(Partition(mu), Partition(lam)) == r


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_count_r_all_ones_is_multinomial(parts):
    lam = Partition(tuple(sorted(parts, reverse=True)))
    ones = Partition((1,) * lam.n)
    expected = factorial(lam.n)
    for part in lam:
        expected //= factorial(part)
    assert count_r(ones, lam) == expected
