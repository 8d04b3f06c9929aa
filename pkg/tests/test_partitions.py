import pytest
from hypothesis import given
from hypothesis import strategies as st

from mockparts import mocktheta as mt
from mockparts.partitions import (
    CLASS_TAGS,
    EnumerationCapError,
    OddFerrersDiagram,
    Partition,
    all_partitions_filtered,
    class_predicate,
    conjugate,
    durfee_side,
    enumerate_odd_ferrers,
    enumerate_partitions,
    ferrers_conjugate,
    is_self_conjugate,
    mu_of_c,
    rows_with_two,
    stats,
)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]
EXAMPLE = Partition((5, 4, 3, 3, 2, 2))
EXAMPLE_DIAGRAM = OddFerrersDiagram(8, (11, 7, 7, 5, 5, 1))


def test_empty_partition_is_only_partition_of_zero():
    assert enumerate_partitions(0) == [Partition(())]


def test_partition_numbers():
    assert [len(enumerate_partitions(n)) for n in range(16)] == PARTITION_NUMBERS


def test_enumeration_order_is_decreasing():
    got = [p.parts for p in enumerate_partitions(5)]
    assert got == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((3, 0, 0), allow_zero=True)
    p = Partition((6, 4, 2, 0), allow_zero=True)
    assert p.length == 4 and p.size == 12 and p.has_zero


def test_example_statistics():
    s = stats(EXAMPLE)
    assert s.durfee_side == 3
    assert s.rank == -1
    assert s.length == 6 and s.L == 3
    assert s.odd_parts == 3 and s.even_parts == 3
    assert s.mult_of_1 == 0


def test_m2_rank_of_odd_partition():
    assert stats(Partition((9, 5, 1))).m2_rank == 2


def test_conjugate_example_and_edges():
    assert conjugate(EXAMPLE) == Partition((6, 6, 4, 2, 1))
    assert conjugate(Partition((7,))) == Partition((1,) * 7)
    with pytest.raises(ValueError):
        conjugate(Partition((2, 0), allow_zero=True))


partitions = st.lists(st.integers(1, 12), max_size=10).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(partitions)
def test_conjugation_is_size_preserving_involution(p):
    c = conjugate(p)
    assert conjugate(c) == p
    assert c.size == p.size
    assert durfee_side(c) == durfee_side(p)
    assert is_self_conjugate(p) == (c == p)


def test_unknown_class():
    with pytest.raises(ValueError):
        class_predicate("nope")
    with pytest.raises(ValueError):
        enumerate_partitions(3, "nope")


def test_cap(monkeypatch):
    with pytest.raises(EnumerationCapError):
        enumerate_partitions(61)
    with pytest.raises(EnumerationCapError):
        enumerate_partitions(12, cap=10)
    monkeypatch.setenv("MOCKPARTS_ENUM_CAP", "8")
    with pytest.raises(EnumerationCapError):
        enumerate_odd_ferrers(9)
    monkeypatch.setenv("MOCKPARTS_ENUM_CAP", "500")
    with pytest.raises(EnumerationCapError):
        enumerate_partitions(61)


@pytest.mark.parametrize("tag", sorted(CLASS_TAGS))
def test_generators_match_brute_force_filter(tag):
    pred = class_predicate(tag)
    zero = CLASS_TAGS[tag][2]
    for n in range(0, 19):
        assert enumerate_partitions(n, tag) == all_partitions_filtered(n, pred, with_zero=zero), (tag, n)


def test_b_nu_counts_zero_variants_separately():
    got = {str(p) for p in enumerate_partitions(12, "b_nu")}
    assert {"(6,4,2)", "(6,4,2,0)"} <= got
    assert "(6,4,3,2)" in {str(p) for p in enumerate_partitions(15, "b_nu")}
    assert "(6,4,3,2,0)" not in {str(p) for p in enumerate_partitions(15, "b_nu")}


@pytest.mark.parametrize(
    "tag,series",
    [("a_omega", "a_omega"), ("b_omega", "b_omega"), ("a_nu", "nu_neg"), ("b_nu", "nu_neg")],
)
def test_class_counts_match_series(tag, series):
    N = 40
    s = mt.build(series, N)
    assert [len(enumerate_partitions(n, tag)) for n in range(N + 1)] == list(s.coeffs)


def test_distinct_odd_count_matches_product():
    N = 40
    assert [len(enumerate_partitions(n, "q_odd")) for n in range(N + 1)] == list(mt.odd_distinct_product(N).coeffs)


def test_f2_counts_parts_of_distinct_odd_partitions():
    N = 40
    b = mt.F2(N)
    assert [sum(p.length for p in enumerate_partitions(n, "q_odd")) for n in range(N + 1)] == list(b.coeffs)


def test_phi_from_self_conjugate_partitions():
    N = 40
    signed = [sum((-1) ** stats(p).L for p in enumerate_partitions(n, "self_conjugate")) for n in range(N + 1)]
    assert signed == list(mt.phi(N).coeffs)


# -- odd Ferrers diagrams ------------------------------------------------------


def test_example_diagram():
    F = EXAMPLE_DIAGRAM
    assert F.size == 44 and F.length == 7 and F.rank == 8 - 6 - 1
    assert F in enumerate_odd_ferrers(44)
    assert rows_with_two(F) == 5
    assert F.filling()[1] == [1, 2, 2, 2, 2, 2]


def test_diagram_validation():
    with pytest.raises(ValueError):
        OddFerrersDiagram(2, (7,))
    with pytest.raises(ValueError):
        OddFerrersDiagram(3, (2,))
    with pytest.raises(ValueError):
        OddFerrersDiagram(0, (1,))
    OddFerrersDiagram(4, (7, 7))


def test_small_diagrams():
    assert enumerate_odd_ferrers(1) == [OddFerrersDiagram(1, ())]
    assert enumerate_odd_ferrers(0) == []
    assert enumerate_odd_ferrers(0, distinct_lambda=True) == [OddFerrersDiagram(0, ())]
    assert rows_with_two(OddFerrersDiagram(5, ())) == 0
    assert rows_with_two(OddFerrersDiagram(5, (1, 1, 1))) == 0


def test_diagram_counts_match_series():
    N = 40
    a2 = mt.A_omega2_z(N).eval_z(1)
    assert [len(enumerate_odd_ferrers(n)) for n in range(N + 1)] == list(a2.coeffs)
    assert [len(enumerate_odd_ferrers(n, True)) for n in range(N + 1)] == list(mt.a_nu2(N).coeffs)


def test_ferrers_conjugation():
    for n in range(1, 26):
        for F in enumerate_odd_ferrers(n):
            G = ferrers_conjugate(F)
            assert ferrers_conjugate(G) == F
            assert G.size == F.size
            assert (G.length, G.columns) == (F.columns, F.length)


def test_staircase_conjugate_rank_pair():
    for m in range(1, 8):
        F = OddFerrersDiagram(m, tuple(range(2 * m - 1, 0, -2)))
        G = ferrers_conjugate(F)
        assert G == OddFerrersDiagram(m + 1, tuple(range(2 * m - 1, 1, -2)))
        assert F.rank == -1 and F.rank + G.rank == 0


def test_mu_of_c():
    assert mu_of_c(8) == Partition((5, 3))
    assert mu_of_c(10) == Partition((7, 3))
    for c in range(4, 41, 2):
        p = mu_of_c(c)
        assert p.size == c and all(x % 2 for x in p.parts) and p.parts[0] > p.parts[1]
    for bad in (3, 2, 7):
        with pytest.raises(ValueError):
            mu_of_c(bad)
