import pytest

from mockparts import mocktheta as mt
from mockparts.bijections import (
    BijectionDomainError,
    ferrers_to_nu,
    ferrers_to_omega,
    in_nu_tilde,
    nu_pentagonal_involution,
    nu_to_ferrers,
    omega_to_ferrers,
    signed_count,
)
from mockparts.partitions import (
    OddFerrersDiagram,
    Partition,
    enumerate_odd_ferrers,
    enumerate_partitions,
    is_a_omega,
    rows_with_two,
)


def test_example_nu_pair():
    F = OddFerrersDiagram(5, (9, 5, 1))
    assert ferrers_to_nu(F) == Partition((6, 5, 4, 3, 2))
    assert nu_to_ferrers(Partition((6, 5, 4, 3, 2))) == F


def test_single_row_diagram():
    assert ferrers_to_nu(OddFerrersDiagram(1, ())) == Partition((1,))
    assert nu_to_ferrers(Partition((1,))) == OddFerrersDiagram(1, ())
    assert omega_to_ferrers(Partition((1,))) == OddFerrersDiagram(1, ())
    assert ferrers_to_omega(OddFerrersDiagram(1, ())) == Partition((1,))


def test_domain_errors():
    with pytest.raises(BijectionDomainError):
        omega_to_ferrers(Partition((2, 2)))
    with pytest.raises(BijectionDomainError):
        ferrers_to_nu(OddFerrersDiagram(3, (3, 3)))
    with pytest.raises(BijectionDomainError):
        nu_to_ferrers(Partition((4,)))
    with pytest.raises(BijectionDomainError):
        nu_pentagonal_involution(Partition((4, 4)))
    with pytest.raises(BijectionDomainError):
        ferrers_to_omega(OddFerrersDiagram(0, ()))


@pytest.mark.parametrize("n", range(1, 31))
def test_omega_bijection(n):
    parts = enumerate_partitions(n, "a_omega")
    diagrams = enumerate_odd_ferrers(n)
    assert len(parts) == len(diagrams)
    images = set()
    for p in parts:
        F = omega_to_ferrers(p)
        assert F.size == n
        assert ferrers_to_omega(F) == p
        assert p.length == F.length + rows_with_two(F)
        images.add(F)
    assert images == set(diagrams)
    for F in diagrams:
        assert is_a_omega(ferrers_to_omega(F))


@pytest.mark.parametrize("n", range(0, 31))
def test_nu_bijection(n):
    parts = enumerate_partitions(n, "a_nu")
    diagrams = enumerate_odd_ferrers(n, distinct_lambda=True)
    assert len(parts) == len(diagrams)
    for F in diagrams:
        p = ferrers_to_nu(F)
        assert p.size == n
        assert nu_to_ferrers(p) == F
        assert p.length == F.k
        assert p.even_parts == len(F.lam)
    for p in parts:
        F = nu_to_ferrers(p)
        assert F.length == p.even_parts + 1
        assert ferrers_to_nu(F) == p


@pytest.mark.parametrize("n", range(0, 41))
def test_involution(n):
    parts = enumerate_partitions(n, "a_nu")
    fixed = []
    for p in parts:
        out = nu_pentagonal_involution(p)
        if out.kind == "fixed":
            assert out.image is None and in_nu_tilde(p)
            fixed.append(p)
            continue
        img = out.image
        assert img.size == n
        assert (img.length + p.length) % 2 == 1
        back = nu_pentagonal_involution(img)
        assert back.image == p
        assert {out.kind, back.kind} == {"moved_case_i", "moved_case_ii"}
    assert len(fixed) == abs(mt.e_of_n(n))
    assert signed_count([p.parts for p in parts]) == mt.e_of_n(n)


def test_fixed_points_at_the_two_quadratics():
    for j in range(0, 4):
        for n, sign in ((3 * j * j + 2 * j, 1), (3 * j * j + 4 * j + 1, -1)):
            fixed = [p for p in enumerate_partitions(n, "a_nu") if in_nu_tilde(p)]
            assert len(fixed) == 1
            assert fixed[0].even_parts == j
            assert (-1) ** fixed[0].length == sign


def test_smallest_reading_is_not_an_involution():
    broken = 0
    for n in range(0, 31):
        for p in enumerate_partitions(n, "a_nu"):
            try:
                out = nu_pentagonal_involution(p, reading="smallest")
                if out.image is not None and nu_pentagonal_involution(out.image, reading="smallest").image != p:
                    broken += 1
            except BijectionDomainError:
                broken += 1
    assert broken > 0
