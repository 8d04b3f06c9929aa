"""Explicit bijections between partition classes and odd Ferrers diagrams,
and the sign-reversing involution on the nu-class.

Every map checks its domain first and raises :class:`BijectionDomainError`
rather than coercing its input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from .partitions import (
    OddFerrersDiagram,
    Partition,
    _omega_pairs,
    is_a_nu,
    is_a_omega,
)


class BijectionDomainError(ValueError):
    """Input lies outside the domain of the requested map."""


# ---------------------------------------------------------------------------
# omega: partitions <-> odd Ferrers diagrams
# ---------------------------------------------------------------------------


def omega_to_ferrers(p: Partition) -> OddFerrersDiagram:
    """Drop one largest part k, merge the consecutive pairs into odd parts."""
    if not is_a_omega(p):
        raise BijectionDomainError(f"{p} is not in the omega class")
    merged = _omega_pairs(list(p.parts[1:]))
    return OddFerrersDiagram(p.parts[0], tuple(sorted(merged, reverse=True)))


def ferrers_to_omega(F: OddFerrersDiagram) -> Partition:
    if F.is_empty:
        raise BijectionDomainError("the empty diagram has no omega partner")
    parts = [F.k]
    for o in F.lam:
        a = (o - 1) // 2
        parts.append(a + 1)
        if a:
            parts.append(a)
    return Partition(tuple(sorted(parts, reverse=True)))


# ---------------------------------------------------------------------------
# nu: partitions <-> odd Ferrers diagrams with distinct lambda
# ---------------------------------------------------------------------------


def ferrers_to_nu(F: OddFerrersDiagram) -> Partition:
    """Strip the staircase block, read the rest of the diagram by columns.

    With ``l = len(lam)`` the block made of the first row's first ``l`` cells
    and the rows ``2l-1, ..., 3, 1`` becomes the even parts ``2l, ..., 2``.
    What remains is a first row of ones over rows of twos; column ``j`` of
    height ``h`` becomes the odd part ``2h - 1``.
    """
    lam = F.lam
    if len(set(lam)) != len(lam):
        raise BijectionDomainError(f"{F} has repeated parts in lambda")
    ell = len(lam)
    residual = [F.k - ell] + [(x + 1) // 2 - (ell - i) for i, x in enumerate(lam)]
    rho = []
    for j in range(residual[0]):
        h = 1 + sum(1 for r in residual[1:] if r > j)
        rho.append(2 * h - 1)
    evens = list(range(2 * ell, 0, -2))
    return Partition(tuple(sorted(evens + rho, reverse=True)))


def nu_to_ferrers(p: Partition) -> OddFerrersDiagram:
    if not is_a_nu(p):
        raise BijectionDomainError(f"{p} is not in the nu class")
    ell = p.even_parts
    rho = [x for x in p.parts if x % 2]
    k = p.length
    # residual row i (1-based) has as many cells as odd parts >= 2i + 1
    lam = tuple(
        2 * (sum(1 for x in rho if x >= 2 * i + 1) + ell - i + 1) - 1
        for i in range(1, ell + 1)
    )
    return OddFerrersDiagram(k, lam)


# ---------------------------------------------------------------------------
# the parity-reversing involution on the nu-class
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NuInvolutionOutcome:
    kind: Literal["moved_case_i", "moved_case_ii", "fixed"]
    image: Partition | None = None


def _split(p: Partition) -> tuple[int, list[int]]:
    evens = [x for x in p.parts if x % 2 == 0]
    odds = sorted((x for x in p.parts if x % 2), reverse=True)
    return (evens[0] if evens else 0), odds


def in_nu_tilde(p: Partition) -> bool:
    """The exceptional set: odd parts all equal ``top + 1`` with multiplicity
    ``top / 2`` or ``top / 2 + 1``, where ``top`` is the largest even part."""
    if not is_a_nu(p):
        return False
    top, odds = _split(p)
    if any(x != top + 1 for x in odds):
        return False
    return len(odds) in (top // 2, top // 2 + 1)


def nu_pentagonal_involution(p: Partition, reading: str = "largest") -> NuInvolutionOutcome:
    """Pair off nu-class partitions of opposite length parity.

    Write ``top`` for the largest even part (0 if none), ``m`` for the number
    of odd parts equal to ``top + 1`` and ``s`` for the smallest odd part
    (infinite when there are none).

    * ``s >= 2m + 1``: drop ``top``, take 2 off each of the ``m`` parts equal
      to ``top + 1``, add the parts ``top - 1`` and ``2m + 1``.
    * ``s < 2m + 1``: drop one ``top + 1`` and one ``s``, add the even part
      ``top + 2``, then add 2 to each of the ``(s - 1) / 2`` largest remaining
      odd parts (two new columns on the right of the diagram).

    ``reading="smallest"`` puts the two new columns of the second case on the
    smallest odd parts instead; it exists only to show that this alternative
    reading does not give an involution.
    """
    if not is_a_nu(p):
        raise BijectionDomainError(f"{p} is not in the nu class")
    if reading not in ("largest", "smallest"):
        raise ValueError(f"unknown reading {reading!r}")
    if in_nu_tilde(p):
        return NuInvolutionOutcome("fixed")
    top, odds = _split(p)
    evens = list(range(top - 2, 0, -2))
    m = odds.count(top + 1)
    s = odds[-1] if odds else None
    if s is None or s >= 2 * m + 1:
        new_odds = [x - 2 if x == top + 1 else x for x in odds]
        new_odds += [top - 1, 2 * m + 1]
        image = Partition(tuple(sorted(evens + new_odds, reverse=True)))
        return NuInvolutionOutcome("moved_case_i", image)
    rest = list(odds)
    rest.remove(top + 1)
    rest.remove(s)
    cols = (s - 1) // 2
    if cols > len(rest):
        raise BijectionDomainError(f"{p}: not enough odd parts for {cols} columns")
    rest.sort(reverse=True)
    idx = range(cols) if reading == "largest" else range(len(rest) - cols, len(rest))
    for i in idx:
        rest[i] += 2
    image_parts = sorted([top + 2] + list(range(top, 0, -2)) + rest, reverse=True)
    image = Partition(tuple(image_parts))
    if not is_a_nu(image):
        raise BijectionDomainError(f"{p}: case (ii) image {image} left the nu class")
    return NuInvolutionOutcome("moved_case_ii", image)


def signed_count(parts_list) -> int:
    """Sum of (-1)^length over a collection of partitions."""
    c = Counter(len(p) % 2 for p in parts_list)
    return c[0] - c[1]
