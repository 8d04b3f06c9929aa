"""Partitions and odd Ferrers diagrams with their statistics and enumerators.

Enumeration is exhaustive and capped (default 60, hard limit 60); it is the
brute-force side of every generating-function check in this package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

HARD_ENUM_CAP = 60
ENV_ENUM_CAP = "MOCKPARTS_ENUM_CAP"


class EnumerationCapError(ValueError):
    """Raised when an enumeration would exceed the configured size cap."""


def default_enum_cap() -> int:
    """The enumeration cap, honouring ``MOCKPARTS_ENUM_CAP`` (never above 60)."""
    raw = os.environ.get(ENV_ENUM_CAP)
    if raw is None:
        return HARD_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_ENUM_CAP} must be an integer, got {raw!r}") from None
    return max(0, min(cap, HARD_ENUM_CAP))


def _check_cap(n: int, cap: int | None) -> None:
    limit = default_enum_cap() if cap is None else min(cap, HARD_ENUM_CAP)
    if n > limit:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {limit}; "
            "use the series coefficients (mockparts coeffs) for larger n"
        )


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A partition as a non-increasing tuple of parts.

    With ``allow_zero`` a single trailing 0 is permitted; it counts as a part.
    """

    parts: tuple[int, ...] = ()
    allow_zero: bool = field(default=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        body = parts
        if parts and parts[-1] == 0:
            if not self.allow_zero:
                raise ValueError(f"zero part in {parts} needs allow_zero")
            body = parts[:-1]
        if any(p < 1 for p in body):
            raise ValueError(f"parts must be positive (one trailing 0 allowed): {parts}")
        if any(body[i] < body[i + 1] for i in range(len(body) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def has_zero(self) -> bool:
        return bool(self.parts) and self.parts[-1] == 0

    @property
    def positive_parts(self) -> tuple[int, ...]:
        return self.parts[:-1] if self.has_zero else self.parts

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def odd_parts(self) -> int:
        return sum(1 for p in self.parts if p % 2)

    @property
    def even_parts(self) -> int:
        return sum(1 for p in self.positive_parts if p % 2 == 0)

    def multiplicity(self, a: int) -> int:
        return self.parts.count(a)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class PartitionStats:
    length: int
    odd_parts: int
    even_parts: int
    rank: int
    m2_rank: int
    durfee_side: int
    L: int
    mult_of_1: int


def durfee_side(p: Partition) -> int:
    side = 0
    for i, part in enumerate(p.positive_parts, start=1):
        if part >= i:
            side = i
        else:
            break
    return side


def stats(p: Partition) -> PartitionStats:
    """All statistics used by the package.

    ``m2_rank`` is columns minus rows of the 2-modular diagram, i.e.
    ``ceil(p_1 / 2) - length``; ``L`` is length minus the Durfee side.
    """
    d = durfee_side(p)
    return PartitionStats(
        length=p.length,
        odd_parts=p.odd_parts,
        even_parts=p.even_parts,
        rank=p.largest - p.length,
        m2_rank=(p.largest + 1) // 2 - p.length,
        durfee_side=d,
        L=p.length - d,
        mult_of_1=p.multiplicity(1),
    )


def conjugate(p: Partition) -> Partition:
    if p.has_zero:
        raise ValueError("conjugation is undefined for partitions with a zero part")
    parts = p.parts
    return Partition(
        tuple(sum(1 for x in parts if x > j) for j in range(p.largest))
    )


# raw generators over tuples -------------------------------------------------


def _gen(n: int, max_part: int, allowed: Callable[[int], bool] | None, distinct: bool):
    """Partitions of n (tuples) with parts <= max_part, in decreasing lex order."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        if allowed is not None and not allowed(first):
            continue
        nxt = first - 1 if distinct else first
        for rest in _gen(n - first, nxt, allowed, distinct):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_raw(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_gen(n, n, None, False))


@lru_cache(maxsize=None)
def _distinct_raw(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_gen(n, n, None, True))


def _odd(x: int) -> bool:
    return x % 2 == 1


# class predicates ---------------------------------------------------------------


def _omega_pairs(rest: list[int]) -> list[int] | None:
    """Split a multiset into pairs (a+1, a), a >= 0, returning the merged odd parts."""
    rest = sorted(rest, reverse=True)
    merged = []
    while rest:
        x = rest.pop(0)
        if x == 1:
            merged.append(1)
            continue
        try:
            rest.remove(x - 1)
        except ValueError:
            return None
        merged.append(2 * x - 1)
    return merged


def is_a_omega(p: Partition) -> bool:
    """Parts other than one copy of the largest form pairs of consecutive integers.

    The pair (1, 0) is allowed, i.e. a part 1 may stand alone.
    """
    if p.has_zero or not p.parts:
        return False
    return _omega_pairs(list(p.parts[1:])) is not None


def is_b_omega(p: Partition) -> bool:
    """Every odd part is less than twice the smallest part."""
    if p.has_zero or not p.parts:
        return False
    s = p.parts[-1]
    return all(x < 2 * s for x in p.parts if x % 2)


def is_a_nu(p: Partition) -> bool:
    """Even parts are exactly 2, 4, ..., 2k and every odd part is at most 2k + 1."""
    if p.has_zero:
        return False
    evens = [x for x in p.parts if x % 2 == 0]
    k = len(evens)
    if evens != list(range(2 * k, 0, -2)):
        return False
    return all(x <= 2 * k + 1 for x in p.parts if x % 2)


def _distinct(parts) -> bool:
    return len(set(parts)) == len(parts)


def is_b_nu(p: Partition) -> bool:
    """Distinct parts, odd parts below twice the smallest; 0 may be a part."""
    if not p.parts or not _distinct(p.parts):
        return False
    s = p.parts[-1]
    return all(x < 2 * s for x in p.parts if x % 2)


def is_q_odd(p: Partition) -> bool:
    return not p.has_zero and _distinct(p.parts) and all(x % 2 for x in p.parts)


def is_self_conjugate(p: Partition) -> bool:
    return not p.has_zero and conjugate(p) == p


def is_a_phi(p: Partition) -> bool:
    """Distinct parts, even parts at most twice the smallest; 0 may be a part."""
    if not p.parts or not _distinct(p.parts):
        return False
    s = p.parts[-1]
    return all(x <= 2 * s for x in p.parts if x % 2 == 0 and x > 0)


# class generators -------------------------------------------------------------------


def _gen_a_omega(n: int):
    out = []
    for k in range(n, 0, -1):
        # one largest part k plus pairs merging to odd parts <= 2k - 1
        for lam in _gen(n - k, 2 * k - 1, _odd, False):
            parts = [k]
            for o in lam:
                a = (o - 1) // 2
                parts.append(a + 1)
                if a:
                    parts.append(a)
            out.append(tuple(sorted(parts, reverse=True)))
    return out


def _gen_b_omega(n: int):
    return [t for t in _all_raw(n) if t and all(x < 2 * t[-1] for x in t if x % 2)]


def _gen_a_nu(n: int):
    out = []
    k = 0
    while k * (k + 1) <= n:
        evens = tuple(range(2 * k, 0, -2))
        for odds in _gen(n - k * (k + 1), 2 * k + 1, _odd, False):
            out.append(tuple(sorted(evens + odds, reverse=True)))
        k += 1
    return out


def _gen_b_nu(n: int):
    out = []
    for t in _distinct_raw(n):
        if t and all(x < 2 * t[-1] for x in t if x % 2):
            out.append(t)
        if all(x % 2 == 0 for x in t):
            out.append(t + (0,))
    return out


def _gen_a_phi(n: int):
    out = []
    for t in _distinct_raw(n):
        if t and all(x <= 2 * t[-1] for x in t if x % 2 == 0):
            out.append(t)
        if all(x % 2 for x in t):
            out.append(t + (0,))
    return out


CLASS_TAGS: dict[str, tuple[Callable[[int], list], Callable[[Partition], bool], bool]] = {
    # tag: (generator, membership predicate, zero parts allowed)
    "all": (lambda n: list(_all_raw(n)), lambda p: not p.has_zero, False),
    "a_omega": (_gen_a_omega, is_a_omega, False),
    "b_omega": (_gen_b_omega, is_b_omega, False),
    "a_nu": (_gen_a_nu, is_a_nu, False),
    "b_nu": (_gen_b_nu, is_b_nu, True),
    "q_odd": (lambda n: list(_gen(n, n, _odd, True)), is_q_odd, False),
    "self_conjugate": (
        lambda n: [t for t in _all_raw(n) if is_self_conjugate(Partition(t))],
        is_self_conjugate,
        False,
    ),
    "distinct": (lambda n: list(_distinct_raw(n)), lambda p: not p.has_zero and _distinct(p.parts), False),
    "a_phi": (_gen_a_phi, is_a_phi, True),
}


def class_predicate(tag: str) -> Callable[[Partition], bool]:
    try:
        return CLASS_TAGS[tag][1]
    except KeyError:
        raise ValueError(f"unknown partition class {tag!r}; known: {', '.join(CLASS_TAGS)}") from None


def enumerate_partitions(n: int, tag: str = "all", cap: int | None = None) -> list[Partition]:
    """Every partition of n in class ``tag``, sorted lexicographically decreasing.

    For ``b_nu`` and ``a_phi`` a partition and its copy with a trailing zero
    part are different elements.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if tag not in CLASS_TAGS:
        class_predicate(tag)
    _check_cap(n, cap)
    gen, _, zero = CLASS_TAGS[tag]
    raw = sorted(set(gen(n)), reverse=True)
    return [Partition(t, allow_zero=zero) for t in raw]


def all_partitions_filtered(n: int, pred: Callable[[Partition], bool], with_zero: bool = False) -> list[Partition]:
    """Brute-force filter over all partitions of n (and their zero-part copies)."""
    out = []
    for t in _all_raw(n):
        p = Partition(t)
        if pred(p):
            out.append(p)
        if with_zero:
            pz = Partition(t + (0,), allow_zero=True)
            if pred(pz):
                out.append(pz)
    return sorted(out, key=lambda p: p.parts, reverse=True)


# ---------------------------------------------------------------------------
# odd Ferrers diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OddFerrersDiagram:
    """First row of ``k`` ones over the 2-modular diagram of an odd partition.

    Row lengths must be non-increasing, so ``k >= (lam_1 + 1) / 2``. The empty
    diagram ``(0, ())`` is admitted as the size-0 object of the distinct family;
    it still counts as one row.
    """

    k: int
    lam: tuple[int, ...] = ()

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if any(x < 1 or x % 2 == 0 for x in lam):
            raise ValueError(f"lambda must have positive odd parts: {lam}")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(f"lambda must be non-increasing: {lam}")
        if self.k < 0 or (self.k == 0 and lam):
            raise ValueError("first row must be positive unless the diagram is empty")
        if lam and self.k < (lam[0] + 1) // 2:
            raise ValueError(f"row lengths increase: k={self.k} < ceil({lam[0]}/2)")

    @property
    def size(self) -> int:
        return self.k + sum(self.lam)

    @property
    def length(self) -> int:
        """Number of rows."""
        return len(self.lam) + 1

    @property
    def columns(self) -> int:
        return self.k

    @property
    def rank(self) -> int:
        return self.k - len(self.lam) - 1

    @property
    def is_empty(self) -> bool:
        return self.k == 0

    def row_lengths(self) -> list[int]:
        return [self.k] + [(x + 1) // 2 for x in self.lam]

    def filling(self) -> list[list[int]]:
        """Entries row by row: ones on the first row and first column, twos elsewhere."""
        rows = [[1] * self.k]
        for x in self.lam:
            rows.append([1] + [2] * ((x - 1) // 2))
        return rows

    def __str__(self) -> str:
        return f"({self.k},({','.join(map(str, self.lam))}))"


def rows_with_two(F: OddFerrersDiagram) -> int:
    """Rows containing a 2, i.e. parts of lambda greater than 1."""
    return sum(1 for x in F.lam if x > 1)


def ferrers_conjugate(F: OddFerrersDiagram) -> OddFerrersDiagram:
    """Transpose the filled diagram; the 1/2 filling is preserved."""
    if F.is_empty:
        return F
    rows = F.row_lengths()
    cols = [sum(1 for r in rows if r > j) for j in range(F.k)]
    # column 0 is the new first row of ones; column j >= 1 has its 1 on top
    return OddFerrersDiagram(cols[0], tuple(2 * c - 1 for c in cols[1:]))


def enumerate_odd_ferrers(n: int, distinct_lambda: bool = False, cap: int | None = None) -> list[OddFerrersDiagram]:
    """All odd Ferrers diagrams of size n, sorted decreasing by (k, lambda).

    Size 0 yields the empty diagram only in the distinct family.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cap)
    if n == 0:
        return [OddFerrersDiagram(0, ())] if distinct_lambda else []
    out = []
    for k in range(n, 0, -1):
        for lam in _gen(n - k, 2 * k - 1, _odd, distinct_lambda):
            out.append(OddFerrersDiagram(k, lam))
    return out


def mu_of_c(c: int) -> Partition:
    """Two distinct odd parts summing to c, as close together as possible."""
    if c % 2 or c < 4:
        raise ValueError(f"mu(c) needs an even c >= 4, got {c}")
    h = c // 2
    if c % 4 == 0:
        return Partition((h + 1, h - 1))
    return Partition((h + 2, h - 2))
