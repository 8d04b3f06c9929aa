"""Identity checks and Beck-type excesses behind ``mockparts verify``.

Every check returns an :class:`IdentityReport`.  A report is ``failed``
exactly when it carries a first discrepancy; the discrepancy records the
q-exponent and the two coefficients that disagree (for an inequality the
right-hand side is the required lower bound).
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, Sequence, Union

from . import mocktheta as mt
from .bijections import (
    BijectionDomainError,
    ferrers_to_nu,
    ferrers_to_omega,
    in_nu_tilde,
    nu_pentagonal_involution,
    nu_to_ferrers,
    omega_to_ferrers,
)
from .partitions import (
    HARD_ENUM_CAP,
    Partition,
    default_enum_cap,
    enumerate_odd_ferrers,
    enumerate_partitions,
    ferrers_conjugate,
    rows_with_two,
    stats,
)
from .qseries import BivariateSeries, QSeries

Series = Union[QSeries, BivariateSeries]
SeriesLike = Union[str, Series, Callable[[int], Series]]

CONTEXT_WIDTH = 10
DEFAULT_ENUM_CAP = 40


class UnknownCheckError(KeyError):
    """No check or series with the requested name."""


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class IdentityReport:
    name: str
    order_checked: int
    status: Literal["verified", "failed"]
    first_discrepancy: Discrepancy | None = None
    context: tuple[tuple[int, int, int], ...] = ()
    detail: str = ""
    elapsed: float = 0.0

    def __post_init__(self):
        if (self.status == "failed") != (self.first_discrepancy is not None):
            raise ValueError("a report fails exactly when it has a discrepancy")

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        d = self.first_discrepancy
        return {
            "name": self.name,
            "order": self.order_checked,
            "status": self.status,
            "first_discrepancy": None
            if d is None
            else {"exponent": d.exponent, "lhs": str(d.lhs), "rhs": str(d.rhs)},
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


@dataclass(frozen=True)
class ExceptionalSet:
    exponents: frozenset[int] = field(default_factory=frozenset)

    def __init__(self, exponents: Iterable[int] = ()):
        ex = frozenset(int(e) for e in exponents)
        if any(e < 0 for e in ex):
            raise ValueError("exceptional exponents must be non-negative")
        object.__setattr__(self, "exponents", ex)

    def __contains__(self, e: int) -> bool:
        return e in self.exponents

    def __iter__(self):
        return iter(sorted(self.exponents))

    def __len__(self) -> int:
        return len(self.exponents)


class _Fail(Exception):
    """Internal: carries the first discrepancy out of a composite check."""

    def __init__(self, exponent, lhs, rhs, context=(), detail=""):
        super().__init__(detail)
        self.d = Discrepancy(exponent, lhs, rhs)
        self.context = tuple(context)
        self.detail = detail


def _window(e: int, lo: int, hi: int) -> range:
    start = max(lo, e - CONTEXT_WIDTH // 2)
    stop = min(hi + 1, start + CONTEXT_WIDTH)
    start = max(lo, stop - CONTEXT_WIDTH)
    return range(start, stop)


def _run(name: str, order: int, body: Callable[[], str | None]) -> IdentityReport:
    t0 = time.perf_counter()
    try:
        detail = body() or ""
    except _Fail as f:
        return IdentityReport(name, order, "failed", f.d, f.context, f.detail, time.perf_counter() - t0)
    return IdentityReport(name, order, "verified", None, (), detail, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# primitive comparisons (raise _Fail)
# ---------------------------------------------------------------------------


def _resolve(x: SeriesLike, N: int) -> Series:
    if isinstance(x, (QSeries, BivariateSeries)):
        return x.truncate(N) if x.order > N else x
    if isinstance(x, str):
        try:
            return mt.build(x, N)
        except KeyError:
            raise UnknownCheckError(f"unknown series {x!r}") from None
    return x(N)


def _compare(label: str, a: Series, b: Series, N: int) -> None:
    if isinstance(a, QSeries) and isinstance(b, QSeries):
        ca, cb = a.coeffs, b.coeffs
        for e in range(N + 1):
            if ca[e] != cb[e]:
                ctx = [(i, ca[i], cb[i]) for i in _window(e, 0, N)]
                raise _Fail(e, ca[e], cb[e], ctx, f"{label}: coefficient of q^{e} differs")
        return
    if isinstance(a, QSeries):
        a = BivariateSeries.from_q(a)
    if isinstance(b, QSeries):
        b = BivariateSeries.from_q(b)
    ta, tb = a.terms(), b.terms()
    bad = [k for k in set(ta) | set(tb) if k[1] <= N and ta.get(k, 0) != tb.get(k, 0)]
    if bad:
        m, e = min(bad, key=lambda k: (k[1], k[0]))
        ctx = [(i, a.coeff(m, i), b.coeff(m, i)) for i in _window(e, 0, N)]
        raise _Fail(e, ta.get((m, e), 0), tb.get((m, e), 0), ctx, f"{label}: coefficient of z^{m} q^{e} differs")


def _nonneg(
    label: str,
    s: QSeries,
    N: int,
    except_: ExceptionalSet = ExceptionalSet(),
    floor: int = 0,
    floor_except: ExceptionalSet = ExceptionalSet(),
    start: int = 1,
) -> None:
    c = s.coeffs
    for e in range(start, N + 1):
        need = None
        if floor > 0 and e not in floor_except and c[e] < floor:
            need = floor
        elif e not in except_ and c[e] < 0:
            need = 0
        if need is not None:
            ctx = [(i, c[i], need) for i in _window(e, start, N)]
            raise _Fail(e, c[e], need, ctx, f"{label}: coefficient of q^{e} is {c[e]} < {need}")


def _expect(label: str, exponent: int, got: int, want: int) -> None:
    if got != want:
        raise _Fail(exponent, got, want, (), f"{label}: got {got}, expected {want}")


# ---------------------------------------------------------------------------
# public generic checks
# ---------------------------------------------------------------------------


def check_equal(lhs: SeriesLike, rhs: SeriesLike, N: int, name: str | None = None) -> IdentityReport:
    """Coefficient-wise comparison of two series up to ``q^N``.

    Each side is a catalog name or a series; a builder ``N -> series`` works too.
    """
    label = name or f"{lhs if isinstance(lhs, str) else 'lhs'} = {rhs if isinstance(rhs, str) else 'rhs'}"

    def body():
        _compare(label, _resolve(lhs, N), _resolve(rhs, N), N)

    return _run(label, N, body)


def check_nonneg(
    series: SeriesLike,
    except_: ExceptionalSet = ExceptionalSet(),
    floor: int = 0,
    floor_except: ExceptionalSet = ExceptionalSet(),
    N: int = 200,
    name: str | None = None,
) -> IdentityReport:
    """Coefficients ``>= 0`` outside ``except_`` and ``>= floor`` outside
    ``floor_except``, for exponents ``1..N``."""
    label = name or (series if isinstance(series, str) else "nonneg")

    def body():
        s = _resolve(series, N)
        if not isinstance(s, QSeries):
            raise TypeError("check_nonneg needs a univariate series")
        _nonneg(label, s, N, except_, floor, floor_except)

    return _run(label, N, body)


# ---------------------------------------------------------------------------
# enumeration helpers
# ---------------------------------------------------------------------------


def _total_parts(n: int, tag: str, cap: int | None) -> int:
    return sum(p.length for p in enumerate_partitions(n, tag, cap=cap))


def _cap_ok(n: int, cap: int | None) -> bool:
    limit = default_enum_cap() if cap is None else min(cap, HARD_ENUM_CAP)
    return n <= limit


def _enum_bound(stated: int, order: int | None, enum_cap: int) -> int:
    bound = stated if order is None else order
    return max(0, min(bound, enum_cap, HARD_ENUM_CAP))


# ---------------------------------------------------------------------------
# Beck-type excesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaExcess:
    n: int
    via_enumeration: int | None
    via_series: int
    via_ferrers: int | None
    b_parts: int | None = None
    ferrers_rows: int | None = None

    @property
    def agree(self) -> bool:
        vals = [v for v in (self.via_enumeration, self.via_series, self.via_ferrers) if v is not None]
        return len(set(vals)) == 1


@dataclass(frozen=True)
class NuExcess:
    n: int
    via_enumeration: int | None
    via_series: int
    via_ranks: int | None
    via_odd_parts: int | None = None

    @property
    def agree(self) -> bool:
        vals = [v for v in (self.via_enumeration, self.via_series, self.via_ranks, self.via_odd_parts) if v is not None]
        return len(set(vals)) == 1


def _series_order(n: int) -> int:
    # build at a fixed floor so that a loop over small n reuses one series
    return max(n, 64)


def _omega_deriv_diff(N: int) -> QSeries:
    return (mt.A_omega_z(N) - mt.B_omega_z(N)).dz_eval(1)


def beck_excess_omega(n: int, cap: int | None = None) -> OmegaExcess:
    """The omega excess three ways; enumeration fields are ``None`` above the cap."""
    if n < 1:
        raise ValueError("n must be positive")
    via_series = _omega_deriv_diff(_series_order(n))[n]
    if not _cap_ok(n, cap):
        return OmegaExcess(n, None, via_series, None)
    a = _total_parts(n, "a_omega", cap)
    b = _total_parts(n, "b_omega", cap)
    diagrams = enumerate_odd_ferrers(n, cap=cap)
    return OmegaExcess(
        n,
        a - b,
        via_series,
        sum(rows_with_two(F) for F in diagrams),
        b_parts=b,
        ferrers_rows=sum(F.length for F in diagrams),
    )


def beck_excess_nu(n: int, cap: int | None = None) -> NuExcess:
    """The nu excess four ways; enumeration fields are ``None`` above the cap."""
    if n < 0:
        raise ValueError("n must be non-negative")
    via_series = mt.c_series(_series_order(n))[n]
    if not _cap_ok(n, cap):
        return NuExcess(n, None, via_series, None)
    a_nu = enumerate_partitions(n, "a_nu", cap=cap)
    a = sum(p.length for p in a_nu)
    b = _total_parts(n, "b_nu", cap)
    ranks = sum(F.rank for F in enumerate_odd_ferrers(n, distinct_lambda=True, cap=cap))
    odd = sum(p.odd_parts - 1 for p in a_nu)
    return NuExcess(n, a - b, via_series, ranks, odd)


# ---------------------------------------------------------------------------
# section-specific checks
# ---------------------------------------------------------------------------


def _omega_pair_count(n: int, first_rows: Iterable[tuple[int, int]]) -> int:
    """Pairs (xi, (2j+1)^b) of total size n with j, b >= 1 and 2j + 1 <= 2k - 1.

    ``first_rows`` yields (size, k) for every candidate xi; k is the first
    row of the odd Ferrers diagram (equivalently the largest part of the
    omega partition).
    """
    sizes = Counter(first_rows)
    count = 0
    for (s, k), mult in sizes.items():
        rest = n - s
        for j in range(1, k):
            o = 2 * j + 1
            if o > rest:
                break
            if rest % o == 0:
                count += mult
    return count


def check_corollaries_omega(n_max: int = 30, cap: int | None = None, name: str = "omega_pairs") -> IdentityReport:
    """Pair counts against the excess over rows and the omega excess."""

    def body():
        per_size_f: dict[int, list[tuple[int, int]]] = {}
        per_size_a: dict[int, list[tuple[int, int]]] = {}
        for s in range(1, n_max + 1):
            per_size_f[s] = [(s, F.k) for F in enumerate_odd_ferrers(s, cap=cap)]
            per_size_a[s] = [(s, p.largest) for p in enumerate_partitions(s, "a_omega", cap=cap)]
        for n in range(1, n_max + 1):
            rec = beck_excess_omega(n, cap)
            over_rows = _total_parts(n, "a_omega", cap) - rec.ferrers_rows
            xi = [x for s in range(1, n) for x in per_size_f[s]]
            lam = [x for s in range(1, n) for x in per_size_a[s]]
            _expect(f"odd Ferrers pairs at n={n}", n, _omega_pair_count(n, xi), over_rows)
            _expect(f"omega-class pairs at n={n}", n, _omega_pair_count(n, lam), rec.via_enumeration)
        return f"n <= {n_max}"

    return _run(name, n_max, body)


def check_pentagonal_nu(n: int, cap: int | None = None) -> IdentityReport:
    """Parity counts over the nu class against e(n), replaying the involution."""
    name = f"nu_pentagonal[{n}]"

    def body():
        parts = enumerate_partitions(n, "a_nu", cap=cap)
        even = sum(1 for p in parts if p.length % 2 == 0)
        _expect(f"even - odd at n={n}", n, even - (len(parts) - even), mt.e_of_n(n))
        members = set(parts)
        fixed = []
        for p in parts:
            out = nu_pentagonal_involution(p)
            if out.kind == "fixed":
                fixed.append(p)
                continue
            img = out.image
            if img not in members or img.size != n:
                raise _Fail(n, 0, 1, (), f"involution image {img} of {p} left the class")
            if (img.length - p.length) % 2 == 0:
                raise _Fail(n, p.length, img.length, (), f"{p} -> {img} keeps the parity")
            back = nu_pentagonal_involution(img)
            if back.image != p:
                raise _Fail(n, 0, 1, (), f"{p} -> {img} -> {back.image} is not an involution")
        _expect(f"fixed points at n={n}", n, len(fixed), abs(mt.e_of_n(n)))
        if fixed:
            sign = 1 if fixed[0].length % 2 == 0 else -1
            _expect(f"fixed point parity at n={n}", n, sign, mt.e_of_n(n))

    return _run(name, n, body)


def check_parity_c(Nmax: int = 500) -> IdentityReport:
    """c(n) odd exactly when n is eight times a generalized pentagonal number."""

    def body():
        c = mt.c_series(Nmax)
        for n in range(1, Nmax + 1):
            want = 1 if mt.is_eight_times_pentagonal(n) else 0
            if c[n] % 2 != want:
                raise _Fail(n, c[n] % 2, want, (), f"parity of c({n}) = {c[n]}")

    return _run("nu_parity", Nmax, body)


def check_phi_main(N: int = 200) -> IdentityReport:
    """The derivative identity for phi and non-negativity of F1 - F2.

    The left side is ``dz A_phi(z)|_{z=1} + dz B_phi(w)|_{w=-1}``: the chain
    rule turns ``d/dz B_phi(-1/z)`` at ``z = 1`` into ``B_phi'(-1)``.  The
    Laurent substitution ``B_phi(-1/z)`` is cross-checked directly.
    """

    def body():
        target = mt.F1(N) - mt.F2(N)
        chain = mt.A_phi_z(N).dz_eval(1) + mt.B_phi_z(N).dz_eval(-1)
        _compare("chain-rule derivative = F1 - F2", chain, target, N)
        direct = (mt.A_phi_z(N) + mt.B_phi_z(N).subs_z(-1, -1)).dz_eval(1)
        _compare("Laurent derivative = F1 - F2", direct, target, N)
        _nonneg("F1 - F2", target, N)

    return _run("phi_main", N, body)


def check_prop_2f3_f2(N: int = 500) -> IdentityReport:
    """2F3 - F2 with its exceptional sets, and the theta-weighted corollary."""
    S = ExceptionalSet({1, 4, 8, 16})
    U = ExceptionalSet({1, 2, 3, 4, 5, 8, 9, 12, 13, 16, 17})
    T = ExceptionalSet({2, 5, 9, 13, 17})

    def body():
        a = mt.F3(N) * 2 - mt.F2(N)
        _nonneg("2F3 - F2", a, N, except_=S, floor=4, floor_except=U)
        low = [e for e in S if e <= N]
        if low:
            m = min(a[e] for e in low)
            _expect("min of 2F3 - F2 over S", min(low, key=lambda e: a[e]), m, -4)
        _nonneg("(2F3 - F2) * theta", a * mt.theta_squares(N), N, except_=T)

    return _run("prop_2f3_f2", N, body)


def check_prop_bs(Nmax: int = 500) -> IdentityReport:
    """``b_n <= b_(n-1) + b_(n-4)`` for n >= 9, with its two series forms."""
    S1 = ExceptionalSet({1, 3, 4, 6, 8})
    V = ExceptionalSet({1, 3, 4, 6, 8})

    def body():
        b = mt.F2(Nmax)
        for n in range(9, Nmax + 1):
            if b[n] > b[n - 1] + b[n - 4]:
                raise _Fail(n, b[n], b[n - 1] + b[n - 4], (), f"b_{n} > b_{n-1} + b_{n-4}")
        mult = QSeries.from_terms(Nmax, {0: -1, 1: 1, 4: 1})
        _nonneg("(q^4 + q - 1) F2", b * mult, Nmax, except_=S1, start=0)
        _nonneg("F2 * theta - F2", b * mt.theta_squares(Nmax) - b, Nmax, except_=V)

    return _run("prop_bs", Nmax, body)


def check_lemma_gm(m_max: int = 30, margin: int = 100) -> IdentityReport:
    """The f_m + g_m split with g_m non-negative and of the stated low order."""

    def body():
        for m in range(1, m_max + 1):
            N = 2 * m + 6 + margin
            g = mt.g_m(m, N)
            bound = mt.g_m_lower_bound(m)
            v = g.valuation()
            if v is not None and v < bound:
                raise _Fail(v, g[v], 0, (), f"g_{m} has a term q^{v} below q^{bound}")
            _nonneg(f"g_{m}", g, N, start=0)
        return f"m <= {m_max}, margin {margin}"

    return _run("lemma_gm", m_max, body)


# ---------------------------------------------------------------------------
# oracle coverage
# ---------------------------------------------------------------------------


def _uni_counts(n_max: int, fn: Callable[[int], int]) -> QSeries:
    return QSeries([fn(n) for n in range(n_max + 1)], n_max)


def _bi_counts(n_max: int, fn: Callable[[int], Iterable[int]], q_shift: int = 0) -> BivariateSeries:
    terms: dict[tuple[int, int], int] = {}
    for n in range(n_max + 1 - q_shift):
        for m in fn(n):
            key = (m, n + q_shift)
            terms[key] = terms.get(key, 0) + 1
    return BivariateSeries.from_terms(n_max, terms)


def _count(tag: str, cap: int | None) -> Callable[[int], int]:
    return lambda n: len(enumerate_partitions(n, tag, cap=cap))


def _lengths(tag: str, cap: int | None) -> Callable[[int], list[int]]:
    return lambda n: [p.length for p in enumerate_partitions(n, tag, cap=cap)]


def _ferrers(n: int, distinct: bool, cap: int | None):
    if n == 0 and not distinct:
        return []
    return enumerate_odd_ferrers(n, distinct_lambda=distinct, cap=cap)


def _phi_self_conjugate(n: int, cap: int | None) -> int:
    return sum((-1) ** stats(p).L for p in enumerate_partitions(n, "self_conjugate", cap=cap))


def _phi_m2_rank(n: int, cap: int | None) -> int:
    return sum((-1) ** stats(p).m2_rank for p in enumerate_partitions(n, "q_odd", cap=cap))


def _b_phi_terms(n_max: int, cap: int | None) -> BivariateSeries:
    terms = {(0, 0): 1}
    for n in range(1, n_max + 1):
        for p in enumerate_partitions(n, "q_odd", cap=cap):
            key = ((p.largest - 1) // 2, n)
            terms[key] = terms.get(key, 0) + (1 if p.length % 2 else -1)
    return BivariateSeries.from_terms(n_max, terms)


def oracle_table(n_max: int, cap: int | None = None) -> dict[str, tuple[str, Callable[[], Series]]]:
    """Enumeration-side series for every catalog entry with a combinatorial reading.

    Maps an oracle label to (catalog name, builder of the enumerated series).
    """
    N = n_max
    return {
        # omega(q) = A_omega(q) / q, so one coefficient fewer is reachable
        "omega": ("omega", lambda: QSeries([len(enumerate_partitions(n + 1, "a_omega", cap=cap)) for n in range(N)], N - 1)),
        "a_omega": ("a_omega", lambda: _uni_counts(N, _count("a_omega", cap))),
        "b_omega": ("b_omega", lambda: _uni_counts(N, _count("b_omega", cap))),
        "a_omega_z": ("a_omega_z", lambda: _bi_counts(N, _lengths("a_omega", cap))),
        "b_omega_z": ("b_omega_z", lambda: _bi_counts(N, _lengths("b_omega", cap))),
        "a_omega2": ("a_omega2", lambda: _bi_counts(N, lambda n: [F.length for F in _ferrers(n, False, cap)])),
        "a_omega2_tilde": ("a_omega2_tilde", lambda: _bi_counts(N, lambda n: [F.columns for F in _ferrers(n, False, cap)])),
        "nu": ("nu", lambda: _uni_counts(N, lambda n: (-1) ** n * len(enumerate_partitions(n, "a_nu", cap=cap)))),
        "nu_neg": ("nu_neg", lambda: _uni_counts(N, _count("a_nu", cap))),
        "a_nu": ("a_nu", lambda: _bi_counts(N, _lengths("a_nu", cap))),
        "a_nu2": ("a_nu2", lambda: _bi_counts(N, lambda n: [F.length for F in _ferrers(n, True, cap)])),
        "b_nu": ("b_nu", lambda: _bi_counts(N, _lengths("b_nu", cap))),
        "phi_self_conjugate": ("phi", lambda: _uni_counts(N, lambda n: _phi_self_conjugate(n, cap))),
        "phi_m2_rank": ("phi", lambda: _uni_counts(N, lambda n: _phi_m2_rank(n, cap))),
        "b_phi": ("b_phi", lambda: _b_phi_terms(N, cap)),
        "a_phi": ("a_phi", lambda: _bi_counts(N, _lengths("a_phi", cap), q_shift=1)),
        "f2": ("f2", lambda: _uni_counts(N, lambda n: sum(p.length for p in enumerate_partitions(n, "q_odd", cap=cap)))),
        "c_series": ("c_series", lambda: _uni_counts(N, lambda n: sum(p.odd_parts - 1 for p in enumerate_partitions(n, "a_nu", cap=cap)))),
    }


#: catalog series without a combinatorial reading in scope
NO_ORACLE = ("d_phi", "f1", "f3", "theta_squares")


def check_oracles(n_max: int = 40, cap: int | None = None) -> IdentityReport:
    """Series coefficients against brute-force enumeration for n <= n_max."""

    def body():
        for label, (cat, build) in oracle_table(n_max, cap).items():
            enum = build()
            _compare(f"{cat} vs enumeration ({label})", mt.build(cat, enum.order), enum, enum.order)
        return f"n <= {n_max}"

    return _run("oracle_coverage", n_max, body)


# ---------------------------------------------------------------------------
# registered checks
# ---------------------------------------------------------------------------


def _omega_chain(N: int) -> None:
    _compare("q omega = A_omega", mt.omega(N).shift(1), mt.a_omega(N), N)
    _compare("A_omega = B_omega", mt.a_omega(N), mt.b_omega(N), N)


def _omega_bivariate(N: int) -> None:
    _compare("B_omega(z) = A~_omega2(z)", mt.B_omega_z(N), mt.A_omega2_tilde_z(N), N)
    _compare("A~_omega2(z) = A_omega2(z)", mt.A_omega2_tilde_z(N), mt.A_omega2_z(N), N)
    _compare("A_omega(1) = A_omega", mt.A_omega_z(N).eval_z(1), mt.a_omega(N), N)
    _compare("B_omega(1) = B_omega", mt.B_omega_z(N).eval_z(1), mt.b_omega(N), N)


def _omega_parts_rows(N: int) -> None:
    lhs = mt.A_omega_z(N).times_monomial(1, 0).times_factor(-1, 1, 1)
    rhs = mt.double_z(mt.A_omega2_z(N)).times_factor(-1, 2, 1)
    _compare("z(1 - zq) A_omega(z) = (1 - z^2 q) A_omega2(z^2)", lhs, rhs, N)


def omega_excess_first_form(N: int) -> QSeries:
    """``sum k q^k/(q;q^2)_k - A_omega(q)/(1-q)``."""
    total = QSeries.zero(N)
    for k in range(1, N + 1):
        total += QSeries.monomial(N, k, k).over_poch(1, 1, 2, k)
    return total - mt.a_omega(N).over_factor(-1, 1)


def omega_excess_pair_form(N: int) -> QSeries:
    """``sum_k q^k/(q;q^2)_k * sum_{j=1}^{k-1} q^(2j+1)/(1-q^(2j+1))``."""
    total = QSeries.zero(N)
    inner = QSeries.zero(N)
    for k in range(1, N + 1):
        if k >= 2:
            inner += QSeries.monomial(N, 2 * k - 1).over_factor(-1, 2 * k - 1)
        total += QSeries.monomial(N, k).over_poch(1, 1, 2, k) * inner
    return total


def _omega_excess_series(N: int) -> None:
    d = _omega_deriv_diff(N)
    _compare("excess via A~_omega2 derivative", d, omega_excess_first_form(N), N)
    _compare("excess via pair generating function", d, omega_excess_pair_form(N), N)
    _compare("derivative against A_omega2", d, (mt.A_omega_z(N) - mt.A_omega2_z(N)).dz_eval(1), N)


def _omega_excess(N: int, n_max: int, cap: int) -> str:
    _omega_excess_series(N)
    for n in range(1, n_max + 1):
        r = beck_excess_omega(n, cap)
        _expect(f"omega excess enumeration vs series at n={n}", n, r.via_enumeration, r.via_series)
        _expect(f"omega excess series vs rows with a 2 at n={n}", n, r.via_series, r.via_ferrers)
        _expect(f"parts of B_omega vs odd Ferrers rows at n={n}", n, r.b_parts, r.ferrers_rows)
    return f"series to q^{N}, enumeration n <= {n_max}"


def _omega_bijection(n_max: int, cap: int) -> str:
    for n in range(1, n_max + 1):
        parts = enumerate_partitions(n, "a_omega", cap=cap)
        diagrams = enumerate_odd_ferrers(n, cap=cap)
        _expect(f"|A_omega({n})| vs odd Ferrers count", n, len(parts), len(diagrams))
        for p in parts:
            F = omega_to_ferrers(p)
            if ferrers_to_omega(F) != p or F.size != n:
                raise _Fail(n, 0, 1, (), f"omega roundtrip fails at {p}")
            _expect(f"length identity at {p}", n, p.length, F.length + rows_with_two(F))
        for F in diagrams:
            G = ferrers_conjugate(F)
            if ferrers_conjugate(G) != F or G.size != n or G.length != F.columns:
                raise _Fail(n, 0, 1, (), f"conjugation fails at {F}")
    return f"n <= {n_max}"


def _nu_chain(N: int) -> None:
    v = mt.nu_neg(N)
    _compare("nu(-q) = A_nu(1)", mt.A_nu_z(N).eval_z(1), v, N)
    _compare("nu(-q) = A_nu2", mt.a_nu2(N), v, N)
    _compare("nu(-q) = B_nu", mt.b_nu(N), v, N)
    _compare("A_nu2(1) = A_nu2", mt.A_nu2_z(N).eval_z(1), v, N)
    _compare("B_nu(1) = B_nu", mt.B_nu_z(N).eval_z(1), v, N)


def _nu_bivariate(N: int) -> None:
    _compare("B_nu(z) = A_nu2(z)", mt.B_nu_z(N), mt.A_nu2_z(N), N)
    _compare("B_nu(z) closed form", mt.B_nu_z(N), mt.B_nu_z_closed(N), N)
    _compare("A_nu(z) column form", mt.A_nu_z(N), mt.A_nu_z_columns(N), N)


def _nu_bijection(n_max: int, cap: int) -> str:
    for n in range(0, n_max + 1):
        parts = enumerate_partitions(n, "a_nu", cap=cap)
        diagrams = enumerate_odd_ferrers(n, distinct_lambda=True, cap=cap)
        _expect(f"|A_nu({n})| vs distinct odd Ferrers count", n, len(parts), len(diagrams))
        for F in diagrams:
            try:
                p = ferrers_to_nu(F)
            except BijectionDomainError as exc:
                raise _Fail(n, 0, 1, (), str(exc)) from None
            if nu_to_ferrers(p) != F or p.size != n:
                raise _Fail(n, 0, 1, (), f"nu roundtrip fails at {F}")
            _expect(f"l(pi) = k at {F}", n, p.length, F.k)
            _expect(f"even parts = l(lambda) at {F}", n, p.even_parts, len(F.lam))
        for p in parts:
            if ferrers_to_nu(nu_to_ferrers(p)) != p:
                raise _Fail(n, 0, 1, (), f"nu roundtrip fails at {p}")
    return f"n <= {n_max}"


def _nu_excess(N: int, n_max: int, cap: int) -> str:
    c = mt.c_series(N)
    _compare("c series = nu derivative difference", c, (mt.A_nu_z(N) - mt.B_nu_z(N)).dz_eval(1), N)
    _nonneg("c(n)", c, N)
    for n in range(1, n_max + 1):
        r = beck_excess_nu(n, cap)
        for label, v in (("enumeration", r.via_enumeration), ("ranks", r.via_ranks), ("odd parts", r.via_odd_parts)):
            _expect(f"nu excess {label} vs series at n={n}", n, v, r.via_series)
    return f"series to q^{N}, enumeration n <= {n_max}"


def _nu_pentagonal(n_max: int, cap: int) -> str:
    for n in range(0, n_max + 1):
        rep = check_pentagonal_nu(n, cap)
        if not rep.ok:
            raise _Fail(rep.first_discrepancy.exponent, rep.first_discrepancy.lhs, rep.first_discrepancy.rhs, (), rep.detail)
        if sum(1 for p in enumerate_partitions(n, "a_nu", cap=cap) if in_nu_tilde(p)) > 1:
            raise _Fail(n, 2, 1, (), f"more than one fixed point at n={n}")
    return f"n <= {n_max}"


PHI_FIRST_TERMS = (1, 1, 0, -1, 1, 1, -1, -1, 0, 2, 0, -2, 1, 1, -1, -2, 1)


def _phi_forms(N: int) -> None:
    p = mt.phi(N)
    for e, want in enumerate(PHI_FIRST_TERMS[: N + 1]):
        _expect(f"known coefficient of q^{e} in phi", e, p[e], want)
    _compare("phi Eulerian = phi alternating", p, mt.phi_alt(N), N)
    _compare("B_phi(-1) = phi", mt.B_phi_z(N).eval_z(-1), p, N)


def _phi_companion(N: int) -> None:
    th = mt.theta_squares(N)
    rhs = 1 - mt.phi(N) + mt.odd_distinct_product(N) * th * 2
    _compare("A_phi(1) = 1 - phi + 2(-q;q^2) theta", mt.A_phi_z(N).eval_z(1), rhs, N)


def _phi_d_identity(N: int) -> None:
    lhs = mt.A_phi_z(N) + mt.B_phi_z(N).subs_z(-1, -1)
    _compare("B_phi(-1/z) series form", mt.B_phi_z(N).subs_z(-1, -1), mt.B_phi_z_inverted(N), N)
    _compare("A_phi(z) + B_phi(-1/z) = D_phi(z)", lhs, mt.D_phi_z(N), N)
    _compare("D_phi product form = theta form", mt.D_phi_z_product(N), mt.D_phi_z(N), N)
    _compare("D_phi at z = 1", mt.D_phi_z(N).eval_z(1), lhs.eval_z(1), N)
    _compare("D_phi at z = -1", mt.D_phi_z(N).eval_z(-1), lhs.eval_z(-1), N)
    _compare("dz D_phi at z = 1 = F1 - F2", mt.D_phi_z(N).dz_eval(1), mt.F1(N) - mt.F2(N), N)


def _phi_sandwich(N: int) -> None:
    _nonneg("F3", mt.F3(N), N)
    _nonneg("F1 - 2 F3 theta", mt.F1(N) - mt.F3(N) * mt.theta_squares(N) * 2, N)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    description: str
    covers: tuple[str, ...]
    default_order: int
    enum_bound: int | None
    run: Callable[[int, int], str | None]


def _series_check(fn: Callable[[int], None]) -> Callable[[int, int], str | None]:
    return lambda order, enum_n: fn(order)


def _report_check(fn: Callable[[int], IdentityReport]) -> Callable[[int, int], str | None]:
    def run(order, enum_n):
        rep = fn(order)
        if not rep.ok:
            d = rep.first_discrepancy
            raise _Fail(d.exponent, d.lhs, d.rhs, rep.context, rep.detail)
        return rep.detail

    return run


REGISTRY: dict[str, CheckSpec] = {
    spec.name: spec
    for spec in [
        CheckSpec(
            "omega_chain", "q omega(q) = A_omega(q) = B_omega(q)",
            ("q omega = A_omega", "A_omega = B_omega"), 200, None, _series_check(_omega_chain),
        ),
        CheckSpec(
            "omega_bivariate", "B_omega(z) = A~_omega2(z) = A_omega2(z), z = 1 specialisations",
            ("B_omega(z) = A~_omega2(z)", "A~_omega2(z) = A_omega2(z)", "B_omega(z) = A_omega2(z)"),
            80, None, _series_check(_omega_bivariate),
        ),
        CheckSpec(
            "omega_parts_rows", "A_omega(z) against A_omega2(z^2), denominators cleared",
            ("A_omega(z) = A_omega2(z^2)(1 - z^2 q)/(z(1 - zq))",), 60, None, _series_check(_omega_parts_rows),
        ),
        CheckSpec(
            "omega_bijection", "omega class <-> odd Ferrers diagrams, length identity, conjugation",
            ("omega class bijection",), 30, 30, lambda order, n: _omega_bijection(n, n),
        ),
        CheckSpec(
            "omega_excess", "omega excess: enumeration, derivative, rows with a 2; parts of B_omega = rows",
            ("omega excess = rows with a 2", "parts of B_omega = rows of odd Ferrers diagrams",
             "omega excess first form", "omega excess pair form"),
            200, 30, lambda order, n: _omega_excess(order, n, n),
        ),
        CheckSpec(
            "omega_pairs", "omega excess as pair counts (odd Ferrers diagram or omega partition, odd rectangle)",
            ("omega pairs with odd Ferrers diagrams", "omega pairs with omega partitions"),
            30, 30, lambda order, n: _report_check(lambda _: check_corollaries_omega(n, n))(order, n),
        ),
        CheckSpec(
            "nu_chain", "nu(-q) = A_nu(q) = A_nu2(q) = B_nu(q)",
            ("nu(-q) = A_nu2", "nu(-q) = B_nu"), 200, None, _series_check(_nu_chain),
        ),
        CheckSpec(
            "nu_bivariate", "B_nu(z) = A_nu2(z), closed and column forms",
            ("B_nu(z) = A_nu2(z)", "B_nu(z) closed form", "A_nu(z) column form"), 80, None, _series_check(_nu_bivariate),
        ),
        CheckSpec(
            "nu_bijection", "nu class <-> distinct odd Ferrers diagrams with l(pi) = k, even parts = l(lambda)",
            ("nu class bijection",), 30, 30, lambda order, n: _nu_bijection(n, n),
        ),
        CheckSpec(
            "nu_excess", "c(n) >= 0 and the four nu excess computations",
            ("nu excess = c(n)", "c(n) >= 0"), 500, 30, lambda order, n: _nu_excess(order, n, n),
        ),
        CheckSpec(
            "nu_pentagonal", "even minus odd parts counts over the nu class equal e(n)",
            ("nu pentagonal",), 40, 40, lambda order, n: _nu_pentagonal(n, n),
        ),
        CheckSpec(
            "nu_parity", "c(n) odd iff n is eight times a generalized pentagonal number",
            ("c(n) parity",), 500, None, _report_check(check_parity_c),
        ),
        CheckSpec(
            "phi_forms", "phi: known terms through q^16, alternating form and B_phi(-1)",
            ("phi alternating form", "B_phi(-1) = phi"), 200, None, _series_check(_phi_forms),
        ),
        CheckSpec(
            "phi_companion", "A_phi(1) = 1 - phi + 2(-q;q^2) theta",
            ("A_phi(1) = 1 - phi + 2(-q;q^2) theta",), 200, None, _series_check(_phi_companion),
        ),
        CheckSpec(
            "phi_d_identity", "A_phi(z) + B_phi(-1/z) = D_phi(z), both forms of D_phi",
            ("B_phi(-1/z) series form", "A_phi(z) + B_phi(-1/z) = D_phi(z)", "D_phi two forms"),
            60, None, _series_check(_phi_d_identity),
        ),
        CheckSpec(
            "phi_main", "d/dz at z = 1 of A_phi + B_phi(-1/z) equals F1 - F2, which is >= 0",
            ("phi derivative = F1 - F2", "F1 - F2 >= 0"), 200, None, _report_check(check_phi_main),
        ),
        CheckSpec(
            "phi_sandwich", "F3 >= 0 and F1 - 2 F3 theta >= 0",
            ("F3 >= 0", "F1 - 2 F3 theta >= 0"), 500, None, _series_check(_phi_sandwich),
        ),
        CheckSpec(
            "prop_2f3_f2", "2F3 - F2 outside S, floor 4 outside U, min -4 on S, theta-weighted outside T",
            ("2F3 - F2 >=_S 0", "(2F3 - F2) theta >=_T 0"), 500, None, _report_check(check_prop_2f3_f2),
        ),
        CheckSpec(
            "prop_bs", "b_n <= b_(n-1) + b_(n-4), (q^4+q-1) F2 and F2 theta - F2 outside {1,3,4,6,8}",
            ("b_n <= b_(n-1) + b_(n-4)", "(q^4 + q - 1) F2 >= 0", "F2 theta - F2 >=_V 0"),
            500, None, _report_check(check_prop_bs),
        ),
        CheckSpec(
            "lemma_gm", "f_m + g_m decomposition, g_m >= 0 with the stated low order, m <= 30",
            ("f_m + g_m decomposition",), 30, None, lambda order, n: _report_check(lambda m: check_lemma_gm(m, 100))(order, n),
        ),
        CheckSpec(
            "oracle_coverage", "every catalog series with a combinatorial reading vs enumeration",
            ("phi self-conjugate reading", "phi M2-rank reading", "F2 counts parts of distinct odd partitions"),
            40, 40, lambda order, n: _report_check(lambda _: check_oracles(n, n))(order, n),
        ),
    ]
}

ALIASES = {"t1": "omega_excess"}


def resolve_names(names: Sequence[str] | None) -> list[str]:
    """Expand ``all`` and aliases; raise :class:`UnknownCheckError` on unknown names."""
    if not names or list(names) == ["all"]:
        return list(REGISTRY)
    out = []
    for raw in names:
        if raw == "all":
            out.extend(n for n in REGISTRY if n not in out)
            continue
        name = ALIASES.get(raw, raw)
        if name not in REGISTRY:
            raise UnknownCheckError(raw)
        if name not in out:
            out.append(name)
    return out


def run_check(name: str, order: int | None = None, enum_cap: int = DEFAULT_ENUM_CAP, label: str | None = None) -> IdentityReport:
    """Run one registered check.

    ``order`` replaces the default series order.  Enumeration sub-checks run
    up to ``min(order or stated bound, enum_cap)``.
    """
    spec = REGISTRY[ALIASES.get(name, name)]
    N = spec.default_order if order is None else order
    if N < 1:
        raise ValueError("order must be at least 1")
    enum_n = _enum_bound(spec.enum_bound, order, enum_cap) if spec.enum_bound is not None else 0
    return _run(label or spec.name, N, lambda: spec.run(N, enum_n))


def run_checks(names: Sequence[str] | None = None, order: int | None = None, enum_cap: int = DEFAULT_ENUM_CAP) -> list[IdentityReport]:
    return [run_check(n, order, enum_cap) for n in resolve_names(names)]
