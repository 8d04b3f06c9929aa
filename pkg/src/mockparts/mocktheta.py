"""Builders for the third-order mock theta series and their refinements.

Each builder takes a truncation order ``N`` and returns an exact series.
Infinite sums over ``k`` stop at the first ``k`` whose lowest q-power
exceeds ``N``; the bound used is noted next to each loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal, Union

from .qseries import BivariateSeries, QSeries

Series = Union[QSeries, BivariateSeries]

# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _q(N: int) -> QSeries:
    return QSeries.one(N)


def _z(N: int) -> BivariateSeries:
    return BivariateSeries.one(N)


def theta_squares(N: int) -> QSeries:
    """``sum_{n >= 1} q^(n^2)``."""
    terms = {}
    n = 1
    while n * n <= N:
        terms[n * n] = 1
        n += 1
    return QSeries.from_terms(N, terms)


def odd_distinct_product(N: int) -> QSeries:
    """``(-q; q^2)_inf``."""
    return _q(N).times_poch(-1, 1, 2)


# ---------------------------------------------------------------------------
# omega
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def omega(N: int) -> QSeries:
    """``sum_{k >= 0} q^(2k(k+1)) / (q; q^2)_{k+1}^2``."""
    total = QSeries.zero(N)
    k = 0
    while 2 * k * (k + 1) <= N:
        total += QSeries.monomial(N, 2 * k * (k + 1)).over_poch(1, 1, 2, k + 1).over_poch(1, 1, 2, k + 1)
        k += 1
    return total


@lru_cache(maxsize=None)
def a_omega(N: int) -> QSeries:
    """``sum_{k >= 1} q^k / (q; q^2)_k``, evaluated from the inside out (k <= N)."""
    acc = QSeries.zero(N)
    for i in range(N, 0, -1):
        acc = (acc + 1).shift(1).over_factor(-1, 2 * i - 1)
    return acc


@lru_cache(maxsize=None)
def b_omega(N: int) -> QSeries:
    """``sum_{k >= 1} q^k / ((q^k; q)_{k+1} (q^(2k+2); q^2)_inf)`` (k <= N)."""
    total = QSeries.zero(N)
    for k in range(1, N + 1):
        term = QSeries.monomial(N, k).over_poch(1, k, 1, k + 1).over_poch(1, 2 * k + 2, 2)
        total += term
    return total


@lru_cache(maxsize=None)
def A_omega_z(N: int) -> BivariateSeries:
    """``sum_{k >= 1} z q^k / ((1 - zq)(z^2 q^3; q^2)_{k-1})`` (k <= N)."""
    acc = BivariateSeries.zero(N)
    for i in range(N - 1, 0, -1):
        acc = (acc + 1).times_monomial(0, 1).over_factor(-1, 2, 2 * i + 1)
    return (acc + 1).times_monomial(1, 1).over_factor(-1, 1, 1)


@lru_cache(maxsize=None)
def B_omega_z(N: int) -> BivariateSeries:
    """``sum_{k >= 1} z q^k / ((z q^k; q)_{k+1} (z q^(2k+2); q^2)_inf)`` (k <= N)."""
    total = BivariateSeries.zero(N)
    for k in range(1, N + 1):
        term = _z(N - k).over_poch(1, 1, k, 1, k + 1).over_poch(1, 1, 2 * k + 2, 2).lift(N, 1, k)
        total += term
    return total


@lru_cache(maxsize=None)
def A_omega2_z(N: int) -> BivariateSeries:
    """``sum_{k >= 1} z q^k / (z q; q^2)_k`` (k <= N)."""
    acc = BivariateSeries.zero(N)
    for i in range(N, 1, -1):
        acc = (acc + 1).times_monomial(0, 1).over_factor(-1, 1, 2 * i - 1)
    return (acc + 1).times_monomial(1, 1).over_factor(-1, 1, 1)


@lru_cache(maxsize=None)
def A_omega2_tilde_z(N: int) -> BivariateSeries:
    """``sum_{k >= 1} z^k q^k / (q; q^2)_k`` (k <= N)."""
    acc = BivariateSeries.zero(N)
    for i in range(N, 0, -1):
        acc = (acc + 1).times_monomial(1, 1).over_factor(-1, 0, 2 * i - 1)
    return acc


def double_z(s: BivariateSeries) -> BivariateSeries:
    """``S(z^2; q)``."""
    return s.subs_z(1, 2)


# ---------------------------------------------------------------------------
# nu
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def nu(N: int) -> QSeries:
    """``sum_{k >= 0} q^(k(k+1)) / (-q; q^2)_{k+1}`` (k(k+1) <= N)."""
    total = QSeries.zero(N)
    k = 0
    while k * (k + 1) <= N:
        total += QSeries.monomial(N, k * (k + 1)).over_poch(-1, 1, 2, k + 1)
        k += 1
    return total


@lru_cache(maxsize=None)
def nu_neg(N: int) -> QSeries:
    """``nu(-q)``, by flipping the signs of the odd coefficients of ``nu(q)``."""
    return QSeries([(-1) ** n * v for n, v in enumerate(nu(N))], N)


@lru_cache(maxsize=None)
def a_nu2(N: int) -> QSeries:
    """``sum_{k >= 0} (-q; q^2)_k q^k`` (k <= N)."""
    acc = QSeries.zero(N)
    for i in range(N, 0, -1):
        acc = (acc + 1).shift(1).times_factor(1, 2 * i - 1)
    return acc + 1


@lru_cache(maxsize=None)
def b_nu(N: int) -> QSeries:
    """``sum_{k >= 0} q^k (-q^(k+1); q)_k (-q^(2k+2); q^2)_inf`` (k <= N)."""
    total = QSeries.zero(N)
    for k in range(0, N + 1):
        total += QSeries.monomial(N, k).times_poch(-1, k + 1, 1, k).times_poch(-1, 2 * k + 2, 2)
    return total


@lru_cache(maxsize=None)
def A_nu_z(N: int) -> BivariateSeries:
    """``sum_{k >= 0} z^k q^(k^2+k) / (zq; q^2)_{k+1}`` (k^2 + k <= N)."""
    total = BivariateSeries.zero(N)
    k = 0
    while k * k + k <= N:
        total += _z(N - (k * k + k)).over_poch(1, 1, 1, 2, k + 1).lift(N, k, k * k + k)
        k += 1
    return total


@lru_cache(maxsize=None)
def A_nu_z_columns(N: int) -> BivariateSeries:
    """``sum_{k >= 0} (-q; q^2)_k z^k q^k`` (k <= N)."""
    acc = BivariateSeries.zero(N)
    for i in range(N, 0, -1):
        acc = (acc + 1).times_monomial(1, 1).times_factor(1, 0, 2 * i - 1)
    return acc + 1


@lru_cache(maxsize=None)
def A_nu2_z(N: int) -> BivariateSeries:
    """``sum_{k >= 0} (-zq; q^2)_k z q^k`` (k <= N)."""
    acc = BivariateSeries.zero(N)
    for i in range(N, 0, -1):
        acc = (acc + 1).times_monomial(0, 1).times_factor(1, 1, 2 * i - 1)
    return (acc + 1).times_monomial(1, 0)


@lru_cache(maxsize=None)
def B_nu_z(N: int) -> BivariateSeries:
    """``sum_{k >= 0} z q^k (-z q^(k+1); q)_k (-z q^(2k+2); q^2)_inf`` (k <= N)."""
    total = BivariateSeries.zero(N)
    for k in range(0, N + 1):
        total += _z(N - k).times_poch(-1, 1, k + 1, 1, k).times_poch(-1, 1, 2 * k + 2, 2).lift(N, 1, k)
    return total


@lru_cache(maxsize=None)
def B_nu_z_closed(N: int) -> BivariateSeries:
    """``sum_{k >= 0} z^(k+1) q^(k^2+k) / (q; q^2)_{k+1}`` (k^2 + k <= N)."""
    total = BivariateSeries.zero(N)
    k = 0
    while k * k + k <= N:
        total += _z(N - (k * k + k)).over_poch(1, 0, 1, 2, k + 1).lift(N, k + 1, k * k + k)
        k += 1
    return total


@lru_cache(maxsize=None)
def c_series(N: int) -> QSeries:
    """``sum_k q^(k^2+k)/(q; q^2)_{k+1} * (sum_{j=0}^{k} q^(2j+1)/(1 - q^(2j+1)) - 1)``."""
    total = QSeries.zero(N)
    inner = QSeries.zero(N) - 1
    k = 0
    while k * k + k <= N:
        inner += QSeries.monomial(N, 2 * k + 1).over_factor(-1, 2 * k + 1)
        total += QSeries.monomial(N, k * k + k).over_poch(1, 1, 2, k + 1) * inner
        k += 1
    return total


def e_of_n(n: int) -> int:
    """+1 if n = 3j^2 + 2j, -1 if n = 3j^2 + 4j + 1 (j >= 0), else 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    j = 0
    while 3 * j * j + 2 * j <= n:
        if 3 * j * j + 2 * j == n:
            return 1
        if 3 * j * j + 4 * j + 1 == n:
            return -1
        j += 1
    return 0


def is_eight_times_pentagonal(n: int) -> bool:
    """n = 8 * j(3j +- 1)/2 for some integer j >= 0."""
    if n % 8:
        return False
    m = n // 8
    j = 0
    while j * (3 * j - 1) // 2 <= m:
        if m in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            return True
        j += 1
    return False


# ---------------------------------------------------------------------------
# phi
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def phi(N: int) -> QSeries:
    """``sum_{n >= 0} q^(n^2) / (-q^2; q^2)_n`` (n^2 <= N)."""
    total = QSeries.zero(N)
    n = 0
    while n * n <= N:
        total += QSeries.monomial(N, n * n).over_poch(-1, 2, 2, n)
        n += 1
    return total


@lru_cache(maxsize=None)
def phi_alt(N: int) -> QSeries:
    """``1 + sum_{n >= 0} (-1)^n q^(2n+1) (q; q^2)_n`` (2n + 1 <= N)."""
    total = _q(N)
    n = 0
    while 2 * n + 1 <= N:
        total += QSeries.monomial(N, 2 * n + 1, (-1) ** n).times_poch(1, 1, 2, n)
        n += 1
    return total


@lru_cache(maxsize=None)
def B_phi_z(N: int) -> BivariateSeries:
    """``1 + sum_{n >= 0} z^n q^(2n+1) (q; q^2)_n`` (2n + 1 <= N)."""
    total = _z(N)
    n = 0
    while 2 * n + 1 <= N:
        total += _z(N - (2 * n + 1)).times_poch(1, 0, 1, 2, n).lift(N, n, 2 * n + 1)
        n += 1
    return total


@lru_cache(maxsize=None)
def B_phi_z_inverted(N: int) -> BivariateSeries:
    """``1 + sum_{n >= 0} z^(-n) q^((n+1)^2) / (-z^(-1) q^2; q^2)_{n+1}``.

    Equal to ``B_phi(-1/z; q)``; kept separate as an independent route.
    """
    total = _z(N)
    n = 0
    while (n + 1) ** 2 <= N:
        total += _z(N - ((n + 1) ** 2)).over_poch(-1, -1, 2, 2, n + 1).lift(N, -n, (n + 1) ** 2)
        n += 1
    return total


@lru_cache(maxsize=None)
def A_phi_z(N: int) -> BivariateSeries:
    """``q sum_{n >= 0} z q^n (-z q^(n+1); q)_n (-z q^(2n+1); q^2)_inf`` (n + 1 <= N)."""
    total = BivariateSeries.zero(N)
    n = 0
    while n + 1 <= N:
        total += _z(N - (n + 1)).times_poch(-1, 1, n + 1, 1, n).times_poch(-1, 1, 2 * n + 1, 2).lift(N, 1, n + 1)
        n += 1
    return total


def _theta_laurent(N: int) -> BivariateSeries:
    """``1 + sum_{n >= 1} (z^n + z^(-n)) q^(n^2)``, i.e. the full two-sided theta series."""
    terms = {(0, 0): 1}
    n = 1
    while n * n <= N:
        terms[(n, n * n)] = 1
        terms[(-n, n * n)] = 1
        n += 1
    return BivariateSeries.from_terms(N, terms)


@lru_cache(maxsize=None)
def D_phi_z(N: int) -> BivariateSeries:
    """``1 - z(-zq; q^2)_inf + z (-q; q)_inf / (-q^2/z; q^2)_inf * theta(z; q)``.

    ``theta(z; q) = 1 + sum_{n >= 1} (z^n + z^(-n)) q^(n^2)``; negative powers
    of z are carried exactly.
    """
    first = _z(N).times_poch(-1, 1, 1, 2).times_monomial(1, 0)
    second = (
        BivariateSeries.from_q(_q(N).times_poch(-1, 1, 1))
        .over_poch(-1, -1, 2, 2)
        .times_monomial(1, 0)
        * _theta_laurent(N)
    )
    return 1 - first + second


@lru_cache(maxsize=None)
def D_phi_z_product(N: int) -> BivariateSeries:
    """``1 + z(-zq; q^2)_inf (-1 + (-q; q)_inf (q^2; q^2)_inf (-q/z; q^2)_inf / (-q^2/z; q^2)_inf)``."""
    ratio = (
        BivariateSeries.from_q(_q(N).times_poch(-1, 1, 1).times_poch(1, 2, 2))
        .times_poch(-1, -1, 1, 2)
        .over_poch(-1, -1, 2, 2)
    )
    return 1 + _z(N).times_poch(-1, 1, 1, 2).times_monomial(1, 0) * (ratio - 1)


@lru_cache(maxsize=None)
def F2(N: int) -> QSeries:
    """``(-q; q^2)_inf sum_{m >= 1} q^(2m-1) / (1 + q^(2m-1))``."""
    s = QSeries.zero(N)
    for a in range(1, N + 1, 2):
        s += QSeries.monomial(N, a).over_factor(1, a)
    return odd_distinct_product(N) * s


@lru_cache(maxsize=None)
def F3(N: int) -> QSeries:
    """``(-q; q^2)_inf sum_{m >= 1} q^(2m) / (1 + q^(2m))``."""
    s = QSeries.zero(N)
    for a in range(2, N + 1, 2):
        s += QSeries.monomial(N, a).over_factor(1, a)
    return odd_distinct_product(N) * s


@lru_cache(maxsize=None)
def F1(N: int) -> QSeries:
    """``F3 (1 + 2 theta) + 2 (-q; q^2)_inf theta`` with ``theta = sum_{n>=1} q^(n^2)``."""
    th = theta_squares(N)
    return F3(N) * (th * 2 + 1) + odd_distinct_product(N) * th * 2


def f_m(m: int) -> QSeries:
    """The explicit low-order polynomial of the m-th summand of ``(q^4 + q - 1) F2``."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        terms = {1: -1, 2: 1, 4: -1, 5: 2, 6: -1}
    elif m == 2:
        terms = {3: -1}
    elif m == 3:
        terms = {5: -1, 7: 1, 8: -1, 9: 1, 10: 2, 13: 1, 15: -1}
    else:
        terms = {2 * m - 1: -1, 2 * m + 1: 1, 2 * m + 2: -1, 2 * m + 3: 1, 2 * m + 4: 1}
    return QSeries.from_terms(max(terms), terms)


def g_m_lower_bound(m: int) -> int:
    """The exponent below which ``g_m`` vanishes."""
    return {1: 7, 2: 5, 3: 16}.get(m, 2 * m + 6)


def fg_lhs(m: int, N: int) -> QSeries:
    """``(q^4 + q - 1) q^(2m-1) prod_{l >= 1, l != m} (1 + q^(2l-1))``."""
    prod = _q(N)
    l = 1
    while 2 * l - 1 <= N:
        if l != m:
            prod = prod.times_factor(1, 2 * l - 1)
        l += 1
    mult = QSeries.from_terms(N, {0: -1, 1: 1, 4: 1})
    return (prod * mult).shift(2 * m - 1)


def g_m(m: int, N: int) -> QSeries:
    """``fg_lhs(m, N) - f_m``."""
    f = f_m(m)
    if N < f.order:
        raise ValueError(f"order {N} too small for f_{m} (degree {f.order})")
    pad = QSeries(f.coeffs, N)
    return fg_lhs(m, N) - pad


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesCatalogEntry:
    name: str
    arity: Literal["univariate", "bivariate"]
    builder: Callable[[int], Series]
    description: str


def _entry(name, arity, builder, description):
    return name, SeriesCatalogEntry(name, arity, builder, description)


CATALOG: dict[str, SeriesCatalogEntry] = dict(
    [
        _entry("omega", "univariate", omega, "omega(q) = sum q^(2k(k+1)) / (q;q^2)_{k+1}^2"),
        _entry("a_omega", "univariate", a_omega, "A_omega(q) = sum_{k>=1} q^k / (q;q^2)_k"),
        _entry("b_omega", "univariate", b_omega, "B_omega(q) = sum q^k / ((q^k;q)_{k+1} (q^{2k+2};q^2)_inf)"),
        _entry("a_omega_z", "bivariate", A_omega_z, "A_omega(z;q), z marks parts"),
        _entry("b_omega_z", "bivariate", B_omega_z, "B_omega(z;q), z marks parts"),
        _entry("a_omega2", "bivariate", A_omega2_z, "A_omega2(z;q), z marks rows of odd Ferrers diagrams"),
        _entry("a_omega2_tilde", "bivariate", A_omega2_tilde_z, "A~_omega2(z;q), z marks columns"),
        _entry("nu", "univariate", nu, "nu(q) = sum q^(k(k+1)) / (-q;q^2)_{k+1}"),
        _entry("nu_neg", "univariate", nu_neg, "nu(-q) = A_nu(q)"),
        _entry("a_nu", "bivariate", A_nu_z, "A_nu(z;q), z marks parts"),
        _entry("a_nu2", "bivariate", A_nu2_z, "A_nu2(z;q), z marks rows"),
        _entry("b_nu", "bivariate", B_nu_z, "B_nu(z;q), z marks parts (zero part counted)"),
        _entry("phi", "univariate", phi, "phi(q) = sum q^(n^2) / (-q^2;q^2)_n"),
        _entry("b_phi", "bivariate", B_phi_z, "B_phi(z;q) = 1 + sum z^n q^(2n+1) (q;q^2)_n"),
        _entry("a_phi", "bivariate", A_phi_z, "A_phi(z;q), z marks parts"),
        _entry("d_phi", "bivariate", D_phi_z, "D_phi(z;q) = A_phi(z;q) + B_phi(-1/z;q)"),
        _entry("f1", "univariate", F1, "F1(q) = F3 (1 + 2 theta) + 2 (-q;q^2)_inf theta"),
        _entry("f2", "univariate", F2, "F2(q) = (-q;q^2)_inf sum q^(2m-1)/(1+q^(2m-1))"),
        _entry("f3", "univariate", F3, "F3(q) = (-q;q^2)_inf sum q^(2m)/(1+q^(2m))"),
        _entry("c_series", "univariate", c_series, "sum of (odd parts - 1) over the nu class"),
        _entry("theta_squares", "univariate", theta_squares, "sum_{n>=1} q^(n^2)"),
    ]
)


def build(name: str, N: int) -> Series:
    """Build a catalog series by name."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown series {name!r}") from None
    if N < 0:
        raise ValueError("order must be non-negative")
    return entry.builder(N)


def clear_caches() -> None:
    """Drop every memoised series build and raw partition list."""
    from . import partitions

    for obj in list(globals().values()) + [partitions._all_raw, partitions._distinct_raw]:
        if hasattr(obj, "cache_clear"):
            obj.cache_clear()
