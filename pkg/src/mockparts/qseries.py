"""Exact truncated power series in ``q`` and in ``(z, q)``.

Coefficients are Python ints throughout. A series of order ``N`` knows the
coefficients of ``q^0 .. q^N`` exactly; binary operations truncate to the
smaller order.

Bivariate series are Laurent polynomials in ``z`` for every power of ``q``,
stored as a dense ``(N + 1) x W`` object array whose column ``c`` holds the
coefficient of ``z^(zmin + c)``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "QSeries",
    "BivariateSeries",
    "NonInvertibleSeriesError",
    "series_add",
    "series_mul",
    "series_inverse",
    "poch_finite",
    "poch_infinite",
    "dz_eval",
    "eval_z",
]


class NonInvertibleSeriesError(ArithmeticError):
    """Raised when a series has no inverse over the integers."""


def _factor_count(a: int, c: int, N: int) -> int:
    # number of factors (1 - x q^(a + j c)) with a + j c <= N
    if a > N:
        return 0
    return (N - a) // c + 1


class QSeries:
    """Truncated power series in ``q`` with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        c = [int(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) <= order:
            c.extend([0] * (order + 1 - len(c)))
        self._c = tuple(c[: order + 1])

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, N: int) -> QSeries:
        return cls((), N)

    @classmethod
    def one(cls, N: int) -> QSeries:
        return cls((1,), N)

    @classmethod
    def monomial(cls, N: int, exponent: int, coeff: int = 1) -> QSeries:
        c = [0] * (N + 1)
        if 0 <= exponent <= N:
            c[exponent] = coeff
        return cls(c, N)

    @classmethod
    def from_terms(cls, N: int, terms: dict[int, int]) -> QSeries:
        c = [0] * (N + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError("negative q-exponent")
            if e <= N:
                c[e] += v
        return cls(c, N)

    # access -----------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside 0..{self.order}")
        return self._c[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None."""
        for i, v in enumerate(self._c):
            if v:
                return i
        return None

    def truncate(self, N: int) -> QSeries:
        if N > self.order:
            raise ValueError(f"cannot raise order {self.order} to {N}")
        return QSeries(self._c[: N + 1], N)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> QSeries | None:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, np.integer)):
            return QSeries((int(other),), self.order)
        return None

    def __add__(self, other) -> QSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        return QSeries([self._c[i] + o._c[i] for i in range(N + 1)], N)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries([-v for v in self._c], self.order)

    def __sub__(self, other) -> QSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> QSeries:
        if isinstance(other, (int, np.integer)):
            k = int(other)
            return QSeries([k * v for v in self._c], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        N = min(self.order, other.order)
        a = np.array(self._c[: N + 1], dtype=object)
        b = np.array(other._c[: N + 1], dtype=object)
        return QSeries(np.convolve(a, b)[: N + 1].tolist(), N)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q^k`` (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        N = self.order
        k = min(k, N + 1)
        return QSeries([0] * k + list(self._c[: N + 1 - k]), N)

    def inverse(self) -> QSeries:
        a = self._c
        if a[0] not in (1, -1):
            raise NonInvertibleSeriesError(
                f"constant term {a[0]} is not a unit in Z[[q]]"
            )
        a0 = a[0]
        N = self.order
        b = [0] * (N + 1)
        b[0] = a0
        for n in range(1, N + 1):
            s = 0
            for i in range(1, n + 1):
                if a[i]:
                    s += a[i] * b[n - i]
            b[n] = -a0 * s
        return QSeries(b, N)

    # factor operations --------------------------------------------------------

    def times_factor(self, s: int, a: int) -> QSeries:
        """Multiply by ``1 + s q^a``."""
        if a == 0:
            return self * (1 + s)
        c = list(self._c)
        for n in range(len(c) - 1, a - 1, -1):
            c[n] += s * c[n - a]
        return QSeries(c, self.order)

    def over_factor(self, s: int, a: int) -> QSeries:
        """Divide by ``1 + s q^a`` (requires a >= 1)."""
        if a < 1:
            raise NonInvertibleSeriesError("1 + s q^0 is not a unit here")
        c = list(self._c)
        for n in range(a, len(c)):
            c[n] -= s * c[n - a]
        return QSeries(c, self.order)

    def times_poch(self, sign: int, a: int, step: int, k: int | None = None) -> QSeries:
        """Multiply by ``(sign q^a; q^step)_k``; ``k=None`` means infinite."""
        if k is None:
            if a < 1:
                raise ValueError("infinite product needs a >= 1")
            k = _factor_count(a, step, self.order)
        c = list(self._c)
        N = self.order
        for j in range(k):
            e = a + j * step
            if e == 0:
                c = [(1 - sign) * v for v in c]
                continue
            if e > N:
                break
            for n in range(N, e - 1, -1):
                c[n] -= sign * c[n - e]
        return QSeries(c, N)

    def over_poch(self, sign: int, a: int, step: int, k: int | None = None) -> QSeries:
        """Divide by ``(sign q^a; q^step)_k``; ``k=None`` means infinite."""
        if a < 1:
            raise NonInvertibleSeriesError("(x; q)_k with x of q-degree 0")
        N = self.order
        if k is None:
            k = _factor_count(a, step, N)
        c = list(self._c)
        for j in range(k):
            e = a + j * step
            if e > N:
                break
            for n in range(e, N + 1):
                c[n] += sign * c[n - e]
        return QSeries(c, N)

    # display ----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSeries({list(self._c)!r}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for n, v in enumerate(self._c):
            if not v:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if mono and abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}{'*' if mono else ''}{mono}"
            terms.append(("-" if v < 0 else "+", body))
        if not terms:
            return f"O(q^{self.order + 1})"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out + f" + O(q^{self.order + 1})"


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inverse(a: QSeries) -> QSeries:
    return a.inverse()


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------


def _trim(table: np.ndarray, zmin: int) -> tuple[np.ndarray, int]:
    nz = np.flatnonzero(np.any(table != 0, axis=0)) if table.size else []
    if len(nz) == 0:
        return np.zeros((table.shape[0], 0), dtype=object), 0
    lo, hi = int(nz[0]), int(nz[-1])
    return table[:, lo : hi + 1].copy(), zmin + lo


def _pad(table: np.ndarray, zmin: int, lo: int, hi: int) -> tuple[np.ndarray, int]:
    """Re-embed so that z-exponents lo..hi (inclusive) are all addressable."""
    W = table.shape[1]
    lo = min(lo, zmin) if W else lo
    hi = max(hi, zmin + W - 1) if W else hi
    out = np.zeros((table.shape[0], hi - lo + 1), dtype=object)
    if W:
        out[:, zmin - lo : zmin - lo + W] = table
    return out, lo


def _shift_cols(row_dst, row_src, e: int, coef: int) -> None:
    # row_dst[c + e] += coef * row_src[c], dropping nothing (caller pads)
    W = row_dst.shape[-1]
    if e >= 0:
        row_dst[..., e:W] += coef * row_src[..., 0 : W - e]
    else:
        row_dst[..., 0 : W + e] += coef * row_src[..., -e:W]


class BivariateSeries:
    """Truncated series in ``q`` whose coefficients are Laurent polynomials in ``z``."""

    __slots__ = ("_t", "_zmin")

    def __init__(self, table, zmin: int = 0, *, _trimmed: bool = False):
        t = np.asarray(table, dtype=object)
        if t.ndim != 2 or t.shape[0] < 1:
            raise ValueError("table must be 2-D with at least one q-row")
        if not _trimmed:
            t = np.vectorize(int, otypes=[object])(t) if t.size else t
            t, zmin = _trim(t, zmin)
        t.setflags(write=False)
        self._t = t
        self._zmin = zmin

    # construction -----------------------------------------------------------

    @classmethod
    def _wrap(cls, table: np.ndarray, zmin: int) -> BivariateSeries:
        t, z = _trim(table, zmin)
        return cls(t, z, _trimmed=True)

    @classmethod
    def zero(cls, N: int) -> BivariateSeries:
        return cls._wrap(np.zeros((N + 1, 0), dtype=object), 0)

    @classmethod
    def one(cls, N: int) -> BivariateSeries:
        return cls.monomial(N, 0, 0)

    @classmethod
    def monomial(cls, N: int, m: int, n: int, coeff: int = 1) -> BivariateSeries:
        """``coeff * z^m q^n`` truncated at order N."""
        t = np.zeros((N + 1, 1), dtype=object)
        if 0 <= n <= N:
            t[n, 0] = coeff
        return cls._wrap(t, m)

    @classmethod
    def from_q(cls, s: QSeries) -> BivariateSeries:
        t = np.array(s.coeffs, dtype=object).reshape(-1, 1)
        return cls._wrap(t, 0)

    @classmethod
    def from_terms(cls, N: int, terms: dict[tuple[int, int], int]) -> BivariateSeries:
        """Build from ``{(m, n): coeff}`` with m the z-exponent, n the q-exponent."""
        kept = {k: v for k, v in terms.items() if 0 <= k[1] <= N}
        if any(k[1] < 0 for k in terms):
            raise ValueError("negative q-exponent")
        if not kept:
            return cls.zero(N)
        lo = min(m for m, _ in kept)
        hi = max(m for m, _ in kept)
        t = np.zeros((N + 1, hi - lo + 1), dtype=object)
        for (m, n), v in kept.items():
            t[n, m - lo] += v
        return cls._wrap(t, lo)

    # access -----------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._t.shape[0] - 1

    @property
    def zmin(self) -> int:
        return self._zmin

    @property
    def zmax(self) -> int:
        return self._zmin + self._t.shape[1] - 1

    @property
    def table(self) -> np.ndarray:
        return self._t

    def coeff(self, m: int, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"q-exponent {n} outside 0..{self.order}")
        c = m - self._zmin
        if 0 <= c < self._t.shape[1]:
            return int(self._t[n, c])
        return 0

    def terms(self) -> dict[tuple[int, int], int]:
        """Nonzero coefficients as ``{(m, n): coeff}``."""
        out = {}
        for n, c in zip(*np.nonzero(self._t != 0)):
            out[(int(c) + self._zmin, int(n))] = int(self._t[n, c])
        return out

    def row(self, n: int) -> dict[int, int]:
        """The Laurent polynomial in z multiplying ``q^n``."""
        return {
            c + self._zmin: int(v) for c, v in enumerate(self._t[n]) if v
        }

    def truncate(self, N: int) -> BivariateSeries:
        if N > self.order:
            raise ValueError(f"cannot raise order {self.order} to {N}")
        return BivariateSeries._wrap(self._t[: N + 1].copy(), self._zmin)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> BivariateSeries | None:
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, QSeries):
            return BivariateSeries.from_q(other)
        if isinstance(other, (int, np.integer)):
            return BivariateSeries.monomial(self.order, 0, 0, int(other))
        return None

    def __add__(self, other) -> BivariateSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        lo = min(self._zmin, o._zmin)
        hi = max(self.zmax, o.zmax)
        if hi < lo:
            return BivariateSeries.zero(N)
        t = np.zeros((N + 1, hi - lo + 1), dtype=object)
        for s in (self, o):
            W = s._t.shape[1]
            if W:
                t[:, s._zmin - lo : s._zmin - lo + W] += s._t[: N + 1]
        return BivariateSeries._wrap(t, lo)

    __radd__ = __add__

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries._wrap(-self._t, self._zmin)

    def __sub__(self, other) -> BivariateSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> BivariateSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> BivariateSeries:
        if isinstance(other, (int, np.integer)):
            return BivariateSeries._wrap(self._t * int(other), self._zmin)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        a, b = self, o
        if np.count_nonzero(a._t[: N + 1]) < np.count_nonzero(b._t[: N + 1]):
            a, b = b, a
        Wa = a._t.shape[1]
        Wb = b._t.shape[1]
        if Wa == 0 or Wb == 0:
            return BivariateSeries.zero(N)
        t = np.zeros((N + 1, Wa + Wb - 1), dtype=object)
        at = a._t[: N + 1]
        for n, c in zip(*np.nonzero(b._t[: N + 1] != 0)):
            v = b._t[n, c]
            t[n:, c : c + Wa] += v * at[: N + 1 - n]
        return BivariateSeries._wrap(t, a._zmin + b._zmin)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self._zmin == other._zmin
            and self._t.shape == other._t.shape
            and bool(np.all(self._t == other._t))
        )

    def __hash__(self) -> int:
        return hash((self.order, self._zmin, tuple(map(tuple, self._t))))

    def times_monomial(self, m: int, n: int, coeff: int = 1) -> BivariateSeries:
        """Multiply by ``coeff * z^m q^n`` (n >= 0)."""
        if n < 0:
            raise ValueError("negative q-shift")
        N = self.order
        t = np.zeros_like(self._t)
        if n <= N:
            t[n:] = coeff * self._t[: N + 1 - n]
        return BivariateSeries._wrap(t, self._zmin + m)

    def lift(self, N: int, m: int = 0, n: int = 0) -> BivariateSeries:
        """Embed in order ``N`` after multiplying by ``z^m q^n``.

        Only the coefficients up to ``q^(N-n)`` are needed, so a term known to
        carry a factor ``q^n`` can be built at the lower order and lifted.
        """
        if n < 0 or self.order + n < N:
            raise ValueError(f"order {self.order} too low to lift by q^{n} into order {N}")
        t = np.zeros((N + 1, self._t.shape[1]), dtype=object)
        if n <= N:
            t[n:] = self._t[: N + 1 - n]
        return BivariateSeries._wrap(t, self._zmin + m)

    def times_factor(self, s: int, e: int, a: int) -> BivariateSeries:
        """Multiply by ``1 + s z^e q^a``."""
        N = self.order
        if a > N:
            return self
        t, lo = _pad(self._t, self._zmin, self._zmin + min(e, 0), self.zmax + max(e, 0))
        out = t.copy()
        _shift_cols(out[a:], t[: N + 1 - a], e, s)
        return BivariateSeries._wrap(out, lo)

    def over_factor(self, s: int, e: int, a: int) -> BivariateSeries:
        """Divide by ``1 + s z^e q^a`` (requires a >= 1)."""
        if a < 1:
            raise NonInvertibleSeriesError("1 + s z^e q^0 is not a unit here")
        N = self.order
        if a > N or self._t.shape[1] == 0:
            return self
        reach = e * (N // a)
        t, lo = _pad(self._t, self._zmin, self._zmin + min(reach, 0), self.zmax + max(reach, 0))
        # rows [j, j + a) only read the already final rows [j - a, j)
        for j in range(a, N + 1, a):
            stop = min(j + a, N + 1)
            _shift_cols(t[j:stop], t[j - a : stop - a], e, -s)
        return BivariateSeries._wrap(t, lo)

    def times_poch(self, sign: int, e: int, a: int, step: int, k: int | None = None) -> BivariateSeries:
        """Multiply by ``(sign z^e q^a; q^step)_k``; ``k=None`` means infinite."""
        if k is None:
            if a < 1:
                raise ValueError("infinite product needs a >= 1")
            k = _factor_count(a, step, self.order)
        return self._poch(sign, e, a, step, k, divide=False)

    def over_poch(self, sign: int, e: int, a: int, step: int, k: int | None = None) -> BivariateSeries:
        """Divide by ``(sign z^e q^a; q^step)_k``; ``k=None`` means infinite."""
        if a < 1:
            raise NonInvertibleSeriesError("(x; q)_k with x of q-degree 0")
        if k is None:
            k = _factor_count(a, step, self.order)
        return self._poch(sign, e, a, step, k, divide=True)

    def _poch(self, sign: int, e: int, a: int, step: int, k: int, divide: bool) -> BivariateSeries:
        # Pad once to the widest z-range any row up to q^N can reach, then
        # apply every factor in place and trim once at the end.
        N = self.order
        xs = []
        for j in range(k):
            x = a + j * step
            if x > N:
                break
            xs.append(x)
        if not xs or self._t.shape[1] == 0:
            return self
        if divide:
            reach = e * (N // xs[0])
        else:
            used = total = 0
            for x in xs:
                if total + x > N:
                    break
                total += x
                used += 1
            reach = e * used
        t, lo = _pad(self._t, self._zmin, self._zmin + min(reach, 0), self.zmax + max(reach, 0))
        for x in xs:
            if divide:
                # rows [j, j + x) only read the already final rows [j - x, j)
                for j in range(x, N + 1, x):
                    stop = min(j + x, N + 1)
                    _shift_cols(t[j:stop], t[j - x : stop - x], e, sign)
            elif x == 0:
                _shift_cols(t, t.copy(), e, -sign)
            else:
                # descending blocks read rows that are not yet updated
                for j in range(((N - x) // x) * x + x, x - 1, -x):
                    stop = min(j + x, N + 1)
                    _shift_cols(t[j:stop], t[j - x : stop - x], e, -sign)
        return BivariateSeries._wrap(t, lo)

    def subs_z(self, scale: int = 1, power: int = 1) -> BivariateSeries:
        """Substitute ``z -> scale * z^power`` (scale in {1, -1}, power != 0)."""
        if scale not in (1, -1) or power == 0:
            raise ValueError("scale must be +-1 and power nonzero")
        terms = {}
        for (m, n), v in self.terms().items():
            key = (m * power, n)
            terms[key] = terms.get(key, 0) + v * (scale ** (m % 2) if scale == -1 else 1)
        return BivariateSeries.from_terms(self.order, terms)

    def eval_z(self, z0: int) -> QSeries:
        return eval_z(self, z0)

    def dz_eval(self, z0: int) -> QSeries:
        return dz_eval(self, z0)

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self.order}, zmin={self._zmin}, nnz={len(self.terms())})"


def _unit_powers(z0: int, lo: int, width: int, shift: int = 0) -> np.ndarray:
    if z0 == 1:
        return np.ones(width, dtype=object)
    if z0 == -1:
        return np.array([(-1) ** ((lo + c + shift) % 2) for c in range(width)], dtype=object)
    raise ValueError("z0 must be 1 or -1")


def eval_z(s: BivariateSeries, z0: int) -> QSeries:
    """Specialise ``z = z0`` for ``z0`` in {1, -1}."""
    W = s.table.shape[1]
    if W == 0:
        return QSeries.zero(s.order)
    w = _unit_powers(z0, s.zmin, W)
    return QSeries((s.table * w).sum(axis=1).tolist(), s.order)


def dz_eval(s: BivariateSeries, z0: int) -> QSeries:
    """``d/dz`` at ``z = z0``: sum over m of ``m c_{m,n} z0^(m-1)``."""
    W = s.table.shape[1]
    if W == 0:
        return QSeries.zero(s.order)
    ms = np.array([s.zmin + c for c in range(W)], dtype=object)
    w = _unit_powers(z0, s.zmin, W, shift=-1) * ms
    return QSeries((s.table * w).sum(axis=1).tolist(), s.order)


def poch_finite(z_exp: int, sign: int, a: int, c: int, k: int, N: int) -> BivariateSeries:
    """``(sign z^z_exp q^a; q^c)_k`` as a bivariate series of order N."""
    return BivariateSeries.one(N).times_poch(sign, z_exp, a, c, k)


def poch_infinite(z_exp: int, sign: int, a: int, c: int, N: int) -> BivariateSeries:
    """``(sign z^z_exp q^a; q^c)_inf`` truncated at order N (needs a >= 1)."""
    if a < 1:
        raise ValueError("(x; q)_inf with x of q-degree 0 does not converge formally")
    return BivariateSeries.one(N).times_poch(sign, z_exp, a, c, None)
