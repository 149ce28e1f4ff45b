"""Exact and enclosed coefficient tables for the exp(K) power series.

Wallis ratios
    W_n = (2n-1)!!/(2n)!! = C(2n,n)/4^n,   1/sqrt(1-x) = sum W_n x^n.

Series coefficients b_n of  exp(K(sqrt(x))) = sum b_n x^n  satisfy

    b_0 = e^(pi/2),
    (n+1) b_{n+1} = n b_n + (pi/8) * sum_{k=0}^{n} (W_k^2/(k+1)) b_{n-k},

and each b_n is exactly  B_n(pi) / (16^n n!) * e^(pi/2)  for an
integer-coefficient polynomial B_n with the recurrence

    B_{n+1} = 16 n B_n + pi * sum_k [2 C(2k,k)^2/(k+1)] * fall(n,k) * B_{n-k}

(fall is the falling factorial).  The integer form keeps the exact table
free of per-coefficient gcd work.

The table also maintains, per working precision, an interval-valued run
of the same recurrence on  b~_n = b_n / e^(pi/2)  with pi enclosed and
every step outward-rounded.  Those enclosures contain the exact values,
so sign certificates derived from them are sound, and the build is
O(N^2) cheap integer operations — the exact polynomial table is
O(N^3) big-integer work and is only grown on demand.

The difference sequence  c_n(p) = b_n - p W_n  and the auxiliary exact
sequences

    u_n = pi * sum_k W_k^2 W_{n-k}^2 /((k+1)(n-k+1))
          - 6(2n+1)/((n+2)(n+1)) * W_n^2,
    v_n = sum_{k<=n} u_k

are provided with integer numerators over 16^n (u_n = (pi P_n - R_n)/16^n).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Optional, Union

from .intervals import Interval
from .constants import enclose_constant
from .pi_expr import PiExpression

__all__ = [
    "wallis",
    "CoefficientTable",
    "shared_coefficients",
    "b_coeff",
    "u_coeff",
    "v_coeff",
    "c_coeff",
    "c_exact",
    "ratio",
    "ratio_gap",
    "threshold",
]

_Rat = Union[int, Fraction]
_PNum = Union[int, Fraction, PiExpression]


class CoefficientTable:
    """Growable store of exact and enclosed series coefficients."""

    def __init__(self):
        self._lock = threading.RLock()
        # exact b: integer polynomials over 16^n * n!
        self._B: list[list[int]] = [[1]]
        self._D: list[int] = [1]
        self._A: list[int] = []       # A_k = 2 C(2k,k)^2/(k+1)
        self._binom: list[int] = []   # C(2k,k)
        # exact u/v: integer pairs over 16^n
        self._E: list[int] = []       # E_k = C(2k,k)^2/(k+1)
        self._P: list[int] = []
        self._R: list[int] = []
        self._VP: list[int] = []
        self._VR: list[int] = []
        # Wallis ratios
        self._W: list[Fraction] = [Fraction(1)]
        # interval value tables, keyed by precision
        self._values: dict[int, dict] = {}

    # ------------------------------------------------------------------
    # Wallis ratios

    def wallis(self, n: int) -> Fraction:
        with self._lock:
            while len(self._W) <= n:
                m = len(self._W) - 1
                self._W.append(self._W[-1] * Fraction(2 * m + 1, 2 * m + 2))
            return self._W[n]

    # ------------------------------------------------------------------
    # exact b-polynomials

    def _ensure_binom(self, n: int) -> None:
        while len(self._binom) <= n:
            k = len(self._binom)
            if k == 0:
                self._binom.append(1)
            else:
                self._binom.append(self._binom[-1] * 2 * (2 * k - 1) // k)
            self._A.append(2 * self._binom[k] * self._binom[k] // (k + 1))

    def ensure_exact(self, n: int) -> None:
        """Grow the exact polynomial table so b_0..b_n are available.

        Cost grows cubically with n (degree-n polynomials with Theta(n)-bit
        integer coefficients); a few hundred terms take seconds.
        """
        with self._lock:
            if len(self._B) > n:
                return
            self._ensure_binom(n)
            while len(self._B) <= n:
                m = len(self._B) - 1  # recurrence step m -> m+1
                Bm = self._B[m]
                new = [0] * (m + 2)
                if m:
                    c = 16 * m
                    for j in range(m + 1):
                        new[j] = c * Bm[j]
                fall = 1
                for k in range(m + 1):
                    mult = self._A[k] * fall
                    Bk = self._B[m - k]
                    for j in range(m - k + 1):
                        new[j + 1] += mult * Bk[j]
                    fall *= (m - k)
                self._B.append(new)
                self._D.append(self._D[-1] * 16 * (m + 1))

    @property
    def exact_limit(self) -> int:
        """Largest n for which the exact polynomial of b_n is built."""
        return len(self._B) - 1

    def b_coeff(self, n: int) -> PiExpression:
        """Exact b_n as a pi-polynomial times e^(pi/2)."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.ensure_exact(n)
        with self._lock:
            den = self._D[n]
            coeffs = tuple(Fraction(c, den) for c in self._B[n])
        return PiExpression(coeffs, exp_scale=True)

    def gap_exact(self, n: int) -> PiExpression:
        """Exact (n+1) b_{n+1} - (n+1/2) b_n."""
        return self.b_coeff(n + 1).scale(n + 1) - self.b_coeff(n).scale(
            Fraction(2 * n + 1, 2))

    # ------------------------------------------------------------------
    # exact u/v

    def ensure_uv(self, n: int) -> None:
        with self._lock:
            if len(self._P) > n:
                return
            self._ensure_binom(n + 2)
            while len(self._E) <= n + 1:
                k = len(self._E)
                self._E.append(self._binom[k] * self._binom[k] // (k + 1))
            while len(self._P) <= n:
                m = len(self._P)
                E = self._E
                s = 0
                for k in range(m + 1):
                    s += E[k] * E[m - k]
                self._P.append(s)
                binom_m = self._binom[m]
                r = 6 * (2 * m + 1) * binom_m * binom_m
                assert r % ((m + 1) * (m + 2)) == 0
                self._R.append(r // ((m + 1) * (m + 2)))
                if m == 0:
                    self._VP.append(self._P[0])
                    self._VR.append(self._R[0])
                else:
                    self._VP.append(16 * self._VP[-1] + self._P[m])
                    self._VR.append(16 * self._VR[-1] + self._R[m])

    def u_coeff(self, n: int) -> PiExpression:
        """Exact u_n = (pi * P_n - R_n)/16^n (degree one in pi)."""
        self.ensure_uv(n)
        d = 1 << (4 * n)
        return PiExpression((Fraction(-self._R[n], d), Fraction(self._P[n], d)))

    def v_coeff(self, n: int) -> PiExpression:
        """Exact v_n = sum_{k<=n} u_k (degree one in pi)."""
        self.ensure_uv(n)
        d = 1 << (4 * n)
        return PiExpression((Fraction(-self._VR[n], d), Fraction(self._VP[n], d)))

    # ------------------------------------------------------------------
    # interval value table (b~_n = b_n / e^(pi/2))

    def _value_state(self, precision: int) -> dict:
        st = self._values.get(precision)
        if st is None:
            pi = enclose_constant("pi", precision).round_to(precision)
            st = {
                "pi": (pi.lo, pi.hi),
                "blo": [1 << precision],
                "bhi": [1 << precision],
                "wlo": [],
                "whi": [],
                "binom": [1],
            }
            self._values[precision] = st
        return st

    def ensure_values(self, n: int, precision: int) -> None:
        """Run the interval recurrence so enclosures of b~_0..b~_n exist."""
        with self._lock:
            st = self._value_state(precision)
            blo, bhi = st["blo"], st["bhi"]
            if len(blo) > n:
                return
            wlo, whi, binom = st["wlo"], st["whi"], st["binom"]
            W = precision
            while len(wlo) <= n:
                k = len(wlo)
                while len(binom) <= k:
                    m = len(binom)
                    binom.append(binom[-1] * 2 * (2 * m - 1) // m)
                num = binom[k] * binom[k]
                den = (k + 1) << (4 * k)
                q = (num << W) // den
                wlo.append(q)
                whi.append(q + 1)
            pi_lo, pi_hi = st["pi"]
            while len(blo) <= n:
                m = len(blo) - 1
                slo = 0
                shi = 0
                for k in range(m + 1):
                    slo += wlo[k] * blo[m - k]
                    shi += whi[k] * bhi[m - k]
                slo >>= W
                shi = -((-shi) >> W)
                t2lo = ((pi_lo * slo) >> W) // (8 * (m + 1))
                x = -((-(pi_hi * shi)) >> W)
                t2hi = -((-x) // (8 * (m + 1)))
                t1lo = (m * blo[m]) // (m + 1)
                t1hi = -((-(m * bhi[m])) // (m + 1))
                blo.append(t1lo + t2lo)
                bhi.append(t1hi + t2hi)

    def btilde_enclosure(self, n: int, precision: int) -> Interval:
        """Enclosure of b_n / e^(pi/2)."""
        self.ensure_values(n, precision)
        st = self._values[precision]
        return Interval(st["blo"][n], st["bhi"][n], precision)

    def b_enclosure(self, n: int, precision: int) -> Interval:
        """Enclosure of b_n."""
        return (self.btilde_enclosure(n, precision)
                * enclose_constant("exp_half_pi", precision))

    def ratio(self, n: int, precision: int) -> Interval:
        """Enclosure of b_n / W_n."""
        return self.b_enclosure(n, precision).mul_scalar(1 / self.wallis(n))

    def ratio_gap(self, n: int, precision: int) -> Interval:
        """Enclosure of (n+1) b_{n+1} - (n+1/2) b_n."""
        hi = self.btilde_enclosure(n + 1, precision).mul_scalar(n + 1)
        lo = self.btilde_enclosure(n, precision).mul_scalar(Fraction(2 * n + 1, 2))
        return (hi - lo) * enclose_constant("exp_half_pi", precision)

    # ------------------------------------------------------------------
    # difference sequence c_n(p) = b_n - p W_n

    def c_exact(self, n: int, p: PiExpression) -> PiExpression:
        """Exact c_n(p); requires p in the e^(pi/2)-scaled ring."""
        if not isinstance(p, PiExpression):
            raise TypeError("exact path needs an exact PiExpression p")
        if not p.is_zero and not p.exp_scale:
            raise ValueError(
                "b_n carries the e^(pi/2) scale; c_n(p) with a plain "
                "rational p is not a PiExpression — use c_coeff instead")
        return self.b_coeff(n) - p.scale(self.wallis(n))

    def c_coeff(self, n: int, p: _PNum, precision: int) -> Interval:
        """Enclosure of c_n(p) = b_n - p W_n.

        Exact-cancellation cases are decided by :meth:`c_exact` /
        :meth:`c_is_exactly_zero`; this method encloses.
        """
        w = self.wallis(n)
        if isinstance(p, PiExpression):
            work = precision + 8
            # b_n - p W_n = e^(pi/2) (b~_n - q_p(pi) W_n) for scaled p
            if p.is_zero:
                return self.b_enclosure(n, precision)
            if p.exp_scale:
                inner = PiExpression(p.coeffs).evaluate(work).mul_scalar(w)
                diff = self.btilde_enclosure(n, work) - inner
                return (diff * enclose_constant("exp_half_pi", work)
                        ).round_to(precision)
            p_val = p.evaluate(work)
            return (self.b_enclosure(n, work) - p_val.mul_scalar(w)
                    ).round_to(precision)
        work = precision + 8
        return (self.b_enclosure(n, work) - Fraction(p) * w).round_to(precision)

    def c_is_exactly_zero(self, n: int, p: _PNum) -> bool:
        """True iff c_n(p) cancels exactly (p must be an exact expression)."""
        if not isinstance(p, PiExpression):
            return False  # b_n is irrational times e^(pi/2); p rational
        if not p.exp_scale and not p.is_zero:
            return False
        return self.c_exact(n, p).is_zero

    # ------------------------------------------------------------------

    def threshold(self, k: int) -> PiExpression:
        """Exact ratio b_k / W_k (the sharp parameter thresholds)."""
        return self.b_coeff(k) / self.wallis(k)


_shared = CoefficientTable()


def shared_coefficients() -> CoefficientTable:
    return _shared


def _table(table: Optional[CoefficientTable]) -> CoefficientTable:
    return _shared if table is None else table


def wallis(n: int, table: Optional[CoefficientTable] = None) -> Fraction:
    """W_n = (2n-1)!!/(2n)!!."""
    return _table(table).wallis(n)


def b_coeff(n: int, table: Optional[CoefficientTable] = None) -> PiExpression:
    return _table(table).b_coeff(n)


def u_coeff(n: int, table: Optional[CoefficientTable] = None) -> PiExpression:
    return _table(table).u_coeff(n)


def v_coeff(n: int, table: Optional[CoefficientTable] = None) -> PiExpression:
    return _table(table).v_coeff(n)


def c_coeff(n: int, p: _PNum, precision: int,
            table: Optional[CoefficientTable] = None) -> Interval:
    return _table(table).c_coeff(n, p, precision)


def c_exact(n: int, p: PiExpression,
            table: Optional[CoefficientTable] = None) -> PiExpression:
    return _table(table).c_exact(n, p)


def ratio(n: int, precision: int,
          table: Optional[CoefficientTable] = None) -> Interval:
    return _table(table).ratio(n, precision)


def ratio_gap(n: int, precision: int,
              table: Optional[CoefficientTable] = None) -> Interval:
    return _table(table).ratio_gap(n, precision)


def threshold(k: int, table: Optional[CoefficientTable] = None) -> PiExpression:
    return _table(table).threshold(k)
