"""Certified enclosures of the fixed real constants the library needs.

Available names: ``pi``, ``exp_half_pi``, ``gamma_quarter``,
``gamma_three_quarter``, ``sqrt_pi``, ``sqrt_two``, ``ln2``.

Enclosures come from a shared, thread-safe table with two guarantees:

* width(enclose_constant(name, P)) <= 2**(-P + 2), and
* nesting: the enclosure at precision P + k is contained in the one at
  precision P (for the same table).

Nesting does not come free — two independent computations of the same
constant both contain it but need not nest — so the table keeps one
"master" enclosure per constant, refines it by *intersection* whenever
more precision is requested, and answers queries by outward-rounding the
master with one extra ulp of padding on each side.

pi uses the Machin formula 16*atan(1/5) - 4*atan(1/239) with alternating
series tails; gamma_quarter comes from the quadratically convergent AGM
evaluation of the elliptic integral at modulus 1/sqrt(2).
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .intervals import Interval, _ln2_fp, _shr_ceil

__all__ = ["ConstantTable", "enclose_constant", "CONSTANT_NAMES", "shared_table"]

_PAD = 16  # extra bits used when computing masters


def _machin_pi(prec: int) -> Interval:
    W = prec + _PAD

    def atan_inv(q: int) -> tuple[int, int]:
        # atan(1/q) = sum (-1)^k / ((2k+1) q^(2k+1)); floor each term.
        s = 0
        k = 0
        qq = q
        q2 = q * q
        while True:
            t = (1 << W) // ((2 * k + 1) * qq)
            if t == 0:
                break
            s += -t if (k & 1) else t
            qq *= q2
            k += 1
        # |rounding| <= k ulps, |tail| <= first omitted term + 1 <= 1 ulp
        return s, k + 1

    a5, e5 = atan_inv(5)
    a239, e239 = atan_inv(239)
    s = 16 * a5 - 4 * a239
    err = 16 * e5 + 4 * e239
    return Interval(s - err, s + err, W).round_to(prec)


def _ln2(prec: int) -> Interval:
    W = prec + _PAD
    lo, hi = _ln2_fp(W)
    return Interval(lo, hi, W).round_to(prec)


def _sqrt_two(prec: int) -> Interval:
    return Interval.from_int(2, prec + _PAD).sqrt().round_to(prec)


def _sqrt_pi(prec: int) -> Interval:
    return _machin_pi(prec + _PAD).sqrt().round_to(prec)


def _exp_half_pi(prec: int) -> Interval:
    half_pi = _machin_pi(prec + _PAD).mul_scalar(Fraction(1, 2))
    return half_pi.exp().round_to(prec)


def _gamma_quarter(prec: int) -> Interval:
    # Gamma(1/4) = 2 * pi^(1/4) * sqrt(K(1/sqrt 2)), with K evaluated by
    # the AGM oracle at modulus-squared 1/2.
    from .elliptic import agm_K_m  # deferred: elliptic imports this module

    W = prec + _PAD
    k_val = agm_K_m(Fraction(1, 2), W)
    quarter_root_pi = _machin_pi(W + _PAD).sqrt().sqrt()
    out = (quarter_root_pi * k_val.sqrt()).mul_scalar(2)
    return out.round_to(prec)


def _gamma_three_quarter(prec: int) -> Interval:
    # Reflection: Gamma(1/4) * Gamma(3/4) = pi * sqrt(2).
    W = prec + _PAD
    num = _machin_pi(W) * _sqrt_two(W)
    return (num / _gamma_quarter(W)).round_to(prec)


_GENERATORS = {
    "pi": _machin_pi,
    "ln2": _ln2,
    "sqrt_two": _sqrt_two,
    "sqrt_pi": _sqrt_pi,
    "exp_half_pi": _exp_half_pi,
    "gamma_quarter": _gamma_quarter,
    "gamma_three_quarter": _gamma_three_quarter,
}

CONSTANT_NAMES = tuple(sorted(_GENERATORS))


class ConstantTable:
    """Thread-safe cache of constant enclosures with guaranteed nesting."""

    def __init__(self):
        self._masters: dict[str, Interval] = {}
        self._answers: dict[tuple[str, int], Interval] = {}
        self._lock = threading.Lock()

    def enclose(self, name: str, precision: int) -> Interval:
        if name not in _GENERATORS:
            raise KeyError(f"unknown constant {name!r}; have {CONSTANT_NAMES}")
        if precision <= 0:
            raise ValueError("precision must be positive")
        key = (name, precision)
        with self._lock:
            cached = self._answers.get(key)
            if cached is not None:
                return cached
            master = self._masters.get(name)
        need = precision + _PAD
        if master is None or master.prec < need:
            fresh = _GENERATORS[name](need)  # computed outside the lock:
            # generators may recurse into this table (gamma via AGM via pi)
            with self._lock:
                master = self._masters.get(name)
                master = fresh if master is None else master.intersect(fresh)
                self._masters[name] = master
        with self._lock:
            cached = self._answers.get(key)
            if cached is not None:
                return cached
            # One ulp of outward padding on a grid 3 bits finer than
            # requested keeps the width within 2^(-P+2); hulling every
            # cached finer answer and intersecting every cached coarser
            # one makes the nesting invariant hold by construction,
            # whatever order precisions are asked in.
            out = master.round_to(precision + 3).pad_ulp(1)
            for (other_name, other_prec), ans in self._answers.items():
                if other_name != name:
                    continue
                if other_prec > precision:
                    out = out.hull(ans)
                elif other_prec < precision:
                    out = out.intersect(ans)
            self._answers[key] = out
        return out

    def width_bound(self, precision: int) -> Fraction:
        return Fraction(4, 1 << precision)


_shared = ConstantTable()


def shared_table() -> ConstantTable:
    return _shared


def enclose_constant(name: str, precision: int) -> Interval:
    """Enclosure of a named constant from the shared table."""
    return _shared.enclose(name, precision)
