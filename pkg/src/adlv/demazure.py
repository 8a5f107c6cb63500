"""Demazure (0-Hecke) monoid structure on the extended affine Weyl group.

The product ``a * b`` is the monoid operation with s * w = max{w, sw} for a
simple reflection s and tau * w = tau w for length-zero tau; it satisfies
a * b = ab exactly when lengths add.  Twisted Demazure powers
w * sigma(w) * ... * sigma^{n-1}(w) have eventually stable length increments,
and the normalized length limit enters the dimension formula in
:mod:`adlv.dims`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError
from .weyl import EAWGroup, ExtAffElt, GroupAuto

DEFAULT_HORIZON = 200


def dem_prod(w1: ExtAffElt, w2: ExtAffElt) -> ExtAffElt:
    """Demazure product, folding the right factor's reduced word into w1.

    Each letter s is appended to the accumulator exactly when it increases
    the length (acc * s = max{acc, acc s}); the length-zero component of w2
    multiplies plainly at the end.
    """
    g = w1.group
    word, om = g.as_word(w2)
    raw = _fold_right(g, w1.raw, word)
    if om != "e":
        raw = g.kernel.mul(*raw, *g.tables.omega_elements[g.tables.omega_names.index(om)])
    return g.element(*raw)


def _fold_right(g: EAWGroup, raw, letters):
    kern = g.kernel
    gens = g._gens
    for i in letters:
        if kern.right_ascent(*raw, i):
            raw = kern.mul(*raw, *gens[i])
    return raw


def dem_prod_left(w1: ExtAffElt, w2: ExtAffElt) -> ExtAffElt:
    """Same product, folding the left factor's word into w2 from the right.

    Equality with :func:`dem_prod` is a consequence of associativity and is
    asserted in the test suite.
    """
    g = w1.group
    word, om = g.as_word(w1)
    om_elt = g.from_word((), om)
    raw = g.kernel.mul(*om_elt.raw, *w2.raw)
    kern = g.kernel
    gens = g._gens
    for i in reversed(word):
        if kern.left_ascent(i, *raw):
            raw = kern.mul(*gens[i], *raw)
    return g.element(*raw)


def dem_twisted_power(w: ExtAffElt, n: int, sigma: GroupAuto) -> ExtAffElt:
    """n-th twisted Demazure power w * sigma(w) * ... * sigma^{n-1}(w)."""
    if n < 1:
        raise ConfigError(f"twisted Demazure power needs n >= 1, got {n}")
    g = w.group
    factors = _factor_words(g, w, sigma)
    raw = w.raw
    period = len(factors)
    for k in range(1, n):
        raw = _apply_factor(g, raw, factors[k % period])
    return g.element(*raw)


def _factor_words(g: EAWGroup, w: ExtAffElt, sigma: GroupAuto):
    """Reduced word + Omega element of sigma^k(w) for one period of sigma."""
    out = []
    for auto in sigma.cycle():
        img = g.element(*auto._apply_raw(w.raw))
        word, om = g.as_word(img)
        om_raw = g.tables.omega_elements[g.tables.omega_names.index(om)]
        out.append((word, om, om_raw))
    return out

def _apply_factor(g: EAWGroup, raw, factor):
    word, om, om_raw = factor
    raw = _fold_right(g, raw, word)
    if om != "e":
        raw = g.kernel.mul(*raw, *om_raw)
    return raw


@dataclass(frozen=True)
class IncrementTrace:
    """Length increments of the twisted Demazure power sequence.

    ``increments[k]`` is l(w^{*,k+2}) - l(w^{*,k+1}) (the increment sequence
    starts at the first power).  ``stabilized_at`` is the 1-based index at
    which the final run of constant increments begins; ``limit`` is the
    limiting increment as an exact rational when detected.  ``periodic`` is
    set when the trace was only eventually periodic rather than constant and
    the limit is a per-period mean: such traces warrant inspection.
    """

    initial_length: int
    increments: tuple[int, ...]
    stabilized_at: int | None = None
    limit: Fraction | None = None
    periodic: bool = False

    def __post_init__(self):
        if any(d < 0 or d > self.initial_length for d in self.increments):
            raise AssertionError(f"Demazure increment outside [0, l(w)]: {self.increments}")
        if self.stabilized_at is not None and not self.periodic:
            tail = self.increments[self.stabilized_at - 1 :]
            if len(set(tail)) != 1 or Fraction(tail[0]) != self.limit:
                raise AssertionError(f"stabilized trace is not constant from {self.stabilized_at}")

    def length_at(self, n: int) -> int:
        """l(w^{*,n}) reconstructed from the increments (1-based n)."""
        if not 1 <= n <= len(self.increments) + 1:
            raise ValueError(f"power {n} outside the computed horizon")
        return self.initial_length + sum(self.increments[: n - 1])

    @property
    def horizon(self) -> int:
        return len(self.increments) + 1


def dem_limit(
    w: ExtAffElt,
    sigma: GroupAuto,
    horizon_max: int = DEFAULT_HORIZON,
    *,
    stop_early: bool = True,
) -> IncrementTrace:
    """Compute increments of n -> l(w^{*sigma,n}) and detect their limit.

    Stabilization is declared once the increment is constant over
    max(3*d, 6) consecutive steps, d being the order of sigma's diagram
    part; the proven existence of the limit comes with no effective bound,
    so this window is a heuristic validated against the independent
    minimal-length oracle in the test suite.  Non-stabilization within
    ``horizon_max`` is not an error: the trace is returned with ``limit``
    unset (after a fallback check for an eventually periodic pattern).
    """
    d = sigma.diagram_order()
    if horizon_max < 4 * d:
        raise ConfigError(f"horizon_max={horizon_max} < 4 * diagram order ({4 * d})")
    window = max(3 * d, 6)
    g = w.group
    factors = _factor_words(g, w, sigma)
    period = len(factors)

    increments: list[int] = []
    raw = w.raw
    initial = prev_len = g.kernel.length(*raw)
    run_value, run_len = None, 0
    stabilized = None
    for n in range(1, horizon_max):
        raw = _apply_factor(g, raw, factors[n % period])
        cur = g.kernel.length(*raw)
        inc = cur - prev_len
        prev_len = cur
        increments.append(inc)
        if inc == run_value:
            run_len += 1
        else:
            run_value, run_len = inc, 1
        if run_len >= window:
            stabilized = len(increments) - run_len + 1
            if stop_early:
                break
    if stabilized is not None:
        return IncrementTrace(initial, tuple(increments), stabilized, Fraction(run_value))
    return _periodic_fallback(initial, increments, d)


def _periodic_fallback(initial: int, increments: list[int], d: int) -> IncrementTrace:
    """Look for an eventually periodic increment pattern of period <= 2d.

    Requires at least three full periods of evidence; the limit is then the
    mean over one period, flagged as periodic for inspection.
    """
    n = len(increments)
    for p in range(1, 2 * d + 1):
        if 3 * p > n:
            break
        start = next(
            (k for k in range(n - 3 * p + 1) if all(increments[j] == increments[j + p] for j in range(k, n - p))),
            None,
        )
        if start is not None:
            mean = Fraction(sum(increments[start : start + p]), p)
            return IncrementTrace(initial, tuple(increments), start + 1, mean, periodic=True)
    return IncrementTrace(initial, tuple(increments))
