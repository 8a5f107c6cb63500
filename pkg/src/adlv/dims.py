"""Dimension of the affine Deligne-Lusztig variety at the generic class of w,
computed by three independent routes that must agree:

* reduction:  l(w) - <nu, 2 rho> for the generic straight class, found by
  length reduction through twisted-conjugation moves;
* Bruhat:     the same quantity with the generic class found as the unique
  maximal invariant over the Bruhat interval of w;
* Demazure:   l(w) minus the limiting increment of the twisted Demazure
  power lengths.

Any disagreement raises: the equality of the three answers is guaranteed,
so a divergence is a bug detector, not a degraded mode.  The Demazure route
alone may legitimately fail to stabilize within its horizon, in which case
it is reported as unset and the two exact routes decide.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import rational_str
from .classes import ClassInvariant, StraightClass, generic_class, generic_class_bruhat
from .demazure import DEFAULT_HORIZON, IncrementTrace, dem_limit
from .errors import VerificationError
from .weyl import ExtAffElt, GroupAuto


@dataclass(frozen=True)
class DimReport:
    """All three routes for one element, plus the agreement verdict."""

    w: ExtAffElt
    length_w: int
    generic_invariant: ClassInvariant
    len_Ow: int
    dim_reduction: int
    dim_bruhat: int
    dim_demazure: int | None
    agree: bool
    trace: IncrementTrace

    @property
    def dim(self) -> int:
        return self.dim_reduction

    def to_dict(self) -> dict:
        g = self.w.group
        return {
            "element": g.canonical_str(self.w),
            "length": self.length_w,
            "kappa": sorted(self.generic_invariant.kappa.members),
            "nu": [rational_str(c) for c in self.generic_invariant.nu.nu.coords],
            "len_generic_class": self.len_Ow,
            "dim": self.dim_reduction,
            "dim_bruhat": self.dim_bruhat,
            "dim_demazure": self.dim_demazure,
            "agree": self.agree,
        }


def dim_generic(
    w: ExtAffElt,
    sigma: GroupAuto,
    horizon: int = DEFAULT_HORIZON,
    *,
    strict: bool = True,
) -> DimReport:
    """Dimension report for w; raises VerificationError on route disagreement
    unless ``strict`` is False (the report then carries ``agree=False``)."""
    length_w = w.length()
    reduction = generic_class(w, sigma)
    bruhat = generic_class_bruhat(w, sigma)
    trace = dem_limit(w, sigma, horizon)

    dim_reduction = length_w - reduction.min_length
    dim_bruhat = length_w - bruhat.min_length
    dim_demazure = None
    if trace.limit is not None:
        dem = length_w - trace.limit
        dim_demazure = int(dem) if dem.denominator == 1 else None

    agree = (
        reduction.invariant == bruhat.invariant
        and dim_reduction == dim_bruhat
        and (trace.limit is None or dim_demazure == dim_reduction)
    )
    report = DimReport(
        w=w,
        length_w=length_w,
        generic_invariant=reduction.invariant,
        len_Ow=reduction.min_length,
        dim_reduction=dim_reduction,
        dim_bruhat=dim_bruhat,
        dim_demazure=dim_demazure,
        agree=agree,
        trace=trace,
    )
    if strict and not agree:
        raise VerificationError(
            f"dimension routes disagree for {w!r}: reduction={dim_reduction}, "
            f"bruhat={dim_bruhat}, demazure={dim_demazure}",
            payload=report,
        )
    return report


@dataclass(frozen=True)
class WaffReduction:
    """Decomposition w = x . tau with x in W_aff and tau length-zero, together
    with the transported automorphism theta = Ad(tau) o sigma.

    Twisted powers of x under theta have the same lengths as the
    corresponding twisted powers of w under sigma, so dimension questions
    for w reduce to the affine Weyl group.
    """

    x: ExtAffElt
    tau: ExtAffElt
    theta: GroupAuto


def reduce_to_waff(w: ExtAffElt, sigma: GroupAuto) -> WaffReduction:
    g = w.group
    tau = g.omega_of(w)
    x = g.mul(w, g.inv(tau))
    theta = g.auto(inner=tau).compose(sigma)
    return WaffReduction(x=x, tau=tau, theta=theta)


def generic_class_demazure_limit(w: ExtAffElt, sigma: GroupAuto, horizon: int = DEFAULT_HORIZON):
    """Convenience: the Demazure-limit estimate of the generic class length."""
    return dem_limit(w, sigma, horizon).limit


__all__ = [
    "DimReport",
    "WaffReduction",
    "dim_generic",
    "reduce_to_waff",
    "generic_class_demazure_limit",
    "StraightClass",
]
