"""One-sided and global returns-to-scale classification.

Right and left classes describe the frontier immediately above and below
the observed scale of an efficient unit; they follow from existence tests
on the ratio table. The global class compares the constant-returns score
with the two one-sided-regime scores. ``check_consistency`` re-derives the
one-sided classes from the scale ratios and checks the implications the
global class imposes, so a report can be audited without recomputing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .efficiency import EfficiencyScores, compute_scores, is_mpss, theta
from .errors import UnclassifiableError
from .model import Dataset, Delta, Numeric, Tolerance, ratio_table
from .scale import UNBOUNDED, ScaleRatios, scale_ratios
from .technology import find_dominating


class RightRts(Enum):
    """Frontier behaviour just above the observed scale."""

    IRS = "Right-IRS"
    DRS = "Right-DRS"
    CRS = "Right-CRS"


class LeftRts(Enum):
    """Frontier behaviour just below the observed scale."""

    IRS = "Left-IRS"
    DRS = "Left-DRS"
    CRS = "Left-CRS"


class GrsClass(Enum):
    """Global returns-to-scale class from score comparisons."""

    CRS = "G-CRS"
    SCRS = "G-SCRS"
    IRS = "G-IRS"
    DRS = "G-DRS"


@dataclass(frozen=True)
class OneSidedRts:
    right: RightRts
    left: LeftRts


def _gate(d: Dataset, o: int) -> None:
    from .errors import InefficientUnitError

    w = find_dominating(d, Delta.VRS, o)
    if w is not None:
        raise InefficientUnitError(
            f"unit {d.names[o]!r} is dominated by {d.names[w]!r}; "
            "returns-to-scale classes are defined for efficient units"
        )


def right_rts(d: Dataset, o: int, tol: Tolerance = Tolerance()) -> RightRts:
    """Classify the frontier immediately above unit ``o``'s scale.

    Increasing when some peer expands outputs faster than inputs, strictly;
    decreasing when no peer expands outputs at least as fast as inputs.
    """
    _gate(d, o)
    rt = ratio_table(d, o)
    eps = tol.eps
    strict = weak = False
    for a, b in zip(rt.alpha, rt.beta):
        if b > 1 + eps:
            if a < b - eps:
                strict = True
            if a <= b + eps:
                weak = True
    if strict:
        return RightRts.IRS
    if not weak:
        return RightRts.DRS
    return RightRts.CRS


def left_rts(d: Dataset, o: int, tol: Tolerance = Tolerance()) -> LeftRts:
    """Classify the frontier immediately below unit ``o``'s scale.

    Decreasing when some smaller peer keeps outputs above its input share,
    strictly; increasing when every smaller peer loses outputs faster than
    inputs.
    """
    _gate(d, o)
    rt = ratio_table(d, o)
    eps = tol.eps
    strict = weak = False
    for a, b in zip(rt.alpha, rt.beta):
        if a < 1 - eps:
            if a < b - eps:
                strict = True
            if b >= a - eps:
                weak = True
    if strict:
        return LeftRts.DRS
    if not weak:
        return LeftRts.IRS
    return LeftRts.CRS


def _close(a: Numeric, b: Numeric, eps: float) -> bool:
    scale = max(1, abs(a), abs(b))
    return abs(a - b) <= eps * scale


def grs(d: Dataset, o: int, tol: Tolerance = Tolerance()) -> GrsClass:
    """Global class of efficient unit ``o`` from contraction scores.

    Raises:
        UnclassifiableError: scores match no pattern; cannot happen with
            exact arithmetic, and signals numerical trouble with floats.
    """
    _gate(d, o)
    tc = theta(d, Delta.CRS, o).value
    tni = theta(d, Delta.NIRS, o).value
    tnd = theta(d, Delta.NDRS, o).value
    eps = tol.eps
    eq_ni = _close(tc, tni, eps)
    eq_nd = _close(tc, tnd, eps)
    if eq_ni and eq_nd:
        return GrsClass.CRS if _close(tc, 1, eps) else GrsClass.SCRS
    if eq_ni and tnd > tc:
        return GrsClass.IRS
    if eq_nd and tni > tc:
        return GrsClass.DRS
    raise UnclassifiableError(
        f"scores crs={tc!r} nirs={tni!r} ndrs={tnd!r} fit no global pattern"
    )


@dataclass(frozen=True)
class RtsReport:
    """Full classification of one efficient unit."""

    reference: int
    one_sided: OneSidedRts
    grs: GrsClass
    sigma: ScaleRatios
    mpss: bool
    scores: EfficiencyScores


@dataclass(frozen=True)
class InefficientUnit:
    """Marker for a dominated unit: its contraction score and dominator."""

    reference: int
    theta_vrs: Numeric
    witness: int


def classify_all(
    d: Dataset, tol: Tolerance = Tolerance()
) -> list[Union[RtsReport, InefficientUnit]]:
    """Classify every unit, in dataset order.

    Efficient units get a full report; dominated units get a marker with
    their variable-returns contraction score and the dominating unit.
    """
    out: list[Union[RtsReport, InefficientUnit]] = []
    for o in range(d.n):
        w = find_dominating(d, Delta.VRS, o)
        if w is not None:
            out.append(InefficientUnit(o, theta(d, Delta.VRS, o).value, w))
            continue
        out.append(
            RtsReport(
                reference=o,
                one_sided=OneSidedRts(right_rts(d, o, tol), left_rts(d, o, tol)),
                grs=grs(d, o, tol),
                sigma=scale_ratios(d, o, tol),
                mpss=is_mpss(d, o, tol),
                scores=compute_scores(d, o),
            )
        )
    return out


def check_consistency(report: RtsReport, tol: Tolerance = Tolerance()) -> list[str]:
    """Relations every sound report satisfies; returns violations, [] if none.

    The one-sided classes must sit where the scale ratios point (above 1,
    below 1, or at 1), a globally increasing unit must be right-increasing,
    a globally decreasing unit left-decreasing, and the two constant-like
    global classes bound both ratios.
    """
    eps = tol.eps
    sp = report.sigma.sigma_plus
    sm = report.sigma.sigma_minus
    right = report.one_sided.right
    left = report.one_sided.left
    out: list[str] = []

    if sp > 1 + eps:
        expect_right = RightRts.IRS
    elif sp < 1 - eps:
        expect_right = RightRts.DRS
    else:
        expect_right = RightRts.CRS
    if right is not expect_right:
        out.append(
            f"right class {right.value} disagrees with incremental ratio {sp!r}"
        )

    if sm is UNBOUNDED or sm > 1 + eps:
        expect_left = LeftRts.IRS
    elif sm < 1 - eps:
        expect_left = LeftRts.DRS
    else:
        expect_left = LeftRts.CRS
    if left is not expect_left:
        out.append(
            f"left class {left.value} disagrees with decremental ratio {sm!r}"
        )

    if report.grs is GrsClass.IRS and right is not RightRts.IRS:
        out.append("globally increasing unit is not right-increasing")
    if report.grs is GrsClass.DRS and left is not LeftRts.DRS:
        out.append("globally decreasing unit is not left-decreasing")
    if report.grs is GrsClass.CRS and not (sp <= 1 + eps and sm >= 1 - eps):
        out.append(
            f"globally constant unit has ratios {sp!r}/{sm!r} off the unit point"
        )
    if report.grs is GrsClass.SCRS and not (sp > 1 + eps and sm < 1 - eps):
        out.append(
            f"globally sub-constant unit has ratios {sp!r}/{sm!r} not straddling 1"
        )
    return out
