"""Regions B0..B4 of (a, b, c)-space, the bifurcation set B and the
per-family bifurcation sets for F1..F8.

All predicates compare exactly: rational inputs give exact answers, float
inputs are compared strictly against zero with no tolerance, which means a
float triple essentially never lands on a boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from pzfield.equilibria import Kind
from pzfield.model import Family, Params, exact


class RegionTag(str, Enum):
    B0 = "B0"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    ON_BIFURCATION_SET_B = "OnBifurcationSetB"
    OTHER_BOUNDARY = "OtherBoundary"


@dataclass(frozen=True)
class RegionLabel:
    tag: RegionTag
    predicted_kind: Kind


def classify_region(a, b, c) -> RegionLabel:
    """Region of (a, b, c) for y' = 2(a+b) y - (a^2+b^2+c) x.

    B1 and B2 are foci whose stability is the sign of a + b: B1 unstable,
    B2 stable.
    """
    a, b, c = exact(a), exact(b), exact(c)
    s, rad, n2 = a + b, 2 * a * b - c, a * a + b * b
    if n2 < -c:
        return RegionLabel(RegionTag.B0, Kind.SADDLE)
    if rad < 0 and s > 0:
        return RegionLabel(RegionTag.B1, Kind.UNSTABLE_FOCUS)
    if rad < 0 and s < 0:
        return RegionLabel(RegionTag.B2, Kind.STABLE_FOCUS)
    if rad >= 0 and s > 0 and n2 > -c:
        return RegionLabel(RegionTag.B3, Kind.UNSTABLE_NODE)
    if rad >= 0 and s < 0 and n2 > -c:
        return RegionLabel(RegionTag.B4, Kind.STABLE_NODE)
    if on_bifurcation_set(a, b, c):
        kind = Kind.CENTER if s == 0 else Kind.DEGENERATE_ZERO_EIGEN
        return RegionLabel(RegionTag.ON_BIFURCATION_SET_B, kind)
    return RegionLabel(RegionTag.OTHER_BOUNDARY, Kind.DEGENERATE_ZERO_EIGEN)


def on_bifurcation_set(a, b, c) -> bool:
    """(a+b < 0 and a^2+b^2 = -c) or (a+b = 0 and a^2+b^2 > -c)."""
    a, b, c = exact(a), exact(b), exact(c)
    s, n2 = a + b, a * a + b * b
    return (s < 0 and n2 == -c) or (s == 0 and n2 > -c)


def corollary_set(tag: Family | str, params: Params) -> bool:
    """Membership in the bifurcation set attached to one of F1..F8.

    F4/F5 use {b = 0 and b^2 > -c} or {b^2 = -c and b > 0}; F6/F7 the same
    with a in place of b, exactly as the sets are stated.
    """
    tag = Family(tag)
    a, b, c = params.a, params.b, params.c
    if tag is Family.F1:
        return c == 0
    if tag is Family.F2:
        return False
    if tag is Family.F3:
        return a == 0
    if tag in (Family.F4, Family.F5):
        return (b == 0 and b * b > -c) or (b * b == -c and b > 0)
    if tag in (Family.F6, Family.F7):
        return (a == 0 and a * a > -c) or (a * a == -c and a > 0)
    if tag is Family.F8:
        return a + b == 0
    raise ValueError("F9 is covered by on_bifurcation_set, not by a corollary set")
