"""Threshold constructions for uninorms and their hypothesis checkers.

Two mirrored constructions extend a uninorm given on a lower interval
[bottom, threshold] (the join form) or an upper interval [threshold, top]
(the meet form) to the whole carrier, steered by a distinguished anchor
element.  The join form fills the cell (x, y) as follows:

  * both arguments in the inner interval        -> inner table value
  * x outside the inner interval, y below the
    neutral element                             -> x   (and symmetrically y)
  * both arguments incomparable to neutral and
    threshold                                   -> x v y v anchor
  * anything else                               -> top

The meet form is the order dual (meets, bottom, and the upper interval).

Constructions are total: they evaluate for any valid spec, including ones
that violate the theorem hypotheses, so counterexamples can be
materialized.  The hypothesis checkers are advisory and work off the four
theorem profiles registered in :data:`THEOREMS`; the predictions they
license are exactly the equivalences the verification module fuzzes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattice import BoundedLattice, ElementId, case_regions, ids_of
from .optable import (
    OpTable,
    in_class_ub,
    in_class_ut,
    is_uninorm,
    table_from_function,
)


class SpecInvalid(Exception):
    pass


class HypothesesNotMet(Exception):
    def __init__(self, clause: str):
        super().__init__(f"standing hypothesis failed: {clause}")
        self.clause = clause


@dataclass(frozen=True)
class ConstructionSpec:
    """Inputs of a threshold construction.

    ``inner`` must be an operation table on [bottom, threshold] (join
    form) or [threshold, top] (meet form) with the given neutral element.
    The anchor may be any lattice element; whether a theorem applies to it
    is the checkers' business, not the construction's.
    """

    lattice: BoundedLattice
    threshold: ElementId
    neutral: ElementId
    anchor: ElementId
    inner: OpTable


@dataclass(frozen=True)
class Clause:
    ok: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class HypothesisReport:
    """Per-clause outcome of a theorem's hypothesis battery.

    Field names follow the join-form reading; for the meet-form theorems
    the same slots hold the dual clauses (meets to bottom).  A ``None``
    ``join_pairs_ok`` means the theorem does not state that clause.
    """

    theorem: str
    anchor_class: str
    join_pairs_ok: Optional[Clause]
    join_anchor_ok: Clause
    parallel_condition_ok: Clause
    inner_in_ub: bool
    nonempty_guard: bool

    def standing_failures(self) -> tuple[str, ...]:
        profile = THEOREMS[self.theorem]
        failed = []
        if self.anchor_class not in profile.anchor_classes:
            failed.append("anchor-class")
        if self.join_pairs_ok is not None and not self.join_pairs_ok.ok:
            failed.append(profile.pairs_clause)
        if not self.join_anchor_ok.ok:
            failed.append(profile.anchor_clause)
        if not self.inner_in_ub:
            failed.append("inner-class")
        return tuple(failed)

    @property
    def standing_ok(self) -> bool:
        return not self.standing_failures()


@dataclass(frozen=True)
class TheoremProfile:
    id: str
    orientation: str                 # "join" or "meet"
    anchor_classes: tuple[str, ...]  # classes the theorem covers
    has_pairs_clause: bool

    @property
    def pairs_clause(self) -> str:
        return "join-pairs" if self.orientation == "join" else "meet-pairs"

    @property
    def anchor_clause(self) -> str:
        return "join-anchor" if self.orientation == "join" else "meet-anchor"

    @property
    def droppable_clauses(self) -> tuple[str, ...]:
        if self.has_pairs_clause:
            return (self.pairs_clause, self.anchor_clause)
        return (self.anchor_clause,)


THEOREMS = {
    "th31": TheoremProfile("th31", "join", ("under_neutral", "beside_neutral"), True),
    "th33": TheoremProfile("th33", "join", ("beside_threshold",), False),
    "th34": TheoremProfile("th34", "meet", ("over_neutral", "beside_neutral"), True),
    "th36": TheoremProfile("th36", "meet", ("beside_threshold",), False),
}


# -- spec validation --------------------------------------------------------


def validate_spec(spec: ConstructionSpec, orientation: str, *, check_inner: bool = True) -> None:
    lat = spec.lattice
    if orientation == "join":
        if not lat.leq(spec.neutral, spec.threshold):
            raise SpecInvalid("neutral element must lie below the threshold")
        want = lat.interval(lat.bottom, spec.threshold)
    elif orientation == "meet":
        if not lat.leq(spec.threshold, spec.neutral):
            raise SpecInvalid("neutral element must lie above the threshold")
        want = lat.interval(spec.threshold, lat.top)
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    if set(spec.inner.carrier) != set(want):
        raise SpecInvalid("inner table carrier is not the threshold interval")
    if spec.inner.lattice != lat:
        raise SpecInvalid("inner table belongs to a different lattice")
    if check_inner:
        report = is_uninorm(spec.inner, spec.neutral)
        if not report.ok:
            raise SpecInvalid(
                "inner table fails uninorm axioms: " + ", ".join(report.failures())
            )


def _checker_guard(spec: ConstructionSpec) -> None:
    lat = spec.lattice
    if spec.threshold in (lat.bottom, lat.top):
        raise SpecInvalid("theorem checkers require an interior threshold")


# -- the two constructions --------------------------------------------------


def construct_eq1(spec: ConstructionSpec, *, check_inner: bool = True) -> OpTable:
    """Join-form construction on the full carrier.  Total for valid specs."""
    validate_spec(spec, "join", check_inner=check_inner)
    lat = spec.lattice
    regions = case_regions(lat, spec.neutral, spec.threshold)
    inner_mask = lat.interval_mask(lat.bottom, spec.threshold)
    low_mask = regions.low
    iso = regions.isolated
    inner = spec.inner
    join = lat.join
    anchor = spec.anchor
    top = lat.top

    def cell(x: ElementId, y: ElementId) -> ElementId:
        x_in = inner_mask >> x & 1
        y_in = inner_mask >> y & 1
        if x_in and y_in:
            return inner.value(x, y)
        if not x_in and low_mask >> y & 1:
            return x
        if low_mask >> x & 1 and not y_in:
            return y
        if iso >> x & 1 and iso >> y & 1:
            return join(join(x, y), anchor)
        return top

    return table_from_function(lat, range(lat.n), cell)


def construct_eq2(spec: ConstructionSpec, *, check_inner: bool = True) -> OpTable:
    """Meet-form construction: the order dual of :func:`construct_eq1`."""
    validate_spec(spec, "meet", check_inner=check_inner)
    lat = spec.lattice
    inner_mask = lat.interval_mask(spec.threshold, lat.top)
    high_mask = lat.interval_mask(spec.neutral, lat.top)
    inc_n = lat.incomparables_mask(spec.neutral)
    inc_t = lat.incomparables_mask(spec.threshold)
    iso = inc_n & inc_t
    inner = spec.inner
    meet = lat.meet
    anchor = spec.anchor
    bottom = lat.bottom

    def cell(x: ElementId, y: ElementId) -> ElementId:
        x_in = inner_mask >> x & 1
        y_in = inner_mask >> y & 1
        if x_in and y_in:
            return inner.value(x, y)
        if not x_in and high_mask >> y & 1:
            return x
        if high_mask >> x & 1 and not y_in:
            return y
        if iso >> x & 1 and iso >> y & 1:
            return meet(meet(x, y), anchor)
        return bottom

    return table_from_function(lat, range(lat.n), cell)


def construct_for(spec: ConstructionSpec, theorem: str, *, check_inner: bool = True) -> OpTable:
    profile = THEOREMS[theorem]
    if profile.orientation == "join":
        return construct_eq1(spec, check_inner=check_inner)
    return construct_eq2(spec, check_inner=check_inner)


# -- pinch-point constructions (one-interval t-norm / t-conorm extensions) --


def construct_pinched_tnorm(
    lat: BoundedLattice, pivot: ElementId, upper: OpTable, *, check_inner: bool = True
) -> OpTable:
    """Extend a t-norm on [pivot, top] to the carrier.

    Cells keep the inner value on the upper interval, take meets when the
    top element participates, and collapse to bottom otherwise.
    """
    want = lat.interval(pivot, lat.top)
    if set(upper.carrier) != set(want):
        raise SpecInvalid("upper table carrier is not [pivot, top]")
    if check_inner:
        report = is_uninorm(upper, lat.top)
        if not report.ok:
            raise SpecInvalid(
                "upper table fails t-norm axioms: " + ", ".join(report.failures())
            )
    upper_mask = lat.interval_mask(pivot, lat.top)

    def cell(x: ElementId, y: ElementId) -> ElementId:
        if upper_mask >> x & 1 and upper_mask >> y & 1:
            return upper.value(x, y)
        if x == lat.top or y == lat.top:
            return lat.meet(x, y)
        return lat.bottom

    return table_from_function(lat, range(lat.n), cell)


def construct_pinched_tconorm(
    lat: BoundedLattice, pivot: ElementId, lower: OpTable, *, check_inner: bool = True
) -> OpTable:
    """Extend a t-conorm on [bottom, pivot] to the carrier (dual form)."""
    want = lat.interval(lat.bottom, pivot)
    if set(lower.carrier) != set(want):
        raise SpecInvalid("lower table carrier is not [bottom, pivot]")
    if check_inner:
        report = is_uninorm(lower, lat.bottom)
        if not report.ok:
            raise SpecInvalid(
                "lower table fails t-conorm axioms: " + ", ".join(report.failures())
            )
    lower_mask = lat.interval_mask(lat.bottom, pivot)

    def cell(x: ElementId, y: ElementId) -> ElementId:
        if lower_mask >> x & 1 and lower_mask >> y & 1:
            return lower.value(x, y)
        if x == lat.bottom or y == lat.bottom:
            return lat.join(x, y)
        return lat.top

    return table_from_function(lat, range(lat.n), cell)


# -- hypothesis checkers -----------------------------------------------------


def _check(spec: ConstructionSpec, theorem: str) -> HypothesisReport:
    profile = THEOREMS[theorem]
    lat = spec.lattice
    _checker_guard(spec)
    validate_spec(spec, profile.orientation)
    q = spec.anchor

    if profile.orientation == "join":
        regions = case_regions(lat, spec.neutral, spec.threshold)
        unit = lat.top
        combine = lat.join
        inner_ok = in_class_ub(spec.inner, spec.neutral)
        guard_extra = lat.interval_mask(spec.threshold, lat.top, lower_open=True, upper_open=True)
        strictly_inside = lat.lt(lat.bottom, q) and lat.lt(q, spec.neutral)
        inside_class = "under_neutral"
    else:
        regions = case_regions(lat.dual(), spec.neutral, spec.threshold)
        unit = lat.bottom
        combine = lat.meet
        inner_ok = in_class_ut(spec.inner, spec.neutral)
        guard_extra = lat.interval_mask(lat.bottom, spec.threshold, lower_open=True, upper_open=True)
        strictly_inside = lat.lt(spec.neutral, q) and lat.lt(q, lat.top)
        inside_class = "over_neutral"

    if strictly_inside:
        anchor_class = inside_class
    elif regions.side_inner >> q & 1:
        anchor_class = "beside_neutral"
    elif regions.side_outer >> q & 1:
        anchor_class = "beside_threshold"
    else:
        anchor_class = "other"

    iso = ids_of(regions.isolated)

    pairs: Optional[Clause] = None
    if profile.has_pairs_clause:
        pairs = Clause(ok=True)
        for i, a in enumerate(iso):
            for b in iso[i + 1:]:
                v = combine(a, b)
                if v != unit:
                    pairs = Clause(ok=False, witness=(a, b, v))
                    break
            if not pairs.ok:
                break

    anchor_clause = Clause(ok=True)
    for a in iso:
        if lat.parallel(a, q):
            v = combine(a, q)
            if v != unit:
                anchor_clause = Clause(ok=False, witness=(a, v))
                break

    parallel_clause = Clause(ok=True)
    side_inner = ids_of(regions.side_inner)
    for a in iso:
        if lat.comparable(a, q):
            for b in side_inner:
                if lat.comparable(a, b):
                    parallel_clause = Clause(ok=False, witness=(a, b))
                    break
        if not parallel_clause.ok:
            break

    guard = bool(regions.side_outer | regions.isolated | guard_extra)

    return HypothesisReport(
        theorem=theorem,
        anchor_class=anchor_class,
        join_pairs_ok=pairs,
        join_anchor_ok=anchor_clause,
        parallel_condition_ok=parallel_clause,
        inner_in_ub=inner_ok,
        nonempty_guard=guard,
    )


def check_th31(spec: ConstructionSpec) -> HypothesisReport:
    return _check(spec, "th31")


def check_th33(spec: ConstructionSpec) -> HypothesisReport:
    return _check(spec, "th33")


def check_th34(spec: ConstructionSpec) -> HypothesisReport:
    return _check(spec, "th34")


def check_th36(spec: ConstructionSpec) -> HypothesisReport:
    return _check(spec, "th36")


def check_for(spec: ConstructionSpec, theorem: str) -> HypothesisReport:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return _check(spec, theorem)


def predict_uninorm(spec: ConstructionSpec, theorem: str) -> bool:
    """Truth value of the theorem's iff-condition, under its hypotheses.

    Raises :class:`HypothesesNotMet` when a standing clause fails; by the
    theorem, the returned value equals whether the constructed table is a
    uninorm.
    """
    report = check_for(spec, theorem)
    failures = report.standing_failures()
    if failures:
        raise HypothesesNotMet(failures[0])
    return report.parallel_condition_ok.ok
