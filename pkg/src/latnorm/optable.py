"""Binary operation tables over lattice carriers and their axiom checks.

An :class:`OpTable` is a raw candidate: it may be non-commutative,
non-associative, or take values outside its carrier.  Verification is a
separate act (:func:`is_uninorm` and friends) that runs every check
exhaustively and reports the first violation per axiom, with a witness
that can be re-evaluated against the table.

Witness enumeration order is lexicographic over element identifiers so
reports are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .lattice import BoundedLattice, ElementId, ids_of, mask_of


class OpTableError(Exception):
    pass


class NeutralOutsideCarrier(OpTableError):
    pass


class SubNotContained(OpTableError):
    pass


@dataclass(frozen=True, eq=False)
class OpTable:
    """A binary operation table on a sub-carrier of a lattice.

    ``carrier`` lists element ids in presentation order (rows and columns
    follow it); ``values[i][j]`` is the result of row element i applied to
    column element j.  Values may be any lattice element.
    """

    lattice: BoundedLattice
    carrier: tuple[ElementId, ...]
    values: tuple[tuple[ElementId, ...], ...]

    def __post_init__(self):
        n = len(self.carrier)
        if len(self.values) != n or any(len(row) != n for row in self.values):
            raise OpTableError("values table is not square over the carrier")
        if len(set(self.carrier)) != n:
            raise OpTableError("carrier has repeated elements")
        object.__setattr__(self, "_pos", {a: i for i, a in enumerate(self.carrier)})

    @property
    def pos(self) -> dict:
        return self._pos

    @property
    def carrier_mask(self) -> int:
        return mask_of(self.carrier)

    def value(self, a: ElementId, b: ElementId) -> ElementId:
        pos = self.pos
        return self.values[pos[a]][pos[b]]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OpTable)
            and self.lattice == other.lattice
            and self.carrier == other.carrier
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.carrier, self.values))

    def carrier_bottom(self) -> ElementId:
        # the element whose up-set contains the whole carrier
        return self._extreme(self.lattice.up)

    def carrier_top(self) -> ElementId:
        return self._extreme(self.lattice.down)

    def _extreme(self, rows) -> ElementId:
        cm = self.carrier_mask
        for a in self.carrier:
            if cm & ~rows[a] == 0:
                return a
        raise OpTableError("carrier has no extreme element; not an interval")

    def diff(self, other: "OpTable") -> tuple[tuple[ElementId, ElementId], ...]:
        """Cells (row, col) where the two tables disagree; carriers must match."""
        if set(self.carrier) != set(other.carrier):
            raise OpTableError("cannot diff tables over different carriers")
        cells = []
        for a in self.carrier:
            for b in self.carrier:
                if self.value(a, b) != other.value(a, b):
                    cells.append((a, b))
        return tuple(cells)


def table_from_function(
    lattice: BoundedLattice,
    carrier,
    fn: Callable[[ElementId, ElementId], ElementId],
) -> OpTable:
    carrier = tuple(carrier)
    values = tuple(tuple(fn(a, b) for b in carrier) for a in carrier)
    return OpTable(lattice=lattice, carrier=carrier, values=values)


def meet_table(lattice: BoundedLattice, carrier=None) -> OpTable:
    carrier = tuple(range(lattice.n)) if carrier is None else tuple(carrier)
    return table_from_function(lattice, carrier, lattice.meet)


def join_table(lattice: BoundedLattice, carrier=None) -> OpTable:
    carrier = tuple(range(lattice.n)) if carrier is None else tuple(carrier)
    return table_from_function(lattice, carrier, lattice.join)


# -- axiom verification ----------------------------------------------------

CommutativityWitness = tuple  # (a, b, ab, ba)
AssociativityWitness = tuple  # (a, b, c, left, right)
MonotonicityWitness = tuple   # (a, b, c, ua, ub, side); a <= b, side "left":
                              # U(a,c) !<= U(b,c); side "right": U(c,a) !<= U(c,b)
NeutralWitness = tuple        # (x, got) where U(e,x) or U(x,e) == got != x
ClosureWitness = tuple        # (a, b, value) with value outside carrier


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the exhaustive uninorm axiom battery.

    Each field is ``None`` on pass, else the lexicographically first
    witness.  ``second_side_checked`` records whether monotonicity was
    checked in both arguments (needed when commutativity fails).
    """

    neutral_element: ElementId
    commutative: Optional[CommutativityWitness]
    associative: Optional[AssociativityWitness]
    monotone: Optional[MonotonicityWitness]
    neutral: Optional[NeutralWitness]
    closed: Optional[ClosureWitness]
    second_side_checked: bool = False

    @property
    def ok(self) -> bool:
        return (
            self.commutative is None
            and self.associative is None
            and self.monotone is None
            and self.neutral is None
            and self.closed is None
        )

    def failures(self) -> tuple[str, ...]:
        out = []
        for axiom in ("commutative", "associative", "monotone", "neutral", "closed"):
            if getattr(self, axiom) is not None:
                out.append(axiom)
        return tuple(out)


def first_commutativity_witness(t: OpTable) -> Optional[CommutativityWitness]:
    carrier = t.carrier
    for i, a in enumerate(carrier):
        for b in carrier[i + 1:]:
            ab = t.value(a, b)
            ba = t.value(b, a)
            if ab != ba:
                return (a, b, ab, ba)
    return None


def first_associativity_witness(t: OpTable) -> Optional[AssociativityWitness]:
    """Naive all-triples check; the ground-truth associativity oracle."""
    carrier = t.carrier
    pos = t.pos
    values = t.values
    in_carrier = set(carrier)
    for a in carrier:
        row_a = values[pos[a]]
        for b in carrier:
            ab = row_a[pos[b]]
            if ab not in in_carrier:
                continue  # closure violation is reported separately
            row_ab = values[pos[ab]]
            row_b = values[pos[b]]
            for c in carrier:
                bc = row_b[pos[c]]
                if bc not in in_carrier:
                    continue
                left = row_ab[pos[c]]
                right = row_a[pos[bc]]
                if left != right:
                    return (a, b, c, left, right)
    return None


def first_monotonicity_witness(
    t: OpTable, *, both_sides: bool
) -> Optional[MonotonicityWitness]:
    """First pair a <= b and argument c where the table is not increasing.

    One side suffices for commutative tables; ``both_sides`` is set by the
    caller when commutativity already failed.  Enumeration follows carrier
    presentation order, so reports are reproducible.
    """
    lat = t.lattice
    carrier = t.carrier
    for a in carrier:
        for b in carrier:
            if a == b or not lat.leq(a, b):
                continue
            for c in carrier:
                ua = t.value(a, c)
                ub = t.value(b, c)
                if not lat.leq(ua, ub):
                    return (a, b, c, ua, ub, "left")
                if both_sides:
                    va = t.value(c, a)
                    vb = t.value(c, b)
                    if not lat.leq(va, vb):
                        return (a, b, c, va, vb, "right")
    return None


def first_neutral_witness(t: OpTable, e: ElementId) -> Optional[NeutralWitness]:
    for x in t.carrier:
        got = t.value(e, x)
        if got != x:
            return (x, got)
        got = t.value(x, e)
        if got != x:
            return (x, got)
    return None


def first_closure_witness(t: OpTable) -> Optional[ClosureWitness]:
    in_carrier = set(t.carrier)
    for a in t.carrier:
        for b in t.carrier:
            v = t.value(a, b)
            if v not in in_carrier:
                return (a, b, v)
    return None


def is_uninorm(t: OpTable, e: ElementId) -> AxiomReport:
    """Run all five uninorm checks exhaustively with the given neutral."""
    if e not in set(t.carrier):
        raise NeutralOutsideCarrier(
            f"neutral {t.lattice.name(e)!r} is outside the table carrier"
        )
    commutative = first_commutativity_witness(t)
    both = commutative is not None
    return AxiomReport(
        neutral_element=e,
        commutative=commutative,
        associative=first_associativity_witness(t),
        monotone=first_monotonicity_witness(t, both_sides=both),
        neutral=first_neutral_witness(t, e),
        closed=first_closure_witness(t),
        second_side_checked=both,
    )


def is_t_norm(t: OpTable, carrier_top: ElementId) -> AxiomReport:
    """Uninorm battery with the designated neutral taken as the carrier top."""
    return is_uninorm(t, carrier_top)


def is_t_conorm(t: OpTable, carrier_bottom: ElementId) -> AxiomReport:
    return is_uninorm(t, carrier_bottom)


def restrict(t: OpTable, sub) -> OpTable:
    """Restrict the table to sub x sub, keeping the sub order given."""
    sub = tuple(sub)
    missing = set(sub) - set(t.carrier)
    if missing:
        name = t.lattice.name(sorted(missing)[0])
        raise SubNotContained(f"element {name!r} is not in the table carrier")
    return table_from_function(t.lattice, sub, t.value)


# -- class predicates ------------------------------------------------------


def _carrier_interval_masks(t: OpTable, e: ElementId) -> tuple[int, int, int]:
    """(below-e, above-e, full) masks within the carrier interval."""
    lat = t.lattice
    cm = t.carrier_mask
    lo = t.carrier_bottom()
    hi = t.carrier_top()
    below = lat.interval_mask(lo, e)
    above = lat.interval_mask(e, hi)
    return below & cm, above & cm, cm


def in_class_umin(t: OpTable, e: ElementId) -> bool:
    """Projection onto the second argument on (e, top] x (carrier - [e, top]).

    The commuted rectangle is checked as well so the predicate is
    meaningful on raw candidate tables.
    """
    _, above, cm = _carrier_interval_masks(t, e)
    strict_above = above & ~(1 << e)
    outside = cm & ~above
    for a in ids_of(strict_above):
        for b in ids_of(outside):
            if t.value(a, b) != b or t.value(b, a) != b:
                return False
    return True


def in_class_umax(t: OpTable, e: ElementId) -> bool:
    """Projection onto the second argument on [bottom, e) x (carrier - [bottom, e])."""
    below, _, cm = _carrier_interval_masks(t, e)
    strict_below = below & ~(1 << e)
    outside = cm & ~below
    for a in ids_of(strict_below):
        for b in ids_of(outside):
            if t.value(a, b) != b or t.value(b, a) != b:
                return False
    return True


def in_class_ub(t: OpTable, e: ElementId) -> bool:
    """Values landing in [bottom, e] force both arguments into [bottom, e]."""
    below, _, _ = _carrier_interval_masks(t, e)
    for a in t.carrier:
        a_in = below >> a & 1
        for b in t.carrier:
            v = t.value(a, b)
            if below >> v & 1 and not (a_in and below >> b & 1):
                return False
    return True


def in_class_ut(t: OpTable, e: ElementId) -> bool:
    """Values landing in [e, top] force both arguments into [e, top]."""
    _, above, _ = _carrier_interval_masks(t, e)
    for a in t.carrier:
        a_in = above >> a & 1
        for b in t.carrier:
            v = t.value(a, b)
            if above >> v & 1 and not (a_in and above >> b & 1):
                return False
    return True
