"""Seeded random generation of lattices, uninorms, and construction specs.

Everything here is deterministic: generator state is an explicit
``random.Random`` seeded from the config, there is no hidden global
randomness, and identical configs produce identical objects.  Rejection
sampling is capped; on exhaustion the error names the constraint that
kept failing, because a silently vacuous property suite is worse than a
loud failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .construct import THEOREMS, ConstructionSpec, check_for
from .lattice import (
    BoundedLattice,
    ElementId,
    LatticeError,
    build_lattice,
    ids_of,
    mask_of,
)
from .optable import (
    OpTable,
    in_class_ub,
    in_class_umax,
    in_class_umin,
    in_class_ut,
    is_uninorm,
    meet_table,
    table_from_function,
)

ATTEMPT_CAP = 10_000

_CLASS_CHECKS = {
    "ub": in_class_ub,
    "ut": in_class_ut,
    "umin": in_class_umin,
    "umax": in_class_umax,
}


class ExhaustedRejection(Exception):
    def __init__(self, constraint: str):
        super().__init__(f"rejection sampling exhausted: {constraint}")
        self.constraint = constraint


@dataclass(frozen=True)
class GenConfig:
    seed: int
    size_range: tuple[int, int] = (4, 9)
    density: float = 0.35
    class_filter: Optional[str] = None

    def __post_init__(self):
        lo, hi = self.size_range
        if not (2 <= lo <= hi <= 12):
            raise ValueError("size_range must satisfy 2 <= min <= max <= 12")
        if not (0.0 <= self.density <= 1.0):
            raise ValueError("density must lie in [0, 1]")
        if self.class_filter is not None and self.class_filter not in _CLASS_CHECKS:
            raise ValueError(f"unknown class filter {self.class_filter!r}")


# -- lattices ---------------------------------------------------------------


def _attempt_lattice(rng: random.Random, cfg: GenConfig) -> Optional[BoundedLattice]:
    n = rng.randint(*cfg.size_range)
    names = tuple(f"x{i}" for i in range(n))
    if n == 2:
        return build_lattice(names, [("x0", "x1")])

    mids = n - 2
    layer_count = rng.randint(1, mids)
    cuts = sorted(rng.sample(range(1, mids), layer_count - 1)) if layer_count > 1 else []
    bounds = [0, *cuts, mids]
    layers = [list(range(1 + bounds[i], 1 + bounds[i + 1])) for i in range(layer_count)]

    covers = []
    lower: list[int] = [0]
    has_upper = set()
    for layer in layers:
        for node in layer:
            parents = [p for p in lower if rng.random() < cfg.density]
            if not parents:
                parents = [rng.choice(lower)]
            for p in parents:
                covers.append((names[p], names[node]))
                has_upper.add(p)
        lower.extend(layer)
    top = n - 1
    for node in range(n - 1):
        if node not in has_upper:
            covers.append((names[node], names[top]))
    try:
        return build_lattice(names, covers)
    except LatticeError:
        return None


def gen_lattice(cfg: GenConfig) -> BoundedLattice:
    """Random bounded lattice: layered acyclic covers, rejection-sampled
    until every pair has a unique join and meet."""
    rng = random.Random(cfg.seed)
    for _ in range(ATTEMPT_CAP):
        lat = _attempt_lattice(rng, cfg)
        if lat is not None:
            return lat
    raise ExhaustedRejection("random covers kept failing the unique join/meet check")


# -- inner operators --------------------------------------------------------


def _interval_bounds(lat: BoundedLattice, carrier) -> tuple[ElementId, ElementId]:
    cm = mask_of(carrier)
    lo = hi = None
    for a in carrier:
        if cm & ~lat.up[a] == 0:
            lo = a
        if cm & ~lat.down[a] == 0:
            hi = a
    if lo is None or hi is None:
        raise ValueError("carrier is not an interval")
    return lo, hi


def _rand_tnorm(lat: BoundedLattice, lo: ElementId, hi: ElementId, rng: random.Random) -> OpTable:
    """Random t-norm on the interval [lo, hi] (neutral hi).

    Recursively stacks the pinch-point extension over a random interior
    pivot on top of the meet and drastic base cases.
    """
    carrier = lat.interval(lo, hi)
    if len(carrier) <= 2:
        return meet_table(lat, carrier)
    roll = rng.random()
    if roll < 0.34:
        return meet_table(lat, carrier)
    if roll < 0.67:
        def drastic(x, y):
            if x == hi or y == hi:
                return lat.meet(x, y)
            return lo
        return table_from_function(lat, carrier, drastic)
    interior = [x for x in carrier if x not in (lo, hi)]
    pivot = rng.choice(interior)
    upper = _rand_tnorm(lat, pivot, hi, rng)
    upper_mask = lat.interval_mask(pivot, hi)

    def pinched(x, y):
        if upper_mask >> x & 1 and upper_mask >> y & 1:
            return upper.value(x, y)
        if x == hi or y == hi:
            return lat.meet(x, y)
        return lo

    return table_from_function(lat, carrier, pinched)


def _rand_tconorm(lat: BoundedLattice, lo: ElementId, hi: ElementId, rng: random.Random) -> OpTable:
    """Random t-conorm on [lo, hi] (neutral lo); mirror of :func:`_rand_tnorm`."""
    carrier = lat.interval(lo, hi)
    if len(carrier) <= 2:
        return table_from_function(lat, carrier, lat.join)
    roll = rng.random()
    if roll < 0.34:
        return table_from_function(lat, carrier, lat.join)
    if roll < 0.67:
        def drastic(x, y):
            if x == lo or y == lo:
                return lat.join(x, y)
            return hi
        return table_from_function(lat, carrier, drastic)
    interior = [x for x in carrier if x not in (lo, hi)]
    pivot = rng.choice(interior)
    lower = _rand_tconorm(lat, lo, pivot, rng)
    lower_mask = lat.interval_mask(lo, pivot)

    def pinched(x, y):
        if lower_mask >> x & 1 and lower_mask >> y & 1:
            return lower.value(x, y)
        if x == lo or y == lo:
            return lat.join(x, y)
        return hi

    return table_from_function(lat, carrier, pinched)


def _meet_core_uninorm(
    lat: BoundedLattice, carrier, e: ElementId, core: OpTable, hi: ElementId
) -> OpTable:
    lo_mask = lat.interval_mask(_interval_bounds(lat, carrier)[0], e)

    def cell(x, y):
        x_in = lo_mask >> x & 1
        y_in = lo_mask >> y & 1
        if x_in and y_in:
            return core.value(x, y)
        if not x_in and y_in:
            return x
        if x_in and not y_in:
            return y
        return hi

    return table_from_function(lat, carrier, cell)


def _join_core_uninorm(
    lat: BoundedLattice, carrier, e: ElementId, core: OpTable, lo: ElementId
) -> OpTable:
    hi_mask = lat.interval_mask(e, _interval_bounds(lat, carrier)[1])

    def cell(x, y):
        x_in = hi_mask >> x & 1
        y_in = hi_mask >> y & 1
        if x_in and y_in:
            return core.value(x, y)
        if not x_in and y_in:
            return x
        if x_in and not y_in:
            return y
        return lo

    return table_from_function(lat, carrier, cell)


def _mutate(t: OpTable, e: ElementId, rng: random.Random) -> Optional[OpTable]:
    """Try one symmetric cell change that keeps all axioms intact."""
    carrier = t.carrier
    a = rng.choice(carrier)
    b = rng.choice(carrier)
    if e in (a, b):
        return None
    v = rng.choice(carrier)
    if v == t.value(a, b):
        return None
    pos = t.pos
    rows = [list(row) for row in t.values]
    rows[pos[a]][pos[b]] = v
    rows[pos[b]][pos[a]] = v
    mutated = OpTable(lattice=t.lattice, carrier=carrier, values=tuple(tuple(r) for r in rows))
    return mutated if is_uninorm(mutated, e).ok else None


def gen_uninorm(lat: BoundedLattice, carrier, e: ElementId, cfg: GenConfig) -> OpTable:
    """Random verified uninorm on an interval carrier with neutral ``e``.

    Builds from one of two always-valid skeletons (a t-norm core below the
    neutral with the outside collapsed to the carrier top, or its dual),
    then randomizes free cells with repair-or-reject.  ``cfg.class_filter``
    narrows the output class.
    """
    carrier = tuple(carrier)
    if e not in carrier:
        raise ValueError("neutral element must belong to the carrier")
    lo, hi = _interval_bounds(lat, carrier)
    rng = random.Random(cfg.seed)
    cf = cfg.class_filter
    for _ in range(ATTEMPT_CAP):
        if cf in ("ub", "umax"):
            family = "meet_core"
        elif cf in ("ut", "umin"):
            family = "join_core"
        else:
            family = rng.choice(("meet_core", "join_core"))
        if family == "meet_core":
            core = _rand_tnorm(lat, lo, e, rng)
            table = _meet_core_uninorm(lat, carrier, e, core, hi)
        else:
            core = _rand_tconorm(lat, e, hi, rng)
            table = _join_core_uninorm(lat, carrier, e, core, lo)
        for _ in range(rng.randint(0, 2)):
            mutated = _mutate(table, e, rng)
            if mutated is not None and (cf is None or _CLASS_CHECKS[cf](mutated, e)):
                table = mutated
        if not is_uninorm(table, e).ok:
            continue
        if cf is not None and not _CLASS_CHECKS[cf](table, e):
            continue
        return table
    raise ExhaustedRejection(f"no uninorm matching class filter {cf!r} on this carrier")


def enumerate_uninorms(lat: BoundedLattice, carrier, e: ElementId) -> list[OpTable]:
    """All uninorms on a small carrier, by backtracking over symmetric cells.

    Exponential in the carrier size; intended as the generator oracle for
    carriers of at most four elements.
    """
    carrier = tuple(carrier)
    free = [x for x in carrier if x != e]
    cells = [(a, b) for i, a in enumerate(free) for b in free[i:]]
    pos = {x: i for i, x in enumerate(carrier)}
    n = len(carrier)
    base = [[None] * n for _ in range(n)]
    for x in carrier:
        base[pos[e]][pos[x]] = x
        base[pos[x]][pos[e]] = x

    found = []

    def fill(k: int):
        if k == len(cells):
            values = tuple(tuple(row) for row in base)
            table = OpTable(lattice=lat, carrier=carrier, values=values)
            if is_uninorm(table, e).ok:
                found.append(table)
            return
        a, b = cells[k]
        for v in carrier:
            base[pos[a]][pos[b]] = v
            base[pos[b]][pos[a]] = v
            fill(k + 1)
        base[pos[a]][pos[b]] = None
        base[pos[b]][pos[a]] = None

    fill(0)
    return found


# -- construction specs ------------------------------------------------------


def dual_spec(spec: ConstructionSpec) -> ConstructionSpec:
    """Transport a spec across lattice duality (join form <-> meet form)."""
    dual = spec.lattice.dual()
    inner = OpTable(lattice=dual, carrier=spec.inner.carrier, values=spec.inner.values)
    return ConstructionSpec(
        lattice=dual,
        threshold=spec.threshold,
        neutral=spec.neutral,
        anchor=spec.anchor,
        inner=inner,
    )


_ANCHOR_DEFAULT_THEOREM = {
    "under_neutral": "th31",
    "beside_neutral": "th31",
    "beside_threshold": "th33",
    "over_neutral": "th34",
}


def _anchor_candidates(
    lat: BoundedLattice, neutral: ElementId, threshold: ElementId, anchor_class: str
) -> tuple[ElementId, ...]:
    from .lattice import case_regions

    regions = case_regions(lat, neutral, threshold)
    if anchor_class == "under_neutral":
        return lat.interval(lat.bottom, neutral, lower_open=True, upper_open=True)
    if anchor_class == "beside_neutral":
        return ids_of(regions.side_inner)
    if anchor_class == "beside_threshold":
        return ids_of(regions.side_outer)
    raise ValueError(f"unknown anchor class {anchor_class!r}")


def gen_spec_candidates(
    cfg: GenConfig,
    theorem: str,
    anchor_class: Optional[str] = None,
) -> Iterator[ConstructionSpec]:
    """Endless deterministic stream of valid specs for one theorem.

    Hypotheses are NOT enforced here; callers filter.  For the meet-form
    theorems, candidates are generated in the join form and transported
    across duality.
    """
    profile = THEOREMS[theorem]
    join_class = anchor_class
    if profile.orientation == "meet" and anchor_class == "over_neutral":
        join_class = "under_neutral"
    rng = random.Random(cfg.seed)
    dry_run = 0
    while True:
        dry_run += 1
        if dry_run > ATTEMPT_CAP:
            raise ExhaustedRejection(
                f"no candidate spec for {theorem}/{anchor_class or 'any class'} "
                f"in {ATTEMPT_CAP} consecutive attempts"
            )
        sub_seed = rng.getrandbits(48)
        try:
            lat = gen_lattice(replace(cfg, seed=sub_seed, class_filter=None))
        except ExhaustedRejection:
            continue
        interior = [x for x in range(lat.n) if x not in (lat.bottom, lat.top)]
        if not interior:
            continue
        threshold = rng.choice(interior)
        below = lat.interval(lat.bottom, threshold)
        neutral = rng.choice(below)
        if join_class is None:
            classes = (
                ("under_neutral", "beside_neutral")
                if profile.has_pairs_clause
                else ("beside_threshold",)
            )
            pick = rng.choice(classes)
        else:
            pick = join_class
        candidates = _anchor_candidates(lat, neutral, threshold, pick)
        if not candidates:
            continue
        anchor = rng.choice(candidates)
        try:
            inner = gen_uninorm(
                lat,
                below,
                neutral,
                replace(cfg, seed=rng.getrandbits(48), class_filter="ub"),
            )
        except ExhaustedRejection:
            continue
        spec = ConstructionSpec(
            lattice=lat, threshold=threshold, neutral=neutral, anchor=anchor, inner=inner
        )
        if profile.orientation == "meet":
            spec = dual_spec(spec)
        dry_run = 0
        yield spec


def gen_spec(
    cfg: GenConfig,
    anchor_class: str,
    want_hypotheses: bool,
    theorem: Optional[str] = None,
) -> ConstructionSpec:
    """First spec whose anchor lies in the requested class.

    With ``want_hypotheses`` the theorem's standing clauses must hold as
    well; sampling is capped and the exhaustion error names the clause
    that kept failing.
    """
    theorem = theorem or _ANCHOR_DEFAULT_THEOREM[anchor_class]
    last_failure = "anchor-class availability"
    count = 0
    for spec in gen_spec_candidates(cfg, theorem, anchor_class=anchor_class):
        count += 1
        if count > ATTEMPT_CAP:
            break
        report = check_for(spec, theorem)
        want_class = anchor_class
        if THEOREMS[theorem].orientation == "meet" and anchor_class == "under_neutral":
            want_class = "over_neutral"
        if report.anchor_class != want_class:
            last_failure = "anchor-class"
            continue
        if want_hypotheses:
            failures = report.standing_failures()
            if failures:
                last_failure = failures[0]
                continue
        return spec
    raise ExhaustedRejection(f"no spec within cap; last failing clause: {last_failure}")
