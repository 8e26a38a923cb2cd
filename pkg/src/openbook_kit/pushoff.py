"""
Realizing the transverse push-off of a Legendrian link as a sub-binding.

Input components lie on a page with zero framing offset.  Each component
gets one positive stabilization (the "crucial step") with same-boundary feet
on a binding reachable by an arc on the component's positive side.  The
twist curve crosses the new handle once and otherwise follows the component,
and the new boundary component is the transverse push-off.  Arc selection
depends on the case:

====== ======= ============================================================
case   genus   parallel classes
====== ======= ============================================================
1a     0       all singletons; arcs pairwise disjoint, order irrelevant
1bi    0       some class has >= 2 copies, all oriented alike
1bii   0       some class mixes orientations
2a     > 0     as 1a
2bi    > 0     as 1bi
2bii   > 0     as 1bii
====== ======= ============================================================

Within a class of parallel copies the copies are processed one end first.
Direction predicate: if the innermost copy (``class_index == 1``) has
orientation +1 its right side faces inward and the scan runs innermost to
outermost; otherwise it runs outermost to innermost.  Every copy is
stabilized from the class anchor binding, the lowest-labelled nearest
binding declared by its members.  When the orientation flips along the
scan, an auxiliary stabilization along a boundary-parallel curve is inserted
first; the copies handled so far and the flipped one are pushed over its
handle (each is negatively stabilized: ``tb - 1``, ``rot - 1``) and the rest
of the class works from the new binding.  Steps of one class must keep their
order; steps of different classes are independent.

Curves carry homology only.  A crucial-step twist curve is the component's
class plus the new handle's ``d`` label, so it pairs with every page class
exactly as the component does.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import FramingError, PlacementError, ReplayError
from .legendrian import LinkComponent, LinkPlacement, TransverseComponent, TransverseLinkRecord, require_valid
from .openbook import (
    OpenBook,
    Stabilization,
    binding_sort_key,
    fresh_binding_labels,
    monodromy_homology_action,
    positive_stabilize,
)
from .surface import CurveRef, SameBoundary, apply_matrix

PUSHOFF = "pushoff-stabilization"
AUX = "aux-boundary-parallel-stabilization"
STEP_KINDS = (PUSHOFF, AUX)


class Case(Enum):
    C1a = "1a"
    C1bi = "1bi"
    C1bii = "1bii"
    C2a = "2a"
    C2bi = "2bi"
    C2bii = "2bii"

    @property
    def planar(self) -> bool:
        return self.value.startswith("1")

    @property
    def has_parallel_copies(self) -> bool:
        return "b" in self.value

    @property
    def mixed_orientation(self) -> bool:
        return self.value.endswith("ii")


@dataclass(frozen=True)
class ScheduleStep:
    index: int
    kind: str
    target_component: str | None
    feet: str
    twist_curve: CurveRef
    creates: str
    depends_on: tuple[int, ...] = ()
    disjoint_from: tuple[int, ...] = ()
    pushed: tuple[str, ...] = ()


@dataclass(frozen=True)
class LedgerRow:
    step: int
    genus: int
    boundary_count: int
    euler_char: int
    word_length: int

    def shape(self) -> tuple[int, int, int, int]:
        return (self.genus, self.boundary_count, self.euler_char, self.word_length)


@dataclass(frozen=True)
class ComponentOutcome:
    """Per-component result: the binding realizing its push-off and its final invariants."""

    id: str
    binding: str
    negative_stabilizations: int = 0
    tb: int | None = None
    rot: int | None = None
    sl: int | None = None


@dataclass(frozen=True)
class Certificate:
    """An ordered stabilization schedule for one placement.

    ``ledger`` is empty until the schedule is applied; afterwards row 0
    describes the input open book and row ``i`` the book after step ``i``.
    """

    placement: LinkPlacement
    placement_digest: str
    case: Case
    steps: tuple[ScheduleStep, ...]
    sub_binding_map: tuple[tuple[str, str], ...]
    order_free: bool
    outcomes: tuple[ComponentOutcome, ...] = ()
    ledger: tuple[LedgerRow, ...] = ()
    tags: tuple[str, ...] = ()

    def binding_of(self, component: str) -> str:
        return dict(self.sub_binding_map)[component]

    def step(self, index: int) -> ScheduleStep:
        return self.steps[index - 1]

    @property
    def aux_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == AUX)

    @property
    def pushoff_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == PUSHOFF)

    def transverse_record(self) -> TransverseLinkRecord:
        loose = {c.id: c.loose for c in self.placement.components}
        return TransverseLinkRecord(tuple(TransverseComponent(o.id, o.sl, loose[o.id]) for o in self.outcomes))


def _placement_digest(p: LinkPlacement) -> str:
    from .interchange import digest

    return digest(p)


def ledger_row(step: int, ob: OpenBook) -> LedgerRow:
    page = ob.page
    return LedgerRow(step, page.genus, page.boundary_count, page.euler_char, len(ob.monodromy))


def classify(p: LinkPlacement) -> Case:
    require_valid(p)
    classes = p.classes().values()
    copies = any(len(m) >= 2 for m in classes)
    mixed = any(len({c.orientation for c in m}) > 1 for m in classes)
    prefix = "1" if p.open_book.page.genus == 0 else "2"
    suffix = "a" if not copies else ("bii" if mixed else "bi")
    return Case(prefix + suffix)


def _stab_curve_id(index: int, taken: set[str]) -> str:
    name = f"c{index}"
    while name in taken:
        name += "'"
    return name


def _crucial_step(
    ob: OpenBook, K: LinkComponent, gamma_target: str, curve_id: str | None = None, new_label: str | None = None
) -> tuple[OpenBook, Stabilization]:
    if K.framing_offset != 0:
        raise FramingError(
            f"framing offset must be zero: component {K.id!r} has offset {K.framing_offset}"
        )
    if gamma_target not in ob.bindings:
        raise PlacementError(f"unreachable target: {gamma_target!r} is not a binding")
    if gamma_target != K.nearest_binding:
        raise PlacementError(
            f"unreachable target: no arc on the positive side of {K.id!r} is recorded towards {gamma_target!r}"
        )
    if len(K.curve.homology) != ob.page.dim:
        raise PlacementError(f"component {K.id!r} does not live on this page")
    taken = {c.id for c in ob.monodromy.curves()}
    cid = curve_id or _stab_curve_id(len(ob.monodromy) + 1, taken)
    alpha = CurveRef(cid, K.curve.homology + (1,), "stabilization-curve")
    return positive_stabilize(ob, SameBoundary(gamma_target), alpha, new_label)


def lemma_crucial_step(
    ob: OpenBook, K: LinkComponent, gamma_target: str, curve_id: str | None = None, new_label: str | None = None
) -> tuple[OpenBook, str]:
    """Positively stabilize along the curve that leaves ``gamma_target``, circles ``K`` and returns.

    Returns the new open book and the label of the binding component that is
    the transverse push-off of ``K``.
    """
    new_ob, move = _crucial_step(ob, K, gamma_target, curve_id, new_label)
    return new_ob, move.new_binding


def _bounds_own_bindings(p: LinkPlacement) -> bool:
    ob = p.open_book
    used = [c.nearest_binding for c in p.components]
    if len(set(used)) != len(used):
        return False
    return all(
        c.curve.kind == "boundary-parallel" and c.orientation == 1 and c.curve.homology == ob.binding_class(c.nearest_binding)
        for c in p.components
    )


def _is_meridional(c: LinkComponent, genus: int) -> bool:
    ref = tuple(c.orientation * x for x in c.curve.homology)
    nz = [i for i, x in enumerate(ref) if x]
    return len(nz) == 1 and nz[0] < 2 * genus and nz[0] % 2 == 0 and abs(ref[nz[0]]) == 1


def build_schedule(p: LinkPlacement) -> Certificate:
    """Plan the stabilizations realizing ``p``'s push-off as a sub-binding; nothing is applied."""
    require_valid(p)
    for c in p.components:
        if c.framing_offset != 0:
            raise FramingError(f"framing offset must be zero: component {c.id!r} has offset {c.framing_offset}")
    case = classify(p)
    ob = p.open_book
    digest = _placement_digest(p)
    tags: list[str] = []

    if _bounds_own_bindings(p):
        outcomes = tuple(
            ComponentOutcome(c.id, c.nearest_binding, 0, c.tb, c.rot, c.tb - c.rot if c.tb is not None else None)
            for c in p.components
        )
        return Certificate(
            p, digest, case, (), tuple((c.id, c.nearest_binding) for c in p.components), True, outcomes,
            tags=("bounds-own-binding",),
        )

    base = ob.page.dim
    labels = list(ob.bindings)
    taken = {c.id for c in ob.monodromy.curves()}
    steps: list[ScheduleStep] = []
    homology = {c.id: list(c.curve.homology) for c in p.components}
    tb = {c.id: c.tb for c in p.components}
    rot = {c.id: c.rot for c in p.components}
    neg = {c.id: 0 for c in p.components}
    sub_map: dict[str, str] = {}

    def fresh() -> str:
        label = fresh_binding_labels(labels)[0]
        labels.append(label)
        return label

    def emit(kind: str, target: str | None, feet: str, own: list[int], depends: list[int], pushed=()) -> ScheduleStep:
        index = len(steps) + 1
        vec = own + [0] * (base + index - len(own))
        vec[base + index - 1] += 1
        kind_name = "stabilization-curve" if kind == PUSHOFF else "boundary-parallel"
        cid = _stab_curve_id(index, taken)
        taken.add(cid)
        dep = tuple(sorted(depends))
        step = ScheduleStep(
            index, kind, target, feet, CurveRef(cid, tuple(vec), kind_name), fresh(), dep,
            tuple(i for i in range(1, index) if i not in dep), tuple(pushed),
        )
        steps.append(step)
        return step

    for members in p.classes().values():
        if len(members) == 1:
            m = members[0]
            step = emit(PUSHOFF, m.id, m.nearest_binding, homology[m.id], [])
            sub_map[m.id] = step.creates
            continue

        if case.planar is False and not all(_is_meridional(m, ob.page.genus) for m in members):
            if "remark-extension" not in tags:
                tags.append("remark-extension")
        order = members if members[0].orientation == 1 else members[::-1]
        current = min((m.nearest_binding for m in members), key=binding_sort_key)
        class_steps: list[int] = []
        processed: list[LinkComponent] = []
        for m in order:
            if processed and m.orientation != processed[-1].orientation:
                pushed = [q.id for q in processed] + [m.id]
                aux = emit(AUX, None, current, [], class_steps, pushed)
                class_steps.append(aux.index)
                current = aux.creates
                coord = base + aux.index - 1
                for q in pushed:
                    h = homology[q]
                    h.extend([0] * (coord + 1 - len(h)))
                    h[coord] += 1
                    neg[q] += 1
                    if tb[q] is not None:
                        tb[q] -= 1
                        rot[q] -= 1
            step = emit(PUSHOFF, m.id, current, homology[m.id], class_steps)
            class_steps.append(step.index)
            sub_map[m.id] = step.creates
            processed.append(m)

    outcomes = tuple(
        ComponentOutcome(
            c.id, sub_map[c.id], neg[c.id], tb[c.id], rot[c.id],
            tb[c.id] - rot[c.id] if tb[c.id] is not None else None,
        )
        for c in p.components
    )
    order_free = all(not s.depends_on for s in steps)
    return Certificate(
        p, digest, case, tuple(steps), tuple((c.id, sub_map[c.id]) for c in p.components), order_free,
        outcomes, tags=tuple(tags),
    )


def apply_schedule(p: LinkPlacement, cert: Certificate) -> tuple[OpenBook, Certificate]:
    """Replay ``cert`` on ``p``'s open book; fill (or verify) the ledger and mark the sub-binding."""
    if _placement_digest(p) != cert.placement_digest:
        raise ReplayError("certificate was not built from this placement")
    ob = p.open_book
    comps = {c.id: c for c in p.components}
    homs = {c.id: c.curve.homology for c in p.components}
    reachable: dict[str, set[str]] = {}
    for members in p.classes().values():
        declared = {m.nearest_binding for m in members}
        for m in members:
            reachable[m.id] = set(declared)
    class_of = {c.id: c.parallel_class for c in p.components}
    ledger = [ledger_row(0, ob)]

    for step in cert.steps:
        if len(step.twist_curve.homology) != ob.page.dim + 1:
            raise ReplayError(f"step {step.index}: twist curve does not fit the page")
        if step.kind == PUSHOFF:
            K = comps.get(step.target_component or "")
            if K is None:
                raise ReplayError(f"step {step.index}: unknown component {step.target_component!r}")
            if step.feet not in reachable[K.id]:
                raise ReplayError(f"step {step.index}: no recorded arc from {step.feet!r} to {K.id!r}")
            K = replace(K, nearest_binding=step.feet, curve=replace(K.curve, homology=homs[K.id]))
            ob, move = _crucial_step(ob, K, step.feet, step.twist_curve.id, step.creates)
            if move.curve != step.twist_curve:
                raise ReplayError(f"step {step.index}: twist curve differs from the crucial-step curve")
        elif step.kind == AUX:
            if step.twist_curve.kind != "boundary-parallel":
                raise ReplayError(f"step {step.index}: auxiliary twist curve must be boundary-parallel")
            ob, move = positive_stabilize(ob, SameBoundary(step.feet), step.twist_curve, step.creates)
        else:
            raise ReplayError(f"step {step.index}: unknown step kind {step.kind!r}")
        for cid, h in homs.items():
            homs[cid] = apply_matrix(move.embedding, h)
        if step.kind == AUX:
            coord = ob.page.dim - 1
            klass = None
            for q in step.pushed:
                h = list(homs[q])
                h[coord] += 1
                homs[q] = tuple(h)
                klass = class_of[q]
            for cid, k in class_of.items():
                if k == klass:
                    reachable[cid].add(step.creates)
        ledger.append(ledger_row(step.index, ob))

    if cert.ledger and tuple(cert.ledger) != tuple(ledger):
        raise ReplayError("ledger replay mismatch")
    marks = [b for _, b in cert.sub_binding_map]
    missing = set(marks) - set(ob.bindings)
    if missing:
        raise ReplayError(f"sub-binding labels {sorted(missing)} were never created")
    return ob.with_marks(marks), replace(cert, ledger=tuple(ledger))


def certificate_violations(cert: Certificate) -> list[str]:
    """Structural invariants every certificate must satisfy (empty when sound)."""
    out: list[str] = []
    for s in cert.steps:
        prior = set(range(1, s.index))
        dep, dis = set(s.depends_on), set(s.disjoint_from)
        if dep & dis:
            out.append(f"step {s.index}: steps {sorted(dep & dis)} both dependent and disjoint")
        if dep | dis != prior:
            out.append(f"step {s.index}: prior steps not all classified")
        if s.kind not in STEP_KINDS:
            out.append(f"step {s.index}: unknown kind {s.kind!r}")
    if [s.index for s in cert.steps] != list(range(1, len(cert.steps) + 1)):
        out.append("step numbering is not 1..n")
    if cert.order_free != all(not s.depends_on for s in cert.steps):
        out.append("order_free flag disagrees with dependencies")
    ids = [c.id for c in cert.placement.components]
    mapped = dict(cert.sub_binding_map)
    if sorted(mapped) != sorted(ids) or len(set(mapped.values())) != len(mapped):
        out.append("sub-binding map is not a bijection onto distinct bindings")
    if cert.steps:
        created = {s.creates for s in cert.steps if s.kind == PUSHOFF}
        if set(mapped.values()) != created:
            out.append("sub-binding map does not match the bindings created by push-off steps")
        if cert.pushoff_count != len(ids):
            out.append(f"{cert.pushoff_count} push-off steps for {len(ids)} components")
    if cert.ledger:
        if len(cert.ledger) != len(cert.steps) + 1:
            out.append("ledger length differs from step count + 1")
        first, last = cert.ledger[0], cert.ledger[-1]
        if any(r.genus != first.genus for r in cert.ledger):
            out.append("genus changes along the ledger")
        if last.boundary_count != first.boundary_count + len(cert.steps):
            out.append("boundary growth differs from step count")
        for a, b in zip(cert.ledger, cert.ledger[1:]):
            if b.word_length != a.word_length + 1 or b.euler_char != a.euler_char - 1:
                out.append(f"ledger row {b.step} is not one stabilization after row {a.step}")
        if any(r.euler_char != 2 - 2 * r.genus - r.boundary_count for r in cert.ledger):
            out.append("ledger euler characteristic inconsistent")
    return out


@dataclass(frozen=True)
class PermutationReport:
    accepted: bool
    equal: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.accepted and self.equal


def _replay_order(ob: OpenBook, cert: Certificate, order: Sequence[int]) -> tuple[np.ndarray, list[tuple], OpenBook]:
    base = ob.page.dim
    position = {s: q for q, s in enumerate(order)}
    rows = [ledger_row(0, ob).shape()]
    for q, s in enumerate(order):
        step = cert.step(s)
        v = step.twist_curve.homology
        moved = [0] * (base + q + 1)
        moved[:base] = v[:base]
        for t in range(1, s + 1):
            x = v[base + t - 1]
            if x:
                if position[t] > q:
                    raise ReplayError(f"step {s} uses the handle of step {t}, which comes later")
                moved[base + position[t]] += x
        curve = replace(step.twist_curve, homology=tuple(moved))
        ob, _ = positive_stabilize(ob, SameBoundary(step.feet), curve, step.creates)
        rows.append(ledger_row(0, ob).shape())
    m = monodromy_homology_action(ob)
    # back to canonical coordinates: replay coordinate base + position[t] holds step t's handle
    sigma = list(range(base)) + [base + position[t] for t in range(1, len(order) + 1)]
    return m[np.ix_(sigma, sigma)], rows, ob


def permute_and_check(ob: OpenBook, cert: Certificate, perm: Sequence[int]) -> PermutationReport:
    """Replay the steps in the order ``perm`` (1-based step indices) and compare with the canonical replay.

    A permutation that breaks a ``depends_on`` constraint is reported and not replayed.
    """
    n = len(cert.steps)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{list(perm)} is not a permutation of 1..{n}")
    if ob != cert.placement.open_book:
        raise ValueError("open book differs from the certificate's input")
    position = {s: q for q, s in enumerate(perm)}
    violations = tuple(
        f"step {s} must follow step {d}"
        for s in perm
        for d in cert.step(s).depends_on
        if position[d] > position[s]
    )
    if violations:
        return PermutationReport(False, False, violations)
    canon_m, canon_rows, _ = _replay_order(ob, cert, list(range(1, n + 1)))
    try:
        m, rows, _ = _replay_order(ob, cert, perm)
    except ReplayError as exc:
        return PermutationReport(False, False, (str(exc),))
    return PermutationReport(True, bool(np.array_equal(m, canon_m)) and rows == canon_rows)


def all_permutations_agree(cert: Certificate, limit: int = 4) -> bool:
    if len(cert.steps) > limit:
        raise ValueError(f"{len(cert.steps)} steps exceed the exhaustive limit {limit}")
    ob = cert.placement.open_book
    return all(permute_and_check(ob, cert, perm) for perm in permutations(range(1, len(cert.steps) + 1)))


def violating_permutation(cert: Certificate) -> tuple[int, ...] | None:
    """A permutation swapping one dependent pair, or ``None`` if no step depends on another."""
    for s in cert.steps:
        if s.depends_on:
            d = s.depends_on[-1]
            order = list(range(1, len(cert.steps) + 1))
            order[d - 1], order[s.index - 1] = order[s.index - 1], order[d - 1]
            return tuple(order)
    return None


def pushoff(p: LinkPlacement) -> tuple[OpenBook, Certificate]:
    """``build_schedule`` followed by ``apply_schedule``."""
    cert = build_schedule(p)
    return apply_schedule(p, cert)
