"""
Support-genus upper bounds for Legendrian and transverse links.

Support genus is only ever certified from above: a certificate carries a
witness open book whose page genus is the bound, plus the chain of moves
that produced it so the witness can be rebuilt and compared.

No operation here raises ``framing_offset``; the only way to lower it
without changing genus is :func:`decrease_contact_framing`, which pushes the
component over a fresh boundary-parallel stabilization handle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from .errors import FramingError, PlacementError, ReplayError
from .legendrian import LinkComponent, LinkPlacement, require_valid, stabilize_legendrian
from .openbook import OpenBook, positive_stabilize
from .pushoff import Certificate, apply_schedule, build_schedule, pushoff
from .surface import CurveRef, SameBoundary

LEGENDRIAN = "legendrian"
TRANSVERSE = "transverse"

# the transverse isotopy class of a binding survives a boundary-parallel
# stabilization along it; this is quoted, not checked
ASSUME_BINDING_STABILIZATION = "assumes-binding-survives-stabilization"
ASSUME_PLANAR_WITNESS = "assumes-planar-witness-for-loose-knot"


@dataclass(frozen=True)
class ProvenanceStep:
    """One link in a certificate's provenance chain.

    ``approximation``: ``open_book`` + ``marks`` (+ ``invariants`` and
    ``framing_drop`` per mark) rebuild ``placement``.  ``framing``: ``placement`` + ``framing_drop`` per
    component id rebuild the input of the next step.  ``pushoff``:
    ``certificate`` replays to the next open book.
    """

    kind: str
    open_book: OpenBook | None = None
    marks: tuple[str, ...] = ()
    placement: LinkPlacement | None = None
    framing_drop: tuple[tuple[str, int], ...] = ()
    certificate: Certificate | None = None
    invariants: tuple[tuple[str, int, int], ...] = ()

    def invariant_map(self) -> dict[str, tuple[int, int]]:
        return {m: (tb, rot) for m, tb, rot in self.invariants}


@dataclass(frozen=True)
class SgCertificate:
    kind: str
    link_digest: str
    genus_upper_bound: int
    open_book: OpenBook
    placement: LinkPlacement | None = None
    provenance: tuple[ProvenanceStep, ...] = ()
    tags: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in (LEGENDRIAN, TRANSVERSE):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.genus_upper_bound != self.open_book.page.genus:
            raise ValueError(
                f"bound {self.genus_upper_bound} differs from witness genus {self.open_book.page.genus}"
            )
        if self.kind == TRANSVERSE:
            if not self.open_book.sub_binding_marks:
                raise ValueError("transverse witness must mark the link as a sub-binding")
            if self.placement is not None:
                raise ValueError("transverse witness carries no placement")
        else:
            if self.placement is None or self.placement.open_book != self.open_book:
                raise ValueError("Legendrian witness needs a placement on the witness open book")
            if any(c.framing_offset != 0 for c in self.placement.components):
                raise ValueError("Legendrian witness must sit on the page with framing offset 0")


def _digest(obj) -> str:
    from .interchange import digest

    return digest(obj)


def transverse_witness(ob: OpenBook, marks=None, tags: tuple[str, ...] = ()) -> SgCertificate:
    """Wrap an open book whose marked bindings are the transverse link."""
    if marks is not None:
        ob = ob.with_marks(marks)
    return SgCertificate(TRANSVERSE, _digest(ob), ob.page.genus, ob, tags=tags)


def _fresh_curve_id(ob: OpenBook, stem: str = "c") -> str:
    taken = {c.id for c in ob.monodromy.curves()}
    n = len(ob.monodromy) + 1
    name = f"{stem}{n}"
    while name in taken:
        name += "'"
    return name


def _boundary_parallel_stabilization(ob: OpenBook, binding: str):
    curve = CurveRef(_fresh_curve_id(ob), (0,) * ob.page.dim + (1,), "boundary-parallel")
    return positive_stabilize(ob, SameBoundary(binding), curve)


def approximate_subbinding(
    ob: OpenBook, marks=None, invariants: Mapping[str, tuple[int, int]] | None = None
) -> LinkPlacement:
    """Put a Legendrian approximation of each marked binding on a page of the same genus.

    With two or more boundary components each marked binding gets a parallel
    copy on the page, where page and contact framings agree.  With a single
    boundary component the book is first stabilized along it with a
    boundary-parallel curve.  ``invariants`` optionally supplies ``(tb, rot)``
    per marked binding; those components are then null-homologous.
    """
    marks = tuple(marks) if marks is not None else ob.sub_binding_marks
    if not marks:
        raise PlacementError("at least one marked binding is required")
    unknown = set(marks) - set(ob.bindings)
    if unknown:
        raise PlacementError(f"marks {sorted(unknown)} are not bindings")
    invariants = dict(invariants or {})
    if ob.page.boundary_count == 1:
        ob, _ = _boundary_parallel_stabilization(ob, ob.bindings[0])
    ob = ob.with_marks(marks)

    groups: list[tuple[tuple[int, ...], list[str]]] = []
    comps: list[LinkComponent] = []
    for label in ob.bindings:
        if label not in marks:
            continue
        u = ob.binding_class(label)
        neg = tuple(-x for x in u)
        for gi, (ref, members) in enumerate(groups):
            if ref in (u, neg):
                break
        else:
            gi = len(groups)
            groups.append((u, []))
        ref, members = groups[gi]
        members.append(label)
        tb_rot = invariants.get(label)
        comps.append(LinkComponent(
            id=f"L_{label}",
            curve=CurveRef(f"lambda_{label}", u, "boundary-parallel"),
            orientation=1 if u == ref else -1,
            parallel_class=f"P{gi + 1}",
            class_index=len(members),
            nearest_binding=label,
            framing_offset=0,
            null_homologous=tb_rot is not None,
            tb=tb_rot[0] if tb_rot else None,
            rot=tb_rot[1] if tb_rot else None,
        ))
    return LinkPlacement(ob, tuple(comps))


def decrease_contact_framing(p: LinkPlacement, id: str, n: int) -> LinkPlacement:
    """Lower a component's contact framing relative to the page by ``n`` at fixed genus.

    Each round stabilizes along the component's binding with a
    boundary-parallel curve and pushes the component over the new handle,
    which negatively stabilizes it.
    """
    if n < 0:
        raise FramingError("the contact framing can only be decreased (n must be >= 0)")
    for _ in range(n):
        c = p.component(id)
        ob, move = _boundary_parallel_stabilization(p.open_book, c.nearest_binding)
        comps = []
        for other in p.components:
            curve = other.curve.embedded(move.embedding)
            if other.id == id:
                curve = CurveRef(curve.id, curve.homology[:-1] + (curve.homology[-1] + 1,), "link-component",
                                 curve.orientation)
            comps.append(replace(other, curve=curve))
        p = _split_from_class(LinkPlacement(ob, tuple(comps)), id)
        p = stabilize_legendrian(p, id, -1)
        c = p.component(id)
        p = p.replace_component(replace(c, handle_passes=c.handle_passes + 1))
    return p


def _split_from_class(p: LinkPlacement, id: str) -> LinkPlacement:
    # a copy pushed over a handle is no longer parallel to its former class-mates
    c = p.component(id)
    mates = [m for m in p.classes()[c.parallel_class] if m.id != id]
    if not mates:
        return p
    reindex = {m.id: i for i, m in enumerate(mates, start=1)}
    comps = []
    for m in p.components:
        if m.id == id:
            m = replace(m, parallel_class=f"{m.parallel_class}/{id}", class_index=1)
        elif m.id in reindex:
            m = replace(m, class_index=reindex[m.id])
        comps.append(m)
    return replace(p, components=tuple(comps))


def realize_on_page(p: LinkPlacement, id: str) -> LinkPlacement:
    """Take the pushed-over curve as the component's page curve.

    After ``k`` handle passes the negatively stabilized component lies on the
    page with page framing equal to its contact framing, so the offset
    measured against its current curve is 0.  Only offsets produced by handle
    passes can be absorbed this way.
    """
    c = p.component(id)
    if c.framing_offset == 0 and c.handle_passes == 0:
        return p
    if c.handle_passes != -c.framing_offset:
        raise FramingError(
            f"component {id!r}: offset {c.framing_offset} was not produced by {c.handle_passes} handle passes"
        )
    return p.replace_component(replace(c, framing_offset=0, handle_passes=0))


def _apply_drops(p: LinkPlacement, drops: tuple[tuple[str, int], ...]) -> LinkPlacement:
    for cid, n in drops:
        p = realize_on_page(decrease_contact_framing(p, cid, n), cid)
    return p


def _normalize_drop(marks: tuple[str, ...], framing_drop) -> tuple[tuple[str, int], ...]:
    if isinstance(framing_drop, int):
        pairs = [(m, framing_drop) for m in marks]
    else:
        pairs = [(m, int(framing_drop.get(m, 0))) for m in marks]
        extra = set(framing_drop) - set(marks)
        if extra:
            raise PlacementError(f"framing drops for unmarked bindings {sorted(extra)}")
    if any(n < 0 for _, n in pairs):
        raise FramingError("the contact framing can only be decreased")
    return tuple((m, n) for m, n in pairs if n)


def legendrian_approximation(
    ob: OpenBook, marks=None, framing_drop: int | Mapping[str, int] = 0,
    invariants: Mapping[str, tuple[int, int]] | None = None,
) -> SgCertificate:
    """Legendrian certificate for approximations of the marked bindings at the same genus."""
    p = approximate_subbinding(ob, marks, invariants)
    marks = p.open_book.sub_binding_marks
    drops = _normalize_drop(marks, framing_drop)
    p = _apply_drops(p, tuple((f"L_{m}", n) for m, n in drops))
    tags = (ASSUME_BINDING_STABILIZATION,) if ob.page.boundary_count == 1 else ()
    inv = tuple((m, *invariants[m]) for m in marks if invariants and m in invariants)
    step = ProvenanceStep("approximation", open_book=ob, marks=marks, placement=p, framing_drop=drops,
                          invariants=inv)
    return SgCertificate(LEGENDRIAN, _digest(p), p.open_book.page.genus, p.open_book, p, (step,), tags)


def roundtrip_sg(
    t_cert: SgCertificate, framing_drop: int | Mapping[str, int] = 0,
    invariants: Mapping[str, tuple[int, int]] | None = None,
) -> tuple[SgCertificate, SgCertificate]:
    """Transverse bound -> Legendrian bound -> transverse bound, all at the witness genus."""
    if t_cert.kind != TRANSVERSE:
        raise ValueError("roundtrip starts from a transverse certificate")
    l_cert = legendrian_approximation(t_cert.open_book, None, framing_drop, invariants)
    ob2, cert = pushoff(l_cert.placement)
    t2 = SgCertificate(
        TRANSVERSE, _digest(ob2), ob2.page.genus, ob2, None,
        l_cert.provenance + (ProvenanceStep("pushoff", certificate=cert),), l_cert.tags,
    )
    return l_cert, t2


def loose_planar_pipeline(l: LinkPlacement, m: int = 0) -> SgCertificate:
    """Transverse push-off of a loose Legendrian on a planar page, after ``m`` extra negative stabilizations.

    The planar placement is the input witness for the Legendrian; it is not
    derived here.  Every component must carry ``loose=True`` and classical
    invariants.
    """
    if l.open_book.page.genus != 0:
        raise PlacementError("planar witness required")
    if m < 0:
        raise FramingError("the number of extra negative stabilizations must be >= 0")
    require_valid(l)
    for c in l.components:
        if c.loose is not True:
            raise PlacementError(f"loose flag required on component {c.id!r}")
        if not c.null_homologous:
            raise PlacementError(f"component {c.id!r} must be null-homologous")
    drops = tuple((c.id, m) for c in l.components if m)
    p = _apply_drops(l, drops)
    ob2, cert = pushoff(p)
    return SgCertificate(
        TRANSVERSE, _digest(ob2), ob2.page.genus, ob2, None,
        (ProvenanceStep("framing", placement=l, framing_drop=drops), ProvenanceStep("pushoff", certificate=cert)),
        (ASSUME_PLANAR_WITNESS,),
    )


def replay_provenance(sgc: SgCertificate) -> list[str]:
    """Rebuild the witness from the provenance chain; returns the mismatches found."""
    problems: list[str] = []
    placement: LinkPlacement | None = None
    ob: OpenBook | None = None
    for i, step in enumerate(sgc.provenance, start=1):
        try:
            if step.kind == "approximation":
                p = approximate_subbinding(step.open_book, step.marks, step.invariant_map())
                p = _apply_drops(p, tuple((f"L_{m}", n) for m, n in step.framing_drop))
                if p != step.placement:
                    problems.append(f"provenance {i}: approximation does not rebuild its placement")
                placement, ob = p, p.open_book
            elif step.kind == "framing":
                placement = _apply_drops(step.placement, step.framing_drop)
                ob = placement.open_book
            elif step.kind == "pushoff":
                cert = step.certificate
                if placement is not None and cert.placement != placement:
                    problems.append(f"provenance {i}: push-off input differs from the previous result")
                rebuilt = build_schedule(cert.placement)
                if rebuilt.steps != cert.steps or rebuilt.sub_binding_map != cert.sub_binding_map:
                    problems.append(f"provenance {i}: schedule does not rebuild")
                ob, _ = apply_schedule(cert.placement, cert)
                placement = None
            else:
                problems.append(f"provenance {i}: unknown kind {step.kind!r}")
        except (ReplayError, PlacementError, FramingError, ValueError) as exc:
            problems.append(f"provenance {i}: {exc}")
            return problems
    if sgc.provenance:
        if sgc.kind == LEGENDRIAN and placement != sgc.placement:
            problems.append("witness placement differs from the replayed one")
        if ob != sgc.open_book:
            problems.append("witness open book differs from the replayed one")
    if sgc.genus_upper_bound != sgc.open_book.page.genus:
        problems.append("bound differs from witness genus")
    return problems
