"""
Legendrian links sitting on a page, with classical-invariant bookkeeping.

Stabilization: ``tb -> tb - 1`` and ``rot -> rot ± 1``.
Transverse push-off: ``sl(T±) = tb ∓ rot``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .errors import PlacementError
from .openbook import OpenBook
from .surface import CurveRef, intersection


@dataclass(frozen=True)
class LinkComponent:
    """One component of a Legendrian link placed on a page.

    ``orientation`` is relative to the reference direction shared by the
    component's parallel class; ``class_index`` counts from the innermost
    copy (1) outward.  ``framing_offset`` is contact framing minus page
    framing of the curve the component was last realized on;
    ``handle_passes`` counts stabilization handles it has been pushed over
    since then.
    """

    id: str
    curve: CurveRef
    orientation: int
    parallel_class: str
    class_index: int
    nearest_binding: str
    framing_offset: int = 0
    null_homologous: bool = False
    tb: int | None = None
    rot: int | None = None
    loose: bool | None = None
    handle_passes: int = 0


@dataclass(frozen=True)
class LinkPlacement:
    open_book: OpenBook
    components: tuple[LinkComponent, ...]

    def component(self, id: str) -> LinkComponent:
        for c in self.components:
            if c.id == id:
                return c
        raise KeyError(f"unknown component {id!r}")

    def replace_component(self, new: LinkComponent) -> "LinkPlacement":
        self.component(new.id)
        return replace(self, components=tuple(new if c.id == new.id else c for c in self.components))

    def classes(self) -> dict[str, list[LinkComponent]]:
        """Parallel classes in order of first appearance, members by class_index."""
        out: dict[str, list[LinkComponent]] = {}
        for c in self.components:
            out.setdefault(c.parallel_class, []).append(c)
        for members in out.values():
            members.sort(key=lambda c: c.class_index)
        return out


@dataclass(frozen=True)
class TransverseComponent:
    id: str
    sl: int | None = None
    loose: bool | None = None


@dataclass(frozen=True)
class TransverseLinkRecord:
    components: tuple[TransverseComponent, ...]


def stabilize_legendrian(p: LinkPlacement, id: str, sign: int) -> LinkPlacement:
    """Stabilize one component; stabilizations of one component commute."""
    if sign not in (1, -1):
        raise ValueError(f"stabilization sign must be +1 or -1, got {sign}")
    c = p.component(id)
    if c.tb is None:
        new = replace(c, framing_offset=c.framing_offset - 1)
    else:
        new = replace(c, framing_offset=c.framing_offset - 1, tb=c.tb - 1, rot=c.rot + sign)
    return p.replace_component(new)


def pushoff_sl(tb: int, rot: int, sign: int = 1) -> int:
    return tb - rot if sign > 0 else tb + rot


def pushoff_invariants(p: LinkPlacement, id: str, sign: int = 1) -> int:
    """Self-linking number of the positive (``sign=+1``) or negative push-off."""
    if sign not in (1, -1):
        raise ValueError(f"push-off sign must be +1 or -1, got {sign}")
    c = p.component(id)
    if c.tb is None or c.rot is None:
        raise PlacementError(f"component {id!r} has no classical invariants")
    return pushoff_sl(c.tb, c.rot, sign)


def transverse_record(p: LinkPlacement) -> TransverseLinkRecord:
    return TransverseLinkRecord(tuple(
        TransverseComponent(c.id, pushoff_sl(c.tb, c.rot) if c.tb is not None else None, c.loose)
        for c in p.components
    ))


@dataclass(frozen=True)
class Violation:
    component: str
    rule: str
    detail: str = ""

    def __str__(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.component}: {self.rule}{tail}"


def validate_placement(p: LinkPlacement) -> list[Violation]:
    out: list[Violation] = []
    ob = p.open_book
    page = ob.page
    if not p.components:
        out.append(Violation("-", "empty-link", "placement has no components"))
        return out

    seen: set[str] = set()
    for c in p.components:
        if c.id in seen:
            out.append(Violation(c.id, "duplicate-id"))
        seen.add(c.id)
        if c.nearest_binding not in ob.bindings:
            out.append(Violation(c.id, "unknown-binding", c.nearest_binding))
        if c.orientation not in (1, -1):
            out.append(Violation(c.id, "orientation", f"{c.orientation} is not ±1"))
        if len(c.curve.homology) != page.dim:
            out.append(Violation(c.id, "dimension", f"{len(c.curve.homology)} != {page.dim}"))
            continue
        if c.curve.kind not in ("link-component", "boundary-parallel"):
            out.append(Violation(c.id, "curve-kind", c.curve.kind))
        if c.curve.kind == "boundary-parallel" and not page.is_boundary_supported(c.curve.homology):
            out.append(Violation(c.id, "boundary-parallel-support"))
        has = (c.tb is not None, c.rot is not None)
        if c.null_homologous and not all(has):
            out.append(Violation(c.id, "missing-invariants", "null-homologous component needs tb and rot"))
        if not c.null_homologous and any(has):
            out.append(Violation(c.id, "invariants-without-null-homology"))
        if c.handle_passes < 0:
            out.append(Violation(c.id, "handle-passes", str(c.handle_passes)))
        if c.loose is not None and not isinstance(c.loose, bool):
            out.append(Violation(c.id, "loose-flag", repr(c.loose)))
    if any(v.rule == "dimension" for v in out):
        return out

    for name, members in p.classes().items():
        idx = [m.class_index for m in members]
        if idx != list(range(1, len(members) + 1)):
            out.append(Violation(members[0].id, "class-index", f"class {name} has indices {idx}"))
        ref = _reference(members[0])
        for m in members[1:]:
            if _reference(m) != ref:
                out.append(Violation(m.id, "not-parallel", f"homology differs from class {name}"))

    comps = p.components
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            x, y = comps[i], comps[j]
            if intersection(page, x.curve.homology, y.curve.homology) != 0:
                out.append(Violation(x.id, "intersects", f"nonzero algebraic intersection with {y.id}"))
            if (
                page.genus == 0
                and x.parallel_class != y.parallel_class
                and any(x.curve.homology)
                and _reference(x) in (_reference(y), _neg(_reference(y)))
            ):
                out.append(Violation(x.id, "parallel-across-classes", f"homologous to {y.id} on a planar page"))
    return out


def _reference(c: LinkComponent) -> tuple[int, ...]:
    return tuple(c.orientation * x for x in c.curve.homology)


def _neg(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(-x for x in v)


def require_valid(p: LinkPlacement) -> None:
    violations = validate_placement(p)
    if violations:
        raise PlacementError("invalid placement: " + "; ".join(map(str, violations)), violations)


def orientation_reversals(members: list[LinkComponent]) -> int:
    return sum(1 for a, b in zip(members, members[1:]) if a.orientation != b.orientation)
