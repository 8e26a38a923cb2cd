"""
Open books as a page plus an ordered word of signed Dehn twists.

Composition convention: the word ``[(c1, s1), ..., (cn, sn)]`` stands for
``φ ∘ D_{c1}^{s1} ∘ ... ∘ D_{cn}^{sn}``, so stabilizing appends to the right.
Its homology action is the matrix product ``T1 · T2 · ... · Tn`` of the
transvections in word order (column-vector convention).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import CoCoreError, DimensionError
from .surface import (
    CurveRef,
    DifferentBoundaries,
    Feet,
    Matrix,
    SameBoundary,
    Surface,
    apply_matrix,
    attach_handle,
    identity_matrix,
    transvection_matrix,
)

_BINDING_RE = re.compile(r"^B(\d+)$")


@dataclass(frozen=True)
class Twist:
    curve: CurveRef
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class MonodromyWord:
    twists: tuple[Twist, ...] = ()

    def __len__(self) -> int:
        return len(self.twists)

    def __iter__(self):
        return iter(self.twists)

    def curves(self) -> tuple[CurveRef, ...]:
        """Distinct curves in order of first appearance."""
        seen: dict[str, CurveRef] = {}
        for t in self.twists:
            prev = seen.setdefault(t.curve.id, t.curve)
            if prev != t.curve:
                raise ValueError(f"curve id {t.curve.id!r} used for two different curves")
        return tuple(seen.values())

    def appended(self, curve: CurveRef, sign: int) -> "MonodromyWord":
        return MonodromyWord(self.twists + (Twist(curve, sign),))

    def embedded(self, embedding: Matrix) -> "MonodromyWord":
        return MonodromyWord(tuple(Twist(t.curve.embedded(embedding), t.sign) for t in self.twists))


@dataclass(frozen=True)
class OpenBook:
    page: Surface
    monodromy: MonodromyWord = field(default_factory=MonodromyWord)
    bindings: tuple[str, ...] = ()
    sub_binding_marks: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.bindings:
            object.__setattr__(self, "bindings", default_bindings(self.page.boundary_count))
        if len(self.bindings) != self.page.boundary_count:
            raise ValueError(
                f"{len(self.bindings)} binding labels for {self.page.boundary_count} boundary components"
            )
        if len(set(self.bindings)) != len(self.bindings):
            raise ValueError(f"duplicate binding labels in {self.bindings}")
        unknown = set(self.sub_binding_marks) - set(self.bindings)
        if unknown:
            raise ValueError(f"marks {sorted(unknown)} are not bindings")
        # keep marks in binding order so equal books compare equal
        marks = tuple(b for b in self.bindings if b in set(self.sub_binding_marks))
        object.__setattr__(self, "sub_binding_marks", marks)
        self.monodromy.curves()
        for t in self.monodromy:
            t.curve.check_on(self.page)

    @classmethod
    def trivial(cls, genus: int, boundary_count: int) -> "OpenBook":
        return cls(Surface.standard(genus, boundary_count))

    def binding_index(self, label: str) -> int:
        try:
            return self.bindings.index(label)
        except ValueError:
            raise KeyError(f"unknown binding {label!r}") from None

    def binding_class(self, label: str) -> tuple[int, ...]:
        return self.page.boundary_classes[self.binding_index(label)]

    def with_marks(self, marks: Iterable[str]) -> "OpenBook":
        return replace(self, sub_binding_marks=tuple(marks))


@dataclass(frozen=True)
class Stabilization:
    """What a stabilization did, enough to replay or undo it."""

    sign: int
    feet: Feet
    curve: CurveRef
    embedding: Matrix
    relabel: tuple[tuple[str, str], ...]
    new_binding: str
    preserves_contact: bool

    def relabel_map(self) -> dict[str, str]:
        return dict(self.relabel)


def default_bindings(n: int) -> tuple[str, ...]:
    return tuple(f"B{i}" for i in range(1, n + 1))


def fresh_binding_labels(bindings: Sequence[str], count: int = 1) -> tuple[str, ...]:
    """Next ``count`` labels ``B<n>`` above every numbered binding in use."""
    top = max((int(m.group(1)) for b in bindings if (m := _BINDING_RE.match(b))), default=0)
    out = []
    n = top
    while len(out) < count:
        n += 1
        if f"B{n}" not in bindings:
            out.append(f"B{n}")
    return tuple(out)


def binding_sort_key(label: str) -> tuple:
    m = _BINDING_RE.match(label)
    return (0, int(m.group(1)), label) if m else (1, 0, label)


def _resolve_feet(ob: OpenBook, feet: Feet) -> Feet:
    def idx(x: int | str) -> int:
        return ob.binding_index(x) if isinstance(x, str) else x

    if isinstance(feet, SameBoundary):
        return SameBoundary(idx(feet.j))
    if isinstance(feet, DifferentBoundaries):
        return DifferentBoundaries(idx(feet.j), idx(feet.k))
    raise TypeError(f"unknown feet {feet!r}")


def _stabilize(ob: OpenBook, feet: Feet, c: CurveRef, sign: int, new_label: str | None) -> tuple[OpenBook, Stabilization]:
    resolved = _resolve_feet(ob, feet)
    att = attach_handle(ob.page, resolved)
    page = att.surface
    if len(c.homology) != page.dim:
        raise DimensionError(
            f"stabilization curve {c.id!r} has length {len(c.homology)}; new page has {page.dim} coordinates"
        )
    c.check_on(page)
    coeff = c.homology[page.index(att.new_label)]
    if abs(coeff) != 1:
        raise CoCoreError(
            f"curve {c.id!r} has coefficient {coeff} on {att.new_label}; it must cross the co-core exactly once"
        )
    label = new_label or fresh_binding_labels(ob.bindings)[0]
    if label in ob.bindings:
        raise ValueError(f"binding label {label!r} already in use")

    if isinstance(resolved, SameBoundary):
        bindings = ob.bindings + (label,)
        relabel = tuple((b, b) for b in ob.bindings)
        marks = ob.sub_binding_marks
    else:
        j, k = resolved.j, resolved.k
        lo = min(j, k)
        bindings = tuple(
            label if i == lo else b for i, b in enumerate(ob.bindings) if i not in (j, k) or i == lo
        )
        relabel = tuple((b, label if i in (j, k) else b) for i, b in enumerate(ob.bindings))
        merged = {ob.bindings[j], ob.bindings[k]}
        marks = tuple(m for m in ob.sub_binding_marks if m not in merged)

    word = ob.monodromy.embedded(att.embedding).appended(c, sign)
    new_ob = OpenBook(page, word, bindings, marks)
    move = Stabilization(sign, resolved, c, att.embedding, relabel, label, sign > 0)
    return new_ob, move


def positive_stabilize(
    ob: OpenBook, feet: Feet, c: CurveRef, new_label: str | None = None
) -> tuple[OpenBook, Stabilization]:
    """Attach a 1-handle and append a right-handed twist along ``c``.

    ``c`` lives on the new page and must have coefficient ±1 on the label the
    handle introduces.  Feet may name bindings by label or by index.
    """
    return _stabilize(ob, feet, c, 1, new_label)


def negative_stabilize(
    ob: OpenBook, feet: Feet, c: CurveRef, new_label: str | None = None
) -> tuple[OpenBook, Stabilization]:
    """As :func:`positive_stabilize` with a left-handed twist.

    The returned move has ``preserves_contact=False``: the supported contact
    structure may change.
    """
    return _stabilize(ob, feet, c, -1, new_label)


def destabilize(ob: OpenBook, move: Stabilization) -> OpenBook:
    """Undo a same-boundary stabilization: drop the last twist and the handle."""
    if not isinstance(move.feet, SameBoundary):
        raise NotImplementedError("only same-boundary stabilizations can be undone")
    if not ob.monodromy.twists or ob.monodromy.twists[-1] != _twist_of(move):
        raise ValueError("the last twist of the word is not this move's twist")
    if ob.bindings[-1] != move.new_binding:
        raise ValueError("the last binding was not created by this move")
    page = ob.page
    n = page.dim - 1
    classes = list(page.boundary_classes[:-1])
    classes = [cls[:n] for cls in classes]
    old_page = Surface(page.genus, page.boundary_count - 1, page.basis[:n], tuple(classes))
    word = MonodromyWord(
        tuple(Twist(replace(t.curve, homology=t.curve.homology[:n]), t.sign) for t in ob.monodromy.twists[:-1])
    )
    marks = tuple(m for m in ob.sub_binding_marks if m != move.new_binding)
    return OpenBook(old_page, word, ob.bindings[:-1], marks)


def _twist_of(move: Stabilization) -> Twist:
    return Twist(move.curve, move.sign)


def word_matrix(page: Surface, twists: Iterable[Twist]) -> np.ndarray:
    n = page.dim
    m = np.array(identity_matrix(n), dtype=object).reshape(n, n)
    for t in twists:
        m = m.dot(np.array(transvection_matrix(page, t.curve.homology, t.sign), dtype=object).reshape(n, n))
    return m


def monodromy_homology_action(ob: OpenBook) -> np.ndarray:
    """Integer matrix of the monodromy word acting on the page's first homology."""
    return word_matrix(ob.page, ob.monodromy)


def embed_vector(move: Stabilization, v: Sequence[int]) -> tuple[int, ...]:
    return apply_matrix(move.embedding, v)
