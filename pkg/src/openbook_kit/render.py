"""
Deterministic SVG diagrams of pages, placements and certificates.

The drawing is schematic: boundary components sit in a row along the
bottom, each genus handle is a pair of feet joined by an arch along the
top.  Curves supported on boundary classes are drawn as rings around the
binding they were placed near; curves running over handles are drawn as
loops around the feet of the first handle they use.  Every element carries
a ``class`` attribute (``boundary``, ``handle``, ``link``, ``arrow``,
``twist``, ``stabilization``) so drawings can be inspected mechanically.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Any

from .approx import SgCertificate
from .errors import UnsupportedDocumentError
from .legendrian import LinkPlacement
from .openbook import OpenBook
from .pushoff import Certificate
from .surface import CurveRef, Surface

SVG_NS = "http://www.w3.org/2000/svg"

_R = 28.0
_GAP = 110.0
_FOOT = 11.0
_MARGIN = 60.0


def _f(x: float) -> str:
    return f"{x:.2f}"


class _Canvas:
    def __init__(self, page: Surface, bindings: tuple[str, ...]) -> None:
        self.page = page
        self.bindings = bindings
        columns = max(page.boundary_count, 2 * page.genus, 1)
        self.width = 2 * _MARGIN + _GAP * columns
        self.height = 360.0
        self.root = ET.Element("svg", {
            "xmlns": SVG_NS,
            "width": _f(self.width),
            "height": _f(self.height),
            "viewBox": f"0 0 {_f(self.width)} {_f(self.height)}",
        })
        self.layers = {name: ET.SubElement(self.root, "g", {"id": name}) for name in
                       ("page", "boundaries", "handles", "links", "stabilizations")}
        self.rings: dict[str, int] = {}

    def boundary_center(self, label: str) -> tuple[float, float]:
        i = self.bindings.index(label)
        return (_MARGIN + _GAP * (i + 0.5), 270.0)

    def foot_centers(self, handle: int) -> tuple[tuple[float, float], tuple[float, float]]:
        x = _MARGIN + _GAP * (2 * handle + 0.5)
        return (x, 110.0), (x + _GAP, 110.0)

    def draw_page(self) -> None:
        ET.SubElement(self.layers["page"], "rect", {
            "class": "page", "x": _f(_MARGIN / 3), "y": _f(_MARGIN / 3),
            "width": _f(self.width - 2 * _MARGIN / 3), "height": _f(self.height - 2 * _MARGIN / 3),
            "rx": "24.00", "fill": "none", "stroke": "#888",
        })
        for label in self.bindings:
            x, y = self.boundary_center(label)
            g = ET.SubElement(self.layers["boundaries"], "g", {"class": "boundary", "data-label": label})
            ET.SubElement(g, "circle", {"cx": _f(x), "cy": _f(y), "r": _f(_R), "fill": "#eee", "stroke": "#000"})
            ET.SubElement(g, "text", {"x": _f(x), "y": _f(y + 4), "text-anchor": "middle",
                                      "font-size": "12"}).text = label
        for h in range(self.page.genus):
            (x1, y1), (x2, y2) = self.foot_centers(h)
            g = ET.SubElement(self.layers["handles"], "g", {"class": "handle", "data-handle": str(h + 1)})
            for x, y in ((x1, y1), (x2, y2)):
                ET.SubElement(g, "circle", {"cx": _f(x), "cy": _f(y), "r": _f(_FOOT), "fill": "#fff",
                                            "stroke": "#000"})
            ET.SubElement(g, "path", {
                "d": f"M {_f(x1)} {_f(y1 - _FOOT)} C {_f(x1)} {_f(y1 - 70)} {_f(x2)} {_f(y2 - 70)} "
                     f"{_f(x2)} {_f(y2 - _FOOT)}",
                "fill": "none", "stroke": "#000",
            })

    def _first_handle(self, curve: CurveRef) -> int | None:
        for h in range(self.page.genus):
            if curve.homology[2 * h] or curve.homology[2 * h + 1]:
                return h
        return None

    def loop(self, layer: str, cls: str, curve: CurveRef, anchor: str, direction: int,
             label: str | None = None, dashed: bool = False) -> None:
        """Draw ``curve`` as a closed loop with an arrow showing ``direction``."""
        h = self._first_handle(curve) if len(curve.homology) == self.page.dim else None
        key = f"h{h}" if h is not None else anchor
        ring = self.rings.get(key, 0) + 1
        self.rings[key] = ring
        if h is None:
            cx, cy = self.boundary_center(anchor)
            rx = ry = _R + 8.0 * ring
        else:
            (x1, y1), (x2, _) = self.foot_centers(h)
            cx, cy = (x1 + x2) / 2, y1
            rx, ry = (x2 - x1) / 2 + _FOOT + 6.0 * ring, _FOOT + 6.0 * ring
        g = ET.SubElement(self.layers[layer], "g", {"class": cls, "data-id": curve.id})
        attrs = {"cx": _f(cx), "cy": _f(cy), "rx": _f(rx), "ry": _f(ry), "fill": "none",
                 "stroke": "#c00" if cls == "link" else "#06c"}
        if dashed:
            attrs["stroke-dasharray"] = "4 3"
        ET.SubElement(g, "ellipse", attrs)
        # arrow on top of the loop, pointing right for +1 and left for -1
        ax, ay = cx, cy - ry
        tip = 6.0 * direction
        ET.SubElement(g, "polygon", {
            "class": "arrow",
            "points": f"{_f(ax + tip)},{_f(ay)} {_f(ax - tip)},{_f(ay - 4)} {_f(ax - tip)},{_f(ay + 4)}",
            "fill": attrs["stroke"],
        })
        if label is not None:
            ET.SubElement(g, "text", {"x": _f(cx + rx + 3), "y": _f(cy - 3), "font-size": "11"}).text = label

    def to_string(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _open_book(c: _Canvas, ob: OpenBook, label_twists: bool = True) -> None:
    c.draw_page()
    for t in ob.monodromy.curves():
        anchor = _nearest_boundary(ob, t)
        c.loop("stabilizations", "twist", t, anchor, 1, t.id if label_twists else None, dashed=True)


def _nearest_boundary(ob: OpenBook, curve: CurveRef) -> str:
    for label in ob.bindings:
        cls = ob.binding_class(label)
        if tuple(curve.homology) in (cls, tuple(-x for x in cls)):
            return label
    return ob.bindings[0]


def _placement(c: _Canvas, p: LinkPlacement) -> None:
    _open_book(c, p.open_book)
    for k in p.components:
        c.loop("links", "link", k.curve, k.nearest_binding, k.orientation, k.id)


def render_svg(obj: Any) -> str:
    """SVG text for an open book, placement or certificate; identical input gives identical bytes."""
    if isinstance(obj, OpenBook):
        c = _Canvas(obj.page, obj.bindings)
        _open_book(c, obj)
    elif isinstance(obj, LinkPlacement):
        c = _Canvas(obj.open_book.page, obj.open_book.bindings)
        _placement(c, obj)
    elif isinstance(obj, Certificate):
        p = obj.placement
        c = _Canvas(p.open_book.page, p.open_book.bindings)
        _placement(c, p)
        base = p.open_book.page.dim
        for s in obj.steps:
            curve = CurveRef(s.twist_curve.id, s.twist_curve.homology[:base], s.twist_curve.kind)
            c.loop("stabilizations", "stabilization", curve, s.feet if s.feet in p.open_book.bindings
                   else p.open_book.bindings[0], 1, s.twist_curve.id, dashed=True)
    else:
        kind = "sg_certificate" if isinstance(obj, SgCertificate) else type(obj).__name__
        raise UnsupportedDocumentError(f"cannot render a {kind} document (open_book, placement or certificate only)")
    return c.to_string()
