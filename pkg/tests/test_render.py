from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from openbook_kit.approx import transverse_witness
from openbook_kit.errors import UnsupportedDocumentError
from openbook_kit.generate import build_placement
from openbook_kit.legendrian import LinkComponent, LinkPlacement
from openbook_kit.openbook import OpenBook
from openbook_kit.pushoff import pushoff
from openbook_kit.render import render_svg
from openbook_kit.surface import CurveRef

NS = {"svg": "http://www.w3.org/2000/svg"}


def count(svg: str, cls: str) -> int:
    root = ET.fromstring(svg)
    return sum(1 for e in root.iter() if e.get("class") == cls)


def test_disk():
    svg = render_svg(OpenBook.trivial(0, 1))
    assert count(svg, "boundary") == 1
    assert count(svg, "handle") == 0


def test_torus_with_one_link():
    ob = OpenBook.trivial(1, 2)
    p = LinkPlacement(ob, (LinkComponent("K1", CurveRef("k1", (1, 0, 0)), 1, "P1", 1, "B1"),))
    svg = render_svg(p)
    assert count(svg, "boundary") == 2
    assert count(svg, "handle") == 1
    assert count(svg, "link") == 1
    assert count(svg, "arrow") == 1


def test_certificate_labels_every_step():
    p = build_placement(0, [(1, 1, -1)])
    _, cert = pushoff(p)
    svg = render_svg(cert)
    root = ET.fromstring(svg)
    labels = [e.find("svg:text", NS).text for e in root.iter() if e.get("class") == "stabilization"]
    assert labels == [f"c{i}" for i in range(1, len(cert.steps) + 1)]
    assert count(svg, "link") == 3


def test_orientation_arrows_point_both_ways():
    svg = render_svg(build_placement(0, [(1, -1)]))
    root = ET.fromstring(svg)
    tips = []
    for poly in (e for e in root.iter() if e.get("class") == "arrow"):
        xs = [float(p.split(",")[0]) for p in poly.get("points").split()]
        tips.append(xs[0] > xs[1])
    assert tips == [True, False]


def test_deterministic():
    p = build_placement(2, [(1, -1), (1,)])
    assert render_svg(p) == render_svg(build_placement(2, [(1, -1), (1,)]))


def test_unsupported_kind():
    with pytest.raises(UnsupportedDocumentError):
        render_svg(transverse_witness(OpenBook.trivial(0, 2), ["B1"]))
