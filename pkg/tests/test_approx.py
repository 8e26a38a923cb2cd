from __future__ import annotations

import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from openbook_kit.approx import (
    ASSUME_BINDING_STABILIZATION,
    LEGENDRIAN,
    TRANSVERSE,
    SgCertificate,
    approximate_subbinding,
    decrease_contact_framing,
    legendrian_approximation,
    loose_planar_pipeline,
    realize_on_page,
    replay_provenance,
    roundtrip_sg,
    transverse_witness,
)
from openbook_kit.errors import FramingError, PlacementError
from openbook_kit.generate import build_placement, random_placement, random_transverse_witness
from openbook_kit.legendrian import pushoff_invariants
from openbook_kit.openbook import OpenBook


def test_approximation_two_boundaries():
    ob = OpenBook.trivial(1, 2)
    p = approximate_subbinding(ob, ["B1"])
    assert p.open_book.page.genus == 1 and p.open_book.page == ob.page
    (k,) = p.components
    assert k.framing_offset == 0 and k.curve.kind == "boundary-parallel"
    assert k.curve.homology == ob.binding_class("B1")


def test_approximation_one_boundary_stabilizes_first():
    ob = OpenBook.trivial(1, 1)
    p = approximate_subbinding(ob, ["B1"])
    page = p.open_book.page
    assert (page.genus, page.boundary_count) == (1, 2)
    assert [t.sign for t in p.open_book.monodromy] == [1]
    cert = legendrian_approximation(ob, ["B1"])
    assert cert.tags == (ASSUME_BINDING_STABILIZATION,)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_approximation_keeps_genus(seed):
    rng = random.Random(seed)
    t = random_transverse_witness(rng)
    p = approximate_subbinding(t.open_book)
    assert p.open_book.page.genus == t.open_book.page.genus
    assert all(c.framing_offset == 0 for c in p.components)


def test_approximation_groups_opposite_bindings_into_one_class():
    p = approximate_subbinding(OpenBook.trivial(0, 2), ["B1", "B2"])
    assert [(c.parallel_class, c.class_index, c.orientation) for c in p.components] == [("P1", 1, 1), ("P1", 2, -1)]


def test_approximation_needs_marks():
    with pytest.raises(PlacementError):
        approximate_subbinding(OpenBook.trivial(0, 2), [])
    with pytest.raises(PlacementError):
        approximate_subbinding(OpenBook.trivial(0, 2), ["B7"])


def test_decrease_contact_framing():
    p = build_placement(1, [(1,)], [(-1, 0)])
    q = decrease_contact_framing(p, "K1", 2)
    k = q.components[0]
    assert k.framing_offset == -2
    assert q.open_book.page.boundary_count == p.open_book.page.boundary_count + 2
    assert q.open_book.page.genus == 1
    assert (k.tb, k.rot) == (-3, -2)
    assert decrease_contact_framing(p, "K1", 0) == p
    with pytest.raises(FramingError):
        decrease_contact_framing(p, "K1", -1)


@settings(max_examples=60, deadline=None)
@given(st.integers(-10, 10), st.integers(-10, 10), st.integers(0, 4))
def test_decrease_keeps_positive_pushoff(tb, rot, n):
    p = build_placement(0, [(1, 1)], [(tb, rot), (0, 1)])
    before = pushoff_invariants(p, "K1")
    q = decrease_contact_framing(p, "K1", n)
    assert pushoff_invariants(q, "K1") == before
    assert q.component("K1").framing_offset == -n


def test_realize_on_page_only_absorbs_handle_passes():
    p = build_placement(0, [(1,)], [(-1, 0)])
    q = realize_on_page(decrease_contact_framing(p, "K1", 3), "K1")
    k = q.components[0]
    assert (k.framing_offset, k.handle_passes) == (0, 0)
    assert (k.tb, k.rot) == (-4, -3)
    # a Legendrian stabilization is not a handle pass
    from openbook_kit.legendrian import stabilize_legendrian

    with pytest.raises(FramingError):
        realize_on_page(stabilize_legendrian(p, "K1", -1), "K1")


def test_no_operation_raises_framing():
    p = build_placement(0, [(1,)], [(-1, 0)])
    q = decrease_contact_framing(p, "K1", 2)
    assert q.components[0].framing_offset <= p.components[0].framing_offset


@pytest.mark.parametrize("genus", [0, 2])
def test_roundtrip_bounds(genus):
    t = transverse_witness(OpenBook.trivial(genus, 3), ["B1", "B3"])
    l_cert, t2 = roundtrip_sg(t)
    assert l_cert.kind == LEGENDRIAN and t2.kind == TRANSVERSE
    assert l_cert.genus_upper_bound == t2.genus_upper_bound == t.genus_upper_bound == genus
    assert [s.kind for s in t2.provenance] == ["approximation", "pushoff"]
    assert replay_provenance(l_cert) == [] and replay_provenance(t2) == []


def test_roundtrip_with_framing_drop_and_invariants():
    t = transverse_witness(OpenBook.trivial(1, 1), ["B1"])
    l_cert, t2 = roundtrip_sg(t, framing_drop=2, invariants={"B1": (-1, 0)})
    (k,) = l_cert.placement.components
    assert (k.tb, k.rot, k.framing_offset) == (-3, -2, 0)
    assert t2.genus_upper_bound == 1
    out = t2.provenance[-1].certificate.outcomes[0]
    assert out.sl == -1
    assert replay_provenance(t2) == []


def test_provenance_detects_tampering():
    t = transverse_witness(OpenBook.trivial(1, 2), ["B1"])
    _, t2 = roundtrip_sg(t)
    bad = replace(t2, open_book=t.open_book.with_marks(["B2"]), genus_upper_bound=1)
    assert replay_provenance(bad) != []


def test_certificate_invariants():
    ob = OpenBook.trivial(1, 2)
    with pytest.raises(ValueError):
        SgCertificate(TRANSVERSE, "x", 0, ob.with_marks(["B1"]))
    with pytest.raises(ValueError):
        SgCertificate(TRANSVERSE, "x", 1, ob)
    with pytest.raises(ValueError):
        SgCertificate(LEGENDRIAN, "x", 1, ob)


def loose_knot(tb=-1, rot=0):
    return build_placement(0, [(1,)], [(tb, rot)], loose=True)


def test_loose_pipeline_m0():
    cert = loose_planar_pipeline(loose_knot(), 0)
    assert cert.genus_upper_bound == 0 and cert.kind == TRANSVERSE
    assert replay_provenance(cert) == []


def test_loose_pipeline_m3():
    cert = loose_planar_pipeline(loose_knot(-1, 0), 3)
    framing, push = cert.provenance
    assert framing.framing_drop == (("K1", 3),)
    k = push.certificate.placement.components[0]
    assert (k.tb, k.rot) == (-4, -3)
    assert push.certificate.outcomes[0].sl == -1
    assert cert.genus_upper_bound == 0


def test_loose_pipeline_preconditions():
    with pytest.raises(PlacementError, match="planar witness required"):
        loose_planar_pipeline(build_placement(1, [(1,)], [(-1, 0)], loose=True))
    with pytest.raises(PlacementError):
        loose_planar_pipeline(build_placement(0, [(1,)], [(-1, 0)]))
    with pytest.raises(PlacementError):
        loose_planar_pipeline(build_placement(0, [(1,)], loose=True))
    with pytest.raises(FramingError):
        loose_planar_pipeline(loose_knot(), -1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 3))
def test_loose_pipeline_keeps_self_linking(seed, m):
    p = random_placement(random.Random(seed), genus=0, invariants=True, loose=True)
    cert = loose_planar_pipeline(p, m)
    outcomes = {o.id: o for o in cert.provenance[-1].certificate.outcomes}
    for k in p.components:
        assert outcomes[k.id].sl == k.tb - k.rot
    assert cert.genus_upper_bound == 0
