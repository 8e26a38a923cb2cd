from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from openbook_kit.errors import CoCoreError, DimensionError
from openbook_kit.openbook import (
    MonodromyWord,
    OpenBook,
    Twist,
    destabilize,
    fresh_binding_labels,
    monodromy_homology_action,
    negative_stabilize,
    positive_stabilize,
)
from openbook_kit.surface import CurveRef, DifferentBoundaries, SameBoundary, Surface

from oracles import word_action


def hopf_curve(ob: OpenBook, core=None) -> CurveRef:
    """Curve on the page after a same-boundary handle: the old class plus the new d label."""
    base = core if core is not None else (0,) * ob.page.dim
    return CurveRef("c1", tuple(base) + (1,), "stabilization-curve")


def test_disk_stabilization():
    ob = OpenBook.trivial(0, 1)
    new, move = positive_stabilize(ob, SameBoundary("B1"), hopf_curve(ob))
    assert (new.page.genus, new.page.boundary_count) == (0, 2)
    assert [(t.curve.id, t.sign) for t in new.monodromy] == [("c1", 1)]
    assert new.bindings == ("B1", "B2")
    assert move.preserves_contact and move.new_binding == "B2"


def test_stabilization_shapes():
    ob = OpenBook.trivial(1, 2)
    same, _ = positive_stabilize(ob, SameBoundary(0), CurveRef("c", (1, 0, 0, 1)))
    assert (same.page.genus, same.page.boundary_count) == (1, 3)
    assert len(same.monodromy) == len(ob.monodromy) + 1
    # different boundaries: curve must carry the new core a2 with coefficient ±1
    diff, move = positive_stabilize(ob, DifferentBoundaries("B1", "B2"), CurveRef("c", (0, 0, 1, 0)))
    assert (diff.page.genus, diff.page.boundary_count) == (2, 1)
    assert diff.bindings == ("B3",)
    assert move.relabel_map() == {"B1": "B3", "B2": "B3"}


def test_negative_stabilization_flags_contact_change():
    ob = OpenBook.trivial(0, 1)
    pos, _ = positive_stabilize(ob, SameBoundary(0), hopf_curve(ob))
    neg, move = negative_stabilize(ob, SameBoundary(0), hopf_curve(ob))
    assert not move.preserves_contact
    assert neg.page == pos.page
    assert [t.sign for t in pos.monodromy] == [1] and [t.sign for t in neg.monodromy] == [-1]
    assert neg.page.euler_char == ob.page.euler_char - 1


def test_co_core_condition():
    ob = OpenBook.trivial(1, 1)
    with pytest.raises(CoCoreError):
        positive_stabilize(ob, SameBoundary(0), CurveRef("c", (1, 0, 2)))
    with pytest.raises(CoCoreError):
        positive_stabilize(ob, SameBoundary(0), CurveRef("c", (1, 0, 0)))
    with pytest.raises(DimensionError):
        positive_stabilize(ob, SameBoundary(0), CurveRef("c", (1, 0)))


def test_homology_action_examples():
    assert np.array_equal(monodromy_homology_action(OpenBook.trivial(1, 2)), np.eye(3, dtype=int))
    page = Surface.standard(1, 1)
    a1 = CurveRef("a", page.unit("a1"))
    ob = OpenBook(page, MonodromyWord((Twist(a1, 1),)))
    assert monodromy_homology_action(ob).tolist() == [[1, -1], [0, 1]]
    inverse_pair = OpenBook(page, MonodromyWord((Twist(a1, 1), Twist(a1, -1))))
    assert np.array_equal(monodromy_homology_action(inverse_pair), np.eye(2, dtype=int))


@st.composite
def words(draw):
    g = draw(st.integers(0, 2))
    b = draw(st.integers(1, 3))
    page = Surface.standard(g, b)
    n = draw(st.integers(0, 5))
    vecs = [tuple(draw(st.lists(st.integers(-2, 2), min_size=page.dim, max_size=page.dim))) for _ in range(n)]
    signs = [draw(st.sampled_from([1, -1])) for _ in range(n)]
    return page, list(zip(vecs, signs))


@settings(max_examples=150)
@given(words())
def test_homology_action_matches_matrix_oracle(data):
    page, word = data
    ids = {v: f"w{i}" for i, v in enumerate(dict.fromkeys(v for v, _ in word))}
    ob = OpenBook(page, MonodromyWord(tuple(Twist(CurveRef(ids[v], v), s) for v, s in word)))
    got = monodromy_homology_action(ob)
    expected = word_action(page.genus, page.boundary_count, word)
    assert np.array_equal(np.asarray(got, dtype=np.int64), expected)


def test_words_reject_conflicting_curve_ids():
    page = Surface.standard(1, 1)
    with pytest.raises(ValueError):
        OpenBook(page, MonodromyWord((Twist(CurveRef("c", (1, 0))), Twist(CurveRef("c", (0, 1))))))


def test_open_book_label_rules():
    page = Surface.standard(0, 2)
    with pytest.raises(ValueError):
        OpenBook(page, bindings=("B1",))
    with pytest.raises(ValueError):
        OpenBook(page, bindings=("B1", "B1"))
    with pytest.raises(ValueError):
        OpenBook(page, sub_binding_marks=("B9",))
    ob = OpenBook(page, sub_binding_marks=("B2", "B1"))
    assert ob.sub_binding_marks == ("B1", "B2")


def test_fresh_labels_skip_used_numbers():
    assert fresh_binding_labels(("B1", "B4", "X"), 2) == ("B5", "B6")
    assert fresh_binding_labels((), 1) == ("B1",)


@settings(max_examples=60)
@given(st.integers(0, 2), st.integers(1, 3), st.data())
def test_stabilize_then_destabilize_round_trips(g, b, data):
    ob = OpenBook.trivial(g, b)
    j = data.draw(st.integers(0, b - 1))
    rest = tuple(data.draw(st.lists(st.integers(-2, 2), min_size=ob.page.dim, max_size=ob.page.dim)))
    sign = data.draw(st.sampled_from([1, -1]))
    stab = positive_stabilize if sign > 0 else negative_stabilize
    new, move = stab(ob, SameBoundary(j), CurveRef("c1", rest + (data.draw(st.sampled_from([1, -1])),)))
    assert new.page.boundary_count == b + 1 and new.page.genus == g
    assert destabilize(new, move) == ob
