"""Acceptance criteria, each with its runtime bound.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations

import numpy as np
import pytest

from openbook_kit import interchange
from openbook_kit.approx import loose_planar_pipeline, replay_provenance, roundtrip_sg
from openbook_kit.generate import (
    build_placement,
    exhaustive_placements,
    random_document,
    random_placement,
    random_transverse_witness,
)
from openbook_kit.legendrian import (
    LinkComponent,
    LinkPlacement,
    orientation_reversals,
    pushoff_invariants,
    stabilize_legendrian,
)
from openbook_kit.openbook import OpenBook
from openbook_kit.pushoff import (
    AUX,
    PUSHOFF,
    Case,
    apply_schedule,
    build_schedule,
    certificate_violations,
    permute_and_check,
    violating_permutation,
)
from openbook_kit.surface import CurveRef, DifferentBoundaries, SameBoundary, Surface, attach_handle

from oracles import euler, stabilize, word_action

SEED = 20240611


@pytest.mark.acceptance(1, "stabilization arithmetic", 1)
def test_stabilization_arithmetic(stopwatch):
    rng = random.Random(SEED)
    base = build_placement(0, [(1,)], [(0, 1)])
    k0 = base.components[0]
    with stopwatch:
        for _ in range(10_000):
            tb, rot = rng.randint(-100, 100), rng.randint(-100, 100)
            signs = [rng.choice((1, -1)) for _ in range(rng.randint(1, 6))]
            p = LinkPlacement(base.open_book, (LinkComponent(
                k0.id, k0.curve, 1, "P1", 1, "B1", null_homologous=True, tb=tb, rot=rot),))
            sl = pushoff_invariants(p, "K1")
            assert sl == tb - rot
            for s in signs:
                before = p.components[0]
                p = stabilize_legendrian(p, "K1", s)
                after = p.components[0]
                assert after.tb == before.tb - 1 and after.rot == before.rot + s
                if s < 0:
                    assert pushoff_invariants(p, "K1") == sl
                sl = pushoff_invariants(p, "K1")
            assert (p.components[0].tb, p.components[0].rot) == stabilize(tb, rot, signs)
    assert stopwatch.elapsed < 1.0


@pytest.mark.acceptance(2, "surface ledger", 1)
def test_surface_ledger(stopwatch):
    cases = 0
    with stopwatch:
        for g in range(4):
            for b in range(1, 5):
                s = Surface.standard(g, b)
                for j in range(b):
                    new = attach_handle(s, SameBoundary(j)).surface
                    assert (new.genus, new.boundary_count) == (g, b + 1)
                    assert new.euler_char == euler(g, b) - 1 == euler(new.genus, new.boundary_count)
                    cases += 1
                    for k in range(b):
                        if k == j:
                            continue
                        new = attach_handle(s, DifferentBoundaries(j, k)).surface
                        assert (new.genus, new.boundary_count) == (g + 1, b - 1)
                        assert new.euler_char == euler(g, b) - 1 == euler(new.genus, new.boundary_count)
                        cases += 1
    assert cases == sum(b + b * (b - 1) for _ in range(4) for b in range(1, 5))
    assert stopwatch.elapsed < 1.0


@pytest.fixture(scope="module")
def exhaustive():
    return list(exhaustive_placements())


@pytest.mark.acceptance(3, "push-off coverage", 10)
def test_pushoff_coverage(exhaustive, stopwatch):
    cases = Counter()
    with stopwatch:
        for p in exhaustive:
            cert = build_schedule(p)
            ob, applied = apply_schedule(p, cert)
            # replaying with the recorded ledger must reproduce it exactly
            apply_schedule(p, applied)
            assert certificate_violations(applied) == []
            start = p.open_book
            assert ob.page.genus == start.page.genus
            n_push = sum(s.kind == PUSHOFF for s in cert.steps)
            n_aux = sum(s.kind == AUX for s in cert.steps)
            assert n_push == len(p.components)
            assert n_aux == sum(orientation_reversals(m) for m in p.classes().values())
            assert ob.page.boundary_count - start.page.boundary_count == n_push + n_aux
            assert all(t.sign == 1 for t in ob.monodromy.twists[len(start.monodromy):])
            targets = [b for _, b in applied.sub_binding_map]
            assert sorted(dict(applied.sub_binding_map)) == sorted(c.id for c in p.components)
            assert len(set(targets)) == len(targets) and set(targets) <= set(ob.bindings)
            cases[applied.case] += 1
    assert len(exhaustive) >= 300
    assert set(cases) == set(Case)
    assert stopwatch.elapsed < 10.0


def _order_free_extras():
    # four null-homologous singletons, so some order-free certificates have 4 steps
    out = []
    for g, b in ((0, 1), (0, 3), (1, 2), (2, 1)):
        ob = OpenBook.trivial(g, b)
        comps = tuple(
            LinkComponent(f"K{i}", CurveRef(f"k{i}", (0,) * ob.page.dim), 1, f"P{i}", 1, ob.bindings[i % b])
            for i in range(4)
        )
        out.append(LinkPlacement(ob, comps))
    return out


@pytest.mark.acceptance(4, "order sensitivity", 30)
def test_order_sensitivity(exhaustive, stopwatch):
    free = dependent = 0
    with stopwatch:
        for p in exhaustive + _order_free_extras():
            cert = build_schedule(p)
            n = len(cert.steps)
            if cert.order_free and n <= 4:
                ob, _ = apply_schedule(p, cert)
                page = ob.page
                curves = [t.curve.homology for t in ob.monodromy.twists[len(p.open_book.monodromy):]]
                canonical = word_action(page.genus, page.boundary_count, [(c, 1) for c in curves])
                for perm in permutations(range(1, n + 1)):
                    assert permute_and_check(p.open_book, cert, perm)
                    # oracle: the same product in the permuted order, on the final page
                    permuted = word_action(page.genus, page.boundary_count, [(curves[i - 1], 1) for i in perm])
                    assert np.array_equal(permuted, canonical)
                free += 1
            if cert.case in (Case.C1bi, Case.C2bi):
                bad = violating_permutation(cert)
                assert bad is not None
                report = permute_and_check(p.open_book, cert, bad)
                assert not report.accepted and report.violations
                dependent += 1
    assert free >= 20 and dependent >= 100
    assert stopwatch.elapsed < 30.0


@pytest.mark.acceptance(5, "support-genus round trip", 5)
def test_roundtrip(stopwatch):
    rng = random.Random(SEED)
    with stopwatch:
        for i in range(100):
            t = random_transverse_witness(rng, genus=i % 3)
            l_cert, t2 = roundtrip_sg(t)
            assert t.genus_upper_bound == l_cert.genus_upper_bound == t2.genus_upper_bound == i % 3
            assert [s.kind for s in t2.provenance] == ["approximation", "pushoff"]
            assert replay_provenance(l_cert) == []
            assert replay_provenance(t2) == []
    assert stopwatch.elapsed < 5.0


@pytest.mark.acceptance(6, "loose planar pipeline", 5)
def test_loose_pipeline(stopwatch):
    rng = random.Random(SEED)
    with stopwatch:
        for i in range(50):
            p = random_placement(rng, genus=0, invariants=True, loose=True)
            m = i % 6
            cert = loose_planar_pipeline(p, m)
            assert cert.genus_upper_bound == 0
            push = cert.provenance[-1].certificate
            stabilized = {c.id: c for c in push.placement.components}
            for k in p.components:
                assert (stabilized[k.id].tb, stabilized[k.id].rot) == (k.tb - m, k.rot - m)
            for o in push.outcomes:
                k = p.component(o.id)
                assert o.sl == k.tb - k.rot
            assert replay_provenance(cert) == []
    assert stopwatch.elapsed < 5.0


@pytest.mark.acceptance(7, "interchange round trip", 5)
def test_interchange_roundtrip(stopwatch):
    rng = random.Random(SEED)
    kinds = Counter()
    with stopwatch:
        for _ in range(1000):
            obj = random_document(rng)
            text = interchange.emit(obj)
            doc = interchange.parse(text)
            assert interchange.emit(doc.payload) == text
            assert doc.payload == obj
            kinds[doc.kind] += 1
    assert set(kinds) == set(interchange.KINDS)
    assert stopwatch.elapsed < 5.0
