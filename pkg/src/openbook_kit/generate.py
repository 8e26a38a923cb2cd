"""
Small-model generators: exhaustive placements and seeded random documents.

Each genus has a fixed menu of pairwise disjoint-on-homology class vectors
with a declared nearest binding.  A placement uses the first ``k`` menu
entries (``k <= 3``), and each class gets a size ``<= 3`` and an orientation
pattern.  Classes using different menu entries are distinguishable, so
taking class configurations as a multiset loses no cases.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .approx import SgCertificate, loose_planar_pipeline, roundtrip_sg, transverse_witness
from .legendrian import LinkComponent, LinkPlacement
from .openbook import MonodromyWord, OpenBook, Twist
from .pushoff import Certificate, pushoff
from .surface import CurveRef, Surface

# genus -> (boundary_count, [(coefficients, nearest binding), ...])
MENUS: dict[int, tuple[int, list[tuple[dict[str, int], str]]]] = {
    0: (5, [({"d1": 1}, "B1"), ({"d2": 1}, "B2"), ({"d1": 1, "d2": 1, "d3": 1}, "B4")]),
    1: (3, [({"a1": 1}, "B1"), ({"d1": 1}, "B1"), ({"d2": 1}, "B2")]),
    2: (3, [({"a1": 1}, "B1"), ({"a1": 1, "a2": 1}, "B2"), ({"d1": 1}, "B1")]),
}

ClassConfig = tuple[int, ...]  # orientation per copy, innermost first


def class_configs(max_size: int = 3) -> list[ClassConfig]:
    return [pattern for size in range(1, max_size + 1) for pattern in product((1, -1), repeat=size)]


def build_placement(
    genus: int,
    configs: Sequence[ClassConfig],
    invariants: Sequence[tuple[int, int]] | None = None,
    loose: bool | None = None,
) -> LinkPlacement:
    """Placement on the genus's menu page with class ``i`` taken from menu entry ``i``.

    ``invariants`` (one ``(tb, rot)`` per component, in order) makes every
    component null-homologous.
    """
    b, menu = MENUS[genus]
    if len(configs) > len(menu):
        raise ValueError(f"at most {len(menu)} classes on the genus-{genus} menu page")
    ob = OpenBook.trivial(genus, b)
    comps: list[LinkComponent] = []
    for ci, (pattern, (coeffs, near)) in enumerate(zip(configs, menu), start=1):
        ref = ob.page.vector(coeffs)
        for k, o in enumerate(pattern, start=1):
            n = len(comps)
            tb_rot = invariants[n] if invariants is not None else None
            comps.append(LinkComponent(
                id=f"K{n + 1}",
                curve=CurveRef(f"k{n + 1}", tuple(o * x for x in ref)),
                orientation=o,
                parallel_class=f"P{ci}",
                class_index=k,
                nearest_binding=near,
                null_homologous=tb_rot is not None,
                tb=tb_rot[0] if tb_rot else None,
                rot=tb_rot[1] if tb_rot else None,
                loose=loose,
            ))
    return LinkPlacement(ob, tuple(comps))


def exhaustive_placements(genera: Sequence[int] = (0, 1, 2), max_classes: int = 3,
                          max_size: int = 3) -> Iterator[LinkPlacement]:
    configs = class_configs(max_size)
    for g in genera:
        for k in range(1, max_classes + 1):
            for combo in combinations_with_replacement(configs, k):
                yield build_placement(g, combo)


def random_invariants(rng: random.Random, n: int) -> list[tuple[int, int]]:
    out = []
    for _ in range(n):
        tb = rng.randint(-6, 3)
        # tb + rot is odd for null-homologous knots
        rot = rng.choice([r for r in range(-5, 6) if (tb + r) % 2 == 1])
        out.append((tb, rot))
    return out


def random_placement(rng: random.Random, genus: int | None = None, invariants: bool | None = None,
                     loose: bool | None = None) -> LinkPlacement:
    g = rng.choice((0, 1, 2)) if genus is None else genus
    k = rng.randint(1, 3)
    configs = [tuple(rng.choice((1, -1)) for _ in range(rng.randint(1, 3))) for _ in range(k)]
    n = sum(map(len, configs))
    with_inv = rng.random() < 0.5 if invariants is None else invariants
    return build_placement(g, configs, random_invariants(rng, n) if with_inv else None, loose)


def random_curve(rng: random.Random, page: Surface, id: str) -> CurveRef:
    v = [rng.randint(-2, 2) for _ in range(page.dim)]
    if not any(v):
        v[rng.randrange(page.dim)] = 1 if page.dim else 0
    kind = "boundary-parallel" if page.is_boundary_supported(v) and rng.random() < 0.5 else "link-component"
    return CurveRef(id, tuple(v), kind, rng.choice((1, -1)))


def random_open_book(rng: random.Random, max_genus: int = 2, max_boundary: int = 4,
                     max_word: int = 5, positive: bool = False) -> OpenBook:
    g = rng.randint(0, max_genus)
    b = rng.randint(1, max_boundary)
    page = Surface.standard(g, b)
    if page.dim == 0:
        return OpenBook(page)
    curves = [random_curve(rng, page, f"w{i}") for i in range(1, rng.randint(1, 3) + 1)]
    word = MonodromyWord(tuple(
        Twist(rng.choice(curves), 1 if positive else rng.choice((1, -1))) for _ in range(rng.randint(0, max_word))
    ))
    ob = OpenBook(page, word)
    marks = [x for x in ob.bindings if rng.random() < 0.4]
    return ob.with_marks(marks)


def random_transverse_witness(rng: random.Random, genus: int | None = None) -> SgCertificate:
    ob = random_open_book(rng, positive=True)
    if genus is not None:
        page = Surface.standard(genus, ob.page.boundary_count)
        ob = OpenBook(page)
    marks = [x for x in ob.bindings if rng.random() < 0.5] or [rng.choice(ob.bindings)]
    return transverse_witness(ob, marks)


def random_certificate(rng: random.Random) -> Certificate:
    _, cert = pushoff(random_placement(rng))
    return cert


def random_sg_certificate(rng: random.Random) -> SgCertificate:
    r = rng.random()
    if r < 0.4:
        t = random_transverse_witness(rng)
        l_cert, t2 = roundtrip_sg(t, framing_drop=rng.randint(0, 1))
        return l_cert if rng.random() < 0.5 else t2
    if r < 0.7:
        p = random_placement(rng, genus=0, invariants=True, loose=True)
        return loose_planar_pipeline(p, rng.randint(0, 2))
    return random_transverse_witness(rng)


def random_document(rng: random.Random):
    """One random domain object of a random document kind."""
    kind = rng.randrange(4)
    if kind == 0:
        return random_open_book(rng)
    if kind == 1:
        return random_placement(rng)
    if kind == 2:
        return random_certificate(rng)
    return random_sg_certificate(rng)
