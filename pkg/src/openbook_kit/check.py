"""
Batch property checks over interchange documents and randomized module suites.

Every check yields a :class:`Result`; the report passes only if all do.
Randomized suites draw from ``random.Random(seed)``, with the seed taken
from ``OPENBOOK_KIT_SEED`` unless given explicitly.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from itertools import permutations
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import interchange
from .approx import SgCertificate, replay_provenance
from .errors import OpenBookKitError, ReplayError
from .legendrian import LinkPlacement, pushoff_invariants, pushoff_sl, stabilize_legendrian, validate_placement
from .openbook import OpenBook, monodromy_homology_action
from .pushoff import (
    Certificate,
    apply_schedule,
    build_schedule,
    certificate_violations,
    permute_and_check,
    violating_permutation,
)
from .surface import DifferentBoundaries, SameBoundary, Surface, attach_handle

SEED_ENV = "OPENBOOK_KIT_SEED"
DEFAULT_SEED = 20240611
EXHAUSTIVE_LIMIT = 6


@dataclass(frozen=True)
class Result:
    property: str
    target: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    seed: int
    results: tuple[Result, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "seed": self.seed,
            "counts": {"pass": sum(r.passed for r in self.results),
                       "fail": sum(not r.passed for r in self.results)},
            "results": [asdict(r) for r in self.results],
        }


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _check(name: str, target: str, fn: Callable[[], str | None]) -> Result:
    """Run one property; ``fn`` returns a failure detail or ``None``."""
    try:
        detail = fn()
    except (OpenBookKitError, ValueError, KeyError) as exc:
        return Result(name, target, False, f"{type(exc).__name__}: {exc}")
    return Result(name, target, detail is None, detail or "")


# ---------------------------------------------------------------- documents

def _roundtrip(obj) -> str | None:
    text = interchange.emit(obj)
    doc = interchange.parse(text)
    if doc.payload != obj:
        return "parse(emit(x)) differs from x"
    if interchange.emit(doc.payload) != text:
        return "emit(parse(text)) differs from text"
    return None


def _open_book_checks(ob: OpenBook, target: str) -> list[Result]:
    def page() -> str | None:
        p = ob.page
        if p.euler_char != 2 - 2 * p.genus - p.boundary_count:
            return "euler characteristic inconsistent"
        return None

    def action() -> str | None:
        m = monodromy_homology_action(ob)
        if m.shape != (ob.page.dim, ob.page.dim):
            return f"action has shape {m.shape}"
        return None

    return [_check("page-ledger", target, page), _check("homology-action", target, action)]


def _placement_checks(p: LinkPlacement, target: str) -> list[Result]:
    def valid() -> str | None:
        v = validate_placement(p)
        return "; ".join(map(str, v)) if v else None

    return [_check("placement-valid", target, valid)]


def _permutation_orders(n: int, mode: str | int, rng: random.Random) -> Iterable[tuple[int, ...]]:
    """Every order for ``all`` up to the exhaustive limit, otherwise the identity plus random samples."""
    if mode == "all" and n <= EXHAUSTIVE_LIMIT:
        return permutations(range(1, n + 1))
    count = min(math.factorial(n), 720 if mode == "all" else int(mode))
    orders = [tuple(range(1, n + 1))]
    for _ in range(count - 1):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        orders.append(tuple(order))
    return orders


def _certificate_checks(cert: Certificate, target: str, perms: str | int | None, rng: random.Random) -> list[Result]:
    p = cert.placement

    def structure() -> str | None:
        v = certificate_violations(cert)
        return "; ".join(v) if v else None

    def digest() -> str | None:
        return None if interchange.digest(p) == cert.placement_digest else "placement digest mismatch"

    def rebuild() -> str | None:
        fresh = build_schedule(p)
        if fresh.steps != cert.steps or fresh.sub_binding_map != cert.sub_binding_map:
            return "schedule does not rebuild from the placement"
        if fresh.case != cert.case or fresh.order_free != cert.order_free or fresh.tags != cert.tags:
            return "case, order_free or tags differ from a rebuild"
        if fresh.outcomes != cert.outcomes:
            return "outcomes differ from a rebuild"
        return None

    def ledger() -> str | None:
        if not cert.ledger:
            return "certificate has no ledger"
        try:
            apply_schedule(p, cert)
        except ReplayError as exc:
            return str(exc)
        return None

    def sl_invariance() -> str | None:
        for o in cert.outcomes:
            c = p.component(o.id)
            if c.tb is not None and o.sl != pushoff_sl(c.tb, c.rot):
                return f"{o.id}: sl {o.sl} differs from tb - rot = {pushoff_sl(c.tb, c.rot)}"
        return None

    out = [
        _check("certificate-structure", target, structure),
        _check("placement-digest", target, digest),
        _check("schedule-rebuild", target, rebuild),
        _check("ledger-replay", target, ledger),
        _check("sl-invariance", target, sl_invariance),
    ]
    if perms is not None:
        out.append(_check("permutations", target, lambda: _permutations(cert, perms, rng)))
    return out


def _permutations(cert: Certificate, mode: str | int, rng: random.Random) -> str | None:
    n = len(cert.steps)
    if n == 0:
        return None
    ob = cert.placement.open_book
    orders = _permutation_orders(n, mode, rng)
    for order in orders:
        report = permute_and_check(ob, cert, order)
        respects = all(order.index(d) < order.index(s.index) for s in cert.steps for d in s.depends_on)
        if respects and not report:
            return f"order {list(order)} respects dependencies but changes the result"
        if not respects:
            if report.accepted:
                return f"order {list(order)} breaks a dependency but was accepted"
    if not cert.order_free:
        bad = violating_permutation(cert)
        if bad is not None and permute_and_check(ob, cert, bad).accepted:
            return f"dependency-violating order {list(bad)} was accepted"
    return None


def _sg_checks(sgc: SgCertificate, target: str) -> list[Result]:
    def provenance() -> str | None:
        problems = replay_provenance(sgc)
        return "; ".join(problems) if problems else None

    def bound() -> str | None:
        if sgc.genus_upper_bound != sgc.open_book.page.genus:
            return "bound differs from witness genus"
        for step in sgc.provenance:
            ob = step.open_book or (step.placement.open_book if step.placement else None)
            if ob is not None and ob.page.genus != sgc.genus_upper_bound:
                return "provenance changes genus"
        return None

    return [_check("provenance-replay", target, provenance), _check("genus-bound", target, bound)]


def check_object(obj, target: str, perms: str | int | None = None, seed: int = DEFAULT_SEED) -> list[Result]:
    rng = random.Random(f"{seed}:{target}")
    out = [_check("interchange-roundtrip", target, lambda: _roundtrip(obj))]
    if isinstance(obj, OpenBook):
        out += _open_book_checks(obj, target)
    elif isinstance(obj, LinkPlacement):
        out += _placement_checks(obj, target)
    elif isinstance(obj, Certificate):
        out += _certificate_checks(obj, target, perms, rng)
    elif isinstance(obj, SgCertificate):
        out += _sg_checks(obj, target)
    return out


def check_path(path: str, perms: str | int | None = None, seed: int = DEFAULT_SEED) -> list[Result]:
    try:
        doc = interchange.load(path)
    except (OSError, OpenBookKitError) as exc:
        return [Result("parse", path, False, f"{type(exc).__name__}: {exc}")]
    return [Result("parse", path, True)] + check_object(doc.payload, path, perms, seed)


# ---------------------------------------------------------------- suites

def _suite_legendrian(rng: random.Random, n: int) -> str | None:
    from .generate import build_placement

    p0 = build_placement(0, [(1,)], [(0, 1)])
    for _ in range(n):
        tb, rot = rng.randint(-50, 50), rng.randint(-50, 50)
        p = p0.replace_component(replace(p0.components[0], tb=tb, rot=rot))
        for _ in range(rng.randint(0, 6)):
            s = rng.choice((1, -1))
            before = p.components[0]
            p = stabilize_legendrian(p, before.id, s)
            after = p.components[0]
            if (after.tb, after.rot) != (before.tb - 1, before.rot + s):
                return f"stabilization {s:+d} of (tb={before.tb}, rot={before.rot}) gave ({after.tb}, {after.rot})"
            if s < 0 and pushoff_invariants(p, after.id) != pushoff_sl(before.tb, before.rot):
                return f"sl changed under negative stabilization of (tb={before.tb}, rot={before.rot})"
    return None


def _suite_surface(rng: random.Random, n: int) -> str | None:
    for g in range(4):
        for b in range(1, 5):
            s = Surface.standard(g, b)
            same = attach_handle(s, SameBoundary(rng.randrange(b))).surface
            if (same.genus, same.boundary_count, same.euler_char) != (g, b + 1, s.euler_char - 1):
                return f"same-boundary handle on ({g},{b}) gave ({same.genus},{same.boundary_count})"
            if b >= 2:
                j, k = rng.sample(range(b), 2)
                diff = attach_handle(s, DifferentBoundaries(j, k)).surface
                if (diff.genus, diff.boundary_count, diff.euler_char) != (g + 1, b - 1, s.euler_char - 1):
                    return f"different-boundaries handle on ({g},{b}) gave ({diff.genus},{diff.boundary_count})"
    return None


def _suite_pushoff(rng: random.Random, n: int) -> str | None:
    from .generate import random_placement

    for _ in range(n):
        p = random_placement(rng)
        ob, cert = apply_schedule(p, build_schedule(p))
        v = certificate_violations(cert)
        if v:
            return "; ".join(v)
        if ob.page.genus != p.open_book.page.genus:
            return "genus changed"
        if any(t.sign != 1 for t in ob.monodromy.twists[len(p.open_book.monodromy):]):
            return "non-positive twist appended"
    return None


def _suite_interchange(rng: random.Random, n: int) -> str | None:
    from .generate import random_document

    for _ in range(n):
        detail = _roundtrip(random_document(rng))
        if detail:
            return detail
    return None


SUITES: dict[str, Callable[[random.Random, int], str | None]] = {
    "legendrian-arithmetic": _suite_legendrian,
    "surface-ledger": _suite_surface,
    "pushoff-random": _suite_pushoff,
    "interchange-random": _suite_interchange,
}


def run_suites(seed: int, size: int = 50) -> list[Result]:
    out = []
    for name, fn in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        out.append(_check(f"suite:{name}", f"seed={seed}", lambda fn=fn, rng=rng: fn(rng, size)))
    return out


def _check_path_star(args: tuple) -> list[Result]:
    return check_path(*args)


def run_check(paths: Sequence[str | Path], perms: str | int | None = None, suites: bool = False,
              seed: int | None = None, jobs: int = 1, suite_size: int = 50) -> Report:
    seed = seed_from_env() if seed is None else seed
    work = [(str(p), perms, seed) for p in paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_check_path_star, work))
    else:
        chunks = [_check_path_star(w) for w in work]
    results = [r for chunk in chunks for r in chunk]
    if suites:
        results += run_suites(seed, suite_size)
    return Report(seed, tuple(results))


def tamper_ledger(cert: Certificate) -> Certificate:
    """Copy of ``cert`` with the last ledger row's word length off by one (for testing the checker)."""
    if not cert.ledger:
        raise ValueError("certificate has no ledger")
    last = cert.ledger[-1]
    return replace(cert, ledger=cert.ledger[:-1] + (replace(last, word_length=last.word_length + 1),))
