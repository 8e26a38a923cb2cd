"""
Combinatorial pages: genus, boundary components and first homology.

A page ``Σ_{g,b}`` carries the ordered basis

    a1, b1, ..., ag, bg, d1, ..., d(b-1)

where ``(ai, bi)`` are symplectic handle classes and the ``dj`` span the
subgroup generated by boundary classes.  Homology vectors are plain integer
tuples in this coordinate order.  The algebraic intersection pairing is

    <ai, bi> = +1,  <bi, ai> = -1,  <dj, anything> = 0.

A positive (right-handed) Dehn twist along ``c`` acts by the transvection
``x -> x + <x, c> c``; a negative twist by ``x -> x - <x, c> c``.

Besides the basis, each surface records the homology class of every
boundary component (``boundary_classes``), in the order the bindings of an
open book are listed.  These classes always sum to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DimensionError

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

CURVE_KINDS = ("link-component", "stabilization-curve", "boundary-parallel", "binding-label")


def standard_basis(genus: int, boundary_count: int) -> tuple[str, ...]:
    labels: list[str] = []
    for i in range(1, genus + 1):
        labels += [f"a{i}", f"b{i}"]
    labels += [f"d{j}" for j in range(1, boundary_count)]
    return tuple(labels)


@dataclass(frozen=True)
class Surface:
    genus: int
    boundary_count: int
    basis: tuple[str, ...]
    boundary_classes: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if self.boundary_count < 1:
            raise ValueError(f"pages need at least one boundary component, got {self.boundary_count}")
        if self.basis != standard_basis(self.genus, self.boundary_count):
            raise ValueError(f"basis {self.basis} does not match (g={self.genus}, b={self.boundary_count})")
        if len(self.boundary_classes) != self.boundary_count:
            raise ValueError("one boundary class per boundary component required")
        n = len(self.basis)
        total = [0] * n
        for cls in self.boundary_classes:
            if len(cls) != n:
                raise DimensionError(f"boundary class {cls} has length {len(cls)}, expected {n}")
            if any(cls[: 2 * self.genus]):
                raise ValueError(f"boundary class {cls} has handle components")
            total = [t + c for t, c in zip(total, cls)]
        if any(total):
            raise ValueError("boundary classes must sum to zero")

    @classmethod
    def standard(cls, genus: int, boundary_count: int) -> "Surface":
        """``Σ_{g,b}`` with ``∂j = dj`` for ``j < b`` and the last boundary ``-(d1 + ... + d(b-1))``."""
        if boundary_count < 1:
            raise ValueError(f"pages need at least one boundary component, got {boundary_count}")
        basis = standard_basis(genus, boundary_count)
        n = len(basis)
        classes = []
        for j in range(boundary_count - 1):
            v = [0] * n
            v[2 * genus + j] = 1
            classes.append(tuple(v))
        last = [0] * n
        for j in range(boundary_count - 1):
            last[2 * genus + j] = -1
        classes.append(tuple(last))
        return cls(genus, boundary_count, basis, tuple(classes))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def unit(self, label: str) -> Vector:
        return self.vector({label: 1})

    def vector(self, coeffs: dict[str, int]) -> Vector:
        v = [0] * self.dim
        for label, c in coeffs.items():
            v[self.index(label)] += c
        return tuple(v)

    def zero(self) -> Vector:
        return (0,) * self.dim

    def is_boundary_supported(self, v: Sequence[int]) -> bool:
        return not any(v[: 2 * self.genus])


@dataclass(frozen=True)
class CurveRef:
    """A named curve on a page, carried by its homology class plus metadata."""

    id: str
    homology: Vector
    kind: str = "link-component"
    orientation: int = 1

    def __post_init__(self) -> None:
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.orientation not in (1, -1):
            raise ValueError(f"orientation must be +1 or -1, got {self.orientation}")
        object.__setattr__(self, "homology", tuple(int(x) for x in self.homology))

    def embedded(self, embedding: Matrix) -> "CurveRef":
        # fields are already validated; skip __post_init__
        out = object.__new__(CurveRef)
        for name, value in (("id", self.id), ("homology", apply_matrix(embedding, self.homology)),
                            ("kind", self.kind), ("orientation", self.orientation)):
            object.__setattr__(out, name, value)
        return out

    def check_on(self, s: Surface) -> None:
        _check_dim(s, self.homology)
        if self.kind == "boundary-parallel" and not s.is_boundary_supported(self.homology):
            raise ValueError(f"boundary-parallel curve {self.id!r} has handle components")


@dataclass(frozen=True)
class SameBoundary:
    j: int | str


@dataclass(frozen=True)
class DifferentBoundaries:
    j: int | str
    k: int | str


Feet = SameBoundary | DifferentBoundaries


@dataclass(frozen=True)
class HandleAttachment:
    """Result of attaching a 1-handle.

    ``embedding`` maps old coordinate vectors to new ones (rows = new basis).
    ``new_label`` is the basis label a curve crossing the co-core once must
    carry with coefficient ±1: the new ``d`` label for same-boundary feet, the
    new ``a`` label (the handle core) for feet on different boundaries.
    """

    surface: Surface
    embedding: Matrix
    new_label: str
    new_boundary: int | None
    merged_boundaries: tuple[int, ...] = ()


def euler_char(s: Surface) -> int:
    return s.euler_char


def _check_dim(s: Surface, v: Sequence[int]) -> None:
    if len(v) != s.dim:
        raise DimensionError(f"vector of length {len(v)} does not match basis of length {s.dim}")


def intersection(s: Surface, x: Sequence[int], y: Sequence[int]) -> int:
    _check_dim(s, x)
    _check_dim(s, y)
    total = 0
    for i in range(s.genus):
        a, b = 2 * i, 2 * i + 1
        total += x[a] * y[b] - x[b] * y[a]
    return total


def twist_action(s: Surface, c: CurveRef | Sequence[int], x: Sequence[int], sign: int = 1) -> Vector:
    """Image of ``x`` under the Dehn twist along ``c`` (right-handed for ``sign=+1``)."""
    if sign not in (1, -1):
        raise ValueError(f"twist sign must be +1 or -1, got {sign}")
    cv = c.homology if isinstance(c, CurveRef) else tuple(c)
    k = sign * intersection(s, x, cv)
    return tuple(xi + k * ci for xi, ci in zip(x, cv))


def transvection_matrix(s: Surface, c: Sequence[int], sign: int = 1) -> Matrix:
    """Matrix (column convention) of ``twist_action`` along ``c``."""
    n = s.dim
    cols = [twist_action(s, c, _unit(n, i), sign) for i in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _unit(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def identity_matrix(n: int) -> Matrix:
    return tuple(_unit(n, i) for i in range(n))


def apply_matrix(m: Matrix, v: Sequence[int]) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionError(f"matrix with {len(m[0])} columns applied to vector of length {len(v)}")
    pad = _padding(m)
    if pad is not None:
        return tuple(v) + (0,) * pad
    return tuple(sum(r * v[i] for i, r in row) for row in _sparse_rows(m))


@lru_cache(maxsize=512)
def _padding(m: Matrix) -> int | None:
    """Number of zero rows appended, if ``m`` is an identity followed by zero rows."""
    n = len(m[0]) if m else 0
    if len(m) < n or any(m[i] != _unit(n, i) for i in range(n)) or any(any(row) for row in m[n:]):
        return None
    return len(m) - n


@lru_cache(maxsize=512)
def _sparse_rows(m: Matrix) -> tuple[tuple[tuple[int, int], ...], ...]:
    # embeddings are mostly zero; replay applies the same one to many curves
    return tuple(tuple((i, r) for i, r in enumerate(row) if r) for row in m)


def _resolve_index(s: Surface, j: int | str) -> int:
    if not isinstance(j, int) or isinstance(j, bool):
        raise TypeError(f"surface-level feet take boundary indices, got {j!r}")
    if not 0 <= j < s.boundary_count:
        raise IndexError(f"boundary index {j} out of range for {s.boundary_count} components")
    return j


def attach_handle(s: Surface, feet: Feet) -> HandleAttachment:
    """Attach a 1-handle to the page.

    Boundary indices are 0-based, in ``boundary_classes`` order.

    Same-boundary feet on ``j`` append ``d(b)`` and a new last boundary whose
    class is that new label; boundary ``j`` loses it.  Old vectors embed by
    zero-padding.

    Feet on boundaries ``j != k`` insert the pair ``a(g+1), b(g+1)`` ahead of
    the ``d`` labels, with ``a(g+1)`` the handle core and ``b(g+1)`` the class
    of old boundary ``j``.  The two boundaries merge into one, listed at
    position ``min(j, k)``; the new ``d`` labels are the classes of the
    surviving boundaries except the last.  Old vectors embed by the induced
    integer change of basis.
    """
    if isinstance(feet, SameBoundary):
        j = _resolve_index(s, feet.j)
        basis = standard_basis(s.genus, s.boundary_count + 1)
        n_old = s.dim
        emb = tuple(_unit(n_old, i) for i in range(n_old)) + ((0,) * n_old,)
        e_new = (0,) * n_old + (1,)
        classes = [cls + (0,) for cls in s.boundary_classes]
        classes[j] = tuple(x - y for x, y in zip(classes[j], e_new))
        classes.append(e_new)
        new = Surface(s.genus, s.boundary_count + 1, basis, tuple(classes))
        return HandleAttachment(new, emb, basis[-1], s.boundary_count)

    if isinstance(feet, DifferentBoundaries):
        j = _resolve_index(s, feet.j)
        k = _resolve_index(s, feet.k)
        if j == k:
            raise ValueError("different-boundaries feet need two distinct boundary components")
        g, b = s.genus, s.boundary_count
        hd = 2 * g
        survivors = [m for m in range(b) if m not in (j, k)]
        lo = min(j, k)
        # new boundary order: old order with j, k removed and the merged one at min(j, k)
        order: list[int | None] = []
        for m in range(b):
            if m == lo:
                order.append(None)
            elif m in survivors:
                order.append(m)
        merged_class = tuple(x + y for x, y in zip(s.boundary_classes[j], s.boundary_classes[k]))

        def old_class(m: int | None) -> Vector:
            return merged_class if m is None else s.boundary_classes[m]

        # change of basis inside the old boundary subgroup: columns are the
        # old d-coordinates of [new d basis..., class of boundary j]
        new_d_basis = [old_class(m) for m in order[:-1]]
        cols = [v[hd:] for v in new_d_basis] + [s.boundary_classes[j][hd:]]
        r = b - 1
        inv = _unimodular_inverse([[cols[c][row] for c in range(r)] for row in range(r)])

        n_new = 2 * (g + 1) + (b - 2)
        n_old = s.dim
        emb = [[0] * n_old for _ in range(n_new)]
        for i in range(hd):
            emb[i][i] = 1
        # row hd is the core a(g+1): no old vector carries it
        for col in range(r):
            emb[hd + 1][hd + col] = inv[r - 1][col]
            for t in range(r - 1):
                emb[hd + 2 + t][hd + col] = inv[t][col]
        emb_t = tuple(tuple(row) for row in emb)
        new_classes = []
        for pos, m in enumerate(order):
            v = [0] * n_new
            if pos < len(order) - 1:
                v[hd + 2 + pos] = 1
            else:
                for t in range(len(order) - 1):
                    v[hd + 2 + t] = -1
            new_classes.append(tuple(v))
        new = Surface(g + 1, b - 1, standard_basis(g + 1, b - 1), tuple(new_classes))
        return HandleAttachment(new, emb_t, f"a{g + 1}", None, (j, k))

    raise TypeError(f"unknown feet {feet!r}")


def _unimodular_inverse(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    if n == 0:
        return []
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("boundary classes are degenerate")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("boundary class change of basis is not unimodular")
        out.append([int(v) for v in vals])
    return out
