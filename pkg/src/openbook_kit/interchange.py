"""
Interchange documents: versioned, line-oriented text written in a fixed key order.

Every document is a mapping with these top-level keys::

    format: openbook-kit
    version: 1
    kind: open_book | placement | certificate | sg_certificate
    payload: <kind-specific mapping>

The text is a strict subset of YAML (block mappings, block lists, flow
lists of scalars), so any YAML loader reads it to the same data; the
grammar is documented in ``docs/FORMAT.md``.  The reader and writer here
handle exactly that subset, which keeps them fast and the output canonical:
``emit(parse(text)) == text`` for any emitted text and
``parse(emit(x)).payload == x`` for any value.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .approx import ProvenanceStep, SgCertificate
from .errors import InterchangeError
from .legendrian import LinkComponent, LinkPlacement
from .openbook import MonodromyWord, OpenBook, Twist
from .pushoff import Case, Certificate, ComponentOutcome, LedgerRow, ScheduleStep
from .surface import CurveRef, Surface, standard_basis

FORMAT = "openbook-kit"
VERSION = 1
KINDS = ("open_book", "placement", "certificate", "sg_certificate")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any
    version: int = VERSION


def kind_of(obj: Any) -> str:
    for cls, kind in ((OpenBook, "open_book"), (LinkPlacement, "placement"),
                      (Certificate, "certificate"), (SgCertificate, "sg_certificate")):
        if isinstance(obj, cls):
            return kind
    raise TypeError(f"no document kind for {type(obj).__name__}")


# ---------------------------------------------------------------- encoding

def _curve(c: CurveRef) -> dict:
    return {"id": c.id, "homology": list(c.homology), "kind": c.kind, "orientation": c.orientation}


def _open_book(ob: OpenBook) -> dict:
    page = ob.page
    return {
        "genus": page.genus,
        "boundary_count": page.boundary_count,
        "basis": list(page.basis),
        "bindings": list(ob.bindings),
        "boundary_classes": [list(v) for v in page.boundary_classes],
        "marks": list(ob.sub_binding_marks),
        "curves": [_curve(c) for c in ob.monodromy.curves()],
        "word": [[t.curve.id, t.sign] for t in ob.monodromy],
    }


def _component(c: LinkComponent) -> dict:
    return {
        "id": c.id,
        "curve": _curve(c.curve),
        "orientation": c.orientation,
        "parallel_class": c.parallel_class,
        "class_index": c.class_index,
        "nearest_binding": c.nearest_binding,
        "framing_offset": c.framing_offset,
        "null_homologous": c.null_homologous,
        "tb": c.tb,
        "rot": c.rot,
        "loose": c.loose,
        "handle_passes": c.handle_passes,
    }


def _placement(p: LinkPlacement) -> dict:
    return {"open_book": _open_book(p.open_book), "components": [_component(c) for c in p.components]}


def _step(s: ScheduleStep) -> dict:
    return {
        "index": s.index,
        "kind": s.kind,
        "target": s.target_component,
        "feet": s.feet,
        "creates": s.creates,
        "twist_curve": _curve(s.twist_curve),
        "depends_on": list(s.depends_on),
        "disjoint_from": list(s.disjoint_from),
        "pushed": list(s.pushed),
    }


def _certificate(c: Certificate) -> dict:
    return {
        "placement_digest": c.placement_digest,
        "case": c.case.value,
        "order_free": c.order_free,
        "tags": list(c.tags),
        "placement": _placement(c.placement),
        "steps": [_step(s) for s in c.steps],
        "sub_binding_map": [[k, v] for k, v in c.sub_binding_map],
        "outcomes": [
            {"id": o.id, "binding": o.binding, "negative_stabilizations": o.negative_stabilizations,
             "tb": o.tb, "rot": o.rot, "sl": o.sl}
            for o in c.outcomes
        ],
        "ledger": [[r.step, r.genus, r.boundary_count, r.euler_char, r.word_length] for r in c.ledger],
    }


def _provenance(s: ProvenanceStep) -> dict:
    return {
        "kind": s.kind,
        "open_book": _open_book(s.open_book) if s.open_book is not None else None,
        "marks": list(s.marks),
        "placement": _placement(s.placement) if s.placement is not None else None,
        "framing_drop": [[k, n] for k, n in s.framing_drop],
        "invariants": [[m, tb, rot] for m, tb, rot in s.invariants],
        "certificate": _certificate(s.certificate) if s.certificate is not None else None,
    }


def _sg_certificate(s: SgCertificate) -> dict:
    return {
        "kind": s.kind,
        "link_digest": s.link_digest,
        "genus_upper_bound": s.genus_upper_bound,
        "tags": list(s.tags),
        "open_book": _open_book(s.open_book),
        "placement": _placement(s.placement) if s.placement is not None else None,
        "provenance": [_provenance(p) for p in s.provenance],
    }


_ENCODERS: dict[str, Callable[[Any], dict]] = {
    "open_book": _open_book,
    "placement": _placement,
    "certificate": _certificate,
    "sg_certificate": _sg_certificate,
}


def to_data(obj: Any) -> dict:
    return _ENCODERS[kind_of(obj)](obj)


# ---------------------------------------------------------------- text layer

_PLAIN = re.compile(r"[A-Za-z_][A-Za-z0-9_./+-]*'*\Z")
# words a YAML 1.1 loader would not read back as strings
_RESERVED = {"y", "n", "yes", "no", "on", "off", "true", "false", "null"}
_INT = re.compile(r"-?(0|[1-9][0-9]*)\Z")


def _scalar(v: Any) -> str:
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        if _PLAIN.match(v) and v.lower() not in _RESERVED:
            return v
        return _quote(v)
    raise TypeError(f"cannot write {type(v).__name__} values")


# characters YAML will not carry raw inside a quoted scalar (non-printables, line separators)
_UNPRINTABLE = re.compile("[\x7f-\x9f\u2028\u2029\ud800-\udfff\ufffe\uffff]")


def _quote(v: str) -> str:
    return _UNPRINTABLE.sub(lambda m: f"\\u{ord(m.group()):04x}", json.dumps(v, ensure_ascii=False))


def _is_scalar(v: Any) -> bool:
    return v is None or isinstance(v, (bool, int, str))


def _write(v: Any, indent: int, out: list[str]) -> None:
    pad = " " * indent
    if isinstance(v, dict):
        for key, val in v.items():
            if _is_scalar(val):
                out.append(f"{pad}{key}: {_scalar(val)}")
            elif isinstance(val, list) and all(map(_is_scalar, val)):
                out.append(f"{pad}{key}: [{', '.join(map(_scalar, val))}]")
            else:
                out.append(f"{pad}{key}:")
                # block lists sit at the key's indent, mappings one level in
                _write(val, indent if isinstance(val, list) else indent + 2, out)
        return
    for item in v:
        if _is_scalar(item):
            out.append(f"{pad}- {_scalar(item)}")
        elif isinstance(item, list) and all(map(_is_scalar, item)):
            out.append(f"{pad}- [{', '.join(map(_scalar, item))}]")
        elif isinstance(item, dict) and item:
            sub: list[str] = []
            _write(item, indent + 2, sub)
            out.append(f"{pad}- {sub[0][indent + 2:]}")
            out.extend(sub[1:])
        else:
            raise TypeError("list items must be scalars, scalar lists or non-empty mappings")


def _dump(data: Any) -> str:
    out: list[str] = []
    _write(data, 0, out)
    return "\n".join(out) + "\n"


_TOKEN = re.compile(r'\s*(?:(\[)|(\])|(,)|("(?:[^"\\]|\\.)*")|([^,\[\]"\s][^,\[\]]*))')


def _read_scalar(text: str, where: str) -> Any:
    text = text.strip()
    if not text:
        raise InterchangeError(f"{where}: missing value")
    if text.startswith('"'):
        try:
            v = json.loads(text)
        except ValueError as exc:
            raise InterchangeError(f"{where}: bad quoted string {text}") from exc
        if not isinstance(v, str):
            raise InterchangeError(f"{where}: bad quoted string {text}")
        return v
    if text == "null" or text == "~":
        return None
    if text in ("true", "false"):
        return text == "true"
    if _INT.match(text):
        return int(text)
    if _PLAIN.match(text) and text.lower() not in _RESERVED:
        return text
    raise InterchangeError(f"{where}: cannot read value {text!r} (quote strings with double quotes)")


def _read_flow(text: str, where: str) -> list:
    items: list = []
    pos = 1
    expect_item = True
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            raise InterchangeError(f"{where}: malformed list {text!r}")
        pos = m.end()
        if m.group(2):
            if items and expect_item:
                raise InterchangeError(f"{where}: trailing comma in {text!r}")
            break
        if m.group(3):
            if expect_item:
                raise InterchangeError(f"{where}: empty list item in {text!r}")
            expect_item = True
            continue
        if not expect_item or m.group(1):
            raise InterchangeError(f"{where}: malformed list {text!r}")
        items.append(_read_scalar(m.group(4) or m.group(5), where))
        expect_item = False
    if text[pos:].strip():
        raise InterchangeError(f"{where}: text after list {text!r}")
    return items


def _read_inline(text: str, where: str) -> Any:
    text = text.strip()
    if text.startswith("["):
        return _read_flow(text, where)
    if text.startswith("{"):
        if text == "{}":
            return {}
        raise InterchangeError(f"{where}: inline mappings are not part of the format")
    return _read_scalar(text, where)


class _Lines:
    def __init__(self, text: str) -> None:
        self.rows: list[tuple[int, int, str]] = []  # (line number, indent, content)
        for n, raw in enumerate(text.split("\n"), start=1):
            if "\t" in raw[: len(raw) - len(raw.lstrip())]:
                raise InterchangeError(f"line {n}: tabs are not allowed in indentation")
            body = raw.rstrip()
            stripped = body.lstrip(" ")
            if not stripped or stripped.startswith("#") or stripped == "---":
                continue
            self.rows.append((n, len(body) - len(stripped), stripped))
        self.i = 0

    def peek(self) -> tuple[int, int, str] | None:
        return self.rows[self.i] if self.i < len(self.rows) else None


_KEY = re.compile(r"([A-Za-z_][A-Za-z0-9_]*):(?: (.*))?\Z")


def _read_block(lines: _Lines, indent: int) -> Any:
    row = lines.peek()
    if row is None or row[1] != indent:
        n = row[0] if row else "end"
        raise InterchangeError(f"line {n}: expected a block at indent {indent}")
    if row[2] == "-" or row[2].startswith("- "):
        return _read_list(lines, indent)
    return _read_mapping(lines, indent)


def _read_mapping(lines: _Lines, indent: int, first: str | None = None) -> dict:
    out: dict = {}
    while True:
        row = lines.peek()
        if first is None:
            if row is None or row[1] < indent:
                return out
            n, ind, content = row
            if ind != indent:
                raise InterchangeError(f"line {n}: bad indentation")
            if content.startswith("- "):
                return out
        else:
            n, content = row[0], first
            first = None
        m = _KEY.match(content)
        if not m:
            raise InterchangeError(f"line {n}: expected 'key: value'")
        key, rest = m.group(1), m.group(2)
        if key in out:
            raise InterchangeError(f"line {n}: duplicate key {key!r}")
        lines.i += 1
        if rest is not None and rest.strip():
            out[key] = _read_inline(rest, f"line {n}")
            continue
        nxt = lines.peek()
        if nxt is not None and (nxt[1] > indent or (nxt[1] == indent and nxt[2].startswith("- "))):
            out[key] = _read_block(lines, nxt[1])
        else:
            out[key] = None


def _read_list(lines: _Lines, indent: int) -> list:
    out: list = []
    while True:
        row = lines.peek()
        if row is None or row[1] < indent:
            return out
        n, ind, content = row
        if ind != indent or not (content == "-" or content.startswith("- ")):
            if ind == indent:
                return out
            raise InterchangeError(f"line {n}: bad indentation")
        rest = content[2:].strip()
        if not rest:
            raise InterchangeError(f"line {n}: empty list item")
        if _KEY.match(rest):
            # "- key: value" opens a mapping whose keys sit two columns in
            out.append(_read_mapping(lines, indent + 2, first=rest))
        else:
            lines.i += 1
            out.append(_read_inline(rest, f"line {n}"))


def _load(text: str) -> Any:
    lines = _Lines(text)
    if lines.peek() is None:
        raise InterchangeError("empty document")
    data = _read_block(lines, 0)
    row = lines.peek()
    if row is not None:
        raise InterchangeError(f"line {row[0]}: unexpected content")
    return data


def emit(obj: Any) -> str:
    """Serialize a domain object or a :class:`Document`."""
    doc = obj if isinstance(obj, Document) else Document(kind_of(obj), obj)
    if doc.version != VERSION:
        raise InterchangeError(f"cannot emit version {doc.version}")
    if kind_of(doc.payload) != doc.kind:
        raise InterchangeError(f"payload is not a {doc.kind}")
    return _dump({"format": FORMAT, "version": VERSION, "kind": doc.kind, "payload": to_data(doc.payload)})


def digest(obj: Any) -> str:
    """SHA-256 of the payload data written as compact JSON (keys in document order)."""
    text = json.dumps(to_data(obj), separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------- decoding

class _Reader:
    """Typed access to a decoded mapping, with the path kept for error messages."""

    def __init__(self, data: Any, path: str, keys: tuple[str, ...]) -> None:
        if not isinstance(data, dict):
            raise InterchangeError(f"{path}: expected a mapping")
        missing = [k for k in keys if k not in data]
        extra = [k for k in data if k not in keys]
        if missing or extra:
            raise InterchangeError(f"{path}: missing keys {missing}, unexpected keys {extra}")
        self.data = data
        self.path = path

    def raw(self, key: str) -> Any:
        return self.data[key]

    def int(self, key: str, optional: bool = False) -> int | None:
        return _int(self.data[key], f"{self.path}.{key}", optional)

    def str(self, key: str, optional: bool = False) -> str | None:
        return _str(self.data[key], f"{self.path}.{key}", optional)

    def bool(self, key: str, optional: bool = False) -> bool | None:
        v = self.data[key]
        if v is None and optional:
            return None
        if not isinstance(v, bool):
            raise InterchangeError(f"{self.path}.{key}: expected true/false, got {v!r}")
        return v

    def list(self, key: str) -> list:
        v = self.data[key]
        if not isinstance(v, list):
            raise InterchangeError(f"{self.path}.{key}: expected a list")
        return v

    def ints(self, key: str) -> tuple[int, ...]:
        return tuple(_int(x, f"{self.path}.{key}[{i}]") for i, x in enumerate(self.list(key)))

    def strs(self, key: str) -> tuple[str, ...]:
        return tuple(_str(x, f"{self.path}.{key}[{i}]") for i, x in enumerate(self.list(key)))


def _int(v: Any, path: str, optional: bool = False) -> int | None:
    if v is None and optional:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise InterchangeError(f"{path}: expected an integer, got {v!r}")
    return v


def _str(v: Any, path: str, optional: bool = False) -> str | None:
    if v is None and optional:
        return None
    if not isinstance(v, str) or not v:
        raise InterchangeError(f"{path}: expected a non-empty string, got {v!r}")
    return v


def _pair(v: Any, path: str, second: Callable[[Any, str], Any]) -> tuple:
    if not isinstance(v, list) or len(v) != 2:
        raise InterchangeError(f"{path}: expected a pair")
    return (_str(v[0], path + "[0]"), second(v[1], path + "[1]"))


def _guard(path: str, fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except InterchangeError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InterchangeError(f"{path}: {exc}") from exc


def _read_curve(v: Any, path: str) -> CurveRef:
    r = _Reader(v, path, ("id", "homology", "kind", "orientation"))
    return _guard(path, lambda: CurveRef(r.str("id"), r.ints("homology"), r.str("kind"), r.int("orientation")))


def _read_open_book(v: Any, path: str) -> OpenBook:
    r = _Reader(v, path, ("genus", "boundary_count", "basis", "bindings", "boundary_classes", "marks", "curves", "word"))
    genus, b = r.int("genus"), r.int("boundary_count")
    basis = r.strs("basis")
    if genus < 0 or b < 1:
        raise InterchangeError(f"{path}: need genus >= 0 and boundary_count >= 1")
    if basis != standard_basis(genus, b):
        raise InterchangeError(f"{path}.basis: expected {list(standard_basis(genus, b))}")
    classes = tuple(
        tuple(_int(x, f"{path}.boundary_classes[{i}]") for x in _list(row, f"{path}.boundary_classes[{i}]"))
        for i, row in enumerate(r.list("boundary_classes"))
    )
    page = _guard(path, lambda: Surface(genus, b, basis, classes))
    curves = {}
    for i, c in enumerate(r.list("curves")):
        curve = _read_curve(c, f"{path}.curves[{i}]")
        if curve.id in curves:
            raise InterchangeError(f"{path}.curves[{i}]: duplicate curve id {curve.id!r}")
        curves[curve.id] = curve
    twists = []
    for i, w in enumerate(r.list("word")):
        cid, sign = _pair(w, f"{path}.word[{i}]", _int)
        if cid not in curves:
            raise InterchangeError(f"{path}.word[{i}]: unknown curve {cid!r}")
        twists.append(_guard(f"{path}.word[{i}]", lambda: Twist(curves[cid], sign)))
    word = MonodromyWord(tuple(twists))
    if tuple(c.id for c in word.curves()) != tuple(curves):
        raise InterchangeError(f"{path}.curves: must list exactly the word's curves in order of first use")
    ob = _guard(path, lambda: OpenBook(page, word, r.strs("bindings"), r.strs("marks")))
    if ob.sub_binding_marks != r.strs("marks"):
        raise InterchangeError(f"{path}.marks: must follow binding order")
    return ob


def _list(v: Any, path: str) -> list:
    if not isinstance(v, list):
        raise InterchangeError(f"{path}: expected a list")
    return v


def _read_component(v: Any, path: str) -> LinkComponent:
    r = _Reader(v, path, ("id", "curve", "orientation", "parallel_class", "class_index", "nearest_binding",
                          "framing_offset", "null_homologous", "tb", "rot", "loose", "handle_passes"))
    return LinkComponent(
        id=r.str("id"),
        curve=_read_curve(r.raw("curve"), path + ".curve"),
        orientation=r.int("orientation"),
        parallel_class=r.str("parallel_class"),
        class_index=r.int("class_index"),
        nearest_binding=r.str("nearest_binding"),
        framing_offset=r.int("framing_offset"),
        null_homologous=r.bool("null_homologous"),
        tb=r.int("tb", optional=True),
        rot=r.int("rot", optional=True),
        loose=r.bool("loose", optional=True),
        handle_passes=r.int("handle_passes"),
    )


def _read_placement(v: Any, path: str) -> LinkPlacement:
    r = _Reader(v, path, ("open_book", "components"))
    ob = _read_open_book(r.raw("open_book"), path + ".open_book")
    comps = tuple(_read_component(c, f"{path}.components[{i}]") for i, c in enumerate(r.list("components")))
    return LinkPlacement(ob, comps)


def _read_step(v: Any, path: str) -> ScheduleStep:
    r = _Reader(v, path, ("index", "kind", "target", "feet", "creates", "twist_curve", "depends_on",
                          "disjoint_from", "pushed"))
    return ScheduleStep(
        index=r.int("index"),
        kind=r.str("kind"),
        target_component=r.str("target", optional=True),
        feet=r.str("feet"),
        twist_curve=_read_curve(r.raw("twist_curve"), path + ".twist_curve"),
        creates=r.str("creates"),
        depends_on=r.ints("depends_on"),
        disjoint_from=r.ints("disjoint_from"),
        pushed=r.strs("pushed"),
    )


def _read_certificate(v: Any, path: str) -> Certificate:
    r = _Reader(v, path, ("placement_digest", "case", "order_free", "tags", "placement", "steps",
                          "sub_binding_map", "outcomes", "ledger"))
    case = _guard(path + ".case", lambda: Case(r.str("case")))
    outcomes = []
    for i, o in enumerate(r.list("outcomes")):
        orr = _Reader(o, f"{path}.outcomes[{i}]", ("id", "binding", "negative_stabilizations", "tb", "rot", "sl"))
        outcomes.append(ComponentOutcome(orr.str("id"), orr.str("binding"), orr.int("negative_stabilizations"),
                                         orr.int("tb", True), orr.int("rot", True), orr.int("sl", True)))
    ledger = []
    for i, row in enumerate(r.list("ledger")):
        vals = _list(row, f"{path}.ledger[{i}]")
        if len(vals) != 5:
            raise InterchangeError(f"{path}.ledger[{i}]: expected [step, genus, boundary_count, euler_char, word_length]")
        ledger.append(LedgerRow(*(_int(x, f"{path}.ledger[{i}]") for x in vals)))
    return Certificate(
        placement=_read_placement(r.raw("placement"), path + ".placement"),
        placement_digest=r.str("placement_digest"),
        case=case,
        steps=tuple(_read_step(s, f"{path}.steps[{i}]") for i, s in enumerate(r.list("steps"))),
        sub_binding_map=tuple(_pair(x, f"{path}.sub_binding_map[{i}]", _str)
                              for i, x in enumerate(r.list("sub_binding_map"))),
        order_free=r.bool("order_free"),
        outcomes=tuple(outcomes),
        ledger=tuple(ledger),
        tags=r.strs("tags"),
    )


def _read_provenance(v: Any, path: str) -> ProvenanceStep:
    r = _Reader(v, path, ("kind", "open_book", "marks", "placement", "framing_drop", "invariants", "certificate"))
    ob = r.raw("open_book")
    pl = r.raw("placement")
    cert = r.raw("certificate")
    return ProvenanceStep(
        kind=r.str("kind"),
        open_book=_read_open_book(ob, path + ".open_book") if ob is not None else None,
        marks=r.strs("marks"),
        placement=_read_placement(pl, path + ".placement") if pl is not None else None,
        framing_drop=tuple(_pair(x, f"{path}.framing_drop[{i}]", _int) for i, x in enumerate(r.list("framing_drop"))),
        certificate=_read_certificate(cert, path + ".certificate") if cert is not None else None,
        invariants=tuple(_triple(x, f"{path}.invariants[{i}]") for i, x in enumerate(r.list("invariants"))),
    )


def _triple(v: Any, path: str) -> tuple[str, int, int]:
    if not isinstance(v, list) or len(v) != 3:
        raise InterchangeError(f"{path}: expected [mark, tb, rot]")
    return (_str(v[0], path + "[0]"), _int(v[1], path + "[1]"), _int(v[2], path + "[2]"))


def _read_sg_certificate(v: Any, path: str) -> SgCertificate:
    r = _Reader(v, path, ("kind", "link_digest", "genus_upper_bound", "tags", "open_book", "placement", "provenance"))
    pl = r.raw("placement")
    return _guard(path, lambda: SgCertificate(
        kind=r.str("kind"),
        link_digest=r.str("link_digest"),
        genus_upper_bound=r.int("genus_upper_bound"),
        open_book=_read_open_book(r.raw("open_book"), path + ".open_book"),
        placement=_read_placement(pl, path + ".placement") if pl is not None else None,
        provenance=tuple(_read_provenance(x, f"{path}.provenance[{i}]") for i, x in enumerate(r.list("provenance"))),
        tags=r.strs("tags"),
    ))


_DECODERS: dict[str, Callable[[Any, str], Any]] = {
    "open_book": _read_open_book,
    "placement": _read_placement,
    "certificate": _read_certificate,
    "sg_certificate": _read_sg_certificate,
}


def from_data(kind: str, data: Any) -> Any:
    if kind not in _DECODERS:
        raise InterchangeError(f"unknown document kind {kind!r}")
    return _guard("payload", lambda: _DECODERS[kind](data, "payload"))


def parse(text: str) -> Document:
    data = _load(text)
    r = _Reader(data, "document", ("format", "version", "kind", "payload"))
    if r.raw("format") != FORMAT:
        raise InterchangeError(f"document.format: expected {FORMAT!r}")
    version = r.int("version")
    if version != VERSION:
        raise InterchangeError(f"document.version: unsupported version {version}")
    kind = r.str("kind")
    return Document(kind, from_data(kind, r.raw("payload")), version)


def load(path: str | Path) -> Document:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(obj: Any, path: str | Path) -> None:
    Path(path).write_text(emit(obj), encoding="utf-8")
