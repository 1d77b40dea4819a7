"""Line-oriented algebra documents.

A document names the carrier, the top, the order (either as a full meet table
or as generating ``x<y`` pairs) and optionally operator tables::

    # two-element chain with identity operators
    name: c2-identity
    elements: 0 1
    top: 1
    leq: 0<1
    op i: 0 1
    op d: 0 1

Parsing only checks the shape of the document. Whether the tables satisfy the
semilattice and adjunction laws is decided later and reported as a verdict.
The full grammar lives in ``docs/format.md``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .order import MeetSemilattice, validate_semilattice

OP_KEYS = ("i", "d", "P", "G", "F", "H")
OP_SETS = (("i", "d"), ("P", "G", "F", "H"))
_LABEL = re.compile(r"[^\s:<#]+")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    elements: tuple[str, ...]
    top: str
    meet: tuple[tuple[str, ...], ...] | None = None
    leq: tuple[tuple[str, str], ...] | None = None
    ops: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def op_kind(self) -> str:
        """``"none"``, ``"slata"`` or ``"eslata"``."""
        if not self.ops:
            return "none"
        return "slata" if set(self.ops) == {"i", "d"} else "eslata"

    def op_tables(self) -> tuple[tuple[int, ...], ...]:
        """Operator tables as index tuples in the canonical order for the kind."""
        names = OP_SETS[0] if self.op_kind() == "slata" else OP_SETS[1]
        return tuple(tuple(self.index(v) for v in self.ops[k]) for k in names if k in self.ops)


def build_algebra(doc: AlgebraDocument) -> MeetSemilattice:
    """Turn the document's order into a validated algebra.

    Raises a :class:`~slata.order.SemilatticeError` subclass when the laws fail.
    """
    top = doc.index(doc.top)
    if doc.meet is not None:
        table = [[doc.index(v) for v in row] for row in doc.meet]
        return validate_semilattice(table, top, doc.elements)
    pairs = [(doc.index(a), doc.index(b)) for a, b in doc.leq]
    A = MeetSemilattice.from_leq(len(doc.elements), pairs, doc.elements)
    if A.top != top:
        return validate_semilattice(A.meet, top, doc.elements)
    return A


def _labels(text: str, lineno: int) -> list[str]:
    words = text.split()
    for w in words:
        if not _LABEL.fullmatch(w):
            raise ParseError(lineno, f"bad label {w!r}")
    return words


def parse_document(text: str) -> AlgebraDocument:
    name = elements = top = None
    meet_rows: dict[str, tuple[int, list[str]]] = {}
    leq: list[tuple[str, str]] = []
    leq_seen = False
    ops: dict[str, tuple[int, list[str]]] = {}
    last = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        if ":" not in line:
            raise ParseError(lineno, "expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        head, *rest = key.split()
        if head in ("name", "elements", "top", "leq") and rest:
            raise ParseError(lineno, f"unexpected text after {head!r}")
        if head == "name":
            if name is not None:
                raise ParseError(lineno, "duplicate 'name'")
            if not value:
                raise ParseError(lineno, "empty name")
            name = value
        elif head == "elements":
            if elements is not None:
                raise ParseError(lineno, "duplicate 'elements'")
            elements = _labels(value, lineno)
            if not elements:
                raise ParseError(lineno, "no elements")
            if len(set(elements)) != len(elements):
                raise ParseError(lineno, "duplicate element label")
        elif head == "top":
            if top is not None:
                raise ParseError(lineno, "duplicate 'top'")
            words = _labels(value, lineno)
            if len(words) != 1:
                raise ParseError(lineno, "top must be a single label")
            top = (lineno, words[0])
        elif head == "leq":
            leq_seen = True
            for pair in value.split():
                parts = pair.split("<")
                if len(parts) != 2 or not all(_LABEL.fullmatch(p) for p in parts):
                    raise ParseError(lineno, f"bad pair {pair!r}, expected x<y")
                leq.append((lineno, parts[0], parts[1]))
        elif head == "meet":
            if len(rest) != 1:
                raise ParseError(lineno, "expected 'meet <label>: row'")
            if rest[0] in meet_rows:
                raise ParseError(lineno, f"duplicate meet row {rest[0]!r}")
            meet_rows[rest[0]] = (lineno, _labels(value, lineno))
        elif head == "op":
            if len(rest) != 1 or rest[0] not in OP_KEYS:
                raise ParseError(lineno, f"operator name must be one of {' '.join(OP_KEYS)}")
            if rest[0] in ops:
                raise ParseError(lineno, f"duplicate operator {rest[0]!r}")
            ops[rest[0]] = (lineno, _labels(value, lineno))
        else:
            raise ParseError(lineno, f"unknown key {head!r}")

    end = last + 1
    for key, val in (("name", name), ("elements", elements), ("top", top)):
        if val is None:
            raise ParseError(end, f"missing '{key}'")
    known = set(elements)

    def need(label: str, lineno: int) -> str:
        if label not in known:
            raise ParseError(lineno, f"unknown element {label!r}")
        return label

    if top[1] not in known:
        raise ParseError(top[0], f"unknown element {top[1]!r}")
    if meet_rows and leq_seen:
        line = min(ln for ln, _ in meet_rows.values())
        raise ParseError(line, "give either meet rows or leq pairs, not both")
    if not meet_rows and not leq_seen:
        raise ParseError(end, "missing order: add 'leq:' pairs or 'meet <label>:' rows")

    meet = None
    pairs = None
    if meet_rows:
        for label, (ln, row) in meet_rows.items():
            need(label, ln)
            if len(row) != len(elements):
                raise ParseError(ln, f"meet row {label!r} has {len(row)} entries, expected {len(elements)}")
            for v in row:
                need(v, ln)
        missing = [e for e in elements if e not in meet_rows]
        if missing:
            raise ParseError(end, f"missing meet row for {missing[0]!r}")
        meet = tuple(tuple(meet_rows[e][1]) for e in elements)
    else:
        pairs = tuple((need(a, ln), need(b, ln)) for ln, a, b in leq)

    if ops:
        names = set(ops)
        if not any(names == set(group) for group in OP_SETS):
            line = max(ln for ln, _ in ops.values())
            raise ParseError(line, "operators must be exactly {i, d} or {P, G, F, H}")
        for key, (ln, row) in ops.items():
            if len(row) != len(elements):
                raise ParseError(ln, f"operator {key!r} has {len(row)} entries, expected {len(elements)}")
            for v in row:
                need(v, ln)
    return AlgebraDocument(
        name=name,
        elements=tuple(elements),
        top=top[1],
        meet=meet,
        leq=pairs,
        ops={k: tuple(ops[k][1]) for k in OP_KEYS if k in ops},
    )


def load_document(path: str | Path) -> AlgebraDocument:
    return parse_document(Path(path).read_text())


def dump_document(doc: AlgebraDocument) -> str:
    """Inverse of :func:`parse_document` up to comments and whitespace."""
    lines = [f"name: {doc.name}", "elements: " + " ".join(doc.elements), f"top: {doc.top}"]
    if doc.meet is not None:
        for e, row in zip(doc.elements, doc.meet):
            lines.append(f"meet {e}: " + " ".join(row))
    else:
        lines.append("leq: " + " ".join(f"{a}<{b}" for a, b in doc.leq))
    for k, row in doc.ops.items():
        lines.append(f"op {k}: " + " ".join(row))
    return "\n".join(lines) + "\n"


def document_of(A: MeetSemilattice, name: str, ops: dict[str, tuple[int, ...]] | None = None) -> AlgebraDocument:
    """A meet-table document for an algebra built in code."""
    labels = tuple(A.label(a) for a in A.elements)
    return AlgebraDocument(
        name=name,
        elements=labels,
        top=labels[A.top],
        meet=tuple(tuple(labels[v] for v in row) for row in A.meet),
        ops={k: tuple(labels[v] for v in t) for k, t in (ops or {}).items()},
    )
