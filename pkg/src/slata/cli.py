"""Command-line front end.

Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 input error,
3 size limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .adjunction import Slata, equational_adjoint_check, is_adjoint_pair
from .corpus import semilattices
from .docformat import AlgebraDocument, ParseError, build_algebra, load_document
from .filters import beta_table, irreducible_filters
from .order import Check, MeetSemilattice, SemilatticeError, SizeLimitExceeded, members
from .space import (
    AxiomFailed,
    algebra_of_slata_space,
    beta_index,
    counit_check,
    dual_space,
    relation_from_map,
    verify_ms_space,
    verify_s_space,
    verify_slata_space,
)
from .suite import (
    corpus_adjointness,
    corpus_bijection,
    corpus_eslata,
    corpus_mutation,
    corpus_relations,
    corpus_space_axioms,
    corpus_unit_duality,
    is_beta_isomorphism,
    operator_unit,
    unit_duality,
)
from .tense import (
    OP_NAMES,
    ESlata,
    check_derived_identities,
    eslata_report,
    round_trip,
    verify_eslata_space,
)
from .vietoris import (
    DEFAULT_FAMILY_GATE,
    congruence_from_family,
    enumerate_congruences,
    enumerate_vietoris_families,
    family_from_congruence,
    is_vietoris_family,
    quotient,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3
CORPUS_CEILING = 5
MUTATION_THRESHOLD = 0.95
SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def plain(obj: object) -> object:
    """Convert witnesses and artifacts to JSON-compatible values deterministically."""
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((plain(v) for v in obj), key=lambda v: json.dumps(v))
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    return str(obj)


@dataclass
class CommandReport:
    command: str
    subject: str
    verdicts: list[dict] = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)
    seconds: float | None = None

    def check(self, name: str, ok: bool, witness: object = None) -> bool:
        self.verdicts.append({"check": name, "pass": bool(ok), "witness": plain(witness) if not ok else None})
        return bool(ok)

    def add(self, chk: Check, prefix: str = "") -> bool:
        return self.check(prefix + chk.name, chk.ok, chk.witness)

    @property
    def ok(self) -> bool:
        return all(v["pass"] for v in self.verdicts)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "subject": self.subject,
            "ok": self.ok,
            "verdicts": self.verdicts,
            "artifacts": plain(self.artifacts),
        }
        if timing and self.seconds is not None:
            out["timing"] = {"seconds": round(self.seconds, 3)}
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    def to_text(self, timing: bool = True) -> str:
        lines = [f"{self.command}: {self.subject}"]
        for v in self.verdicts:
            line = f"  {'PASS' if v['pass'] else 'FAIL'} {v['check']}"
            if not v["pass"] and v["witness"] is not None:
                line += f"  witness={json.dumps(v['witness'])}"
            lines.append(line)
        for key, val in plain(self.artifacts).items():
            lines.append(f"  {key}: {json.dumps(val)}")
        passed = sum(v["pass"] for v in self.verdicts)
        lines.append(f"verdict: {'PASS' if self.ok else 'FAIL'} ({passed}/{len(self.verdicts)} checks)")
        if timing and self.seconds is not None:
            lines.append(f"time: {self.seconds:.3f}s")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _load(args: argparse.Namespace) -> tuple[AlgebraDocument, CommandReport]:
    doc = load_document(args.file)
    return doc, CommandReport(args.command, doc.name)


def _algebra(doc: AlgebraDocument, rep: CommandReport, limit: int) -> MeetSemilattice | None:
    """Build the algebra, recording the semilattice verdict; None when the laws fail."""
    if len(doc.elements) > limit:
        raise SizeLimitExceeded(f"carrier of size {len(doc.elements)} exceeds limit {limit}")
    try:
        A = build_algebra(doc)
    except SemilatticeError as exc:
        witness = {"law": type(exc).__name__, "elements": [doc.elements[k] for k in exc.witness]}
        rep.check("semilattice", False, witness)
        return None
    rep.check("semilattice", True)
    return A


def _labelled(A: MeetSemilattice, witness: object) -> object:
    """Element witnesses rendered with labels: ints become labels, nesting is kept."""
    if isinstance(witness, int) and not isinstance(witness, bool) and 0 <= witness < A.size:
        return A.label(witness)
    if isinstance(witness, (tuple, list)):
        return [_labelled(A, w) for w in witness]
    return witness


def _operator_checks(A: MeetSemilattice, doc: AlgebraDocument, rep: CommandReport) -> bool:
    kind, ops = doc.op_kind(), doc.op_tables()
    if kind == "slata":
        i, d = ops
        adj = is_adjoint_pair(A, A, i, d)
        rep.check("adjoint", adj.ok, _labelled(A, adj.witness))
        eq = equational_adjoint_check(A, i, d)
        w = eq.witness
        if w is not None:
            w = [w[0], _labelled(A, w[1])]
        rep.check("equational-adjoint", eq.ok, w)
        return adj.ok and eq.ok
    if kind == "eslata":
        report = eslata_report(A, *ops)
        for chk in report:
            w = chk.witness
            if chk.name != "formulations-agree":
                w = _labelled(A, w)
            rep.check(chk.name, chk.ok, w)
        if report.ok:
            for chk in check_derived_identities(ESlata(A, *ops)):
                rep.check(chk.name, chk.ok, _labelled(A, chk.witness))
        return report.ok
    return True


def _points(A: MeetSemilattice) -> list[list[str]]:
    return [[A.label(a) for a in members(P)] for P in irreducible_filters(A)]


def _pointlist(mask: int) -> list[int]:
    return members(mask)


def _relations(A: MeetSemilattice, doc: AlgebraDocument) -> dict[str, object]:
    names = [k for k in ("i", "d", "P", "G", "F", "H") if k in doc.ops]
    return {k: relation_from_map(A, A, t) for k, t in zip(names, doc.op_tables())}


def _gate_ops(A: MeetSemilattice, doc: AlgebraDocument) -> tuple[tuple[int, ...], ...]:
    """Operators used for congruence and Vietoris work; identities when none are given."""
    if doc.op_kind() == "none":
        ident = tuple(A.elements)
        return (ident, ident)
    return doc.op_tables()


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args: argparse.Namespace) -> CommandReport:
    doc, rep = _load(args)
    A = _algebra(doc, rep, args.max_size)
    if A is None:
        return rep
    _operator_checks(A, doc, rep)
    covers = [
        [A.label(a), A.label(b)]
        for a in A.elements
        for b in members(A.up[a] & ~(1 << a))
        if not any(c != b and A.leq(c, b) for c in members(A.up[a] & ~(1 << a)))
    ]
    rep.artifacts = {"size": A.size, "top": A.label(A.top), "bottom": A.label(A.bottom), "covers": covers}
    return rep


def cmd_dualize(args: argparse.Namespace) -> CommandReport:
    doc, rep = _load(args)
    A = _algebra(doc, rep, args.max_size)
    if A is None:
        return rep
    X = dual_space(A)
    for chk in verify_s_space(X):
        rep.add(chk, "S-space:")
    rels = _relations(A, doc)
    for name, R in rels.items():
        for chk in verify_ms_space(X, R, name):
            rep.add(chk, "mS-space:")
    if doc.op_kind() == "slata":
        for chk in verify_slata_space(X, rels["i"], rels["d"]):
            rep.add(chk, "SLata-space:")
    elif doc.op_kind() == "eslata":
        for chk in verify_eslata_space(X, *(rels[k] for k in ("P", "G", "F", "H"))):
            rep.add(chk, "ESLata-space:")
    bt = beta_table(A)
    rep.artifacts = {
        "points": _points(A),
        "subbase": [_pointlist(U) for U in X.subbase],
        "closed": {A.label(a): _pointlist(bt[a]) for a in A.elements},
        "relations": {
            name: [[x, [_pointlist(Z) for Z in sorted(img, key=lambda Z: (bin(Z).count("1"), members(Z)))]]
                   for x, img in enumerate(R.images)]
            for name, R in rels.items()
        },
    }
    return rep


def _blocks(A: MeetSemilattice, theta: Sequence[int]) -> list[list[str]]:
    return [[A.label(a) for a in A.elements if theta[a] == b] for b in range(max(theta) + 1)]


def _family(F: Sequence[int]) -> list[list[int]]:
    return [_pointlist(Y) for Y in F]


def cmd_congruences(args: argparse.Namespace) -> CommandReport:
    doc, rep = _load(args)
    A = _algebra(doc, rep, args.max_size)
    if A is None or not _operator_checks(A, doc, rep):
        return rep
    ops = _gate_ops(A, doc)
    cons = enumerate_congruences(A, ops, limit=args.max_size)
    X = dual_space(A)
    rels = [relation_from_map(A, A, f) for f in ops]
    listing = []
    bad_trip, bad_family = [], []
    for theta in cons:
        B, _, _ = quotient(A, ops, theta)
        F = family_from_congruence(A, ops, theta)
        if congruence_from_family(A, F) != theta:
            bad_trip.append(_blocks(A, theta))
        for k in range(0, len(rels), 2):
            if not is_vietoris_family(X, rels[k], rels[k + 1], F):
                bad_family.append(_blocks(A, theta))
        listing.append({"blocks": _blocks(A, theta), "quotient-size": B.size, "family": _family(F)})
    rep.check("family-is-vietoris", not bad_family, bad_family[:1])
    rep.check("round-trip-congruence", not bad_trip, bad_trip[:1])
    rep.artifacts = {"count": len(cons), "congruences": listing}
    return rep


def cmd_vietoris(args: argparse.Namespace) -> CommandReport:
    doc, rep = _load(args)
    if doc.op_kind() == "eslata":
        raise InputError("vietoris works on documents with operators i, d or without operators")
    A = _algebra(doc, rep, args.max_size)
    if A is None or not _operator_checks(A, doc, rep):
        return rep
    ops = _gate_ops(A, doc)
    fams = enumerate_vietoris_families(A, ops, args.gate)
    cons = enumerate_congruences(A, ops, limit=args.max_size)
    rep.check("count-match", len(fams) == len(cons), {"families": len(fams), "congruences": len(cons)})
    bad = []
    listing = []
    for F in fams:
        theta = congruence_from_family(A, F)
        if family_from_congruence(A, ops, theta) != F:
            bad.append(_family(F))
        listing.append({"family": _family(F), "blocks": _blocks(A, theta)})
    rep.check("round-trip-family", not bad, bad[:1])
    rep.artifacts = {"count": len(fams), "candidates": sum(1 for Y in dual_space(A).closure_system if Y),
                     "families": listing}
    return rep


def cmd_verify_duality(args: argparse.Namespace) -> CommandReport:
    doc, rep = _load(args)
    A = _algebra(doc, rep, args.max_size)
    if A is None or not _operator_checks(A, doc, rep):
        return rep
    X = dual_space(A)
    rep.check("beta-isomorphism", is_beta_isomorphism(A))
    rels = list(_relations(A, doc).values())
    kind = doc.op_kind()
    if kind == "slata":
        S = Slata(A, *doc.op_tables())
        rep.check("unit", unit_duality(S))
        try:
            back = algebra_of_slata_space(X, *rels)
            b = beta_index(A)
            same = all(b[f[a]] == g[b[a]] for f, g in zip(S.ops, back.ops) for a in A.elements)
            rep.check("operators-recovered", same)
        except AxiomFailed as exc:
            rep.check("operators-recovered", False, exc.axiom)
    elif kind == "eslata":
        E = ESlata(A, *doc.op_tables())
        for name, f in zip(OP_NAMES, E.ops):
            rep.check(f"unit-{name}", operator_unit(A, f))
        rep.add(round_trip(E))
    for chk in counit_check(X, rels):
        rep.add(chk)
    bt = beta_table(A)
    rep.artifacts = {
        "beta": {A.label(a): _pointlist(bt[a]) for a in A.elements},
        "points": _points(A),
    }
    return rep


def cmd_corpus(args: argparse.Namespace) -> CommandReport:
    n = args.max_size
    if n > CORPUS_CEILING:
        raise SizeLimitExceeded(f"corpus size {n} exceeds ceiling {CORPUS_CEILING}")
    if n < 2:
        raise InputError("corpus needs --max-size of at least 2")
    rep = CommandReport("corpus", f"labeled meet-semilattices of size 2..{n}")
    small = min(n, 4)

    def tally(t) -> None:
        rep.check(t.name, t.ok, {"checked": t.checked, "failed": t.failed, "examples": t.examples[:1]})

    tally(corpus_adjointness(n))
    for t in corpus_unit_duality(n):
        tally(t)
    tally(corpus_space_axioms(n))
    stats, bic = corpus_mutation(n)
    rep.check("mutation-detection", stats.rate >= MUTATION_THRESHOLD, {
        "detected": stats.detected, "broken": stats.broken, "rate": round(stats.rate, 4),
        "monotone-detected": stats.monotone_detected, "monotone-broken": stats.monotone_broken,
    })
    tally(bic)
    tally(corpus_bijection(n, args.gate))
    for t in corpus_relations(small, args.samples, args.seed):
        tally(t)
    for t in corpus_eslata(small):
        tally(t)
    rep.artifacts = {"labeled-counts": {str(k): len(semilattices(k)) for k in range(1, n + 1)},
                     "seed": args.seed, "samples": args.samples}
    return rep


COMMANDS: dict[str, Callable[[argparse.Namespace], CommandReport]] = {
    "validate": cmd_validate,
    "dualize": cmd_dualize,
    "congruences": cmd_congruences,
    "vietoris": cmd_vietoris,
    "verify-duality": cmd_verify_duality,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", type=Path, help="write the report to this file instead of stdout")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")
    common.add_argument("--gate", type=int, default=DEFAULT_FAMILY_GATE,
                        help="largest number of candidate family members scanned")

    parser = argparse.ArgumentParser(prog="slata", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "dualize", "congruences", "vietoris", "verify-duality"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", type=Path)
        p.add_argument("--max-size", type=int, default=16)
    p = sub.add_parser("corpus", parents=[common])
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rep = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitExceeded as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    rep.seconds = time.perf_counter() - start
    timing = not args.no_timing
    text = rep.to_json(timing) if args.format == "json" else rep.to_text(timing)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
