"""Built-in algebras used by the tests and the CLI."""
from __future__ import annotations

from .adjunction import Slata
from .order import MeetSemilattice
from .tense import ESlata, validate_eslata

FIG1_LABELS = ("0", "a", "b", "c", "d", "e", "f", "g", "1")
FIG1_COVERS = (
    ("0", "a"), ("0", "b"),
    ("a", "c"), ("a", "d"), ("b", "d"), ("b", "e"),
    ("c", "f"), ("d", "f"), ("d", "g"), ("e", "g"),
    ("f", "1"), ("g", "1"),
)
FIG1_TABLES = {
    "G": "0 0 b 0 d e d g 1",
    "H": "0 a 0 c d 0 f d 1",
    "F": "0 a d c d 1 f 1 1",
    "P": "0 d b 1 d e 1 g 1",
}


def _ix(labels, word: str) -> tuple[int, ...]:
    return tuple(labels.index(w) for w in word.split())


def fig1_algebra() -> MeetSemilattice:
    L = FIG1_LABELS
    return MeetSemilattice.from_leq(
        len(L), [(L.index(a), L.index(b)) for a, b in FIG1_COVERS], L
    )


def fig1_eslata() -> ESlata:
    A = fig1_algebra()
    t = {k: _ix(FIG1_LABELS, v) for k, v in FIG1_TABLES.items()}
    return validate_eslata(A, t["P"], t["G"], t["F"], t["H"])


def chain(n: int) -> MeetSemilattice:
    return MeetSemilattice(tuple(tuple(min(a, b) for b in range(n)) for a in range(n)), n - 1,
                           tuple(str(k) for k in range(n)))


def c2() -> MeetSemilattice:
    return chain(2)


def one() -> MeetSemilattice:
    return chain(1)


def d4() -> MeetSemilattice:
    """``{0, a, b, 1}`` with ``a`` and ``b`` incomparable."""
    return MeetSemilattice.from_leq(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ("0", "a", "b", "1"))


def powerset(k: int) -> MeetSemilattice:
    """Subsets of ``{0..k-1}`` under intersection; element ``m`` is the subset with bitmask ``m``."""
    n = 1 << k
    labels = tuple("{" + "".join("ab"[j] if k <= 2 else str(j) for j in range(k) if m >> j & 1) + "}"
                   for m in range(n))
    return MeetSemilattice(tuple(tuple(x & y for y in range(n)) for x in range(n)), n - 1, labels)


def c2_identity() -> Slata:
    return Slata.make(c2(), (0, 1), (0, 1))


def c2_constants() -> Slata:
    """``i = const 0``, ``d = const 1``."""
    return Slata.make(c2(), (0, 0), (1, 1))
