"""Per-isomorphism-class census of the small corpus.

For each unlabeled meet-semilattice with top: spectrum size, |C_K|, number of
adjoint pairs, and the spread of congruence counts across its SLatas (which
equal the Vietoris family counts whenever |C_K| is within the gate).
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from slata.corpus import semilattices
from slata.order import SizeLimitExceeded
from slata.space import dual_space
from slata.suite import slatas_of
from slata.tense import enumerate_eslatas
from slata.vietoris import DEFAULT_FAMILY_GATE, enumerate_vietoris_families, slata_congruences


@dataclass
class Config:
    max_size: int = 5
    gate: int = DEFAULT_FAMILY_GATE
    eslata_max: int = 4


def covers(A) -> str:
    lab = [str(a) for a in A.elements]
    out = []
    for a in A.elements:
        for b in A.elements:
            if a != b and A.leq(a, b) and not any(
                c not in (a, b) and A.leq(a, c) and A.leq(c, b) for c in A.elements
            ):
                out.append(f"{lab[a]}<{lab[b]}")
    return " ".join(out) or "-"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=Config.max_size)
    parser.add_argument("--gate", type=int, default=Config.gate)
    args = parser.parse_args()
    cfg = Config(args.max_size, args.gate)
    print(f"{'n':>2} {'pts':>3} {'C_K':>3} {'pairs':>5} {'eslatas':>7} {'congr':>9} {'families':>8}  covers")
    for n in range(1, cfg.max_size + 1):
        for A in semilattices(n, labeled=False):
            X = dual_space(A)
            Ss = slatas_of(A)
            counts = [len(slata_congruences(S)) for S in Ss]
            try:
                match = all(
                    len(enumerate_vietoris_families(A, S.ops, cfg.gate)) == c for S, c in zip(Ss, counts)
                )
                fam = "equal" if match else "DIFFER"
            except SizeLimitExceeded:
                fam = "gated"
            es = len(enumerate_eslatas(A)) if n <= cfg.eslata_max else "-"
            spread = f"{min(counts)}..{max(counts)}"
            print(f"{n:>2} {X.n:>3} {len(X.closure_system):>3} {len(Ss):>5} {es!s:>7} {spread:>9} {fam:>8}  {covers(A)}")


if __name__ == "__main__":
    main()
