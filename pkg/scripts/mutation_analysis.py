"""Why one-entry mutants of adjoint tables can escape the dual-space check.

For each size, counts mutants that break the equational adjointness test and
splits them by whether the mutated table is still monotone. A non-monotone
mutant whose relation R_f coincides with the original's produces an identical
dual, so no space-side check can reject it; those are counted as "invisible".
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from slata.adjunction import equational_adjoint_check
from slata.corpus import corpus
from slata.order import is_monotone
from slata.space import relation_from_map
from slata.suite import mutants, slata_space_verdict, slatas_of


@dataclass
class Config:
    min_size: int = 2
    max_size: int = 4


@dataclass
class Row:
    size: int
    broken: int = 0
    detected: int = 0
    monotone: int = 0
    monotone_detected: int = 0
    invisible: int = 0

    def render(self) -> str:
        rate = self.detected / self.broken if self.broken else 1.0
        mono = self.monotone_detected / self.monotone if self.monotone else 1.0
        return (
            f"{self.size:>4} {self.broken:>8} {self.detected:>8} {rate:>7.2%}"
            f" {self.monotone:>9} {mono:>8.2%} {self.invisible:>9}"
        )


def analyse(size: int) -> Row:
    row = Row(size)
    for A in corpus(size, size):
        for S in slatas_of(A):
            base = [relation_from_map(A, A, f).images for f in S.ops]
            for i, d in mutants(S):
                if equational_adjoint_check(A, i, d).ok:
                    continue
                row.broken += 1
                caught = not slata_space_verdict(A, i, d)
                row.detected += caught
                if is_monotone(A, A, i).ok and is_monotone(A, A, d).ok:
                    row.monotone += 1
                    row.monotone_detected += caught
                elif [relation_from_map(A, A, f).images for f in (i, d)] == base:
                    row.invisible += 1
    return row


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-size", type=int, default=Config.min_size)
    parser.add_argument("--max-size", type=int, default=Config.max_size)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(parser.parse_args()).items()})
    print(f"{'size':>4} {'broken':>8} {'caught':>8} {'rate':>7} {'monotone':>9} {'m-rate':>8} {'invisible':>9}")
    total = Row(0)
    for n in range(cfg.min_size, cfg.max_size + 1):
        row = analyse(n)
        print(row.render())
        for f in ("broken", "detected", "monotone", "monotone_detected", "invisible"):
            setattr(total, f, getattr(total, f) + getattr(row, f))
    print("-" * 58)
    print("all " + total.render()[4:])


if __name__ == "__main__":
    main()
