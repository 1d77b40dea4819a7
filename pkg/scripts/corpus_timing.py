"""Time each corpus-wide check separately and print its tally line."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from slata.fixtures import fig1_eslata
from slata.suite import (
    corpus_adjointness,
    corpus_bijection,
    corpus_eslata,
    corpus_mutation,
    corpus_relations,
    corpus_space_axioms,
    corpus_unit_duality,
)
from slata.vietoris import DEFAULT_FAMILY_GATE


@dataclass
class Config:
    max_size: int = 5
    small_size: int = 4
    samples: int = 1000
    seed: int = 0
    gate: int = DEFAULT_FAMILY_GATE
    threshold: float = 0.95


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    for name, value in vars(Config()).items():
        parser.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    cfg = Config(**vars(parser.parse_args()))
    small = min(cfg.small_size, cfg.max_size)
    jobs = [
        ("adjointness", lambda: [corpus_adjointness(cfg.max_size)]),
        ("unit duality", lambda: list(corpus_unit_duality(cfg.max_size))),
        ("space axioms", lambda: [corpus_space_axioms(cfg.max_size)]),
        ("mutation", lambda: list(corpus_mutation(cfg.max_size))),
        ("bijection", lambda: [corpus_bijection(cfg.max_size, cfg.gate)]),
        ("relations", lambda: corpus_relations(small, cfg.samples, cfg.seed)),
        ("eslata", lambda: list(corpus_eslata(small, extra=[fig1_eslata()]))),
    ]
    for title, job in jobs:
        start = time.perf_counter()
        results = job()
        seconds = time.perf_counter() - start
        print(f"## {title} ({seconds:.1f}s)")
        for r in results:
            print("  " + (r.line(cfg.threshold) if hasattr(r, "monotone_rate") else r.line()))


if __name__ == "__main__":
    main()
