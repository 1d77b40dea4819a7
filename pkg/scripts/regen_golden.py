"""Regenerate the golden CLI reports under tests/golden.

Run after an intentional change to the report format, then review the diff.
"""
from __future__ import annotations

import contextlib
import io
from importlib import resources
from pathlib import Path

from slata.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
FIXTURES = ("fig1", "c2", "d4")
COMMANDS = ("validate", "dualize", "congruences", "vietoris", "verify-duality")


def render(command: str, fixture: str, fmt: str = "json") -> tuple[int, str]:
    path = resources.files("slata") / "data" / f"{fixture}.alg"
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main([command, str(path), "--format", fmt, "--no-timing"])
    return code, buf.getvalue()


def cases():
    for fixture in FIXTURES:
        for command in COMMANDS:
            if fixture == "fig1" and command == "vietoris":
                continue
            yield command, fixture, "json"
    yield "validate", "fig1", "text"


def main_() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for command, fixture, fmt in cases():
        code, out = render(command, fixture, fmt)
        name = f"{fixture}.{command}.{'json' if fmt == 'json' else 'txt'}"
        (GOLDEN / name).write_text(out)
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main_()
