"""Cayley table text format.

::

    # comment lines start with '#'
    3
    x y z
    x y z
    y z x
    z x y

Line 1 is the order, line 2 the labels, then one row per element (row is the
left operand).  Blank lines and comment lines are skipped.
"""

from importlib import resources
from pathlib import Path

from .core import FiniteGroupoid
from .errors import ParseError

FIXTURE_NAMES = ("ex2", "sub5", "add5", "add4", "add3", "sl2", "lz2", "infl3", "z2", "trivial")


def parse_table(text):
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped.split()))
    if not lines:
        raise ParseError("empty input")
    lineno, tokens = lines[0]
    if len(tokens) != 1:
        raise ParseError("first line must hold only the order", lineno)
    try:
        n = int(tokens[0])
    except ValueError:
        raise ParseError(f"order must be an integer, got {tokens[0]!r}", lineno, 1) from None
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", lineno, 1)
    if len(lines) < 2:
        raise ParseError("missing label line", lineno + 1)
    lineno, labels = lines[1]
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", lineno)
    seen = {}
    for col, lab in enumerate(labels, start=1):
        if lab in seen:
            raise ParseError(f"duplicate label {lab!r}", lineno, col)
        seen[lab] = col - 1
    rows = lines[2:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise ParseError(f"expected {n} table rows, got {len(rows)}", last)
    table = []
    for lineno, tokens in rows:
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, got {len(tokens)}", lineno)
        row = []
        for col, tok in enumerate(tokens, start=1):
            if tok not in seen:
                raise ParseError(f"unknown label {tok!r}", lineno, col)
            row.append(seen[tok])
        table.append(row)
    return FiniteGroupoid(table, labels)


def serialize(g):
    labels = [g.label(x) for x in g.elements()]
    out = [str(g.order), " ".join(labels)]
    for row in g.rows:
        out.append(" ".join(labels[v] for v in row))
    return "\n".join(out) + "\n"


def read_table(path):
    return parse_table(Path(path).read_text(encoding="utf-8"))


def write_table(g, path):
    Path(path).write_text(serialize(g), encoding="utf-8")


def fixture_text(name):
    return resources.files("aglab.fixtures").joinpath(f"{name}.tbl").read_text(encoding="utf-8")


def load_fixture(name):
    return parse_table(fixture_text(name))
