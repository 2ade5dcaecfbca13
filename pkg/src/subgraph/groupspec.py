"""Group-spec expressions and the plain-text group file formats.

Grammar (atoms are case-insensitive, ``x`` is a left-associative direct
product)::

    spec := atom ("x" atom)*
    atom := "C"<n> | "D"<n> | "S"<n> | "A"<n> | "Q8" | "@"<filepath>

``D<n>`` has order 2n. A file atom names either a permutation-generator file
or a Cayley-table file; see :func:`read_group_file`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .group import (
    Group,
    GroupError,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    make_cyclic,
    make_dihedral,
)


class SpecParseError(GroupError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.position = position
        self.line = line


@dataclass(frozen=True)
class Atom:
    kind: str  # one of C, D, S, A, Q, @
    value: int | str
    position: int

    @property
    def text(self) -> str:
        if self.kind == "Q":
            return "Q8"
        if self.kind == "@":
            return f"@{self.value}"
        return f"{self.kind}{self.value}"


@dataclass(frozen=True)
class GroupSpec:
    expression: str
    atoms: tuple[Atom, ...]

    @property
    def canonical(self) -> str:
        return "x".join(a.text for a in self.atoms)

    def build(self, max_order: int | None = None) -> Group:
        group = build_atom(self.atoms[0], max_order)
        for atom in self.atoms[1:]:
            group = direct_product(group, build_atom(atom, max_order), max_order)
        return group


_NUMERIC = re.compile(r"([CDSA])(\d*)", re.IGNORECASE)
# an "x" that starts a complete trailing product of non-file atoms
_FILE_END = re.compile(r"x(?=(?:[CDSA]\d+|Q8|@)(?:x|$))", re.IGNORECASE)


def parse_group_spec(text: str) -> GroupSpec:
    expr = text.strip()
    if not expr:
        raise SpecParseError("empty group spec", 0)
    atoms = []
    pos = 0
    while True:
        if pos >= len(expr):
            raise SpecParseError("expected an atom after 'x'", pos)
        ch = expr[pos]
        if ch == "@":
            m = _FILE_END.search(expr, pos + 1)
            end = m.start() if m else len(expr)
            path = expr[pos + 1 : end]
            if not path:
                raise SpecParseError("empty file path after '@'", pos)
            atoms.append(Atom("@", path, pos))
            pos = end
        elif expr[pos : pos + 2].upper() == "Q8":
            atoms.append(Atom("Q", 8, pos))
            pos += 2
        else:
            m = _NUMERIC.match(expr, pos)
            if not m:
                raise SpecParseError(f"unknown atom starting with {ch!r}", pos)
            if not m.group(2):
                raise SpecParseError(f"expected an integer after {m.group(1)!r}", pos + 1)
            n = int(m.group(2))
            if n < 1:
                raise SpecParseError(f"group parameter must be positive, got {n}", pos + 1)
            atoms.append(Atom(m.group(1).upper(), n, pos))
            pos = m.end()
        if pos == len(expr):
            break
        if expr[pos] not in "xX":
            raise SpecParseError(f"expected 'x' or end of spec, found {expr[pos]!r}", pos)
        pos += 1
    return GroupSpec(expr, tuple(atoms))


def _cycle(n: int) -> list[int]:
    return [(i + 1) % n for i in range(n)]


def _transposition(degree: int, a: int, b: int) -> list[int]:
    p = list(range(degree))
    p[a], p[b] = b, a
    return p


def _three_cycle(degree: int, a: int, b: int, c: int) -> list[int]:
    p = list(range(degree))
    p[a], p[b], p[c] = b, c, a
    return p


def make_symmetric(n: int, max_order: int | None = None) -> Group:
    gens = [] if n < 2 else [_transposition(n, 0, 1), _cycle(n)]
    return from_permutation_generators(n, gens, f"S{n}", max_order)


def make_alternating(n: int, max_order: int | None = None) -> Group:
    gens = [_three_cycle(n, 0, 1, k) for k in range(2, n)]
    return from_permutation_generators(n, gens, f"A{n}", max_order)


def make_quaternion(max_order: int | None = None) -> Group:
    """Q8 in its regular representation on 8 points."""
    i = parse_cycles("(0 1 2 3)(4 5 6 7)", 8)
    j = parse_cycles("(0 4 2 6)(1 7 3 5)", 8)
    return from_permutation_generators(8, [i, j], "Q8", max_order)


def build_atom(atom: Atom, max_order: int | None = None) -> Group:
    if atom.kind == "C":
        return make_cyclic(atom.value, max_order)
    if atom.kind == "D":
        return make_dihedral(atom.value, max_order)
    if atom.kind == "S":
        return make_symmetric(atom.value, max_order)
    if atom.kind == "A":
        return make_alternating(atom.value, max_order)
    if atom.kind == "Q":
        return make_quaternion(max_order)
    return read_group_file(atom.value, max_order)


def parse_cycles(text: str, degree: int, line: int | None = None) -> list[int]:
    """Image list of a permutation written in zero-based cycle notation."""
    perm = list(range(degree))
    seen: set[int] = set()
    pos = 0
    s = text.strip()
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "(":
            raise SpecParseError(f"expected '(' in cycle notation, found {s[pos]!r}", pos, line)
        close = s.find(")", pos)
        nested = s.find("(", pos + 1)
        if close < 0 or (0 <= nested < close):
            raise SpecParseError("unbalanced cycle", pos, line)
        body = s[pos + 1 : close].replace(",", " ").split()
        try:
            points = [int(x) for x in body]
        except ValueError:
            raise SpecParseError(f"non-integer point in cycle {s[pos:close + 1]!r}", pos, line) from None
        for x in points:
            if not 0 <= x < degree:
                raise SpecParseError(f"point {x} outside 0..{degree - 1}", pos, line)
            if x in seen:
                raise SpecParseError(f"point {x} repeated", pos, line)
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            perm[a] = b
        pos = close + 1
    return perm


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def parse_generator_text(text: str, label: str = "G", max_order: int | None = None) -> Group:
    lines = _data_lines(text)
    if not lines:
        raise SpecParseError("generator file is empty", line=1)
    lineno, first = lines[0]
    try:
        degree = int(first)
    except ValueError:
        raise SpecParseError(f"degree must be an integer, got {first!r}", line=lineno) from None
    gens = [parse_cycles(line, degree, n) for n, line in lines[1:]]
    return from_permutation_generators(degree, gens, label, max_order)


def parse_table_text(text: str, label: str = "G", max_order: int | None = None) -> Group:
    lines = _data_lines(text)
    if not lines:
        raise SpecParseError("Cayley-table file is empty", line=1)
    lineno, first = lines[0]
    try:
        n = int(first)
        rows = [[int(x) for x in line.split()] for _, line in lines[1:]]
    except ValueError as exc:
        raise SpecParseError(f"malformed Cayley table: {exc}", line=lineno) from None
    if len(rows) != n:
        raise SpecParseError(f"expected {n} table rows, found {len(rows)}", line=lineno)
    for r, row in enumerate(rows):
        if any(not 0 <= x < n for x in row):
            raise SpecParseError(f"entry outside 0..{n - 1}", line=lines[r + 1][0])
    return from_cayley_table(rows, label, max_order)


def read_group_file(path: str | Path, max_order: int | None = None) -> Group:
    """Load a permutation-generator or Cayley-table file.

    A file whose data lines (after the first) contain '(' or that has no data
    lines after the first is read as generators; otherwise as a table.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SpecParseError(f"cannot read group file {str(p)!r}: {exc.strerror}") from None
    label = f"user:{p.name}"
    body = _data_lines(text)[1:]
    if not body or any("(" in line for _, line in body):
        return parse_generator_text(text, label, max_order)
    return parse_table_text(text, label, max_order)
