import logging
import os
import re
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from core.constants import QuiverKind
from core.exceptions import BadSign, ParseError
from core.linalg import RATIONALS, Matrix
from quivers.quiver import HalfEdge, Quiver, build_affine_a, build_cyclic
from representations.base import BaseRepresentation
from representations.rep import FullRep, Rep, rep_from_maps

logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r"^(\d+)>(\d+)(?:#(\d+))?$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(1-based line number, stripped line) for every line that is not blank or a comment."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((number, line))
    return lines


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError as err:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from err


def parse_quiver_text(text: str) -> Quiver:
    """Parse "affine-a n" followed by the orientation word (on the same or the next line), or "cyclic p".

    Raises:
        ParseError: Malformed header or orientation word.
        CyclicOrientation: The orientation word orients the cycle.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty quiver file", 1)
    number, header = lines[0]
    tokens = header.split()
    if tokens[0] == QuiverKind.Cyclic.value:
        if len(tokens) != 2:
            raise ParseError("expected 'cyclic p'", number, 1)
        return build_cyclic(_parse_int(tokens[1], number, len(tokens[0]) + 2))
    if tokens[0] != QuiverKind.AffineA.value:
        raise ParseError(f"unknown quiver kind {tokens[0]!r}", number, 1)
    if len(tokens) < 2:
        raise ParseError("expected 'affine-a n'", number, 1)
    n = _parse_int(tokens[1], number, len(tokens[0]) + 2)
    if len(tokens) == 3:
        word_line, word, column = number, tokens[2], header.index(tokens[2]) + 1
    elif len(tokens) == 2 and len(lines) >= 2:
        word_line, word = lines[1]
        column = 1
    else:
        raise ParseError("missing orientation word", number, len(header) + 1)
    try:
        return build_affine_a(n, word)
    except BadSign as err:
        raise ParseError(str(err), word_line, column + err.position) from err


def parse_quiver_file(path: str) -> Quiver:
    with open(path, encoding="utf-8") as f:
        return parse_quiver_text(f.read())


def serialize_quiver(q: Quiver) -> str:
    if q.kind == QuiverKind.Cyclic:
        return f"cyclic {q.size}\n"
    return f"affine-a {q.n}\n{q.orientation_word}\n"


def _resolve_label(q: Quiver, label: str, line: int) -> HalfEdge:
    match = LABEL_PATTERN.match(label)
    if match is None:
        raise ParseError(f"bad half-edge label {label!r}", line, 1)
    start, end = int(match.group(1)), int(match.group(2))
    candidates = [h for h in q.half_edges if h.start == start and h.end == end]
    if match.group(3) is not None:
        candidates = [h for h in candidates if h.edge == int(match.group(3))]
    if not candidates:
        raise ParseError(f"{q} has no half-edge {label!r}", line, 1)
    if len(candidates) > 1:
        raise ParseError(f"half-edge {label!r} is ambiguous, add '#edge'", line, 1)
    return candidates[0]


def _parse_matrix(text: str, rows: int, cols: int, line: int, column: int) -> Matrix:
    grid: List[List[Fraction]] = []
    for chunk in text.split(";") if text.strip() else []:
        values = []
        for token in re.split(r"[,\s]+", chunk.strip()):
            if not token:
                continue
            try:
                values.append(Fraction(token))
            except (ValueError, ZeroDivisionError) as err:
                raise ParseError(f"bad matrix entry {token!r}", line, column) from err
        grid.append(values)
    if len(grid) != rows or any(len(row) != cols for row in grid):
        shape = (len(grid), len(grid[0]) if grid else 0)
        raise ParseError(f"matrix of shape {shape} where {rows}x{cols} is expected", line, column)
    return Matrix.from_rows(grid, RATIONALS, cols=cols)


def parse_rep_text(text: str, base_dir: str = ".") -> Union[Rep, FullRep]:
    """Parse a representation file.

    The header is ``rep <quiver-file> <d0,d1,...>`` with the quiver path
    relative to ``base_dir``; every further line is ``label: rows`` with rows
    separated by ';'. Missing maps are zero; maps on bar half-edges make the
    result a FullRep.

    Raises:
        ParseError: Malformed header, label or matrix.
        OSError: The quiver file cannot be read.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty representation file", 1)
    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != "rep":
        raise ParseError("expected 'rep <quiver-file> <dims>'", number, 1)
    q = parse_quiver_file(os.path.join(base_dir, tokens[1]))
    dims_column = header.rindex(tokens[2]) + 1
    dims = tuple(_parse_int(token, number, dims_column) for token in tokens[2].split(","))
    if len(dims) != q.size or any(d < 0 for d in dims):
        raise ParseError(f"dimension vector {dims} does not fit {q}", number, dims_column)

    maps: Dict[int, Matrix] = {}
    for number, line in lines[1:]:
        if ":" not in line:
            raise ParseError("expected 'label: matrix'", number, 1)
        label, body = line.split(":", 1)
        half_edge = _resolve_label(q, label.strip(), number)
        if half_edge.id in maps:
            raise ParseError(f"map on {half_edge.label} given twice", number, 1)
        maps[half_edge.id] = _parse_matrix(
            body, dims[half_edge.end], dims[half_edge.start], number, len(label) + 2
        )

    if all(q.is_arrow(h) for h in maps):
        return rep_from_maps(q, dims, maps)
    full = {}
    for half_edge in q.half_edges:
        full[half_edge.id] = maps.get(half_edge.id, Matrix.zeros(dims[half_edge.end], dims[half_edge.start]))
    return FullRep(q, dims, full)


def parse_rep_file(path: str) -> Union[Rep, FullRep]:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    logger.debug(f"parsing representation file {path}")
    return parse_rep_text(text, os.path.dirname(os.path.abspath(path)))


def serialize_rep(rep: BaseRepresentation, quiver_path: str) -> str:
    """Inverse of parse_rep_text; zero maps are written too so the file is explicit."""
    lines = [f"rep {quiver_path} {','.join(map(str, rep.dims))}"]
    for half_edge in rep.carried:
        matrix = rep.maps[half_edge.id]
        if matrix.is_empty:
            continue
        lines.append(f"{half_edge.label}: {matrix.format_rows()}")
    return "\n".join(lines) + "\n"
