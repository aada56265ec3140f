"""Line-oriented text format for exact matrices.

::

    field GF:7
    size 4 4
    block 2
    0 0 1 2
    0 0 3 4
    1 0 5 6
    0 1 0 0

``block`` is optional. Blank lines and ``#`` comments are ignored. Elements
are written in canonical form, so writing then reading is lossless.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .field import FieldSpec
from .matrix import Matrix


@dataclass(frozen=True)
class MatrixFile:
    matrix: Matrix
    block_size: int | None = None

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field


def dumps(matrix: Matrix, block_size: int | None = None) -> str:
    lines = [f"field {matrix.field.tag}", f"size {matrix.rows} {matrix.cols}"]
    if block_size is not None:
        lines.append(f"block {block_size}")
    lines.extend(" ".join(str(x) for x in row) for row in matrix.raw_rows())
    return "\n".join(lines) + "\n"


def _header(line: str, key: str, nargs: int) -> list[str]:
    parts = line.split()
    if not parts or parts[0] != key or len(parts) != nargs + 1:
        raise ParseError(f"expected '{key}' header with {nargs} value(s), got {line!r}")
    return parts[1:]


def _positive(s: str, what: str) -> int:
    if not s.isdigit() or int(s) < 1:
        raise ParseError(f"{what} must be a positive integer, got {s!r}")
    return int(s)


def loads(text: str) -> MatrixFile:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise ParseError("missing 'field' and 'size' headers")
    field = FieldSpec.from_tag(_header(lines[0], "field", 1)[0])
    r, c = _header(lines[1], "size", 2)
    rows, cols = _positive(r, "row count"), _positive(c, "column count")
    body = lines[2:]
    block = None
    if body and body[0].split()[0] == "block":
        block = _positive(_header(body[0], "block", 1)[0], "block size")
        body = body[1:]
    if len(body) != rows:
        raise ParseError(f"declared {rows} rows, found {len(body)}")
    data = []
    for k, ln in enumerate(body):
        cells = ln.split()
        if len(cells) != cols:
            raise ParseError(f"row {k}: declared {cols} columns, found {len(cells)}")
        data.append([field.parse(s) for s in cells])
    return MatrixFile(Matrix(field, data), block)


def read(path: str | Path) -> MatrixFile:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(path: str | Path, matrix: Matrix, block_size: int | None = None) -> None:
    Path(path).write_text(dumps(matrix, block_size), encoding="utf-8")
