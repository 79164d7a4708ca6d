"""The line-oriented relation file format.

    field gf <p>        or   field q
    dims <dom_dim> <cod_dim>
    gen <s_1> ... <s_{dom_dim+cod_dim}>     (zero or more)

``#`` starts a comment, blank lines are ignored.  Scalars are integers, or
``a/b`` over Q.
"""

from __future__ import annotations

from pathlib import Path

from .errors import BadScalar, ParseError
from .field import FieldSpec, QQ
from .relation import LinearRelation


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _parse_dim(tok: str, col: int, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(f"dimension must be a non-negative integer, got {tok!r}", lineno, col)
    return int(tok)


def parse_relation(text: str) -> LinearRelation:
    field: FieldSpec | None = None
    dims: tuple[int, int] | None = None
    rows = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        toks = _tokens(raw.split("#", 1)[0])
        if not toks:
            continue
        (head, hcol), rest = toks[0], toks[1:]
        if field is None:
            if head != "field":
                raise ParseError(f"expected 'field gf <p>' or 'field q', got {head!r}", lineno, hcol)
            words = [t for t, _ in rest]
            if words == ["q"]:
                field = QQ
            elif len(words) == 2 and words[0] == "gf":
                field = FieldSpec(_parse_dim(rest[1][0], rest[1][1], lineno))
            else:
                raise ParseError("malformed field line", lineno, hcol)
            continue
        if dims is None:
            if head != "dims" or len(rest) != 2:
                raise ParseError("expected 'dims <dom_dim> <cod_dim>'", lineno, hcol)
            dims = (_parse_dim(*rest[0], lineno), _parse_dim(*rest[1], lineno))
            continue
        if head != "gen":
            raise ParseError(f"expected 'gen', got {head!r}", lineno, hcol)
        width = dims[0] + dims[1]
        if len(rest) != width:
            raise ParseError(f"gen row {len(rows) + 1} has {len(rest)} entries, expected {width}", lineno, hcol)
        row = []
        for tok, col in rest:
            try:
                row.append(field.parse(tok))
            except BadScalar as exc:
                raise BadScalar(f"line {lineno}, column {col}: {exc}") from None
        rows.append(tuple(row))
    if field is None:
        raise ParseError("missing field line", max(last_line, 1))
    if dims is None:
        raise ParseError("missing dims line", max(last_line, 1))
    return LinearRelation.from_generators(field, dims[0], dims[1], rows)


def serialize_relation(r: LinearRelation, comment: str | None = None) -> str:
    f = r.field
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"field gf {f.p}" if f.is_prime_field else "field q")
    lines.append(f"dims {r.dom_dim} {r.cod_dim}")
    for row in r.graph.basis:
        lines.append("gen " + " ".join(f.format(a) for a in row) if row else "gen")
    return "\n".join(lines) + "\n"


def read_relation(path: str | Path) -> LinearRelation:
    return parse_relation(Path(path).read_text(encoding="utf-8"))


def write_relation(path: str | Path, r: LinearRelation, comment: str | None = None) -> None:
    Path(path).write_text(serialize_relation(r, comment), encoding="utf-8")
