"""STG v1, the line-oriented text format for stable graphs.

::

    stg v1
    vertices <V>
    w <w_0> ... <w_{V-1}>
    legs <l_0> ... <l_{V-1}>
    edge <i> <j>
    end

``#`` starts a comment.  :func:`dumps` writes edges as ``i <= j`` in the
graph's own order; :func:`dumps_canonical` relabels first.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Union

from .graph import GraphError, StableGraph, canonical_graph

HEADER = "stg v1"


class STGError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def dumps(G: StableGraph) -> str:
    lines = [
        HEADER,
        f"vertices {G.num_vertices}",
        " ".join(["w"] + [str(w) for w in G.weights]),
        " ".join(["legs"] + [str(x) for x in G.legs]),
    ]
    lines.extend(f"edge {i} {j}" for i, j in G.edges)
    lines.append("end")
    return "\n".join(lines) + "\n"


def dumps_canonical(G: StableGraph) -> str:
    return dumps(canonical_graph(G))


def _tokens(raw: str):
    """Split a line into (column, token) pairs, dropping comments."""
    cut = raw.find("#")
    if cut >= 0:
        raw = raw[:cut]
    out = []
    col = 0
    for part in raw.split(" "):
        if part.strip():
            out.append((col + 1 + (len(part) - len(part.lstrip())), part.strip()))
        col += len(part) + 1
    return out


def _int(tok, lineno):
    col, text = tok
    try:
        value = int(text)
    except ValueError:
        raise STGError(f"expected an integer, got {text!r}", lineno, col) from None
    if value < 0:
        raise STGError(f"expected a non-negative integer, got {value}", lineno, col)
    return value


def loads(text: str) -> StableGraph:
    lines = [(n, _tokens(raw)) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, toks) for n, toks in lines if toks]
    if not lines:
        raise STGError("empty input", 1)
    it = iter(lines)

    def expect(keyword, count=None):
        try:
            n, toks = next(it)
        except StopIteration:
            last = lines[-1][0]
            raise STGError(f"unexpected end of input, expected {keyword!r}", last + 1) from None
        if toks[0][1] != keyword:
            raise STGError(f"expected {keyword!r}, got {toks[0][1]!r}", n, toks[0][0])
        if count is not None and len(toks) - 1 != count:
            col = toks[-1][0] if len(toks) > 1 else toks[0][0]
            raise STGError(f"{keyword!r} needs {count} value(s), got {len(toks) - 1}", n, col)
        return n, toks

    n, toks = next(it)
    if " ".join(t for _, t in toks) != HEADER:
        raise STGError(f"expected header {HEADER!r}", n, toks[0][0])
    n, toks = expect("vertices", 1)
    nv = _int(toks[1], n)
    if nv == 0:
        raise STGError("a stable graph needs at least one vertex", n, toks[1][0])
    n, toks = expect("w", nv)
    weights = [_int(t, n) for t in toks[1:]]
    n, toks = expect("legs", nv)
    legs = [_int(t, n) for t in toks[1:]]
    edges: List = []
    for n, toks in it:
        key = toks[0][1]
        if key == "end":
            if len(toks) != 1:
                raise STGError("trailing tokens after 'end'", n, toks[1][0])
            break
        if key != "edge":
            raise STGError(f"expected 'edge' or 'end', got {key!r}", n, toks[0][0])
        if len(toks) != 3:
            raise STGError(f"'edge' needs 2 value(s), got {len(toks) - 1}", n, toks[0][0])
        i, j = _int(toks[1], n), _int(toks[2], n)
        for tok, x in ((toks[1], i), (toks[2], j)):
            if x >= nv:
                raise STGError(f"vertex {x} out of range 0..{nv - 1}", n, tok[0])
        edges.append((i, j))
    else:
        raise STGError("missing 'end'", lines[-1][0] + 1)
    for n, toks in it:
        raise STGError("content after 'end'", n, toks[0][0])
    try:
        return StableGraph(tuple(weights), tuple(legs), tuple(edges))
    except GraphError as exc:  # pragma: no cover - parser checks ranges first
        raise STGError(str(exc), n) from None


def load(path: Union[str, Path]) -> StableGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(G: StableGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(G), encoding="utf-8")
