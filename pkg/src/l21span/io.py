"""Text formats: edge lists, DIMACS graphs and labelings."""

from __future__ import annotations

from .graph import Graph, GraphError

FORMATS = ("edgelist", "dimacs")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _ints(fields, lineno):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def _build(n, edges, declared_m, header_line):
    # edges carry their source line so errors point at the offending record
    g_edges = []
    seen = set()
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range in edge {u} {v}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        g_edges.append((u, v))
    if declared_m is not None and declared_m != len(g_edges):
        raise ParseError(f"header declares {declared_m} edges but {len(g_edges)} were given", header_line)
    try:
        return Graph(n, g_edges)
    except GraphError as exc:
        raise ParseError(str(exc), header_line) from None


def parse_edgelist(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("malformed header, expected 'n m'", lineno)
            n, m = _ints(fields, lineno)
            if n < 0 or m < 0:
                raise ParseError("malformed header, negative count", lineno)
            header = (n, m, lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _ints(fields, lineno)
        edges.append((lineno, u, v))
    if header is None:
        raise ParseError("missing header line 'n m'")
    n, m, header_line = header
    return _build(n, edges, m, header_line)


def parse_dimacs(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second 'p' line", lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("malformed header, expected 'p edge n m'", lineno)
            n, m = _ints(fields[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError("malformed header, negative count", lineno)
            header = (n, m, lineno)
        elif fields[0] == "e":
            if header is None:
                raise ParseError("edge before 'p edge' header", lineno)
            if len(fields) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", lineno)
            u, v = _ints(fields[1:], lineno)
            edges.append((lineno, u - 1, v - 1))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge n m' header")
    n, m, header_line = header
    return _build(n, edges, m, header_line)


def parse_graph(text: str | bytes, format: str = "edgelist") -> Graph:
    """Parse a graph from ``text`` in one of :data:`FORMATS`.

    Raises :class:`ParseError` (with the offending line number where there
    is one) on malformed headers, out-of-range vertices, self-loops and
    duplicate edges.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    elif format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"


def format_labeling(labels: dict[int, int]) -> str:
    """One ``"v label"`` line per vertex, sorted by vertex."""
    return "".join(f"{v} {labels[v]}\n" for v in sorted(labels))


def parse_labeling(text: str | bytes) -> dict[int, int]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    labels: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'v label', got {line!r}", lineno)
        v, label = _ints(fields, lineno)
        if v < 0 or label < 0:
            raise ParseError("vertices and labels must be nonnegative", lineno)
        if v in labels:
            raise ParseError(f"vertex {v} labelled twice", lineno)
        labels[v] = label
    return labels
