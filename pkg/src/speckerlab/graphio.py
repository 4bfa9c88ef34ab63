"""Plain-text graph files: a `p <n> <m>` header, then one `e <u> <v>` line per edge.

Edges are written with u < v, sorted, 0-based, LF-terminated, so that
emit(parse(text)) is a normal form.
"""

from .graphs import Graph


class ParseError(ValueError):
    pass


class MalformedHeaderError(ParseError):
    pass


class VertexOutOfRangeError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


def emit_graph(g: Graph) -> str:
    lines = [f"p {g.n_vertices} {g.n_edges}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("p "):
        raise MalformedHeaderError("missing 'p <n_vertices> <n_edges>' header")
    head = lines[0].split()
    if len(head) != 3:
        raise MalformedHeaderError(f"bad header {lines[0]!r}")
    try:
        n_vertices, n_edges = int(head[1]), int(head[2])
    except ValueError:
        raise MalformedHeaderError(f"bad header {lines[0]!r}") from None
    if n_vertices < 0 or n_edges < 0:
        raise MalformedHeaderError(f"negative counts in header {lines[0]!r}")
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise ParseError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad edge line {line!r}") from None
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n_vertices - 1}")
        if u == v:
            raise ParseError(f"loop edge at {u}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        edges.add(e)
    if len(edges) != n_edges:
        raise ParseError(f"header says {n_edges} edges, found {len(edges)}")
    return Graph(n_vertices, edges)


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(emit_graph(g))


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def emit_vertex_map(pairs) -> str:
    """Sidecar mapping lines `v <rank> <comma-separated subset>`."""
    lines = [f"v {rank} {','.join(str(x) for x in subset)}" for rank, subset in pairs]
    return "\n".join(lines) + ("\n" if lines else "")


def write_vertex_map(pairs, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(emit_vertex_map(pairs))
