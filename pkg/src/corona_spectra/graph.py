"""Simple undirected graphs on vertices ``0..n-1``.

Covers construction, the standard families used throughout the package,
integer matrix extraction and the three text formats (edge list, graph6,
DOT). Graphs are immutable; every function here is pure.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BadFamilyParams, LoopEdge, MalformedGraph6, OutOfRange

Edge = tuple[int, int]


class MatrixKind(enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"

    @classmethod
    def parse(cls, text: str | "MatrixKind") -> "MatrixKind":
        if isinstance(text, MatrixKind):
            return text
        key = text.strip().lower().replace("-", "_")
        aliases = {"a": "adjacency", "l": "laplacian", "q": "signless",
                   "signless_laplacian": "signless"}
        return cls(aliases.get(key, key))


@dataclass(frozen=True)
class Graph:
    """Simple graph; ``edges`` is sorted with ``u < v`` in every pair."""

    order: int
    edges: tuple[Edge, ...] = ()

    @property
    def size(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the isomorphic graph with vertex ``i`` renamed ``perm[i]``."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("perm must be a permutation of 0..order-1")
        return build_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def __str__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def build_graph(order: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if order < 0:
        raise OutOfRange(f"negative order {order}")
    edges = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < order and 0 <= v < order):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(order, tuple(sorted(edges)))


# ----------------------------------------------------------------------
# matrices

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def matrix_of(g: Graph, kind: MatrixKind | str) -> np.ndarray:
    """Integer adjacency, Laplacian ``D - A`` or signless Laplacian ``D + A``."""
    kind = MatrixKind.parse(kind)
    a = adjacency_matrix(g)
    if kind is MatrixKind.ADJACENCY:
        return a
    d = np.diag(a.sum(axis=1))
    if kind is MatrixKind.LAPLACIAN:
        return d - a
    return d + a


def regularity_and_components(g: Graph) -> tuple[int | None, int]:
    """Common degree (``None`` if irregular) and number of connected components."""
    deg = g.degrees()
    regular = deg[0] if deg and all(d == deg[0] for d in deg) else None
    if g.order == 0:
        regular = None
    adj = g.neighbors()
    seen = [False] * g.order
    components = 0
    for start in range(g.order):
        if seen[start]:
            continue
        components += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return regular, components


def is_connected(g: Graph) -> bool:
    return regularity_and_components(g)[1] == 1


# ----------------------------------------------------------------------
# families

def path(n: int) -> Graph:
    if n < 1:
        raise BadFamilyParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadFamilyParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadFamilyParams("complete needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise BadFamilyParams("empty needs n >= 1")
    return Graph(n, ())


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadFamilyParams("complete bipartite needs a, b >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 joined to leaves 1..n."""
    if n < 1:
        raise BadFamilyParams("star needs n >= 1 leaves")
    return complete_bipartite(1, n)


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    jumps = sorted({int(s) % n for s in jumps})
    if n < 1 or not jumps or 0 in jumps:
        raise BadFamilyParams(f"circulant({n}, {jumps}) needs nonzero jumps mod n")
    return build_graph(n, [(i, (i + s) % n) for i in range(n) for s in jumps])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def disjoint_union(*graphs: Graph) -> Graph:
    if not graphs:
        raise BadFamilyParams("disjoint union of nothing")
    offset = 0
    edges: list[Edge] = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.order
    return build_graph(offset, edges)


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    return build_graph(g.order, [(i, j) for i in range(g.order)
                                 for j in range(i + 1, g.order) if (i, j) not in present])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) gets index ``i * h.order + j``."""
    m = h.order
    edges = [(i * m + u, i * m + v) for i in range(g.order) for u, v in h.edges]
    edges += [(u * m + j, v * m + j) for u, v in g.edges for j in range(m)]
    return build_graph(g.order * m, edges)


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "bipartite": complete_bipartite,
    "star": star,
    "circulant": circulant,
    "petersen": petersen,
}


def make_family(name: str, *params) -> Graph:
    """Build a named family member, e.g. ``make_family("circulant", 9, [1, 2])``."""
    try:
        factory = _FAMILIES[name.lower()]
    except KeyError:
        raise BadFamilyParams(f"unknown family {name!r}; known: {sorted(_FAMILIES)}") from None
    try:
        return factory(*params)
    except TypeError as exc:
        raise BadFamilyParams(f"bad parameters for {name}: {exc}") from None


def parse_family(text: str) -> Graph:
    """Parse a ``family:params`` string.

    Examples: ``cycle:5``, ``complete:4``, ``bipartite:2:3``,
    ``circulant:9:1,2``, ``petersen``. Terms joined by ``+`` are combined
    by disjoint union (``cycle:3+cycle:3``).
    """
    if "+" in text:
        return disjoint_union(*(parse_family(part) for part in text.split("+")))
    name, *raw = text.strip().split(":")
    try:
        if name == "circulant":
            if len(raw) != 2:
                raise ValueError
            params: list = [int(raw[0]), [int(s) for s in raw[1].split(",") if s]]
        else:
            params = [int(p) for p in raw]
    except ValueError:
        raise BadFamilyParams(f"cannot parse family string {text!r}") from None
    return make_family(name, *params)


# ----------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chunks.append(chr(value + 63))
    return _g6_size(g.order) + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = []
    for ch in s:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise MalformedGraph6(f"invalid graph6 character {ch!r}")
        data.append(value)

    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise MalformedGraph6("truncated long-form size header")
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        body = data[8:]
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]

    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"payload has {len(body)} characters, expected {(nbits + 5) // 6} for order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


# ----------------------------------------------------------------------
# edge list / DOT

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a 'n m' header line")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m or any(len(r) != 2 for r in body):
        raise ValueError(f"edge list header announces {m} edges, found {len(body)} lines")
    return build_graph(n, [(int(u), int(v)) for u, v in body])


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    return "\n".join(lines) + "\n}\n"


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    fmt = fmt.lower()
    if fmt in ("edge-list", "el"):
        return to_edge_list(g)
    if fmt in ("graph6", "g6"):
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}")


def resolve_graph(source: str) -> Graph:
    """Load a graph from a ``.g6``/``.el`` file path or a family string."""
    p = Path(source)
    if p.suffix in (".g6", ".el"):
        text = p.read_text()
        if p.suffix == ".g6":
            first = next((line for line in text.splitlines() if line.strip()), "")
            return parse_graph6(first)
        return parse_edge_list(text)
    return parse_family(source)
