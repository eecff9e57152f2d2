"""Labeled simple graphs, graph6 I/O and canonical forms.

Vertices are ``0..order-1``. Each adjacency row is stored as a Python ``int``
bitmask, so set operations on neighbourhoods are single integer operations.
Graphs are immutable and hashable; equality is labeled equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

DEFAULT_MAX_ORDER = 512
GRAPH6_MAX_ORDER = 258047
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or vertex argument."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.order:
            raise GraphError(f"expected {self.order} adjacency rows, got {len(self.adj)}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has out-of-range or loop bits")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
                rest ^= low

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]],
                   max_order: int = DEFAULT_MAX_ORDER) -> Graph:
        if order < 0 or order > max_order:
            raise GraphError(f"order {order} outside 0..{max_order}")
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << v) for v in range(order)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def add_vertex(self, neighborhood: int) -> Graph:
        """Append vertex ``order`` adjacent to the vertices in bitmask ``neighborhood``."""
        if neighborhood >> self.order:
            raise GraphError("neighborhood mentions a vertex that does not exist")
        new = self.order
        rows = tuple(row | ((neighborhood >> v & 1) << new) for v, row in enumerate(self.adj))
        return Graph(self.order + 1, rows + (neighborhood,))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vs: Sequence[int]) -> Graph:
    """The graph on ``range(len(vs))`` where ``i ~ j`` iff ``vs[i] ~ vs[j]`` in ``g``."""
    seen = set()
    for v in vs:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
        if v in seen:
            raise GraphError(f"duplicate vertex {v}")
        seen.add(v)
    rows = []
    for v in vs:
        row_v = g.adj[v]
        row = 0
        for j, w in enumerate(vs):
            if row_v >> w & 1:
                row |= 1 << j
        rows.append(row)
    return Graph(len(vs), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("perm is not a permutation of the vertex set")
    inverse = [0] * g.order
    for v, image in enumerate(perm):
        inverse[image] = v
    return induced_subgraph(g, inverse)


# --- graph6 ---------------------------------------------------------------

def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 word")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("orders above 258047 (8-byte length) are not supported")
    if len(data) < 4:
        raise Graph6Error("truncated length field")
    k = 0
    for b in data[1:4]:
        k = (k << 6) | (b - 63)
    if k < 63:
        raise Graph6Error(f"non-canonical long length field for order {k}")
    return k, 4


def parse_graph6(line: str, max_order: int = DEFAULT_MAX_ORDER) -> Graph:
    """Decode one graph6 word; a leading ``>>graph6<<`` header is allowed."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 word") from exc
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at position {pos} outside 63..126")
    k, offset = _decode_order(data)
    if k > max_order:
        raise Graph6Error(f"order {k} exceeds configured maximum {max_order}")
    nbits = k * (k - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after adjacency data")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    bits >>= pad
    rows = [0] * k
    pos = nbits
    for v in range(1, k):
        for u in range(v):
            pos -= 1
            if bits >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(k, tuple(rows))


def write_graph6(g: Graph) -> str:
    k = g.order
    if k > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"order {k} exceeds the graph6 three-byte limit")
    if k <= 62:
        out = [k + 63]
    else:
        out = [126, (k >> 12 & 63) + 63, (k >> 6 & 63) + 63, (k & 63) + 63]
    bits = []
    for v in range(1, k):
        row = g.adj[v]
        bits.extend(row >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = value << 1 | b
        out.append(value + 63)
    return bytes(out).decode("ascii")


def read_graph6_lines(lines: Iterable[str], max_order: int = DEFAULT_MAX_ORDER) -> list[Graph]:
    graphs = []
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#") or text == GRAPH6_HEADER:
            continue
        graphs.append(parse_graph6(text, max_order))
    return graphs


# --- canonical form -------------------------------------------------------

def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition.

    New colours are ranks of (old colour, neighbour counts per colour), so the
    result depends only on the isomorphism type of the coloured graph.
    """
    n = len(adj)
    while True:
        ncolors = max(colors) + 1 if n else 0
        classes = [0] * ncolors
        for v, c in enumerate(colors):
            classes[c] |= 1 << v
        sigs = [
            (c, *[(row & cls).bit_count() for cls in classes])
            for c, row in zip(colors, adj)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return refined
        colors = refined


def _encode(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for i in range(1, len(order)):
        row = adj[order[i]]
        for j in range(i):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _twins(adj: Sequence[int], x: int, y: int) -> bool:
    mask = ~((1 << x) | (1 << y))
    return adj[x] & mask == adj[y] & mask


def _search(adj: Sequence[int], colors: list[int], best: list[int | None]) -> None:
    n = len(adj)
    ncolors = max(colors) + 1
    if ncolors == n:
        order = [0] * n
        for v, c in enumerate(colors):
            order[c] = v
        code = _encode(adj, order)
        if best[0] is None or code > best[0]:
            best[0] = code
        return
    counts = [0] * ncolors
    for c in colors:
        counts[c] += 1
    # first smallest non-singleton cell; colour ranks are invariant, so is this choice
    target = min((cnt, c) for c, cnt in enumerate(counts) if cnt > 1)[1]
    cell = [v for v in range(n) if colors[v] == target]
    tried: list[int] = []
    for v in cell:
        # swapping twins is an automorphism fixing everything already individualised
        if any(_twins(adj, v, w) for w in tried):
            continue
        tried.append(v)
        child = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        _search(adj, _refine(adj, _rank(child)), best)


def _rank(values: list[int]) -> list[int]:
    ranking = {x: i for i, x in enumerate(sorted(set(values)))}
    return [ranking[x] for x in values]


def canonical_form(g: Graph) -> bytes:
    """Bytes identifying the isomorphism class of ``g``.

    Two graphs get equal forms iff they are isomorphic: the search tree of
    refinement plus individualisation is label-invariant and the maximum leaf
    code is taken over every branch (twin branches are equivalent).
    """
    n = g.order
    if n == 0:
        return b"\x00\x00"
    best: list[int | None] = [None]
    _search(g.adj, _refine(g.adj, _rank([row.bit_count() for row in g.adj])), best)
    nbits = n * (n - 1) // 2
    code = best[0] or 0
    return n.to_bytes(2, "big") + code.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The representative graph whose labeling realises ``canonical_form(g)``."""
    return graph_from_canonical(canonical_form(g))


def graph_from_canonical(form: bytes) -> Graph:
    n = int.from_bytes(form[:2], "big")
    code = int.from_bytes(form[2:], "big")
    rows = [0] * n
    pos = n * (n - 1) // 2
    for i in range(1, n):
        for j in range(i):
            pos -= 1
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    return canonical_form(g) == canonical_form(h)


# --- named graphs used throughout ---------------------------------------

def path(k: int) -> Graph:
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
