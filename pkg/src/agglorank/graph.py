"""Simple undirected graphs on dense integer ids: parsing, BFS, distance sums.

The edge-list text format is one edge per line ("u v", decimal ids), '#'
comment lines, blank lines ignored.  An optional "# n=<order>" comment fixes
the order explicitly, which is the only way to represent nodes that appear in
no edge.  Canonical output sorts edges by (min id, max id) with the smaller
id first on each line.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Iterator

from .errors import ConnectivityError, DegenerateOrderError, EdgeListError

_ORDER_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


class Graph:
    """Immutable simple undirected graph on node ids 0..n-1.

    ``adj[v]`` is the sorted tuple of neighbors of v.  Adjacency is symmetric
    and loop-free.  Instances behave as plain values (equality is structural)
    and every operation in this module is a pure read, so graphs can be shared
    freely between threads.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in canonical order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield u, v

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())!r})"


def _check_node(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range for graph of order {g.n}")


def _build(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def from_edge_list(edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    """Build a graph from (u, v) pairs, rejecting self-loops and duplicates.

    If ``n`` is omitted the order is 1 + the largest id appearing.  With an
    explicit ``n``, ids must all be below it; ids in [0, n) that appear in no
    edge become isolated nodes.
    """
    if n is not None and n < 1:
        raise EdgeListError(f"order must be at least 1, got n={n}")
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    max_id = -1
    for i, (u, v) in enumerate(edges):
        where = f"edge {i}"
        if u < 0 or v < 0:
            raise EdgeListError(f"{where}: negative node id in ({u}, {v})")
        if u == v:
            raise EdgeListError(f"{where}: self-loop at node {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(f"{where}: duplicate edge ({u}, {v})")
        seen.add(key)
        if n is not None and key[1] >= n:
            raise EdgeListError(f"{where}: node id {key[1]} outside declared order n={n}")
        max_id = max(max_id, key[1])
        pairs.append(key)
    if n is None:
        if max_id < 0:
            raise EdgeListError("no edges and no explicit order; graph order unknown")
        n = max_id + 1
    return _build(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; errors carry the offending line number."""
    declared_n: int | None = None
    pairs: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = _ORDER_HEADER.match(stripped)
            if m:
                if declared_n is not None:
                    raise EdgeListError("second '# n=' header", line=line_no)
                declared_n = int(m.group(1))
                if declared_n < 1:
                    raise EdgeListError("declared order must be at least 1", line=line_no)
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two node ids, got {stripped!r}", line=line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer node id in {stripped!r}", line=line_no) from None
        if u < 0 or v < 0:
            raise EdgeListError(f"negative node id in {stripped!r}", line=line_no)
        if u == v:
            raise EdgeListError(f"self-loop at node {u}", line=line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(f"duplicate edge {u} {v}", line=line_no)
        seen.add(key)
        pairs.append((key[0], key[1], line_no))
    if declared_n is None:
        if not pairs:
            raise EdgeListError("no edges and no '# n=' header; graph order unknown")
        n = 1 + max(v for _, v, _ in pairs)
    else:
        n = declared_n
        for _, v, line_no in pairs:
            if v >= n:
                raise EdgeListError(f"node id {v} outside declared order n={n}", line=line_no)
    return _build(n, [(u, v) for u, v, _ in pairs])


def to_edge_list(g: Graph) -> str:
    """Serialize canonically; round-trips through parse_edge_list.

    A "# n=<order>" header is emitted only when the edges alone do not pin the
    order (isolated trailing nodes, or an edgeless single-node graph).
    """
    edge_pairs = list(g.edges())
    lines = []
    inferred = 1 + max(v for _, v in edge_pairs) if edge_pairs else 0
    if inferred != g.n:
        lines.append(f"# n={g.n}")
    lines.extend(f"{u} {v}" for u, v in edge_pairs)
    return "".join(line + "\n" for line in lines)


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of v."""
    _check_node(g, v)
    return len(g.adj[v])


def _bfs(g: Graph, source: int) -> list[int]:
    # Hop distances from source; -1 marks unreached nodes.
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque((source,))
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Exact hop distances from source to every node; the graph must be connected."""
    _check_node(g, source)
    dist = _bfs(g, source)
    for v, d in enumerate(dist):
        if d < 0:
            raise ConnectivityError(
                f"node {v} is unreachable from node {source}", unreachable=v
            )
    return dist


def is_connected(g: Graph) -> bool:
    """True iff a BFS from node 0 reaches every node."""
    return all(d >= 0 for d in _bfs(g, 0))


def distance_sum(g: Graph) -> int:
    """Total shortest-path length over all ordered node pairs.

    Each unordered pair is counted twice, so the result is always even.
    """
    if g.n < 2:
        raise DegenerateOrderError("distance sum requires at least two nodes")
    total = sum(bfs_distances(g, 0))
    for source in range(1, g.n):
        total += sum(_bfs(g, source))
    return total
