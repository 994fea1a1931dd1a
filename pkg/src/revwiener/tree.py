"""Labeled tree representation, distances, centers, edge cuts and canonical codes.

Vertices are dense integers in [0, n).  Trees are immutable after
construction, so every function here is pure and safe to share across
threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeListParseError,
    LabelOutOfRange,
    SelfLoop,
    WrongEdgeCount,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """An n-vertex labeled tree.  Build via :func:`from_edge_list`."""

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def from_edge_list(n: int, edges) -> Tree:
    """Validate ``(n, edges)`` and return a :class:`Tree`.

    Raises one of the tree-validation errors if the edge list has the
    wrong size, contains a self-loop or a duplicate, uses a label outside
    [0, n), or does not connect all vertices.
    """
    if n < 1:
        raise LabelOutOfRange(f"vertex count must be positive, got {n}")
    edges = [(int(u), int(v)) for u, v in edges]
    if len(edges) != n - 1:
        raise WrongEdgeCount(f"expected {n - 1} edges for n={n}, got {len(edges)}")
    seen: set[Edge] = set()
    normalized: list[Edge] = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise LabelOutOfRange(f"edge ({u}, {v}) out of range [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        normalized.append(e)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in normalized:
        adj[u].append(v)
        adj[v].append(u)
    # n-1 edges + connected <=> tree; check connectivity by BFS from 0.
    reached = 1
    visited = bytearray(n)
    visited[0] = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not visited[w]:
                visited[w] = 1
                reached += 1
                queue.append(w)
    if reached != n:
        raise Disconnected(f"edge set reaches {reached} of {n} vertices")
    return Tree(n=n, edges=tuple(normalized), adj=tuple(tuple(a) for a in adj))


def bfs_distances(t: Tree, source: int) -> list[int]:
    """Distances from ``source`` to every vertex."""
    if not (0 <= source < t.n):
        raise LabelOutOfRange(f"source {source} out of range [0, {t.n})")
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    adj = t.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _farthest(t: Tree, source: int) -> tuple[int, list[int]]:
    dist = bfs_distances(t, source)
    far = max(range(t.n), key=dist.__getitem__)
    return far, dist


def diameter_and_centers(t: Tree) -> tuple[int, list[int]]:
    """Diameter and the 1 or 2 centers (middle of a longest path).

    A tree has one center iff its diameter is even; two (adjacent)
    centers otherwise.
    """
    if t.n == 1:
        return 0, [0]
    u, _ = _farthest(t, 0)
    v, dist_u = _farthest(t, u)
    d = dist_u[v]
    # Walk the u-v path back from v.
    path = [v]
    cur = v
    while cur != u:
        for w in t.adj[cur]:
            if dist_u[w] == dist_u[cur] - 1:
                cur = w
                break
        path.append(cur)
    if d % 2 == 0:
        centers = [path[d // 2]]
    else:
        centers = sorted((path[d // 2], path[d // 2 + 1]))
    return d, centers


def rooted_subtree_sizes(t: Tree, root: int = 0) -> tuple[list[int], list[int]]:
    """Parent array and subtree sizes for the tree rooted at ``root``."""
    parent = [-1] * t.n
    order: list[int] = [root]
    parent[root] = root
    for u in order:  # grows while iterating: BFS order
        for w in t.adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    size = [1] * t.n
    for u in reversed(order):
        if u != root:
            size[parent[u]] += size[u]
    parent[root] = -1
    return parent, size


@dataclass(frozen=True)
class EdgeCutProfile:
    """Per edge, the sizes of the two components left by deleting it.

    ``sides[i]`` pairs with ``edges[i]`` and gives (vertices on the
    first-endpoint side, vertices on the second-endpoint side).
    """

    n: int
    edges: tuple[Edge, ...]
    sides: tuple[tuple[int, int], ...]

    def multiset(self) -> list[tuple[int, int]]:
        """Sorted side pairs, each with the smaller count first."""
        return sorted(tuple(sorted(p)) for p in self.sides)


def edge_cut_profile(t: Tree) -> EdgeCutProfile:
    """Component sizes on both sides of every edge, via one rooted pass."""
    parent, size = rooted_subtree_sizes(t)
    sides = []
    for u, v in t.edges:
        # The child endpoint's subtree is one side of the cut.
        s = size[v] if parent[v] == u else size[u]
        if parent[v] == u:
            sides.append((t.n - s, s))
        else:
            sides.append((s, t.n - s))
    return EdgeCutProfile(n=t.n, edges=t.edges, sides=tuple(sides))


def _rooted_code(t: Tree, root: int) -> str:
    """AHU-style sorted parenthesis encoding of the tree rooted at root."""
    parent, _ = rooted_subtree_sizes(t, root)
    order = [root]
    for u in order:
        order.extend(w for w in t.adj[u] if parent[w] == u)
    code = [""] * t.n
    for u in reversed(order):
        children = sorted(code[w] for w in t.adj[u] if parent[w] == u)
        code[u] = "(" + "".join(children) + ")"
    return code[root]


def canonical_code(t: Tree) -> str:
    """Isomorphism-invariant code: equal codes iff isomorphic trees.

    Roots at the center; for bicentral trees takes the lexicographically
    smaller of the two rootings.
    """
    _, centers = diameter_and_centers(t)
    return min(_rooted_code(t, c) for c in centers)


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list text format: first line ``n``, then n-1 lines ``u v``."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise EdgeListParseError("empty input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise EdgeListParseError(f"first line must be the vertex count: {lines[0]!r}") from exc
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListParseError(f"non-integer vertex label in {line!r}") from exc
    return from_edge_list(n, edges)


def format_edge_list(t: Tree) -> str:
    """Serialize a tree to the edge-list text format."""
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"
