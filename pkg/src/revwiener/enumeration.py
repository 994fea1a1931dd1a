"""Brute-force oracles: free-tree generation, diameter-4 enumeration, ranking.

The fast free-tree generator iterates level sequences with the
constant-amortized-time successor scheme for free trees (rooted at the
centroid, left subtree constrained).  A slow, independent fallback builds
each size class by attaching a leaf to every vertex of every smaller class
representative and deduplicating by canonical code; the two routes are
cross-validated in the test suite.

Everything is streamed; nothing materializes a full class.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .closed_forms import ExtremalResult
from .errors import BoundExceeded, EmptyClass
from .families import Diam4Spec, lambda_diam4_closed
from .tree import Tree, canonical_code, from_edge_list

DEFAULT_MAX_N_FREE = 20
DEFAULT_MAX_N_DIAM4 = 80
DEFAULT_TIE_CAP = 64


# --- level-sequence machinery -------------------------------------------------


def _successor_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted-tree level sequence in reverse lexicographic order."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_root(levels: list[int]) -> tuple[list[int], list[int]]:
    """Left subtree of the root, and the tree with that subtree removed."""
    m = len(levels)
    seen_one = False
    for i, lvl in enumerate(levels):
        if lvl == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + levels[m:]
    return left, rest


def _skip_to_free(levels: list[int]) -> list[int] | None:
    """Return ``levels`` if it encodes a free tree, else the next one that does."""
    left, rest = _split_root(levels)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return levels
    p = len(left)
    nxt = _successor_rooted(levels, p)
    if levels[p] > 2 and nxt is not None:
        new_left, _ = _split_root(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences of all non-isomorphic free trees on n vertices."""
    if n == 1:
        yield [0]
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _skip_to_free(levels)
        if levels is None:
            return
        yield levels
        levels = _successor_rooted(levels)


def _levels_to_parents(levels: list[int]) -> list[int]:
    parent = [-1] * len(levels)
    last_at = [0] * (max(levels) + 1)
    for i in range(1, len(levels)):
        lvl = levels[i]
        parent[i] = last_at[lvl - 1]
        last_at[lvl] = i
    return parent


def _levels_to_tree(levels: list[int]) -> Tree:
    parent = _levels_to_parents(levels)
    return from_edge_list(len(levels), [(parent[i], i) for i in range(1, len(levels))])


def _levels_metrics(levels: list[int]) -> tuple[int, int, int]:
    """(wiener, diameter, reverse_wiener) straight from a level sequence."""
    n = len(levels)
    if n == 1:
        return 0, 0, 0
    parent = _levels_to_parents(levels)
    size = [1] * n
    for i in range(n - 1, 0, -1):
        size[parent[i]] += size[i]
    w = sum(size[i] * (n - size[i]) for i in range(1, n))
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n):
        adj[i].append(parent[i])
        adj[parent[i]].append(i)

    def farthest(src: int) -> tuple[int, int]:
        dist = [-1] * n
        dist[src] = 0
        queue = deque([src])
        best = src
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    if dist[v] > dist[best]:
                        best = v
                    queue.append(v)
        return best, dist[best]

    u, _ = farthest(0)
    _, d = farthest(u)
    lam = n * (n - 1) * d // 2 - w
    return w, d, lam


# --- generation ---------------------------------------------------------------


def gen_free_trees(n: int, max_n: int = DEFAULT_MAX_N_FREE) -> Iterator[Tree]:
    """Exactly one representative tree per isomorphism class on n vertices."""
    if n < 1:
        raise BoundExceeded(f"n must be positive, got {n}")
    if n > max_n:
        raise BoundExceeded(f"n={n} exceeds free-tree bound {max_n}")
    for levels in free_tree_level_sequences(n):
        yield _levels_to_tree(levels)


def gen_labeled_trees(n: int) -> Iterator[Tree]:
    """All labeled trees on n vertices, decoded from Pruefer sequences."""
    if n == 1:
        yield from_edge_list(1, [])
        return
    if n == 2:
        yield from_edge_list(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        edges = []
        for v in seq:
            leaf = heapq.heappop(heap)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        edges.append((heapq.heappop(heap), heapq.heappop(heap)))
        yield from_edge_list(n, edges)


def free_trees_by_extension(n: int) -> dict[str, Tree]:
    """Slow fallback: grow classes by leaf attachment, dedup by canonical code.

    Independent of the level-sequence generator; used for cross-validation.
    """
    classes: dict[str, Tree] = {canonical_code(from_edge_list(1, [])): from_edge_list(1, [])}
    for m in range(2, n + 1):
        grown: dict[str, Tree] = {}
        for t in classes.values():
            for v in range(t.n):
                bigger = from_edge_list(m, list(t.edges) + [(v, m - 1)])
                grown.setdefault(canonical_code(bigger), bigger)
        classes = grown
    return classes


def _partitions_desc(total: int, max_part: int, min_parts: int) -> Iterator[list[int]]:
    """Partitions of ``total`` into parts >= 2, descending, at least min_parts parts."""
    def rec(rest: int, cap: int, acc: list[int]) -> Iterator[list[int]]:
        if rest == 0:
            if len(acc) >= min_parts:
                yield acc
            return
        for part in range(min(cap, rest), 1, -1):
            if rest - part == 1:  # a leftover of 1 can never be a part >= 2
                continue
            yield from rec(rest - part, part, acc + [part])

    yield from rec(total, max_part, [])


def gen_diam4_specs(n: int) -> Iterator[Diam4Spec]:
    """Every diameter-4 isomorphism class on n vertices, as a spec stream.

    A hub pendant count n0 plus a partition of the remaining n-1-n0
    vertices into k >= 2 blocks of size n_i+1 >= 2 is a bijection onto the
    classes.
    """
    if n < 5:
        return
    for n0 in range(0, n - 4):
        rest = n - 1 - n0
        for parts in _partitions_desc(rest, rest, 2):
            counts: dict[int, int] = {}
            for block in parts:
                counts[block - 1] = counts.get(block - 1, 0) + 1
            yield Diam4Spec(n0=n0, parts=tuple(sorted(counts.items())))


# --- ranking and class minima ---------------------------------------------------


@dataclass(frozen=True)
class RankEntry:
    """One distinct reverse-Wiener value with its full tie set of codes."""

    value: int
    trees: tuple[str, ...]
    truncated: bool = False


class _Buckets:
    """Keeps the k smallest distinct values with bounded tie sets."""

    def __init__(self, k: int, tie_cap: int) -> None:
        self.k = k
        self.tie_cap = tie_cap
        self.data: dict[int, tuple[set[str], bool]] = {}

    def threshold(self) -> int | None:
        if len(self.data) < self.k:
            return None
        return max(self.data)

    def admits(self, value: int) -> bool:
        thr = self.threshold()
        return thr is None or value <= thr

    def add(self, value: int, code: str) -> None:
        if value in self.data:
            codes, truncated = self.data[value]
            if code not in codes:
                if len(codes) < self.tie_cap:
                    codes.add(code)
                else:
                    self.data[value] = (codes, True)
            return
        thr = self.threshold()
        if thr is not None and value > thr:
            return
        self.data[value] = ({code}, False)
        if len(self.data) > self.k:
            del self.data[max(self.data)]

    def entries(self) -> list[RankEntry]:
        return [
            RankEntry(value=v, trees=tuple(sorted(codes)), truncated=trunc)
            for v, (codes, trunc) in sorted(self.data.items())
        ]


def rank_trees(
    n: int,
    k: int,
    max_n: int = DEFAULT_MAX_N_FREE,
    tie_cap: int = DEFAULT_TIE_CAP,
) -> list[RankEntry]:
    """The k smallest distinct reverse-Wiener values over all free trees on n vertices."""
    if n < 1:
        raise BoundExceeded(f"n must be positive, got {n}")
    if n > max_n:
        raise BoundExceeded(f"n={n} exceeds free-tree bound {max_n}")
    buckets = _Buckets(k, tie_cap)
    for levels in free_tree_level_sequences(n):
        _, _, lam = _levels_metrics(levels)
        if buckets.admits(lam):
            buckets.add(lam, canonical_code(_levels_to_tree(levels)))
    return buckets.entries()


def _min2_diam4_specs(n: int, tie_cap: int = DEFAULT_TIE_CAP):
    """Two smallest reverse-Wiener values over diameter-4 classes, with spec ties."""
    best: list[list] = []  # [value, specs, truncated], at most 2, sorted by value
    for spec in gen_diam4_specs(n):
        lam = lambda_diam4_closed(spec)
        placed = False
        for entry in best:
            if entry[0] == lam:
                if len(entry[1]) < tie_cap:
                    entry[1].append(spec)
                else:
                    entry[2] = True
                placed = True
                break
        if not placed:
            best.append([lam, [spec], False])
            best.sort(key=lambda e: e[0])
            del best[2:]
    return best


def min_lambda_diam(
    n: int,
    d: int,
    max_n_free: int = DEFAULT_MAX_N_FREE,
    max_n_diam4: int = DEFAULT_MAX_N_DIAM4,
) -> ExtremalResult:
    """Exhaustive minimum of the reverse Wiener index over n-vertex trees of diameter d."""
    return _extremum_diam(n, d, 0, max_n_free, max_n_diam4)


def second_min_lambda_diam(
    n: int,
    d: int,
    max_n_free: int = DEFAULT_MAX_N_FREE,
    max_n_diam4: int = DEFAULT_MAX_N_DIAM4,
) -> ExtremalResult:
    """Exhaustive second-smallest value over n-vertex trees of diameter d."""
    return _extremum_diam(n, d, 1, max_n_free, max_n_diam4)


def _extremum_diam(n, d, index, max_n_free, max_n_diam4) -> ExtremalResult:
    if not 2 <= d <= n - 1:
        raise EmptyClass(f"no tree on {n} vertices has diameter {d}")
    rank = f"class-min({d})" if index == 0 else f"class-2nd-min({d})"
    if d == 4:
        if n > max_n_diam4:
            raise BoundExceeded(f"n={n} exceeds diameter-4 bound {max_n_diam4}")
        best = _min2_diam4_specs(n)
        if len(best) <= index:
            raise EmptyClass(f"fewer than {index + 1} distinct values at (n={n}, d=4)")
        value, specs, truncated = best[index]
        notes = ("tie set truncated",) if truncated else ()
        return ExtremalResult(rank=rank, value=value, attaining=tuple(specs), notes=notes)
    if n > max_n_free:
        raise BoundExceeded(f"n={n} exceeds free-tree bound {max_n_free}")
    found: list[list] = []  # [value, codes], at most 2, sorted by value
    for levels in free_tree_level_sequences(n):
        _, diam, lam = _levels_metrics(levels)
        if diam != d:
            continue
        if len(found) == 2 and lam > found[1][0]:
            continue
        code = canonical_code(_levels_to_tree(levels))
        for entry in found:
            if entry[0] == lam:
                entry[1].append(code)
                break
        else:
            found.append([lam, [code]])
            found.sort(key=lambda e: e[0])
            del found[2:]
    if len(found) <= index:
        raise EmptyClass(f"fewer than {index + 1} distinct values at (n={n}, d={d})")
    value, codes = found[index]
    # Attaining trees are carried as canonical codes on this route.
    return ExtremalResult(rank=rank, value=value, attaining=tuple(sorted(codes)), notes=())
