"""Exact Wiener and reverse-Wiener indices, by two independent methods.

All arithmetic uses Python's arbitrary-precision integers, so results are
exact at any size.  The edge-cut method is the default; the BFS method is
kept as an independent oracle and for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree, bfs_distances, diameter_and_centers, edge_cut_profile


@dataclass(frozen=True)
class TreeMetrics:
    n: int
    wiener: int
    diameter: int
    reverse_wiener: int
    centers: tuple[int, ...]


def wiener_edge_cut(t: Tree) -> int:
    """W(T) as the sum over edges of the product of the two cut sizes."""
    return sum(a * b for a, b in edge_cut_profile(t).sides)


def wiener_bfs(t: Tree) -> int:
    """W(T) as the halved sum of all single-source BFS distance vectors."""
    total = sum(sum(bfs_distances(t, s)) for s in range(t.n))
    assert total % 2 == 0
    return total // 2


def reverse_wiener(t: Tree) -> int:
    """Reverse Wiener index: n(n-1)d/2 - W, exact."""
    d, _ = diameter_and_centers(t)
    prod = t.n * (t.n - 1) * d
    assert prod % 2 == 0
    return prod // 2 - wiener_edge_cut(t)


def metrics(t: Tree) -> TreeMetrics:
    """Bundle of n, W (edge-cut method), diameter, reverse Wiener and centers."""
    d, centers = diameter_and_centers(t)
    w = wiener_edge_cut(t)
    return TreeMetrics(
        n=t.n,
        wiener=w,
        diameter=d,
        reverse_wiener=t.n * (t.n - 1) * d // 2 - w,
        centers=tuple(centers),
    )
