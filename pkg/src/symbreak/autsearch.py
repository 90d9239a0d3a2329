"""Automorphism generators and isomorphism testing by partition refinement.

The search follows the usual individualization-refinement scheme: refine
the (color) partition to an equitable one, individualize a vertex of the
first largest non-singleton cell, and recurse.  The leftmost path fixes a
reference leaf.  Going back up that path, each unexplored sibling subtree is
searched for one leaf that yields an automorphism, unless the sibling
is already in the orbit of the path vertex under the generators found so
far.  The generators collected this way generate the full group.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph
from .perm import PermGroup, Permutation, orbit

Cells = list[list[int]]


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Refine an ordered partition to the coarsest equitable refinement.

    A split cell is replaced in place by its pieces, ordered by the number of
    neighbours in the splitter, so the result commutes with relabelling.
    """
    cells = [list(c) for c in cells]
    queue = deque(_mask(c) for c in cells)
    while queue:
        splitter = queue.popleft()
        out: Cells = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((rows[v] & splitter).bit_count(), []).append(v)
            if len(buckets) == 1:
                out.append(cell)
                continue
            for key in sorted(buckets):
                piece = buckets[key]
                out.append(piece)
                queue.append(_mask(piece))
        cells = out
    return cells


def _target(cells: Cells) -> int:
    best, size = -1, 1
    for i, c in enumerate(cells):
        if len(c) > size:
            best, size = i, len(c)
    return best


def _individualize(rows, cells: Cells, idx: int, v: int) -> Cells:
    rest = [w for w in cells[idx] if w != v]
    return refine(rows, cells[:idx] + [[v], rest] + cells[idx + 1:])


def _trace(cells: Cells) -> tuple[int, ...]:
    return tuple(len(c) for c in cells)


def _initial_cells(n: int, colors: Sequence | None) -> Cells:
    if colors is None:
        return [list(range(n))]
    if len(colors) != n:
        raise ValueError(f"need one color per vertex, got {len(colors)} for n={n}")
    groups: dict = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def _maps_edges(src: Sequence[int], dst: Sequence[int], phi: Sequence[int]) -> bool:
    for u, row in enumerate(src):
        img = 0
        while row:
            low = row & -row
            img |= 1 << phi[low.bit_length() - 1]
            row ^= low
        if img != dst[phi[u]]:
            return False
    return True


class _Search:
    """One search tree over ``dst`` whose leaves are compared with a fixed leaf of ``src``."""

    def __init__(self, src_rows, dst_rows, src_colors=None, dst_colors=None):
        self.src = src_rows
        self.dst = dst_rows
        self.src_colors = src_colors
        self.dst_colors = dst_colors
        self.leaf: list[int] | None = None
        self.traces: list[tuple[int, ...]] = []

    def leftmost_path(self, root: Cells) -> list[tuple[Cells, int, int]]:
        """Walk down the leftmost branch of the src tree, recording traces."""
        path = []
        cells = root
        while True:
            self.traces.append(_trace(cells))
            idx = _target(cells)
            if idx < 0:
                self.leaf = [c[0] for c in cells]
                return path
            v = min(cells[idx])
            path.append((cells, idx, v))
            cells = _individualize(self.src, cells, idx, v)

    def _leaf_map(self, cells: Cells) -> list[int] | None:
        phi = [0] * len(self.leaf)
        for a, c in zip(self.leaf, cells):
            phi[a] = c[0]
        if self.src_colors is not None:
            if any(self.src_colors[a] != self.dst_colors[phi[a]] for a in range(len(phi))):
                return None
        return phi if _maps_edges(self.src, self.dst, phi) else None

    def find(self, cells: Cells, depth: int) -> list[int] | None:
        """First leaf below ``cells`` giving an src->dst isomorphism, or None."""
        if depth >= len(self.traces) or _trace(cells) != self.traces[depth]:
            return None
        idx = _target(cells)
        if idx < 0:
            return self._leaf_map(cells)
        for w in sorted(cells[idx]):
            found = self.find(_individualize(self.dst, cells, idx, w), depth + 1)
            if found is not None:
                return found
        return None


def automorphism_generators(g: Graph, colors: Sequence | None = None) -> PermGroup:
    """Generators of the group of (color-preserving) automorphisms of ``g``.

    The returned PermGroup has ``elements=None``; an empty generator tuple
    means the group is trivial.
    """
    root = refine(g.rows, _initial_cells(g.n, colors))
    search = _Search(g.rows, g.rows, colors, colors)
    path = search.leftmost_path(root)
    gens: list[Permutation] = []
    for depth in range(len(path) - 1, -1, -1):
        cells, idx, v = path[depth]
        reached = orbit(v, gens)
        for w in sorted(cells[idx]):
            if w in reached:
                continue
            phi = search.find(_individualize(g.rows, cells, idx, w), depth + 1)
            if phi is not None:
                gens.append(Permutation(tuple(phi)))
                reached = orbit(v, gens)
    return PermGroup(g.n, tuple(gens))


def is_asymmetric(g: Graph) -> bool:
    return not automorphism_generators(g).generators


def find_isomorphism(g: Graph, h: Graph) -> Permutation | None:
    """A vertex map ``phi`` with ``u ~ v`` in g iff ``phi(u) ~ phi(v)`` in h, if one exists."""
    if g.n != h.n or g.num_edges() != h.num_edges() or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    search = _Search(g.rows, h.rows)
    search.leftmost_path(refine(g.rows, [list(range(g.n))]))
    phi = search.find(refine(h.rows, [list(range(h.n))]), 0)
    return None if phi is None else Permutation(tuple(phi))


def isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
