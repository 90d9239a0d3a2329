"""Permutations of 0..n-1 and bounded enumeration of the groups they generate."""

from __future__ import annotations

import gc
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

from .errors import DegreeError, GroupTooLarge

DEFAULT_GROUP_CAP = 2_000_000


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of 0..n-1 stored as its image array, ``images[v] = p(v)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        """Wrap an image tuple already known to be a permutation, skipping validation."""
        p = object.__new__(cls)
        p.__dict__["images"] = images
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.images == tuple(range(len(self.images)))

    def cycles(self) -> list[list[int]]:
        return cycles_of(self.images)

    def cycle_type(self) -> list[int]:
        return sorted(len(c) for c in self.cycles())

    def inverse(self) -> Permutation:
        return inverse(self)

    def order(self) -> int:
        return order(self)

    def cycle_notation(self) -> str:
        """Cycle notation with fixed points omitted; ``()`` for the identity."""
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __str__(self):
        return self.cycle_notation()


def cycles_of(images: Sequence[int]) -> list[list[int]]:
    """Cycle decomposition; each cycle starts at its smallest point, cycles ordered by it."""
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = images[v]
        out.append(cyc)
    return out


def raw_cycle_count(p: Permutation) -> int:
    """Number of cycles, fixed points included (the identity has n)."""
    return len(cycles_of(p.images))


def cycle_count(p: Permutation) -> int:
    """Number of cycles with fixed points counted, except that the identity gives 0."""
    if p.is_identity():
        return 0
    return raw_cycle_count(p)


def _check_degrees(p: Permutation, q: Permutation):
    if len(p.images) != len(q.images):
        raise DegreeError(f"degrees differ: {len(p.images)} vs {len(q.images)}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``p∘q``: apply q first, then p."""
    _check_degrees(p, q)
    return Permutation(tuple(map(p.images.__getitem__, q.images)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for v, w in enumerate(p.images):
        inv[w] = v
    return Permutation(tuple(inv))


def order(p: Permutation) -> int:
    return reduce(lcm, (len(c) for c in p.cycles()), 1)


def moved_points(p: Permutation) -> int:
    return sum(1 for i, v in enumerate(p.images) if i != v)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by generators, optionally fully enumerated.

    ``elements`` is ``None`` until the group is closed; when present it is
    sorted lexicographically by image array and starts with the identity.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] | None = None

    @property
    def order(self) -> int | None:
        return None if self.elements is None else len(self.elements)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)


def close_generators(gens: Sequence[Permutation], cap: int = DEFAULT_GROUP_CAP,
                     degree: int | None = None) -> PermGroup:
    """Enumerate the group generated by ``gens`` with Dimino's coset algorithm.

    Generators are added one at a time; the group so far is H and the new
    group is a union of right cosets of H, found by multiplying coset
    representatives by every generator.  Each element is built once.
    Raises GroupTooLarge once more than ``cap`` elements have been found.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeError(f"generator of degree {g.degree} in a group of degree {degree}")
    # bulk allocation of reference-free objects; pausing the collector saves a lot
    paused = gc.isenabled()
    gc.disable()
    try:
        elements = tuple(map(Permutation._trusted, _dimino([g.images for g in gens], degree, cap)))
    finally:
        if paused:
            gc.enable()
    return PermGroup(degree, tuple(gens), elements)


def _dimino(moves, degree, cap):
    ident = tuple(range(degree))
    elements = [ident]
    seen = {ident}
    used: list[tuple[int, ...]] = []
    for s in dict.fromkeys(moves):
        if s in seen:
            continue
        used.append(s)
        sub = list(elements)  # H, starting with the identity
        step = len(sub)
        pos = step
        _add_coset(sub, s, elements, seen, cap)
        while pos < len(elements):
            rep = elements[pos]
            for t in used:
                y = tuple(map(rep.__getitem__, t))
                if y not in seen:
                    _add_coset(sub, y, elements, seen, cap)
            pos += step
    elements.sort()
    return elements


def _add_coset(sub, rep, elements, seen, cap):
    if len(elements) + len(sub) > cap:
        raise GroupTooLarge(cap)
    for h in sub:
        y = tuple(map(h.__getitem__, rep))
        elements.append(y)
        seen.add(y)


def orbit(point: int, gens: Sequence[Permutation]) -> set[int]:
    out = {point}
    stack = [point]
    while stack:
        v = stack.pop()
        for g in gens:
            w = g.images[v]
            if w not in out:
                out.add(w)
                stack.append(w)
    return out
