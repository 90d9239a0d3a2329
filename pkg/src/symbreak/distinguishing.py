"""Distinguishing threshold, distinguishing number, motion and coloring counts.

Conventions: colors are positive integers; ``theta`` is one more than the
largest cycle count over non-identity automorphisms (1 for asymmetric
graphs); colorings ``c1`` and ``c2`` are equivalent when ``c1 = c2∘a`` for
some automorphism ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial
from operator import eq
from typing import Iterator, Sequence

from .autsearch import automorphism_generators
from .errors import FormulaInapplicable, NoSymmetry, SearchBudgetExceeded
from .graph import Graph
from .perm import DEFAULT_GROUP_CAP, PermGroup, Permutation, close_generators, cycles_of, order

DEFAULT_COLORING_BUDGET = 10_000_000


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError(f"color ids must lie in 1..{self.k}")

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def is_surjective(self) -> bool:
        return self.used == self.k


@dataclass(frozen=True)
class ThresholdResult:
    theta: int
    witness: Permutation | None
    witness_order: int


@dataclass(frozen=True)
class MotionResult:
    motion: int
    witness: Permutation


def automorphism_group(g: Graph, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """Aut(g), fully enumerated (raises GroupTooLarge past ``cap``)."""
    gens = automorphism_generators(g).generators
    return close_generators(gens, cap, degree=g.n)


def _prime_order(lengths: list[int]) -> int | None:
    nontrivial = {L for L in lengths if L > 1}
    if len(nontrivial) != 1:
        return None
    p = nontrivial.pop()
    if all(p % d for d in range(2, int(p ** 0.5) + 1)):
        return p
    return None


def group_theta(group: PermGroup, check_all: bool = False) -> ThresholdResult:
    """Threshold of an enumerated permutation group.

    Only prime-order elements are scanned: any element with the most cycles
    has prime order, since a proper power of a composite-order element has
    strictly more cycles.  ``check_all`` rescans every element and asserts
    that the answer does not change.
    """
    n = group.degree
    ident = tuple(range(n))
    best, witness = 0, None
    for p in group.elements:
        img = p.images
        if img == ident:
            continue
        # c(p) <= fixed + moved/2, so most elements need no decomposition
        fixed = sum(map(eq, img, ident))
        if fixed + (n - fixed) // 2 <= best:
            continue
        cyc = cycles_of(img)
        if len(cyc) > best and _prime_order([len(c) for c in cyc]) is not None:
            best, witness = len(cyc), p
    if check_all:
        full_best, full_witness = 0, None
        for p in group.elements:
            if not p.is_identity():
                c = len(cycles_of(p.images))
                if c > full_best:
                    full_best, full_witness = c, p
        assert (full_best, full_witness) == (best, witness), "prime-order restriction changed theta"
    if witness is None:
        return ThresholdResult(1, None, 1)
    w_order = order(witness)
    assert _prime_order(witness.cycle_type()) == w_order, "theta witness must have prime order"
    return ThresholdResult(best + 1, witness, w_order)


def theta(g: Graph, cap: int = DEFAULT_GROUP_CAP, check_all: bool = False) -> ThresholdResult:
    """Least k such that every coloring of g with k colors is distinguishing."""
    return group_theta(automorphism_group(g, cap), check_all)


def is_distinguishing(g: Graph, colors: Sequence[int] | Coloring) -> bool:
    """True iff no non-identity automorphism of g preserves the coloring."""
    if isinstance(colors, Coloring):
        colors = colors.colors
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries, graph has {g.n} vertices")
    return not automorphism_generators(g, colors).generators


def preserves(p: Permutation, colors: Sequence[int]) -> bool:
    return all(colors[w] == c for w, c in zip(p.images, colors))


def canonical_colorings(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Colorings of n points using exactly colors 1..k, first occurrences increasing.

    These are restricted growth strings, yielded in lexicographic order.
    """
    if k < 1 or k > n:
        return
    word = [0] * n

    def rec(i: int, top: int):
        if i == n:
            if top == k:
                yield tuple(word)
            return
        if k - top > n - i:
            return
        for c in range(1, min(top + 1, k) + 1):
            word[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def distinguishing_number(g: Graph, budget: int = DEFAULT_COLORING_BUDGET,
                          group: PermGroup | None = None) -> int:
    """Least number of colors admitting a distinguishing coloring.

    Colorings are tried in canonical order, so relabelings of colors are
    never revisited.  By default each candidate is checked with a colored
    automorphism search; when an enumerated ``group`` is passed, candidates
    are checked against its elements instead.
    """
    nontrivial = None
    if group is not None:
        nontrivial = [p for p in group.elements if not p.is_identity()]
        if not nontrivial:
            return 1
    tried = 0
    for k in range(1, g.n + 1):
        for word in canonical_colorings(g.n, k):
            tried += 1
            if tried > budget:
                raise SearchBudgetExceeded(budget)
            if nontrivial is None:
                ok = is_distinguishing(g, word)
            else:
                ok = not any(preserves(p, word) for p in nontrivial)
            if ok:
                return k
    raise AssertionError("the all-distinct coloring is always distinguishing")


def group_motion(group: PermGroup) -> MotionResult:
    best = None
    for p in group.elements:
        m = sum(1 for i, v in enumerate(p.images) if i != v)
        if m and (best is None or m < best.motion):
            best = MotionResult(m, p)
    if best is None:
        raise NoSymmetry("the group is trivial, so motion is undefined")
    return best


def motion(g: Graph, cap: int = DEFAULT_GROUP_CAP) -> MotionResult:
    """Fewest vertices moved by a non-identity automorphism."""
    return group_motion(automorphism_group(g, cap))


def motion_bound_check(g: Graph, cap: int = DEFAULT_GROUP_CAP) -> bool:
    group = automorphism_group(g, cap)
    m = group_motion(group).motion
    return group_theta(group).theta >= g.n - m + 2


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (0 when k > n or k < 0)."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if k == n:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _count_orbits(g: Graph, k: int, budget: int, cap: int, surjective: bool) -> int:
    if k < 1:
        return 0
    if k ** g.n > budget:
        raise SearchBudgetExceeded(budget)
    group = automorphism_group(g, cap)
    size = len(group.elements)
    perms = [p.images for p in group.elements]
    seen: set[tuple[int, ...]] = set()
    orbits = colorings = 0
    for c in product(range(1, k + 1), repeat=g.n):
        if c in seen or (surjective and len(set(c)) != k):
            continue
        orb = {tuple(c[a] for a in p) for p in perms}
        seen |= orb
        rep = min(orb)
        if is_distinguishing(g, rep):
            assert len(orb) == size, f"distinguishing orbit of size {len(orb)}, |Aut| = {size}"
            orbits += 1
            colorings += len(orb)
        else:
            assert len(orb) < size, "a non-distinguishing coloring has a nontrivial stabilizer"
    assert colorings == orbits * size
    return orbits


def phi_k(g: Graph, k: int, mode: str = "brute", budget: int = DEFAULT_COLORING_BUDGET,
          cap: int = DEFAULT_GROUP_CAP) -> int:
    """Inequivalent distinguishing colorings that use exactly k colors.

    ``mode="formula"`` evaluates ``k! S(n, k) / |Aut(g)|``, which only holds
    once every k-coloring is distinguishing (k >= theta).
    """
    if mode == "brute":
        return _count_orbits(g, k, budget, cap, surjective=True)
    if mode == "formula":
        group = automorphism_group(g, cap)
        t = group_theta(group).theta
        if k < t:
            raise FormulaInapplicable(f"closed form needs k >= theta = {t}, got k = {k}")
        total = factorial(k) * stirling2(g.n, k)
        q, r = divmod(total, len(group.elements))
        assert r == 0
        return q
    raise ValueError(f"unknown mode {mode!r}")


def Phi_k(g: Graph, k: int, mode: str = "brute", budget: int = DEFAULT_COLORING_BUDGET,
          cap: int = DEFAULT_GROUP_CAP) -> int:
    """Inequivalent distinguishing colorings drawn from the palette 1..k."""
    if mode == "brute":
        return _count_orbits(g, k, budget, cap, surjective=False)
    if mode == "formula_sum":
        t = theta(g, cap).theta
        total = 0
        for i in range(1, min(k, g.n) + 1):
            sub = "formula" if i >= t else "brute"
            total += comb(k, i) * phi_k(g, i, sub, budget, cap)
        return total
    raise ValueError(f"unknown mode {mode!r}")


def path_Phi_closed_form(n: int, k: int) -> int:
    """``(k^n - k^ceil(n/2)) / 2`` for the path on n >= 2 vertices."""
    if n < 2 or k < 1:
        raise FormulaInapplicable("closed form for paths needs n >= 2 and k >= 1")
    return (k ** n - k ** ((n + 1) // 2)) // 2


def complete_Phi_closed_form(n: int, k: int) -> int:
    """``C(k, n)`` for the complete graph on n >= 2 vertices."""
    if n < 2:
        raise FormulaInapplicable("closed form for complete graphs needs n >= 2")
    return comb(k, n)
