"""Named graph families, Cayley graphs, generalized Johnson graphs and closed forms.

Vertex orders are fixed so fixtures are reproducible:

* path / cycle: 0..n-1 along the path or around the cycle;
* complete bipartite K_{m,n}: the m left vertices, then the n right ones;
* generalized Johnson J(n,k,i): k-subsets of {1..n} in colexicographic order;
* Cayley graphs: the element ids of the group table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial, isqrt
from typing import Callable, Hashable, Sequence

from .autsearch import isomorphic
from .distinguishing import theta as enumerate_theta
from .errors import (InvalidComponent, InvalidConnectionSet, InvalidParams, NotApplicable,
                     NotSymmetric)
from .graph import Graph, build_graph, is_connected
from .perm import Permutation


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("a path needs at least one vertex")
    return build_graph(n, [(v, v + 1) for v in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams("a cycle needs at least three vertices")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("a complete graph needs at least one vertex")
    return build_graph(n, combinations(range(n), 2), f"K{n}")


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("an empty graph needs at least one vertex")
    return build_graph(n, [], f"co-K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidParams("both sides of K_{m,n} need a vertex")
    return build_graph(m + n, [(u, m + v) for u in range(m) for v in range(n)], f"K{m},{n}")


_STANDARD = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "complete_bipartite": complete_bipartite,
}


def standard_family(kind: str, *sizes: int) -> Graph:
    try:
        make = _STANDARD[kind]
    except KeyError:
        raise InvalidParams(f"unknown family {kind!r}") from None
    try:
        return make(*sizes)
    except TypeError:
        raise InvalidParams(f"wrong number of sizes for {kind}: {sizes}") from None


def circulant(n: int, connection: Sequence[int]) -> Graph:
    """Cayley graph of Z_n: ``u ~ v`` iff ``(u - v) mod n`` lies in the connection set."""
    s = {x % n for x in connection}
    if 0 in s:
        raise InvalidConnectionSet("0 cannot be in the connection set")
    if any((-x) % n not in s for x in s):
        raise NotSymmetric(f"connection set {sorted(s)} is not closed under negation mod {n}")
    g = build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if (u - v) % n in s],
                    f"Circ({n};{','.join(map(str, sorted(s)))})")
    rot = [(v + 1) % n for v in range(n)]
    assert all(g.has_edge(rot[u], rot[v]) for u, v in g.edges())
    return g


@dataclass(frozen=True)
class GroupTable:
    """A finite group on ids 0..m-1: ``mul[a][b]`` is the id of ``a·b``."""

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.mul)

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], op: Callable) -> GroupTable:
        index = {e: i for i, e in enumerate(elements)}
        mul = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        m = len(elements)
        ident = next(e for e in range(m) if all(mul[e][x] == x == mul[x][e] for x in range(m)))
        inv = tuple(next(y for y in range(m) if mul[x][y] == ident) for x in range(m))
        tbl = cls(mul, ident, inv, tuple(elements))
        tbl.check()
        return tbl

    def check(self, samples: int = 2000):
        m = self.order
        for x in range(m):
            assert self.mul[x][self.identity] == x == self.mul[self.identity][x]
            assert self.mul[x][self.inverse[x]] == self.identity == self.mul[self.inverse[x]][x]
        step = max(1, m ** 3 // samples)
        for t in range(0, m ** 3, step):
            a, b, c = t // (m * m), t // m % m, t % m
            assert self.mul[self.mul[a][b]][c] == self.mul[a][self.mul[b][c]], "not associative"

    def index(self, label) -> int:
        return self.labels.index(label)


def cyclic_product_table(*moduli: int) -> GroupTable:
    """Z_{m1} ⊕ Z_{m2} ⊕ ..., elements as tuples in lexicographic order."""
    elements = [()]
    for m in moduli:
        elements = [e + (x,) for e in elements for x in range(m)]
    return GroupTable.from_elements(
        elements, lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli)))


def symmetric_group_table(m: int) -> GroupTable:
    """Sym(m) on points 1..m; elements are image tuples in lexicographic order.

    The product ``a·b`` applies b first, then a.
    """
    elements = list(permutations(range(1, m + 1)))
    return GroupTable.from_elements(
        elements, lambda a, b: tuple(a[b[i] - 1] for i in range(m)))


def transposition(m: int, a: int, b: int) -> tuple[int, ...]:
    img = list(range(1, m + 1))
    img[a - 1], img[b - 1] = b, a
    return tuple(img)


def cayley(tbl: GroupTable, connection: Sequence[int], name: str | None = None) -> Graph:
    """``g ~ h`` iff ``g·h⁻¹`` lies in the connection set."""
    s = set(connection)
    if tbl.identity in s:
        raise InvalidConnectionSet("the identity cannot be in the connection set")
    if any(tbl.inverse[x] not in s for x in s):
        raise NotSymmetric("connection set is not closed under inverses")
    m = tbl.order
    edges = [(g, h) for g, h in combinations(range(m), 2) if tbl.mul[g][tbl.inverse[h]] in s]
    graph = build_graph(m, edges, name)
    # with this adjacency rule the regular action is by right translation
    for x in range(m):
        right = [tbl.mul[g][x] for g in range(m)]
        assert all(graph.has_edge(right[g], right[h]) for g, h in edges), "translation failed"
    return graph


@dataclass(frozen=True)
class JohnsonParams:
    n: int
    k: int
    i: int

    def __post_init__(self):
        if not (2 <= 2 * self.k <= self.n and 1 <= self.i <= self.k):
            raise InvalidParams(f"need 2 <= 2k <= n and 1 <= i <= k, got {self}")


def _params(p) -> JohnsonParams:
    return p if isinstance(p, JohnsonParams) else JohnsonParams(*p)


def ksubsets(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {1..n} in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda s: s[::-1])


def generalized_johnson(p) -> Graph:
    """J(n,k,i): k-subsets of {1..n}, adjacent when they share exactly k-i points."""
    p = _params(p)
    verts = [frozenset(s) for s in ksubsets(p.n, p.k)]
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2)
             if len(verts[a] & verts[b]) == p.k - p.i]
    return build_graph(len(verts), edges, f"J({p.n},{p.k},{p.i})")


def kneser(n: int, k: int) -> Graph:
    g = generalized_johnson(JohnsonParams(n, k, k))
    return Graph(g.n, g.rows, f"K({n},{k})")


def petersen() -> Graph:
    g = kneser(5, 2)
    return Graph(g.n, g.rows, "Petersen")


def johnson_degree(p) -> int:
    p = _params(p)
    return comb(p.k, p.k - p.i) * comb(p.n - p.k, p.i)


def johnson_theta(p) -> int:
    p = _params(p)
    n, k, i = p.n, p.k, p.i
    if k == 1:
        return n
    if 2 * k < n:
        return comb(n, k) - comb(n - 2, k - 1) + 1
    if 2 * i == k or i == k:
        return comb(n, k)
    return comb(n, k) - comb(n - 2, k - 1) + 1


def _ceil_half_one_plus_sqrt(x: int) -> int:
    """``ceil((1 + sqrt(x)) / 2)`` in exact integer arithmetic."""
    r = isqrt(x)
    t = r if r * r == x else r + 1  # ceil(sqrt(x))
    return (t + 2) // 2


def johnson_D(p) -> int:
    p = _params(p)
    n, k, i = p.n, p.k, p.i
    if k == 1:
        return n
    if n == 5 and k == 2:
        return 3
    if 2 * k < n:
        return 2
    if 2 * i != k and i != k:
        return 2
    if 2 * i == k:
        return 3
    e = comb(n, k) // 2
    return _ceil_half_one_plus_sqrt(1 + 8 * e)


def johnson_case(p) -> str:
    """Which case of Jones' classification of Aut(J(n,k,i)) applies ('a'..'g')."""
    p = _params(p)
    n, k, i = p.n, p.k, p.i
    if k < 2:
        raise InvalidParams("Jones' classification assumes k >= 2")
    if 2 * k < n - 1:
        return "a"
    if 2 * k == n - 1:
        return "c" if 2 * i == k + 1 else "b"
    if k == 2:
        return "d"
    if i < k and 2 * i != k:
        return "e"
    if 2 * i == k:
        return "f"
    return "g"


def johnson_aut_order(p) -> int:
    p = _params(p)
    n, k = p.n, p.k
    if k == 1:
        return factorial(n)
    e = comb(n, k) // 2
    return {
        "a": factorial(n),
        "b": factorial(n),
        "c": factorial(n + 1),
        "d": 2 ** 3 * factorial(3),
        "e": 2 * factorial(n),
        "f": 2 ** e * factorial(n),
        "g": 2 ** e * factorial(e),
    }[johnson_case(p)]


def natural_action(beta: Permutation, p) -> Permutation:
    """Vertex map of J(n,k,i) induced by beta on {1..n} (beta acts on indices 0..n-1)."""
    p = _params(p)
    verts = ksubsets(p.n, p.k)
    index = {frozenset(s): j for j, s in enumerate(verts)}
    return Permutation(tuple(index[frozenset(beta.images[x - 1] + 1 for x in s)] for s in verts))


def sym_np1_image(sigma: Permutation, subset, p) -> frozenset[int]:
    """Image of a vertex of J(n,k,i) under sigma in Sym(n+1).

    Points 1..n are indices 0..n-1 of ``sigma`` and infinity is index n.  The
    vertex X is sent to the part of sigma({X + inf}, {rest}) holding infinity,
    with infinity removed.
    """
    p = _params(p)
    n, k, i = p.n, p.k, p.i
    if not (2 * k == n - 1 and 2 * i == k + 1):
        raise NotApplicable("the Sym(n+1) action needs k = (n-1)/2 and i = (k+1)/2")
    if sigma.degree != n + 1:
        raise NotApplicable(f"sigma must act on {n + 1} points")
    inf = n
    part = {x - 1 for x in subset} | {inf}
    if len(part) != k + 1:
        raise NotApplicable(f"{sorted(subset)} is not a {k}-subset of 1..{n}")
    moved = {sigma.images[x] for x in part}
    if inf not in moved:
        moved = set(range(n + 1)) - moved
    return frozenset(x + 1 for x in moved if x != inf)


def sym_np1_action(sigma: Permutation, p) -> Permutation:
    """The vertex permutation of J(n,k,i) induced by sigma via ``sym_np1_image``."""
    p = _params(p)
    verts = ksubsets(p.n, p.k)
    index = {frozenset(s): j for j, s in enumerate(verts)}
    return Permutation(tuple(index[sym_np1_image(sigma, s, p)] for s in verts))


# --- named example graphs -------------------------------------------------

def g6_graph() -> Graph:
    """Cay(Z_2 ⊕ Z_3, {(1,0), (0,1), (0,2)}), the triangular prism."""
    tbl = cyclic_product_table(2, 3)
    conn = [tbl.index((1, 0)), tbl.index((0, 1)), tbl.index((0, 2))]
    return cayley(tbl, conn, "G6")


def g24_graph() -> Graph:
    """Cay(Sym(4), {(1 2), (2 3), (2 4)})."""
    tbl = symmetric_group_table(4)
    conn = [tbl.index(transposition(4, a, b)) for a, b in ((1, 2), (2, 3), (2, 4))]
    return cayley(tbl, conn, "G24")


def g24_adjacent_graph() -> Graph:
    """Cay(Sym(4), {(1 2), (2 3), (3 4)}), the adjacent-transposition variant of G24."""
    tbl = symmetric_group_table(4)
    conn = [tbl.index(transposition(4, a, b)) for a, b in ((1, 2), (2, 3), (3, 4))]
    return cayley(tbl, conn, "G24-adjacent")


def theta3_fourteen() -> Graph:
    """Outer 7-cycle 0..6; inner vertex 7+j adjacent to j, j+1 and j+3 (mod 7)."""
    edges = [(j, (j + 1) % 7) for j in range(7)]
    edges += [(7 + j, (j + d) % 7) for j in range(7) for d in (0, 1, 3)]
    return build_graph(14, edges, "theta3-14")


def asymmetric_six() -> Graph:
    """Path 0-1-2-3-4 with vertex 5 joined to 1 and 2; its automorphism group is trivial."""
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)], "asym6")


def asymmetric_six_b() -> Graph:
    """A second asymmetric graph on six vertices, not isomorphic to ``asymmetric_six``."""
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)], "asym6b")


def asymmetric_seven() -> Graph:
    """The asymmetric tree on seven vertices (spider with legs 1, 2, 3)."""
    return build_graph(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)], "asym7")


FIXTURES: dict[str, Callable[[], Graph]] = {
    "g6": g6_graph,
    "g24": g24_graph,
    "g24_adjacent": g24_adjacent_graph,
    "theta3_14": theta3_fourteen,
    "petersen": petersen,
    "asym6": asymmetric_six,
    "asym6b": asymmetric_six_b,
    "asym7": asymmetric_seven,
}


# --- disconnected graphs --------------------------------------------------

@dataclass(frozen=True)
class UnionSpec:
    """Connected components of a disconnected graph, with optional known data.

    ``thetas`` and ``asymmetric`` let callers supply values for components
    whose groups are too large to enumerate; missing entries are computed.
    """

    components: tuple[Graph, ...]
    thetas: tuple[int | None, ...] | None = None
    asymmetric: tuple[bool | None, ...] | None = None


def nu(parts: Sequence[Graph]) -> int:
    """Order of the smallest isomorphism class that repeats, else the total order.

    All parts are assumed asymmetric and connected.
    """
    classes: list[list[Graph]] = []
    for g in parts:
        for cls in classes:
            if cls[0].n == g.n and isomorphic(cls[0], g):
                cls.append(g)
                break
        else:
            classes.append([g])
    repeated = [cls[0].n for cls in classes if len(cls) > 1]
    return min(repeated) if repeated else sum(g.n for g in parts)


def union_theta_case(spec: UnionSpec) -> tuple[int, str]:
    """Threshold of a disjoint union of connected graphs and the case that priced it.

    Case labels: ``a`` (all parts symmetric), ``b`` (all asymmetric), ``c``
    (mixed), ``c*`` (mixed where the asymmetric part has no symmetry at all
    and its alternative does not exceed the symmetric one).
    """
    comps = tuple(spec.components)
    if not comps:
        raise InvalidComponent("no components")
    k = len(comps)
    thetas = list(spec.thetas) if spec.thetas is not None else [None] * k
    asym = list(spec.asymmetric) if spec.asymmetric is not None else [None] * k
    if len(thetas) != k or len(asym) != k:
        raise InvalidComponent("per-component data must match the component count")
    for j, g in enumerate(comps):
        if not is_connected(g):
            raise InvalidComponent(f"component {j} is not connected")
        if thetas[j] is None:
            thetas[j] = enumerate_theta(g).theta
        if asym[j] is None:
            asym[j] = thetas[j] == 1
    sym_idx = [j for j in range(k) if not asym[j]]
    asym_idx = [j for j in range(k) if asym[j]]
    total = sum(g.n for g in comps)

    def theta_sym(idx):
        size = sum(comps[j].n for j in idx)
        return max(thetas[j] + size - comps[j].n for j in idx)

    def theta_asym(idx):
        parts = [comps[j] for j in idx]
        return sum(g.n for g in parts) - nu(parts) + 1

    if not asym_idx:
        return theta_sym(sym_idx), "a"
    if not sym_idx:
        return theta_asym(asym_idx), "b"
    va = sum(comps[j].n for j in sym_idx)
    vb = total - va
    ta, tb = theta_sym(sym_idx), theta_asym(asym_idx)
    if tb == 1 and ta + vb <= tb + va:
        return ta + vb, "c*"
    return max(ta + vb, tb + va), "c"


def union_theta(spec: UnionSpec) -> int:
    return union_theta_case(spec)[0]
