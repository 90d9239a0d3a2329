"""Brute-force reference computations, independent of the package's search code."""

from itertools import permutations, product


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def brute_automorphisms(g, colors=None):
    """All adjacency- (and color-) preserving permutations, by trying all n! maps."""
    edges = edge_set(g)
    out = []
    for p in permutations(range(g.n)):
        if colors is not None and any(colors[p[v]] != colors[v] for v in range(g.n)):
            continue
        if all(frozenset((p[u], p[v])) in edges for u, v in g.edges()):
            out.append(p)
    return out


def brute_isomorphic(g, h):
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    target = edge_set(h)
    return any(all(frozenset((p[u], p[v])) in target for u, v in g.edges())
               for p in permutations(range(g.n)))


def cycles(p):
    seen, out = set(), 0
    for s in range(len(p)):
        if s not in seen:
            out += 1
            v = s
            while v not in seen:
                seen.add(v)
                v = p[v]
    return out


def brute_theta(g):
    """1 + max cycle count over all non-identity automorphisms."""
    ident = tuple(range(g.n))
    counts = [cycles(p) for p in brute_automorphisms(g) if p != ident]
    return 1 + max(counts, default=0)


def brute_theta_by_colorings(g):
    """Least k such that every k-coloring is distinguishing, straight from the definition."""
    ident = tuple(range(g.n))
    auts = [p for p in brute_automorphisms(g) if p != ident]
    for k in range(1, g.n + 1):
        if all(not any(all(c[p[v]] == c[v] for v in range(g.n)) for p in auts)
               for c in product(range(k), repeat=g.n) if len(set(c)) == k):
            return k
    return g.n


def brute_D(g):
    ident = tuple(range(g.n))
    auts = [p for p in brute_automorphisms(g) if p != ident]
    for k in range(1, g.n + 1):
        for c in product(range(k), repeat=g.n):
            if not any(all(c[p[v]] == c[v] for v in range(g.n)) for p in auts):
                return k
    return g.n


def surjections(n, k):
    return sum(1 for c in product(range(k), repeat=n) if len(set(c)) == k)


def brute_stirling2(n, k):
    """Set partitions of n points into k blocks = surjections / k!."""
    f = 1
    for j in range(2, k + 1):
        f *= j
    return surjections(n, k) // f
