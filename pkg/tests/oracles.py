"""Independent brute-force oracles.

Nothing here imports the progression listing or the DFS; progressions are
rebuilt from their definition and colorings are enumerated with
itertools.product.
"""

from collections import Counter
from itertools import combinations, permutations, product


def interval_triples(elements, n):
    A = set(elements)
    return {frozenset((a, b, c)) for a in A for b in A for c in A
            if a < b < c and a + c == 2 * b and c <= n}


def cyclic_triples(elements, n):
    A = set(elements)
    return {frozenset((a, b, c)) for a in A for b in A for c in A
            if len({a, b, c}) == 3 and (a + c - 2 * b) % n == 0}


def triples(kind, elements, n):
    return interval_triples(elements, n) if kind == "interval" else cyclic_triples(elements, n)


def rainbow_free_colorings(kind, elements, n, r):
    elements = sorted(elements)
    ts = [tuple(t) for t in triples(kind, elements, n)]
    pos = {x: i for i, x in enumerate(elements)}
    idx = [tuple(pos[x] for x in t) for t in ts]
    for col in product(range(1, r + 1), repeat=len(elements)):
        if all(len({col[i], col[j], col[k]}) < 3 for i, j, k in idx):
            yield dict(zip(elements, col))


def count_rainbow_free(kind, elements, n, r):
    return sum(1 for _ in rainbow_free_colorings(kind, elements, n, r))


def count_exact(kind, elements, n, s):
    return sum(1 for c in rainbow_free_colorings(kind, elements, n, s)
               if len(set(c.values())) == s)


def order_by_multiplication(a, m):
    x, t = a % m, 1
    while x != 1:
        x = x * a % m
        t += 1
    return t


def subtemplate_count(palette, ts):
    total = 0
    for t in ts:
        a, b, c = sorted(t)
        for i, j, l in product(palette.get(a, ()), palette.get(b, ()), palette.get(c, ())):
            if len({i, j, l}) == 3:
                total += 1
    return total


def hypergraph(n, r):
    """Explicit rainbow 3-AP hypergraph on [n] x [r] and its codegree maxima."""
    edges = set()
    for t in interval_triples(range(1, n + 1), n):
        a, b, c = sorted(t)
        for i, j, l in permutations(range(1, r + 1), 3):
            edges.add(frozenset(((a, i), (b, j), (c, l))))
    pairs = Counter()
    for e in edges:
        for u, v in combinations(sorted(e), 2):
            pairs[(u, v)] += 1
    return {
        "vertices": n * r,
        "edges": len(edges),
        "delta2": max(pairs.values(), default=0),
        "delta3": 1 if edges else 0,
    }
