"""Exhaustive counting of rainbow-free colorings (the brute-force oracle).

The DFS colors support elements in a fixed order and prunes a partial
coloring as soon as a progression whose last element was just colored is
rainbow.  The tree can be cut at a fixed depth; the subtrees below the cut
are independent and may run on a thread pool (the compiled kernel releases
the GIL).  The cut depth depends only on the problem, never on the worker
count, so reports are identical for any number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, perm
from typing import Iterable

import numpy as np

from . import _kernel
from .numbers import CYCLIC, Structure, is_prime, list_aps

EXHAUSTIVE = "ExhaustiveDFS"
SYMMETRY = "SymmetryReduced"
FORMULA = "Formula"
CACHED = "cached"

DEFAULT_BUDGET = 2_000_000_000


class BudgetExceeded(RuntimeError):
    pass


class AwUndefined(ValueError):
    pass


@dataclass
class CountReport:
    structure: Structure
    r: int
    k: int
    count: int
    method: str
    elapsed: float = 0.0
    nodes: int = 0
    leaves: int = 0
    by_colors: tuple[int, ...] | None = None
    exact_colors: int | None = None

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "structure": self.structure.key(),
            "kind": self.structure.kind,
            "n": self.structure.n,
            "size": len(self.structure),
            "r": self.r,
            "k": self.k,
            "count": str(self.count),
            "method": self.method,
            "nodes": self.nodes,
            "leaves": self.leaves,
        }
        if self.by_colors is not None:
            d["by_colors"] = [str(v) for v in self.by_colors]
        if self.exact_colors is not None:
            d["exact_colors"] = self.exact_colors
        if timing:
            d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d


@dataclass
class AwResult:
    structure: Structure
    k: int
    value: int
    witness: dict[int, int] | None = None
    nodes: int = 0
    elapsed: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "structure": self.structure.key(),
            "kind": self.structure.kind,
            "n": self.structure.n,
            "k": self.k,
            "aw": self.value,
            "witness": None if self.witness is None
            else [[x, c] for x, c in sorted(self.witness.items())],
            "nodes": self.nodes,
        }
        if timing:
            d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d


@dataclass(frozen=True)
class _Problem:
    structure: Structure
    k: int
    elements: tuple[int, ...]
    off: np.ndarray = field(repr=False)
    preds: np.ndarray = field(repr=False)
    rows: tuple[tuple[tuple[int, ...], ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.elements)


def assignment_order(s: Structure, order: str = "auto") -> tuple[int, ...]:
    """Element order for the DFS.

    ``orbit`` puts 0 first and then the doubling/negation orbits; it is only
    defined for a full Z_p with p an odd prime.  ``auto`` uses it when
    available and the natural order otherwise.
    """
    orbit_ok = s.kind == CYCLIC and s.is_full and s.n >= 3 and is_prime(s.n)
    if order == "orbit" and not orbit_ok:
        raise ValueError("orbit order needs a full cyclic structure of odd prime order")
    if order not in ("auto", "orbit", "natural"):
        raise ValueError(f"unknown order {order!r}")
    if order == "orbit" or (order == "auto" and orbit_ok):
        from .orbits import orbit_order
        return tuple(orbit_order(s.n))
    return s.support


@lru_cache(maxsize=512)
def _prepare(s: Structure, k: int, order: str) -> _Problem:
    elements = assignment_order(s, order)
    pos = {x: i for i, x in enumerate(elements)}
    rows: list[list[tuple[int, ...]]] = [[] for _ in elements]
    for t in list_aps(s, k):
        ps = sorted(pos[x] for x in t[:k])
        rows[ps[-1]].append(tuple(ps[:-1]))
    off = np.zeros(len(elements) + 1, np.int64)
    flat = []
    for i, row in enumerate(rows):
        row.sort()
        off[i + 1] = off[i] + len(row)
        flat.extend(row)
    preds = np.array(flat, np.int64).reshape(len(flat), k - 1)
    return _Problem(s, k, elements, off, preds, tuple(tuple(r) for r in rows))


def default_split_depth(m: int) -> int:
    return 0 if m <= 16 else 8


def _rainbow(col, row, c) -> bool:
    for t in row:
        seen = {c}
        for j in t:
            seen.add(col[j])
        if len(seen) == len(t) + 1:
            return True
    return False


def _prefixes(prob: _Problem, r: int, depth: int, canonical: bool, exact: bool):
    """Rainbow-free partial colorings of the first ``depth`` positions, in
    the kernel's visiting order, and the number of nodes they account for."""
    m = prob.m
    out: list[tuple[int, ...]] = []
    col: list[int] = []
    occ = [0] * r
    nodes = 0

    def rec(i: int, nused: int) -> None:
        nonlocal nodes
        if i == depth:
            out.append(tuple(col))
            return
        limit = min(r - 1, nused) if canonical else r - 1
        for c in range(limit + 1):
            if exact and r - nused - (occ[c] == 0) > m - i - 1:
                continue
            if _rainbow(col, prob.rows[i], c):
                continue
            nodes += 1
            col.append(c)
            occ[c] += 1
            rec(i + 1, nused + (occ[c] == 1))
            col.pop()
            occ[c] -= 1

    rec(0, 0)
    return out, nodes


def _run(prob: _Problem, r: int, *, canonical: bool, exact: bool, stop_first: bool = False,
         budget: int = DEFAULT_BUDGET, workers: int = 1, split_depth: int | None = None):
    m = prob.m
    depth = default_split_depth(m) if split_depth is None else min(split_depth, m)
    prefixes, nodes = _prefixes(prob, r, depth, canonical, exact)
    if nodes > budget:
        raise BudgetExceeded(f"node budget {budget} exceeded")
    sub_budget = budget - nodes

    def task(prefix):
        counts = np.zeros(r + 1, np.int64)
        witness = np.full(max(m, 1), -1, np.int64)
        arr = np.zeros(max(m, 1), np.int64)
        arr[:len(prefix)] = prefix
        n_sub, status = _kernel.dfs(m, r, depth, arr, prob.off, prob.preds, canonical, exact,
                                    stop_first, sub_budget, counts, witness)
        return counts, int(n_sub), int(status), witness

    results = []
    if workers <= 1 or len(prefixes) <= 1:
        for p in prefixes:
            res = task(p)
            results.append(res)
            if res[2] != _kernel.DONE:
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for lo in range(0, len(prefixes), 4 * workers):
                chunk = list(pool.map(task, prefixes[lo:lo + 4 * workers]))
                results.extend(chunk)
                if any(res[2] != _kernel.DONE for res in chunk):
                    break

    total = [0] * (r + 1)
    witness = None
    for counts, n_sub, status, wit in results:
        nodes += n_sub
        if status == _kernel.BUDGET or nodes > budget:
            raise BudgetExceeded(f"node budget {budget} exceeded")
        for s in range(r + 1):
            total[s] += int(counts[s])
        if status == _kernel.FOUND:
            witness = {prob.elements[i]: int(wit[i]) + 1 for i in range(m)}
            break
    return total, nodes, witness


def _check_method(method: str) -> bool:
    if method not in (EXHAUSTIVE, SYMMETRY):
        raise ValueError(f"search method must be {EXHAUSTIVE} or {SYMMETRY}, got {method!r}")
    return method == SYMMETRY


def count_rainbow_free(s: Structure, r: int, k: int = 3, method: str = SYMMETRY, *,
                       budget: int = DEFAULT_BUDGET, workers: int = 1, order: str = "auto",
                       split_depth: int | None = None) -> CountReport:
    """Exact number of r-colorings of ``s.support`` with no rainbow k-AP."""
    if r < 1 or k < 3:
        raise ValueError("need r >= 1 and k >= 3")
    canonical = _check_method(method)
    t0 = time.perf_counter()
    prob = _prepare(s, k, order)
    raw, nodes, _ = _run(prob, r, canonical=canonical, exact=False, budget=budget,
                         workers=workers, split_depth=split_depth)
    if canonical:
        # each canonical coloring with j colors stands for r!/(r-j)! colorings
        by_colors = tuple(raw[j] * perm(r, j) for j in range(r + 1))
    else:
        by_colors = tuple(raw)
    return CountReport(s, r, k, sum(by_colors), method, time.perf_counter() - t0,
                       nodes, sum(raw), by_colors)


def count_exact_color(s: Structure, r: int, s_colors: int, k: int = 3, method: str = SYMMETRY, *,
                      budget: int = DEFAULT_BUDGET, workers: int = 1, order: str = "auto",
                      split_depth: int | None = None) -> CountReport:
    """Rainbow-free colorings onto one fixed set of ``s_colors`` colors."""
    if not 1 <= s_colors <= r:
        raise ValueError("need 1 <= s_colors <= r")
    canonical = _check_method(method)
    t0 = time.perf_counter()
    prob = _prepare(s, k, order)
    raw, nodes, _ = _run(prob, s_colors, canonical=canonical, exact=True, budget=budget,
                         workers=workers, split_depth=split_depth)
    count = raw[s_colors] * (factorial(s_colors) if canonical else 1)
    return CountReport(s, r, k, count, method, time.perf_counter() - t0, nodes,
                       raw[s_colors], exact_colors=s_colors)


def find_exact_witness(s: Structure, r: int, k: int = 3, *, budget: int = DEFAULT_BUDGET,
                       workers: int = 1, order: str = "auto", split_depth: int | None = None):
    """First rainbow-free exact r-coloring in canonical DFS order, or None.

    Returns (coloring or None, nodes).  Colors are 1..r.
    """
    prob = _prepare(s, k, order)
    _, nodes, witness = _run(prob, r, canonical=True, exact=True, stop_first=True,
                             budget=budget, workers=workers, split_depth=split_depth)
    return witness, nodes


def compute_aw(s: Structure, k: int = 3, *, budget: int = DEFAULT_BUDGET, workers: int = 1,
               order: str = "auto", split_depth: int | None = None) -> AwResult:
    """Anti-van der Waerden number: least r with no rainbow-free exact r-coloring.

    Merging two color classes never creates a rainbow progression, so the
    property is monotone in r and the ascending scan is exact.
    """
    if not list_aps(s, k):
        raise AwUndefined(f"{s.key()} contains no {k}-AP; aw is undefined")
    t0 = time.perf_counter()
    total_nodes = 0
    witness, nodes = find_exact_witness(s, k - 1, k, budget=budget, workers=workers,
                                        order=order, split_depth=split_depth)
    total_nodes += nodes
    r = k
    while True:
        nxt, nodes = find_exact_witness(s, r, k, budget=budget - total_nodes, workers=workers,
                                        order=order, split_depth=split_depth)
        total_nodes += nodes
        if nxt is None:
            return AwResult(s, k, r, witness, total_nodes, time.perf_counter() - t0)
        witness = nxt
        r += 1


def enumerate_rainbow_free(s: Structure, r: int, k: int = 3, *, exact: bool = False,
                           canonical: bool = False, order: str = "auto") -> list[dict[int, int]]:
    """Every rainbow-free r-coloring of ``s`` (colors 1..r), in DFS order.

    Pure Python; meant for small structures or heavily pruned searches.
    """
    prob = _prepare(s, k, order)
    complete, _ = _prefixes(prob, r, prob.m, canonical, exact)
    return [{x: c + 1 for x, c in zip(prob.elements, col)} for col in complete]


def _check_subset(inner: Iterable[int], outer: Iterable[int], what: str) -> None:
    if not set(inner) <= set(outer):
        raise ValueError(f"{what} violated")


def _in_some_3ap(a: int, b: int, member) -> bool:
    if member(2 * a - b) or member(2 * b - a):
        return True
    return (a + b) % 2 == 0 and member((a + b) // 2)


def prop10_pair_count(I: Iterable[int], A: Iterable[int], n: int) -> int:
    """Pairs a < b from I such that no 3-AP of A contains both."""
    I, A = sorted(set(I)), set(A)
    _check_subset(A, range(1, n + 1), "A within [n]")
    _check_subset(I, A, "I within A")
    member = A.__contains__
    return sum(1 for i, a in enumerate(I) for b in I[i + 1:] if not _in_some_3ap(a, b, member))


def prop11_pair_count(I1: Iterable[int], I2: Iterable[int], A: Iterable[int], n: int) -> int:
    """Pairs (a, b), a in I1, b in I2, lying together in some 3-AP of A."""
    I1, I2, A = set(I1), set(I2), set(A)
    _check_subset(A, range(1, n + 1), "A within [n]")
    _check_subset(I1 | I2, A, "I1, I2 within A")
    if I1 & I2:
        raise ValueError("I1 and I2 must be disjoint")
    if len(I1) > len(I2):
        raise ValueError("need |I1| <= |I2|")
    member = A.__contains__
    return sum(1 for a in I1 for b in I2 if _in_some_3ap(a, b, member))
