"""Orbits of Z_p \\ {0} under doubling and negation.

A rainbow-free coloring of Z_p whose special (once-used) color sits at 0 must
be constant on each orbit, which is what makes the exact count of Z_p
colorings tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .numbers import Structure, is_prime, list_aps, mult_order


@dataclass(frozen=True)
class OrbitDecomposition:
    p: int
    orbits: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    c: int
    ord: int

    @property
    def m(self) -> int:
        return len(self.orbits)

    def orbit_index(self) -> dict[int, int]:
        return {x: i for i, orb in enumerate(self.orbits) for x in orb}

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "ord": self.ord,
            "c": self.c,
            "m": self.m,
            "representatives": list(self.representatives),
            "orbits": [list(o) for o in self.orbits],
        }


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def _closure(start: int, p: int) -> tuple[int, ...]:
    members = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for y in (2 * x % p, (-x) % p):
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(_ordered(start, members, p))


def _ordered(start: int, members: set[int], p: int) -> list[int]:
    # doubling chain of the representative first, then its negatives
    chain, placed = [], set()
    x = start
    while x not in placed:
        chain.append(x)
        placed.add(x)
        x = 2 * x % p
    for y in chain[:]:
        z = (-y) % p
        if z not in placed:
            chain.append(z)
            placed.add(z)
    assert placed == members
    return chain


def orbit_decompose(p: int) -> OrbitDecomposition:
    _check_odd_prime(p)
    covered: set[int] = set()
    orbits, reps = [], []
    for j in range(1, (p - 1) // 2 + 1):
        if j in covered:
            continue
        orb = _closure(j, p)
        covered.update(orb)
        orbits.append(orb)
        reps.append(j)
    o = mult_order(2, p)
    return OrbitDecomposition(p, tuple(orbits), tuple(reps), 1 if o % 2 == 0 else 2, o)


def structured_exact3_count(p: int, r: int) -> int:
    """Rainbow-free colorings of Z_p using exactly three of r colors.

    One element carries a color used exactly once; the other two colors
    must be constant on orbits and both appear, giving 2**m - 2 choices.
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    m = orbit_decompose(p).m
    return p * r * comb(r - 1, 2) * (2 ** m - 2)


def zero_ap_pair_same_orbit(p: int) -> bool:
    dec = orbit_decompose(p)
    where = dec.orbit_index()
    for t in list_aps(Structure.cyclic(p), 3):
        terms = t[:3]
        if 0 not in terms:
            continue
        a, b = (x for x in terms if x != 0)
        if where[a] != where[b]:
            return False
    return True


def orbit_order(p: int) -> list[int]:
    """0 followed by the orbits in representative order."""
    dec = orbit_decompose(p)
    return [0] + [x for orb in dec.orbits for x in orb]
