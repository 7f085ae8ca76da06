"""Ambient structures, arithmetic progressions and elementary number theory."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

INTERVAL = "interval"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class Structure:
    """An interval [n], a subset of it, or a subset of Z_n.

    Interval supports are 1-based, cyclic supports 0-based.
    """

    kind: str
    n: int
    support: tuple[int, ...]
    member: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in (INTERVAL, CYCLIC):
            raise ValueError(f"unknown structure kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("ambient size must be positive")
        lo, hi = self.ambient_range
        support = tuple(sorted(set(self.support)))
        if len(support) != len(self.support):
            raise ValueError("support elements must be distinct")
        for x in support:
            if not lo <= x <= hi:
                raise ValueError(f"element {x} outside ambient range [{lo}, {hi}]")
        object.__setattr__(self, "support", support)
        bitmap = bytearray(hi + 1)
        for x in support:
            bitmap[x] = 1
        object.__setattr__(self, "member", bytes(bitmap))

    @classmethod
    def interval(cls, n: int, support: Iterable[int] | None = None) -> Structure:
        return cls(INTERVAL, n, tuple(range(1, n + 1)) if support is None else tuple(support))

    @classmethod
    def cyclic(cls, n: int, support: Iterable[int] | None = None) -> Structure:
        return cls(CYCLIC, n, tuple(range(n)) if support is None else tuple(support))

    @property
    def ambient_range(self) -> tuple[int, int]:
        return (1, self.n) if self.kind == INTERVAL else (0, self.n - 1)

    @property
    def is_full(self) -> bool:
        return len(self.support) == self.n

    def __contains__(self, x: int) -> bool:
        lo, hi = self.ambient_range
        return lo <= x <= hi and self.member[x] == 1

    def __len__(self) -> int:
        return len(self.support)

    def minus(self, removed: Iterable[int]) -> Structure:
        removed = set(removed)
        lo, hi = self.ambient_range
        bad = sorted(x for x in removed if not lo <= x <= hi)
        if bad:
            raise ValueError(f"cannot remove {bad}: outside the ambient range [{lo}, {hi}]")
        return Structure(self.kind, self.n, tuple(x for x in self.support if x not in removed))

    def key(self) -> str:
        """Canonical text form, e.g. ``cyclic:7`` or ``interval:10:1,2,3,5``."""
        if self.is_full:
            return f"{self.kind}:{self.n}"
        return f"{self.kind}:{self.n}:" + ",".join(map(str, self.support))

    def describe(self) -> dict:
        return {"kind": self.kind, "n": self.n,
                "support": "full" if self.is_full else list(self.support)}


@dataclass(frozen=True, order=True)
class APTriple:
    a: int
    b: int
    c: int
    d: int

    @property
    def elements(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def list_aps(s: Structure, k: int = 3) -> list[tuple[int, ...]]:
    """All nontrivial k-APs inside ``s.support`` as (terms..., d) tuples.

    Interval progressions are increasing.  Cyclic progressions are
    deduplicated by element set (the first (a, d) in lexicographic order is
    the representative) and progressions with a repeated element are dropped.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    out = []
    if s.kind == INTERVAL:
        for a in s.support:
            d = 1
            while a + (k - 1) * d <= s.n:
                terms = tuple(a + i * d for i in range(k))
                if all(t in s for t in terms):
                    out.append(terms + (d,))
                d += 1
        return out
    n = s.n
    seen = set()
    for a in s.support:
        for d in range(1, n):
            terms = tuple((a + i * d) % n for i in range(k))
            key = frozenset(terms)
            if len(key) < k or key in seen:
                continue
            if all(s.member[t] for t in terms):
                seen.add(key)
                out.append(terms + (d,))
    return out


def list_3aps(s: Structure) -> list[APTriple]:
    return [APTriple(*t) for t in list_aps(s, 3)]


def count_3aps_interval(n: int) -> int:
    """Number of nontrivial 3-APs in [n]."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n // 2) * ((n - 1) // 2)


def count_3aps(s: Structure) -> int:
    return len(list_aps(s, 3))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation; fine for the moduli used here."""
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(m: int) -> int:
    t = m
    for q in factorize(m):
        t = t // q * (q - 1)
    return t


def mult_order(a: int, m: int) -> int:
    """Smallest t >= 1 with a**t == 1 (mod m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(a, m) != 1:
        raise ValueError(f"order of {a} mod {m} is undefined (gcd != 1)")
    t = totient(m)
    for q in factorize(t):
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    return t


def is_generator(a: int, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return mult_order(a, p) == p - 1


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def pairs_in_3aps(s: Structure, x: int, y: int) -> int:
    """Number of (deduplicated) 3-APs of ``s`` containing both x and y."""
    return sum(1 for t in list_aps(s, 3) if x in t[:3] and y in t[:3])
