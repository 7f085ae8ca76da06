"""Closed-form counts and bounds for rainbow-free colorings.

All values are exact integers or rationals.  The only transcendental term,
2**(-n / (36 log2 n)), is replaced by a dyadic upper bound obtained with
outward-rounded interval arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from mpmath import iv, libmp

from .numbers import CYCLIC, Structure, is_power_of_two, is_prime, list_aps, mult_order

_IV_LOCK = threading.Lock()


@dataclass(frozen=True)
class FormulaValue:
    value: int | Fraction
    formula: str
    params: dict = field(default_factory=dict)
    vacuous: bool = False
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        v = self.value
        return {
            "formula": self.formula,
            "value": str(v) if isinstance(v, int) else f"{v.numerator}/{v.denominator}",
            "params": {k: str(x) for k, x in sorted(self.params.items())},
            "vacuous": self.vacuous,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class AwZnCharacterization:
    n: int
    holds: bool
    clause: str | None


def _odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def orbit_parameters(p: int) -> tuple[int, int, int]:
    """(ord_p(2), c, m) with m = (p-1) / (c * ord_p(2))."""
    _odd_prime(p)
    o = mult_order(2, p)
    c = 1 if o % 2 == 0 else 2
    m, rem = divmod(p - 1, c * o)
    assert rem == 0
    return o, c, m


def eq1_lower_bound(r: int, size: int) -> FormulaValue:
    """Two-color lower bound C(r,2) 2^|A| - r^2 + 2r."""
    if r < 3 or size < 0:
        raise ValueError("need r >= 3 and size >= 0")
    v = comb(r, 2) * 2 ** size - r * r + 2 * r
    notes = ()
    if v < 1:
        notes = (f"vacuous: every structure has at least one coloring (value {v})",)
    return FormulaValue(v, "eq1", {"r": r, "size": size}, v < 1, notes)


def decay_upper(n: int, bits: int = 64) -> Fraction:
    """Dyadic rational >= 2**(-n / (36 log2 n)), outward rounded at ``bits``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if bits < 20:
        raise ValueError("need at least 20 bits")
    with _IV_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            x = iv.mpf(n) / (36 * iv.log(iv.mpf(n), 2))
            y = iv.mpf(2) ** (-x)
            num, den = libmp.to_rational(y._mpi_[1])
        finally:
            iv.prec = saved
    return Fraction(int(num), int(den))


def _xi_hypothesis(r: int, xi: Fraction) -> bool:
    # 0 < xi <= 3 / (5 + 8 log2 r), decided on an interval enclosure
    if xi <= 0:
        return False
    with _IV_LOCK:
        saved = iv.prec
        iv.prec = 64
        try:
            bound = 3 / (5 + 8 * iv.log(iv.mpf(r), 2))
            lo = Fraction(*map(int, libmp.to_rational(bound._mpi_[0])))
        finally:
            iv.prec = saved
    return xi <= lo


def thm2_upper_bound(r: int, n: int, size: int, bits: int = 64) -> FormulaValue:
    """C(r,2) 2^|A| + 2^(-n/(36 log2 n)) 2^n with the decay term rounded up."""
    if r < 3:
        raise ValueError("need r >= 3")
    if n < 2:
        raise ValueError("n must be at least 2 (log2 n undefined or zero)")
    if not 0 <= size <= n:
        raise ValueError("need 0 <= size <= n")
    b = decay_upper(n, bits)
    v = comb(r, 2) * 2 ** size + b * 2 ** n
    xi = Fraction(n - size, n)
    ok = _xi_hypothesis(r, xi)
    notes = ("asymptotic bound; n0 unspecified, small n is outside its regime",)
    if not ok:
        notes += ("xi hypothesis 0 < xi <= 3/(5+8 log2 r) fails",)
    return FormulaValue(v, "thm2", {"r": r, "n": n, "size": size, "xi": xi,
                                    "decay_upper": b, "xi_hypothesis": ok}, False, notes)


def thm5_exact_zp(r: int, p: int) -> FormulaValue:
    """Exact number of rainbow-free r-colorings of Z_p, p an odd prime."""
    if r < 3:
        raise ValueError("need r >= 3")
    o, c, m = orbit_parameters(p)
    v = comb(r, 2) * 2 ** p - r * r + 2 * r + r * comb(r - 1, 2) * p * (2 ** m - 2)
    return FormulaValue(v, "thm5", {"r": r, "p": p, "ord": o, "c": c, "m": m})


def aw_zn3_is_3(n: int) -> AwZnCharacterization:
    """Whether aw(Z_n, 3) = 3, by the known arithmetic characterization."""
    if n < 1:
        raise ValueError("n must be positive")
    if is_power_of_two(n):
        return AwZnCharacterization(n, True, "i")
    if is_prime(n):
        o = mult_order(2, n)
        if o == n - 1:
            return AwZnCharacterization(n, True, "ii")
        half = (n - 1) // 2
        if o == half and half % 2 == 1:
            return AwZnCharacterization(n, True, "iii")
    return AwZnCharacterization(n, False, None)


def cor6_rhs(r: int, n: int, p: int, g_zn: int) -> FormulaValue:
    """Lower bound for g_r(Z_{np}) built from g_r(Z_n) = ``g_zn``."""
    if r < 3 or n < 1:
        raise ValueError("need r >= 3 and n >= 1")
    o, c, m = orbit_parameters(p)
    two_color = comb(r, 2) * 2 ** (n * p) - r * r + 2 * r
    lifted = p * r * (g_zn - (r - 1) * 2 ** n + r - 2)
    special = comb(r, 2) * p * (2 ** m - 2) * (g_zn - 2 ** n)
    return FormulaValue(two_color + lifted + special, "cor6",
                        {"r": r, "n": n, "p": p, "g_zn": g_zn, "ord": o, "c": c, "m": m})


def closed_form_count(s: Structure, r: int, k: int = 3) -> FormulaValue | None:
    """A closed form for the rainbow-free count of ``s`` when one applies.

    Covers structures without any k-AP (every coloring counts), full Z_n
    with aw(Z_n, 3) = 3 (only two-colorings survive) and Z_p for odd primes.
    """
    if not list_aps(s, k):
        return FormulaValue(r ** len(s), "no-progression", {"r": r, "size": len(s)})
    if k != 3 or r < 3 or s.kind != CYCLIC or not s.is_full:
        return None
    n = s.n
    if n >= 3 and is_prime(n):
        return thm5_exact_zp(r, n)
    if aw_zn3_is_3(n).holds:
        v = eq1_lower_bound(r, n)
        return FormulaValue(v.value, "lemma7-eq1", {"r": r, "n": n})
    return None
