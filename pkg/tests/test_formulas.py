import threading
from fractions import Fraction

import mpmath
import pytest

from rainbow_ap.formulas import (aw_zn3_is_3, closed_form_count, cor6_rhs, decay_upper,
                                 eq1_lower_bound, thm2_upper_bound, thm5_exact_zp)
from rainbow_ap.numbers import Structure, is_prime
from rainbow_ap.search import compute_aw, count_rainbow_free


def g(s, r=3):
    return count_rainbow_free(s, r).count


def test_eq1_examples():
    assert eq1_lower_bound(3, 3).value == 21
    assert eq1_lower_bound(3, 1).value == 3
    v = eq1_lower_bound(4, 0)
    assert v.value == -2 and v.vacuous and v.notes
    assert not eq1_lower_bound(3, 5).vacuous


def test_decay_term_encloses_true_value():
    b = decay_upper(10)
    with mpmath.workdps(60):
        exact = mpmath.mpf(2) ** (-mpmath.mpf(10) / (36 * mpmath.log(10, 2)))
        assert mpmath.mpf(b.numerator) / b.denominator >= exact
        assert mpmath.mpf(b.numerator) / b.denominator * mpmath.mpf(2) ** (
            mpmath.mpf(10) / (36 * mpmath.log(10, 2))) >= 1
        assert mpmath.mpf(b.numerator) / b.denominator - exact < mpmath.mpf(2) ** -50


@pytest.mark.parametrize("n", [2, 3, 10, 64, 1000, 10 ** 6])
def test_decay_upper_is_an_upper_bound(n):
    for bits in (20, 32, 64):
        b = decay_upper(n, bits)
        with mpmath.workdps(80):
            exact = mpmath.mpf(2) ** (-mpmath.mpf(n) / (36 * mpmath.log(n, 2)))
            assert mpmath.mpf(b.numerator) / b.denominator >= exact
        assert b < 1


def test_thm2_example_and_monotonicity():
    v = thm2_upper_bound(3, 10, 10)
    b = v.params["decay_upper"]
    assert v.value == 3 * 1024 + b * 1024
    t = thm2_upper_bound(3, 20, 20).params["decay_upper"] * 2 ** 20
    assert t < 2 ** 20


def test_thm2_dominates_eq1():
    for n in range(2, 65):
        assert thm2_upper_bound(3, n, n).value >= eq1_lower_bound(3, n).value


def test_thm2_xi_hypothesis_flag():
    assert not thm2_upper_bound(3, 10, 10).params["xi_hypothesis"]
    assert thm2_upper_bound(3, 100, 90).params["xi_hypothesis"]
    assert not thm2_upper_bound(3, 100, 50).params["xi_hypothesis"]


def test_decay_upper_thread_safe():
    want = decay_upper(37)
    out = []
    ts = [threading.Thread(target=lambda: out.append(decay_upper(37))) for _ in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert out == [want] * 8
    assert mpmath.iv.prec == 53


def test_thm5_examples():
    assert thm5_exact_zp(3, 5).value == 93
    assert thm5_exact_zp(3, 7).value == 381
    assert thm5_exact_zp(3, 17).value == 393315
    with pytest.raises(ValueError):
        thm5_exact_zp(3, 9)


@pytest.mark.parametrize("p,r", [(p, 3) for p in (3, 5, 7, 11, 13, 17)]
                         + [(p, 4) for p in (3, 5, 7, 11)])
def test_thm5_matches_search(p, r):
    assert thm5_exact_zp(r, p).value == g(Structure.cyclic(p), r)


def test_aw_characterization_examples():
    assert (aw_zn3_is_3(8).holds, aw_zn3_is_3(8).clause) == (True, "i")
    assert (aw_zn3_is_3(7).holds, aw_zn3_is_3(7).clause) == (True, "iii")
    assert (aw_zn3_is_3(5).holds, aw_zn3_is_3(5).clause) == (True, "ii")
    assert not aw_zn3_is_3(17).holds


@pytest.mark.parametrize("n", range(3, 21))
def test_aw_characterization_matches_search(n):
    assert aw_zn3_is_3(n).holds == (compute_aw(Structure.cyclic(n)).value == 3)


@pytest.mark.parametrize("n", range(1, 21))
def test_eq1_exact_on_characterized_cyclic(n):
    val = g(Structure.cyclic(n))
    bound = eq1_lower_bound(3, n).value
    if n >= 3 and aw_zn3_is_3(n).holds:
        assert val == bound
    elif n >= 3:
        assert val > bound


def test_cor6_examples():
    assert cor6_rhs(3, 3, 3, 21).value == 1587
    assert cor6_rhs(3, 1, 5, 3).value <= 93
    # g_zn = 2^n removes the orbit term
    a = cor6_rhs(3, 4, 17, 16)
    assert a.params["m"] == 2
    assert a.value == 3 * 2 ** 68 - 3 + 17 * 3 * (16 - 32 + 1)


@pytest.mark.parametrize("n,p", [(1, 3), (1, 5), (2, 3), (3, 3)])
def test_cor6_below_search(n, p):
    g_zn = 3 if n == 1 else g(Structure.cyclic(n))
    assert cor6_rhs(3, n, p, g_zn).value <= g(Structure.cyclic(n * p))


def test_closed_form_dispatch():
    assert closed_form_count(Structure.interval(2), 5).value == 25
    assert closed_form_count(Structure.cyclic(7), 3).formula == "thm5"
    assert closed_form_count(Structure.cyclic(8), 3).formula == "lemma7-eq1"
    assert closed_form_count(Structure.cyclic(9), 3) is None
    assert closed_form_count(Structure.interval(5), 3) is None


def test_closed_form_agrees_with_search():
    for n in range(1, 21):
        s = Structure.cyclic(n)
        for r in (3, 4):
            fv = closed_form_count(s, r)
            if fv is not None and (r == 3 or n <= 12):
                assert fv.value == g(s, r), (n, r)


def test_to_dict_serializes_strings():
    d = thm2_upper_bound(3, 10, 9).to_dict()
    assert isinstance(d["value"], str) and "/" in d["value"]
    assert d["params"]["xi"] == "1/10"
