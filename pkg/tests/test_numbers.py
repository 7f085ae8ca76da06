import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyclic_triples, interval_triples, order_by_multiplication
from rainbow_ap.numbers import (APTriple, Structure, count_3aps_interval, is_generator, is_prime,
                                list_3aps, list_aps, mult_order, pairs_in_3aps)


def test_list_3aps_interval_5():
    got = {t.elements for t in list_3aps(Structure.interval(5))}
    assert got == {(1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 3, 5)}


def test_list_3aps_small_cases():
    assert list_3aps(Structure.interval(2)) == []
    z3 = list_3aps(Structure.cyclic(3))
    assert z3 == [APTriple(0, 1, 2, 1)]


def test_count_3aps_interval_examples():
    assert count_3aps_interval(5) == 4
    assert count_3aps_interval(1) == 0
    assert count_3aps_interval(2) == 0


def test_count_matches_listing_up_to_500():
    for n in range(1, 501):
        assert count_3aps_interval(n) == len(list_aps(Structure.interval(n), 3))


@pytest.mark.parametrize("n", range(1, 25))
def test_interval_listing_matches_oracle(n):
    got = {frozenset(t[:3]) for t in list_aps(Structure.interval(n), 3)}
    assert got == interval_triples(range(1, n + 1), n)


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclic_listing_matches_oracle(n):
    aps = list_aps(Structure.cyclic(n), 3)
    sets = [frozenset(t[:3]) for t in aps]
    assert len(sets) == len(set(sets))
    assert set(sets) == cyclic_triples(range(n), n)
    for a, b, c, d in aps:
        assert d % n and (a + c - 2 * b) % n == 0


def test_cyclic_even_degenerate_triples_dropped():
    # 2d = 0 in Z_8 for d = 4 gives (a, a+4, a); never emitted
    for t in list_aps(Structure.cyclic(8), 3):
        assert len(set(t[:3])) == 3


@given(st.integers(1, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
@settings(max_examples=80, deadline=None)
def test_subset_listing_matches_oracle(case):
    n, A = case
    got = {frozenset(t[:3]) for t in list_aps(Structure.interval(n, A), 3)}
    assert got == interval_triples(A, n)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_pairs_lie_in_exactly_three_aps_mod_p(p):
    s = Structure.cyclic(p)
    for x in range(p):
        for y in range(x + 1, p):
            assert pairs_in_3aps(s, x, y) == 3


def test_pairs_in_z3_lie_in_one_ap():
    # the three third-element candidates coincide when 3 | p
    s = Structure.cyclic(3)
    assert all(pairs_in_3aps(s, x, y) == 1 for x in range(3) for y in range(x + 1, 3))


def test_is_prime_examples():
    assert is_prime(2) and not is_prime(9) and is_prime(17)
    assert not is_prime(1)


def test_is_prime_against_sieve():
    limit = 20000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(sieve[i * i::i])
    assert [is_prime(i) for i in range(limit + 1)] == sieve
    assert is_prime(2 ** 61 - 1) and not is_prime(2 ** 61 + 1)


def test_mult_order_examples():
    assert mult_order(2, 7) == 3
    assert mult_order(2, 17) == 8
    assert mult_order(2, 3) == 2


def test_mult_order_rejects_non_units():
    with pytest.raises(ValueError):
        mult_order(2, 8)
    with pytest.raises(ValueError):
        mult_order(3, 1)


@given(st.integers(2, 3000), st.integers(1, 3000))
@settings(max_examples=300)
def test_mult_order_matches_repeated_multiplication(m, a):
    from math import gcd
    if gcd(a, m) != 1:
        return
    assert mult_order(a, m) == order_by_multiplication(a, m)


def test_order_of_two_divides_p_minus_one():
    for p in range(3, 10001):
        if is_prime(p):
            assert (p - 1) % mult_order(2, p) == 0


def test_is_generator_examples():
    assert is_generator(2, 5)
    assert not is_generator(2, 7)
    assert is_generator(2, 3)


def test_structure_validation():
    with pytest.raises(ValueError):
        Structure.interval(5, [0, 1])
    with pytest.raises(ValueError):
        Structure.cyclic(5, [5])
    with pytest.raises(ValueError):
        Structure("interval", 3, (1, 1))
    s = Structure.interval(10).minus([4, 7])
    assert 4 not in s and 5 in s and len(s) == 8
    assert s.key() == "interval:10:1,2,3,5,6,8,9,10"
    assert Structure.cyclic(7).key() == "cyclic:7"


def test_general_k_progressions():
    aps = list_aps(Structure.interval(7), 4)
    assert sorted(t[:4] for t in aps) == [(1, 2, 3, 4), (1, 3, 5, 7), (2, 3, 4, 5),
                                          (3, 4, 5, 6), (4, 5, 6, 7)]
