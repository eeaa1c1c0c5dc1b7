from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfminrank import field_from_order, field_new
from gfminrank.gf import Q_MAX, factor_prime_power


# independent polynomial oracle used to pin the modulus expectations
def _poly_reduce(a, m, p):
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead, shift = a[-1], len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _irreducible(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_reduce(f, list(low) + [1], p):
                return False
    return True


def test_modulus_gf4_is_the_unique_irreducible_quadratic(gf4):
    assert gf4.modulus == (1, 1, 1)
    quadratics = [list(low) + [1] for low in itertools.product(range(2), repeat=2)]
    assert [f for f in quadratics if _irreducible(f, 2)] == [[1, 1, 1]]


def test_modulus_gf9_is_the_smallest_irreducible_quadratic(gf9):
    assert gf9.modulus == (1, 0, 1)
    smaller = [list(low) + [1] for low in itertools.product(range(3), repeat=2)
               if tuple(low) < (1, 0)]
    assert not any(_irreducible(f, 3) for f in smaller)
    assert _irreducible([1, 0, 1], 3)


def test_modulus_minimality_for_gf8_and_gf25():
    for p, e in [(2, 3), (5, 2)]:
        f = field_new(p, e)
        assert _irreducible(list(f.modulus), p)
        for low in itertools.product(range(p), repeat=e):
            if low == tuple(f.modulus[:-1]):
                break
            assert not _irreducible(list(low) + [1], p)


def test_field_new_rejects_bad_parameters():
    with pytest.raises(ValueError):
        field_new(4, 1)
    with pytest.raises(ValueError):
        field_new(6, 2)
    with pytest.raises(ValueError):
        field_new(2, 0)
    with pytest.raises(ValueError):
        field_new(2, 17)  # 2^17 > Q_MAX


def test_order_cap_boundary():
    f = field_new(2, 16)
    assert f.q == Q_MAX
    a, b = 12345, 54321
    assert f.mul(a, f.inv(a)) == 1
    assert f.mul(f.sqrt(b), f.sqrt(b)) == b


def test_scalar_examples(gf2, gf3, gf4):
    assert gf2.add(1, 1) == 0
    assert gf3.inv(2) == 2
    assert gf4.mul(2, 3) == 1  # x * (x+1) reduces to 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    f = field_from_order(q)
    elems = list(f.elements())
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in elems:
        for b in elems:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.sub(a, b) == f.add(a, f.neg(b))
    small = elems if q <= 9 else elems[:6] + elems[-3:]
    for a in small:
        for b in small:
            for c in small:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([25, 27, 49, 81, 128, 243, 256]),
       st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms_randomised(q, a, b, c):
    f = field_from_order(q)
    a, b, c = a % q, b % q, c % q
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    if a:
        assert f.mul(a, f.inv(a)) == 1


def test_inv_of_zero_raises(gf3):
    with pytest.raises(ZeroDivisionError):
        gf3.inv(0)


def test_square_counts():
    for q in (3, 5, 7, 9, 11, 25, 27):
        f = field_from_order(q)
        squares = {f.mul(a, a) for a in f.elements()}
        assert sum(f.is_square(a) for a in f.elements()) == (q + 1) // 2
        assert {a for a in f.elements() if f.is_square(a)} == squares
    for q in (2, 4, 8, 16):
        f = field_from_order(q)
        assert all(f.is_square(a) for a in f.elements())


def test_gf3_squares(gf3):
    assert not gf3.is_square(2)
    assert {a for a in gf3.elements() if gf3.is_square(a)} == {0, 1}


def test_gf9_exactly_five_squares(gf9):
    assert sum(gf9.is_square(a) for a in gf9.elements()) == 5


def test_sqrt_examples(gf2, gf3, gf4):
    assert gf2.sqrt(1) == 1
    assert gf4.sqrt(2) == 3  # (x+1)^2 reduces to x
    assert gf3.sqrt(1) == 1  # tie-break picks the smaller of {1, 2}


def test_sqrt_roundtrip_all_squares():
    for q in (3, 4, 5, 7, 8, 9, 16, 25, 27):
        f = field_from_order(q)
        for a in f.elements():
            if f.is_square(a):
                s = f.sqrt(a)
                assert f.mul(s, s) == a


def test_sqrt_of_nonsquare_raises(gf3):
    with pytest.raises(ValueError):
        gf3.sqrt(2)


def test_frobenius_additivity_even_q():
    for q in (2, 4, 8, 16):
        f = field_from_order(q)
        for a in f.elements():
            for b in f.elements():
                lhs = f.mul(f.add(a, b), f.add(a, b))
                rhs = f.add(f.mul(a, a), f.mul(b, b))
                assert lhs == rhs


def test_nonsquare_selection(gf3, gf5, gf9):
    assert gf3.nonsquare() == 2
    assert gf5.nonsquare() == 2
    assert gf9.nonsquare() == 4
    assert gf3.find_nonsquare() == 2
    with pytest.raises(ValueError):
        field_new(2, 2).nonsquare()


def test_sum_of_two_squares_examples(gf3, gf5):
    assert gf3.sum_of_two_squares(2) == (1, 1)
    assert gf5.sum_of_two_squares(2) == (1, 1)
    assert field_new(7, 1).sum_of_two_squares(3) == (1, 3)


def test_sum_of_two_squares_randomised(rng):
    for _ in range(100):
        q = rng.choice([3, 5, 7, 9, 11, 13, 25, 27, 49])
        f = field_from_order(q)
        nu = rng.randrange(q)
        c, d = f.sum_of_two_squares(nu)
        assert f.add(f.mul(c, c), f.mul(d, d)) == nu


def test_sum_of_two_squares_requires_odd_q(gf4):
    with pytest.raises(ValueError):
        gf4.sum_of_two_squares(1)


def test_factor_prime_power():
    assert factor_prime_power(4) == (2, 2)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        factor_prime_power(6)
    with pytest.raises(ValueError):
        factor_prime_power(1)


def test_field_serialisation(gf9):
    assert gf9.to_json() == {"p": 3, "e": 2, "modulus": [1, 0, 1]}
