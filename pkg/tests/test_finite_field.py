import pickle
import random

import pytest
from hypothesis import given, settings, strategies as st

from pointless.finite_field import (
    FieldError,
    FieldMismatchError,
    absolute_trace,
    element_from_json,
    embed,
    enumerate_elements,
    field_from_json,
    field_of_order,
    is_prime_power,
    make_field,
    prime_power,
    quadratic_character,
)
from oracles import naive_is_square, naive_mul

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64, 81, 121, 125]


def test_make_field_examples():
    F3 = make_field(3, 1)
    assert F3.q == 3 and F3.modulus == (0, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)
    with pytest.raises(FieldError):
        make_field(4, 1)


def test_first_irreducible_moduli():
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert make_field(5, 2).modulus == (2, 0, 1)


def test_cap_and_bad_inputs():
    make_field(2, 20)
    with pytest.raises(FieldError):
        make_field(2, 21)
    with pytest.raises(FieldError):
        make_field(3, 0)
    with pytest.raises(FieldError):
        field_of_order(6)
    with pytest.raises(FieldError):
        field_of_order(1)


def test_prime_power_helpers():
    assert prime_power(49) == (7, 2)
    assert prime_power(1024) == (2, 10)
    assert [q for q in range(1, 30) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_fields_are_singletons():
    assert make_field(2, 1) is make_field(2) is field_of_order(2)
    F = make_field(3, 3)
    assert pickle.loads(pickle.dumps(F)) is F


def test_small_examples():
    F3 = make_field(3)
    assert F3(2).inverse() == F3(2)
    F4 = make_field(2, 2)
    w = F4([0, 1])
    assert w * w == w + 1
    assert enumerate_elements(F3) == [F3(0), F3(1), F3(2)]
    assert [e.coeffs for e in enumerate_elements(F4)] == [[0, 0], [1, 0], [0, 1], [1, 1]]
    F9 = make_field(3, 2)
    assert [e.coeffs for e in enumerate_elements(F9)[:4]] == [[0, 0], [1, 0], [2, 0], [0, 1]]


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49, 81])
def test_multiplication_matches_schoolbook(q):
    F = field_of_order(q)
    for a in range(q):
        da = F.digits(a)
        for b in range(q):
            assert F.digits(F.mul(a, b)) == naive_mul(F.p, F.modulus, da, F.digits(b))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_lagrange_and_frobenius(q):
    F = field_of_order(q)
    for a in range(q):
        assert F.pow(a, q) == a
        if a:
            assert F.pow(a, q - 1) == 1
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, -1) == F.inv(a)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 25, 27, 49, 81, 121])
def test_quadratic_character(q):
    F = field_of_order(q)
    values = [F.chi(a) for a in range(q)]
    assert values[0] == 0 and values[1] == 1
    assert values.count(1) == (q - 1) // 2
    for a in range(1, q):
        assert (values[a] == 1) == naive_is_square(F, a)
        for b in range(1, q):
            assert values[F.mul(a, b)] == values[a] * values[b]


def test_quadratic_character_examples():
    assert quadratic_character(make_field(3)(2)) == -1
    assert quadratic_character(make_field(5)(4)) == 1
    with pytest.raises(FieldError):
        quadratic_character(make_field(2, 2).one)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16, 25, 27, 32, 64])
def test_trace_linear_and_surjective(q):
    F = field_of_order(q)
    tr = [F.trace(a) for a in range(q)]
    assert all(t < F.p for t in tr)
    for value in range(F.p):
        assert tr.count(value) == q // F.p
    for a in range(q):
        for b in range(0, q, max(1, q // 16)):
            assert tr[F.add(a, b)] == (tr[a] + tr[b]) % F.p
        assert tr[F.mul(F.from_int(2), a)] == (2 * tr[a]) % F.p


def test_trace_examples():
    F4 = make_field(2, 2)
    assert absolute_trace(F4.zero) == F4.zero
    assert absolute_trace(F4([0, 1])) == F4.one
    assert absolute_trace(F4.one) == F4.zero


@pytest.mark.parametrize("p,n,k", [(2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 2, 3), (3, 2, 2)])
def test_embedding_is_injective_homomorphism(p, n, k):
    src, dst = make_field(p, n), make_field(p, n * k)
    images = [embed(x, dst) for x in src.elements()]
    assert len(set(images)) == src.q
    assert embed(src.zero, dst) == dst.zero and embed(src.one, dst) == dst.one
    rng = random.Random(7)
    for _ in range(100):
        a, b = src.from_code(rng.randrange(src.q)), src.from_code(rng.randrange(src.q))
        assert embed(a * b, dst) == embed(a, dst) * embed(b, dst)
        assert embed(a + b, dst) == embed(a, dst) + embed(b, dst)


def test_embedding_errors():
    with pytest.raises(FieldError):
        embed(make_field(2, 2).one, make_field(2, 3))
    with pytest.raises(FieldError):
        embed(make_field(2).one, make_field(3, 2))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        make_field(3).one + make_field(5).one
    with pytest.raises(ZeroDivisionError):
        make_field(5).zero.inverse()


def test_json_roundtrip():
    F = make_field(3, 3)
    assert field_from_json(F.to_json()) is F
    for e in F.elements():
        assert element_from_json(F, e.to_json()) == e
    with pytest.raises(FieldError):
        element_from_json(F, [0, 3, 0])
    with pytest.raises(FieldError):
        field_from_json({"p": 3, "n": 2, "modulus": [2, 1, 1]})


elements_243 = st.integers(0, 242)


@settings(max_examples=200, deadline=None)
@given(elements_243, elements_243, elements_243)
def test_field_axioms_gf243(a, b, c):
    F = make_field(3, 5)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 1023), st.integers(0, 1023))
def test_gf1024_against_schoolbook(a, b):
    F = make_field(2, 10)
    assert F.digits(F.mul(a, b)) == naive_mul(2, F.modulus, F.digits(a), F.digits(b))
    assert F.add(a, b) == a ^ b
