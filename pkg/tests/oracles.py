"""Slow reference implementations used to cross-check the library.

Nothing here touches the Zech tables, the fibre tables or the numpy kernel:
field products are schoolbook digit-vector multiplication, point counts try
every y, and squarefreeness is decided by brute-force factor search where
that is affordable.
"""

from __future__ import annotations

from itertools import product


def naive_mul(p: int, modulus: tuple[int, ...], a: list[int], b: list[int]) -> list[int]:
    n = len(modulus) - 1
    prod = [0] * (2 * n)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * n - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * modulus[i]) % p
    return prod[:n]


def naive_is_square(field, code: int) -> bool:
    return any(field.mul(y, y) == code for y in range(field.q))


def naive_points(model, k: int = 1) -> int:
    """Try every (x, y) on the affine chart, then every y above x = 0 on the second chart."""
    from pointless.finite_field import embed_code
    from pointless.hyperelliptic import extension_field

    F = model.field
    E = extension_field(F, k)
    add, mul = E.add, E.mul

    def ev(codes, x):
        acc = 0
        for c in reversed(codes):
            acc = add(mul(acc, x), embed_code(c, F, E))
        return acc

    def fibre(b, c):
        return sum(1 for y in range(E.q) if add(mul(y, y), mul(b, y)) == c)

    total = 0
    for x in range(E.q):
        total += fibre(ev(model.Q.codes, x), ev(model.P.codes, x))
    Qi, Pi = model.second_chart()
    return total + fibre(ev(Qi.codes, 0), ev(Pi.codes, 0))


def chi_points(model) -> int:
    """Odd q, Q = 0: the character-sum count ``sum_x (1 + chi(P(x)))`` plus infinity."""
    F = model.field
    P = model.P
    total = sum(1 + F.chi(P.eval_code(x)) for x in range(F.q))
    if P.degree % 2:
        return total + 1
    return total + 1 + F.chi(P.codes[-1])


def monic_factors_exist(f, max_deg: int | None = None) -> bool:
    """True if some monic g of degree >= 1 has g^2 | f (exhaustive over small degrees)."""
    from pointless.polynomial import Polynomial

    F = f.field
    top = f.degree // 2 if max_deg is None else max_deg
    for d in range(1, top + 1):
        for low in product(range(F.q), repeat=d):
            g = Polynomial.from_codes(F, list(low) + [1])
            if (f % (g * g)).is_zero():
                return True
    return False


def all_models_genus2_f3():
    """Every smooth y^2 = P over GF(3) with deg P in {5, 6}."""
    from pointless.finite_field import make_field
    from pointless.hyperelliptic import is_smooth, make_model
    from pointless.polynomial import Polynomial

    F = make_field(3)
    for deg in (5, 6):
        for lead in (1, 2):
            for low in product(range(3), repeat=deg):
                P = Polynomial.from_codes(F, list(low) + [lead])
                m = make_model(F, None, P)
                if is_smooth(m):
                    yield m
