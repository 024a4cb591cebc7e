"""Dense univariate polynomials over a :class:`FiniteField`.

Coefficients are stored little-endian as a tuple of element codes with no
trailing zeros; the zero polynomial has an empty tuple and degree -1.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from .finite_field import (
    FieldElement,
    FieldError,
    FieldMismatchError,
    FiniteField,
    element_from_json,
    prime_factors,
)


class Polynomial:
    __slots__ = ("field", "codes")

    def __init__(self, field: FiniteField, coeffs: Iterable = ()):
        codes = [field.coerce(c) for c in coeffs]
        while codes and codes[-1] == 0:
            codes.pop()
        self.field = field
        self.codes = tuple(codes)

    @classmethod
    def from_codes(cls, field: FiniteField, codes: Sequence[int]) -> Polynomial:
        """Fast constructor from element codes; trims trailing zeros."""
        end = len(codes)
        while end and codes[end - 1] == 0:
            end -= 1
        poly = object.__new__(cls)
        poly.field = field
        poly.codes = tuple(codes[:end])
        return poly

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, coeff=1) -> Polynomial:
        return cls.from_codes(field, [0] * degree + [field.coerce(coeff)])

    @classmethod
    def x(cls, field: FiniteField) -> Polynomial:
        return cls.from_codes(field, [0, 1])

    @classmethod
    def constant(cls, field: FiniteField, value) -> Polynomial:
        return cls.from_codes(field, [field.coerce(value)])

    # -- basic properties -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.codes]

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.codes[i] if 0 <= i < len(self.codes) else 0)

    @property
    def leading(self) -> FieldElement:
        if not self.codes:
            return self.field.zero
        return FieldElement(self.field, self.codes[-1])

    def is_zero(self) -> bool:
        return not self.codes

    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    def __bool__(self):
        return bool(self.codes)

    def __len__(self):
        return len(self.codes)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field is other.field and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.codes))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field is not self.field:
                raise FieldMismatchError(f"cannot combine {self.field!r} and {other.field!r} polynomials")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        add = self.field.add
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Polynomial.from_codes(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Polynomial.from_codes(self.field, [neg(c) for c in self.codes])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.codes, other.codes
        if not a or not b:
            return Polynomial.from_codes(self.field, ())
        add, mul = self.field.add, self.field.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Polynomial.from_codes(self.field, out)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = self.field.coerce(c)
        mul = self.field.mul
        return Polynomial.from_codes(self.field, [mul(c, a) for a in self.codes])

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not other.codes:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        add, mul, neg = F.add, F.mul, F.neg
        rem = list(self.codes)
        b = other.codes
        db = len(b) - 1
        inv_lead = F.inv(b[-1])
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = mul(c, inv_lead)
            quot[i - db] = c
            nc = neg(c)
            shift = i - db
            for j in range(db + 1):
                if b[j]:
                    rem[shift + j] = add(rem[shift + j], mul(nc, b[j]))
        return Polynomial.from_codes(F, quot), Polynomial.from_codes(F, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if not self.codes:
            return self
        return self.scale(FieldElement(self.field, self.field.inv(self.codes[-1])))

    def derivative(self) -> Polynomial:
        F = self.field
        mul, from_int = F.mul, F.from_int
        return Polynomial.from_codes(F, [mul(from_int(i), c) for i, c in enumerate(self.codes)][1:])

    def eval_code(self, x: int) -> int:
        """Horner evaluation on codes."""
        add, mul = self.field.add, self.field.mul
        acc = 0
        for c in reversed(self.codes):
            acc = add(mul(acc, x), c)
        return acc

    def __call__(self, x) -> FieldElement:
        return FieldElement(self.field, self.eval_code(self.field.coerce(x)))

    def values(self) -> list[int]:
        """Codes of ``f(x)`` for every x in enumeration order."""
        return [self.eval_code(x) for x in range(self.field.q)]

    def reversed(self, d: int) -> Polynomial:
        """``x^d f(1/x)`` for ``d >= deg f``."""
        if d < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial at {d}")
        padded = list(self.codes) + [0] * (d + 1 - len(self.codes))
        return Polynomial.from_codes(self.field, padded[::-1])

    def map_codes(self, target: FiniteField, fn) -> Polynomial:
        return Polynomial.from_codes(target, [fn(c) for c in self.codes])

    # -- display / serialization ---------------------------------------------------

    def __str__(self) -> str:
        if not self.codes:
            return "0"
        terms = []
        for i in range(len(self.codes) - 1, -1, -1):
            c = self.codes[i]
            if c == 0:
                continue
            cs = str(FieldElement(self.field, c))
            if "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {self})"

    def to_json(self) -> list[list[int]]:
        return [self.field.digits(c) for c in self.codes]

    @classmethod
    def from_json(cls, field: FiniteField, data) -> Polynomial:
        if not isinstance(data, list):
            raise FieldError(f"bad polynomial encoding {data!r}")
        return cls.from_codes(field, [element_from_json(field, c).code for c in data])


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    if f.field is not g.field:
        raise FieldMismatchError("gcd of polynomials over different fields")
    while g.codes:
        f, g = g, f % g
    return f.monic()


def powmod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial.constant(base.field, 1) % modulus
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def is_squarefree(f: Polynomial) -> bool:
    if f.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if f.degree <= 0:
        return True
    df = f.derivative()
    if df.is_zero():
        return False
    return gcd(f, df).degree == 0


def is_irreducible(f: Polynomial) -> bool:
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if d == 1:
        return True
    q = f.field.q
    x = Polynomial.x(f.field)
    if (powmod(x, q ** d, f) - x) % f:
        return False
    for r in prime_factors(d):
        h = powmod(x, q ** (d // r), f) - x
        if gcd(f, h).degree != 0:
            return False
    return True


def monic_polynomials(field: FiniteField, d: int):
    """All monic degree-d polynomials; lower coefficients count base q, constant term fastest."""
    q = field.q
    for low in range(q ** d):
        codes = []
        for _ in range(d):
            low, r = divmod(low, q)
            codes.append(r)
        yield Polynomial.from_codes(field, codes + [1])


def find_irreducible(field: FiniteField, d: int) -> Polynomial:
    if d < 1:
        raise ValueError("degree must be >= 1")
    for f in monic_polynomials(field, d):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")  # pragma: no cover


def has_root(f: Polynomial) -> bool:
    return any(f.eval_code(x) == 0 for x in range(f.field.q))


def trinomial(field: FiniteField, n: int, m: int, a) -> Polynomial:
    """``x^n - x^(n-m) + a``."""
    codes = [0] * (n + 1)
    codes[n] = 1
    codes[n - m] = field.add(codes[n - m], field.neg(1))
    codes[0] = field.add(codes[0], field.coerce(a))
    return Polynomial.from_codes(field, codes)


def trinomial_multiple_root_value(field: FiniteField, n: int, m: int, a) -> FieldElement:
    """``n^N a^M - m^M (n-m)^(N-M)`` with ``d = gcd(n, m)``, ``N = n/d``, ``M = m/d``."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got n={n}, m={m}")
    a = field.coerce(a)
    if a == 0:
        raise ValueError("constant term must be nonzero")
    d = math.gcd(n, m)
    N, M = n // d, m // d
    F = field
    lhs = F.mul(F.pow(F.from_int(n), N), F.pow(a, M))
    rhs = F.mul(F.pow(F.from_int(m), M), F.pow(F.from_int(n - m), N - M))
    return FieldElement(F, F.sub(lhs, rhs))


def trinomial_has_multiple_roots(field: FiniteField, n: int, m: int, a) -> bool:
    """Whether ``x^n - x^(n-m) + a`` (a != 0) has a repeated root."""
    return trinomial_multiple_root_value(field, n, m, a).code == 0


def trinomial_discriminant(field: FiniteField, n: int, k: int, a, b) -> FieldElement:
    """Discriminant of ``x^n + a x^k + b`` by the closed trinomial formula."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    F = field
    a, b = F.coerce(a), F.coerce(b)
    if b == 0:
        raise ValueError("constant term must be nonzero")
    d = math.gcd(n, k)
    N, K = n // d, k // d
    sign = 1 if (n * (n - 1) // 2) % 2 == 0 else F.neg(1)
    first = F.mul(F.pow(F.from_int(n), N), F.pow(b, N - K))
    second = F.mul(F.mul(F.pow(F.from_int(n - k), N - K), F.pow(F.from_int(k), K)), F.pow(a, N))
    if N % 2:
        second = F.neg(second)
    bracket = F.sub(first, second)
    out = F.mul(F.mul(sign, F.pow(b, k - 1)), F.pow(bracket, d))
    return FieldElement(F, out)


def s_quantity(field: FiniteField, g: int, l: int, a) -> FieldElement:
    """Squarefreeness witness for ``x^(2g+2) - x^(2g+2-l(q-1)) + a^2``.

    Nonzero exactly when that trinomial is squarefree.  The integers
    ``2g+2``, ``-l`` and ``2g+2+l`` are reduced into the prime field, so for
    ``a`` in the prime subfield the result lies there too.
    """
    q = field.q
    if q % 2 == 0:
        raise ValueError("s-quantity is defined for odd q")
    if g < 2:
        raise ValueError("genus must be >= 2")
    if not 1 <= l <= (2 * g + 2) // (q - 1):
        raise ValueError(f"l = {l} out of range for q = {q}, g = {g}")
    F = field
    a = F.coerce(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    n, m = 2 * g + 2, l * (q - 1)
    d = math.gcd(n, m)
    N, M = n // d, m // d
    lhs = F.mul(F.pow(F.from_int(n), N), F.pow(a, 2 * M))
    rhs = F.mul(F.pow(F.from_int(-l), M), F.pow(F.from_int(n + l), N - M))
    return FieldElement(F, F.sub(lhs, rhs))
