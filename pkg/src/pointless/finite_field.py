"""Arithmetic in GF(p^n) using a polynomial basis over GF(p).

Elements are identified with integer *codes*: the little-endian coefficient
vector ``(c_0, ..., c_{n-1})`` read as the base-p integer ``sum c_i p^i``.
Code order is the element enumeration order used by every search in the
package, so ``range(q)`` enumerates the field as ``0, 1, ..., p-1, x, 1+x, ...``.

Prime fields use plain modular arithmetic.  Extension fields use discrete
log / Zech log tables built once per field (q is capped at 2^20).
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence

MAX_ORDER = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or an illegal operation in a field."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``, or raise FieldError."""
    if not isinstance(q, int) or q < 2:
        raise FieldError(f"{q!r} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = fs[0]
    n = 0
    while q > 1:
        q //= p
        n += 1
    return p, n


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except FieldError:
        return False
    return True


def _digits(code: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) (Rabin's test).

    Kept local so that field construction does not depend on the
    polynomial module, which itself sits on top of fields.
    """
    n = len(poly) - 1
    if n == 1:
        return True

    def mulmod(a, b):
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if c:
                for j in range(n + 1):
                    prod[i - n + j] = (prod[i - n + j] - c * poly[j]) % p
        prod = prod[:n]
        while prod and prod[-1] == 0:
            prod.pop()
        return prod

    def powmod(base, e):
        result = [1]
        while e:
            if e & 1:
                result = mulmod(result, base)
            base = mulmod(base, base)
            e >>= 1
        return result

    def gcd(a, b):
        a, b = list(a), list(b)
        while b:
            inv = pow(b[-1], p - 2, p)
            while len(a) >= len(b):
                c = a[-1] * inv % p
                shift = len(a) - len(b)
                for j, bj in enumerate(b):
                    a[shift + j] = (a[shift + j] - c * bj) % p
                while a and a[-1] == 0:
                    a.pop()
                if not a:
                    break
            a, b = b, a
        return a

    def x_power_minus_x(k):
        xp = powmod([0, 1], p ** k)
        xp = xp + [0] * (2 - len(xp))
        xp[1] = (xp[1] - 1) % p
        while xp and xp[-1] == 0:
            xp.pop()
        return xp

    if x_power_minus_x(n):
        return False
    for r in prime_factors(n):
        h = x_power_minus_x(n // r)
        if len(gcd(list(poly), h)) != 1:
            return False
    return True


def _first_irreducible(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)
    for low in range(p ** n):
        poly = _digits(low, p, n) + [1]
        if poly[0] == 0:
            continue
        if _irreducible_mod_p(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field GF(p^n) with a fixed irreducible modulus.

    Use :func:`make_field` rather than the constructor so that each field is
    a process-wide singleton (elements compare their field by identity).

    The low-level methods ``add``, ``mul``, ... act on integer codes and are
    what the polynomial and curve code use in hot loops.  Calling the field
    on a value returns a :class:`FieldElement`.
    """

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = tuple(modulus)
        self.characteristic = p
        if n > 1:
            self._build_tables()
        self._bind()

    # -- construction helpers -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        p, n, mod = self.p, self.n, self.modulus
        da, db = _digits(a, p, n), _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(n + 1):
                    prod[i - n + j] -= c * mod[j]
        return _undigits([c % p for c in prod[:n]], p)

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _times_x(self, c: int) -> int:
        p, q = self.p, self.q
        top, low = divmod(c * p, q)
        if not top:
            return low
        if p == 2:
            return low ^ self._mod_low
        digits = _digits(low, p, self.n)
        return _undigits([(d - top * m) % p for d, m in zip(digits, self.modulus)], p)

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        m = q - 1
        factors = prime_factors(m)
        self._mod_low = _undigits(self.modulus[:-1], p)
        # x itself first: stepping by x is a shift, so the table builds in O(q n).
        candidates = [p] + [g for g in range(2, q) if g != p]
        gen = next(
            g for g in candidates
            if all(self._raw_pow(g, m // r) != 1 for r in factors)
        )
        step = self._times_x if gen == p else (lambda c: self._raw_mul(c, gen))
        exp = [0] * m
        log = [-1] * q
        c = 1
        for k in range(m):
            exp[k] = c
            log[c] = k
            c = step(c)
        zech = [-1] * m
        for k in range(m):
            c = exp[k]
            c1 = c - c % p + (c % p + 1) % p
            zech[k] = log[c1] if c1 else -1
        self._m = m
        self._exp = exp
        self._log = log
        self._zech = zech
        self.generator = gen

    # -- identity ---------------------------------------------------------------

    def __reduce__(self):
        return make_field, (self.p, self.n)

    def __repr__(self) -> str:
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n})"

    def __len__(self) -> int:
        return self.q

    # -- code-level arithmetic --------------------------------------------------
    # Bound per field kind in _bind(); these are the hot-loop primitives.

    def _bind(self) -> None:
        p = self.p
        if self.n == 1:
            self.add = lambda a, b: (a + b) % p
            self.neg = lambda a: -a % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: a * b % p
            return
        m, exp, log, zech = self._m, self._exp, self._log, self._zech
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            half = m // 2

            def add(a, b):
                if a == 0:
                    return b
                if b == 0:
                    return a
                la = log[a]
                z = zech[(log[b] - la) % m]
                return 0 if z < 0 else exp[(la + z) % m]

            def neg(a):
                return exp[(log[a] + half) % m] if a else 0

            self.add = add
            self.neg = neg
            self.sub = lambda a, b: add(a, neg(b))

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % m]

        self.mul = mul

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % self._m]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.n == 1:
            return pow(a, e, self.p)
        return self._exp[self._log[a] * e % self._m]

    def from_int(self, k: int) -> int:
        """Code of the image of the integer ``k`` in the prime subfield."""
        return k % self.p

    def chi(self, a: int) -> int:
        """Quadratic character of a code (odd characteristic)."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd characteristic")
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def trace(self, a: int) -> int:
        """Absolute trace GF(q) -> GF(p), as a code in ``range(p)``."""
        t = 0
        x = a
        for _ in range(self.n):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        return t

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.n)

    def code_of(self, digits: Sequence[int]) -> int:
        if len(digits) > self.n:
            raise FieldError(f"coefficient vector too long for {self!r}")
        return _undigits([d % self.p for d in digits], self.p)

    # -- element-level API -------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def coerce(self, value) -> int:
        """Code for an int (prime subfield), coefficient list, or element."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatchError(f"{value.field!r} element used in {self!r}")
            return value.code
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, (list, tuple)):
            return self.code_of(list(value))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    def first_nonsquare(self) -> FieldElement:
        """First element with quadratic character -1 in enumeration order."""
        for c in range(1, self.q):
            if self.chi(c) == -1:
                return FieldElement(self, c)
        raise FieldError("no non-square")  # pragma: no cover

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}


class FieldElement:
    """An element of a :class:`FiniteField`.  Immutable."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatchError(f"cannot combine {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, code: int) -> FieldElement:
        return FieldElement(self.field, code)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(b, self.code))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self) -> list[int]:
        return self.field.digits(self.code)

    def to_json(self) -> list[int]:
        return self.coeffs

    def __repr__(self) -> str:
        return f"{self.field!r}({self})"

    def __str__(self) -> str:
        if self.field.n == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"


def make_field(p: int, n: int = 1) -> FiniteField:
    """The field GF(p^n) with the first monic irreducible modulus in enumeration order."""
    return _make_field(p, n)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, n: int) -> FiniteField:
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p!r} is not prime")
    if not isinstance(n, int) or n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n!r}")
    if p ** n > MAX_ORDER:
        raise FieldError(f"q = {p}^{n} exceeds the cap 2^20")
    return FiniteField(p, n, _first_irreducible(p, n))


def field_of_order(q: int) -> FiniteField:
    p, n = prime_power(q)
    return make_field(p, n)


def enumerate_elements(field: FiniteField) -> list[FieldElement]:
    return field.elements()


def quadratic_character(x: FieldElement) -> int:
    return x.field.chi(x.code)


def absolute_trace(x: FieldElement) -> FieldElement:
    return FieldElement(x.field, x.field.trace(x.code))


@functools.lru_cache(maxsize=None)
def _embedding_root(source: FiniteField, target: FiniteField) -> int:
    mod = source.modulus
    for r in range(target.q):
        acc = 0
        for c in reversed(mod):
            acc = target.add(target.mul(acc, r), target.from_int(c))
        if acc == 0:
            return r
    raise FieldError("modulus has no root in target")  # pragma: no cover


def embed_code(code: int, source: FiniteField, target: FiniteField) -> int:
    if source is target:
        return code
    if source.n == 1:
        return target.from_int(code)
    r = _embedding_root(source, target)
    acc = 0
    for c in reversed(source.digits(code)):
        acc = target.add(target.mul(acc, r), target.from_int(c))
    return acc


def embed(x: FieldElement, target: FiniteField) -> FieldElement:
    """Image of ``x`` under the fixed embedding GF(p^n) -> GF(p^(nk))."""
    source = x.field
    if source.p != target.p or target.n % source.n:
        raise FieldError(f"cannot embed {source!r} into {target!r}")
    return FieldElement(target, embed_code(x.code, source, target))


def element_from_json(field: FiniteField, data: Iterable[int]) -> FieldElement:
    data = list(data)
    if len(data) != field.n or any(not isinstance(c, int) or not 0 <= c < field.p for c in data):
        raise FieldError(f"bad element encoding {data!r} for {field!r}")
    return FieldElement(field, field.code_of(data))


def field_from_json(data: dict) -> FiniteField:
    try:
        field = make_field(int(data["p"]), int(data["n"]))
    except (KeyError, TypeError) as exc:
        raise FieldError(f"bad field encoding {data!r}") from exc
    if "modulus" in data and tuple(data["modulus"]) != field.modulus:
        raise FieldError(f"unsupported modulus {data['modulus']!r} for {field!r}")
    return field
