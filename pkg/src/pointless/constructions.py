"""Explicit pointless hyperelliptic curves for every genus g >= g_q.

Odd q: a smooth maximal model ``y^2 = F(x)`` (F monic, squarefree of degree
2g+2, every value a nonzero square) is built from one of several polynomial
families and then twisted by a non-square, which leaves no rational points.

Even q: ``y^2 + a f(x) y = b h(x)`` with trace conditions on the constants
for q > 2, and the cleared-denominator form of ``y^2 + y = (x^2+x)/f(x) + 1``
for q = 2.

Every builder is deterministic: searched parameters are the first admissible
ones in element enumeration order, and the certificate records them so that
:func:`replay` rebuilds the same polynomials.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field as dc_field
from typing import Any

from .finite_field import (
    FieldElement,
    FieldError,
    FiniteField,
    element_from_json,
    field_of_order,
    make_field,
)
from .hyperelliptic import (
    HyperellipticModel,
    count_points,
    hasse_weil_min_genus,
    is_smooth,
    make_model,
    quadratic_twist,
)
from .polynomial import (
    Polynomial,
    find_irreducible,
    has_root,
    is_squarefree,
    monic_polynomials,
    s_quantity,
)

log = logging.getLogger(__name__)

FALLBACK_LIMIT = 1 << 23


class Branch(str, enum.Enum):
    LAST_GENUS = "LAST_GENUS"
    GCD_GT2 = "GCD_GT2"
    L_GE2 = "L_GE2"
    OLD_CURVE = "OLD_CURVE"
    PRIME_FIELD_TRINOMIAL = "PRIME_FIELD_TRINOMIAL"
    FAMILY2 = "FAMILY2"
    EVEN_CHAR = "EVEN_CHAR"
    Q2_ARTIN = "Q2_ARTIN"
    FALLBACK_SEARCH = "FALLBACK_SEARCH"


class ConstructionError(RuntimeError):
    """A builder produced something that failed verification."""


class NotFoundError(LookupError):
    """No curve was found (only possible below the guaranteed genus bound)."""

    def __init__(self, q: int, g: int, reason: str = ""):
        self.q = q
        self.g = g
        self.hasse_weil_floor = hasse_weil_min_genus(q, 1)
        self.genus_bound = genus_bound(q)
        msg = (f"no pointless genus-{g} curve found over GF({q}); "
               f"Hasse-Weil floor {self.hasse_weil_floor}, guaranteed from genus {self.genus_bound}")
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


@dataclass
class ConstructionCertificate:
    branch: Branch
    params: dict[str, Any] = dc_field(default_factory=dict)
    s_value: FieldElement | None = None
    twist: FieldElement | None = None
    guaranteed: bool = True

    def to_json(self) -> dict:
        return {
            "branch": self.branch.value,
            "params": {k: _encode(v) for k, v in self.params.items()},
            "s_value": None if self.s_value is None else self.s_value.to_json(),
            "twist": None if self.twist is None else self.twist.to_json(),
            "guaranteed": self.guaranteed,
        }

    @classmethod
    def from_json(cls, field: FiniteField, data: dict) -> ConstructionCertificate:
        try:
            branch = Branch(data["branch"])
            params = {k: _decode(field, v) for k, v in data.get("params", {}).items()}
        except (KeyError, ValueError, TypeError) as exc:
            raise FieldError(f"malformed certificate: {exc}") from exc
        s = data.get("s_value")
        t = data.get("twist")
        return cls(
            branch,
            params,
            None if s is None else element_from_json(field, s),
            None if t is None else element_from_json(field, t),
            bool(data.get("guaranteed", True)),
        )


def _encode(value):
    if isinstance(value, (FieldElement, Polynomial)):
        return value.to_json()
    return value


def _decode(field: FiniteField, value):
    # ints stay ints; [c_0..c_{n-1}] is an element; [[..], ..] is a polynomial
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return Polynomial.from_json(field, value)
        if value and all(isinstance(v, int) for v in value):
            return element_from_json(field, value)
        if not value:
            return Polynomial(field)
    return value


# -- bound tables ----------------------------------------------------------------------


def genus_bound(q: int) -> int:
    field_of_order(q)  # validates q
    if q % 2:
        return max((q - 3) // 2, 2)
    return max(q - 1, 2)


def params_L(q: int, g: int) -> int:
    if q < 3:
        raise ValueError("L(q, g) needs q >= 3")
    return (2 * g + 2) // (q - 1)


def params_D(q: int, g: int) -> int:
    return math.gcd(2 * g + 2, q - 1)


# -- odd characteristic families ----------------------------------------------------


def _odd_field(q: int) -> FiniteField:
    F = field_of_order(q)
    if F.p == 2:
        raise ValueError(f"q = {q} must be odd")
    return F


def build_f_gla(q: int, g: int, l: int, a) -> Polynomial:
    """``x^(2g+2) - x^(2g+2-l(q-1)) + a^2``."""
    F = _odd_field(q)
    if not 1 <= l <= params_L(q, g):
        raise ValueError(f"l = {l} outside 1..L({q}, {g})")
    a = F.coerce(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    n = 2 * g + 2
    codes = [0] * (n + 1)
    codes[n] = 1
    codes[n - l * (q - 1)] = F.neg(1)
    codes[0] = F.add(codes[0], F.mul(a, a))
    return Polynomial.from_codes(F, codes)


def _in_prime_field(F: FiniteField, code: int) -> bool:
    return code < F.p


def family2_exponent_ok(q: int, n: int) -> bool:
    """n even, 0 < n < q-1, gcd(n, q-1) = 2 and 2n = 1 mod p."""
    p = field_of_order(q).p
    return (n % 2 == 0 and 0 < n < q - 1 and math.gcd(n, q - 1) == 2
            and (2 * n - 1) % p == 0)


def family2_genus_ok(q: int, g: int) -> bool:
    """(q-1)/2 <= g < q-2, gcd(2g+2, q-1) = 2 and 2(2g+2) = -1 mod p."""
    p = field_of_order(q).p
    return ((q - 1) // 2 <= g < q - 2 and math.gcd(2 * g + 2, q - 1) == 2
            and (2 * (2 * g + 2) + 1) % p == 0)


def build_family2(q: int, n: int, b, xi) -> Polynomial:
    """``x^(q-1+n) + b^2 x^(2n) - (2 b^2 xi + 1) x^n + b^2 xi^2``."""
    F = _odd_field(q)
    if F.n == 1 or F.n % 2 == 0:
        raise ValueError(f"q = {q} must be neither prime nor a square")
    if not family2_exponent_ok(q, n):
        raise ValueError(f"n = {n} violates the exponent conditions for q = {q}")
    b, xi = F.coerce(b), F.coerce(xi)
    if not (b and xi and _in_prime_field(F, b) and _in_prime_field(F, xi)):
        raise ValueError("b and xi must be nonzero elements of the prime field")
    if make_field(F.p).chi(xi) != -1:
        raise ValueError("xi must be a non-square")
    b2 = F.mul(b, b)
    codes = [0] * (q - 1 + n + 1)
    codes[q - 1 + n] = 1
    codes[2 * n] = F.add(codes[2 * n], b2)
    middle = F.add(F.mul(F.from_int(2), F.mul(b2, xi)), 1)
    codes[n] = F.add(codes[n], F.neg(middle))
    codes[0] = F.add(codes[0], F.mul(b2, F.mul(xi, xi)))
    return Polynomial.from_codes(F, codes)


def choose_family2_params(q: int, g: int) -> tuple[int, FieldElement, FieldElement]:
    F = _odd_field(q)
    if not family2_genus_ok(q, g):
        raise ValueError(f"(q, g) = ({q}, {g}) is outside the family-2 range")
    p = F.p
    n = 2 * g + 2 - (q - 1)
    if p == 3:
        candidates = [(1, -1)]
    elif p == 5:
        candidates = [(1, 2), (2, -2)]
    else:
        Fp = make_field(p)
        xi = next(c for c in range(1, p) if Fp.chi(c) == -1)
        candidates = []
        for b in range(1, p):
            b2 = b * b
            if Fp.chi((b2 * b2 * xi * xi + 4 * b2 * xi + 1) % p) == 1:
                candidates.append((b, xi))
    for b, xi in candidates:
        if is_squarefree(build_family2(q, n, b, xi)):
            return n, F(b), F(xi)
    raise ConstructionError(f"no admissible b for family 2 at q = {q}, g = {g}")


def last_genus_params(q: int) -> tuple[FieldElement, FieldElement]:
    """First (alpha, beta) of nonzero squares with alpha + beta a nonzero square."""
    F = _odd_field(q)
    if q <= 5:
        raise ValueError("needs q > 5")
    squares = [c for c in range(1, q) if F.chi(c) == 1]
    for alpha in squares:
        for beta in squares:
            if F.chi(F.add(alpha, beta)) == 1:
                return F.from_code(alpha), F.from_code(beta)
    raise ConstructionError(f"no square triple found in GF({q})")


def last_genus_polynomial(q: int, alpha, beta) -> Polynomial:
    """``x^(q-1) + 2 (alpha-beta)/(alpha+beta) x^((q-1)/2) + 1``."""
    F = _odd_field(q)
    alpha, beta = F.coerce(alpha), F.coerce(beta)
    middle = F.mul(F.from_int(2), F.div(F.sub(alpha, beta), F.add(alpha, beta)))
    codes = [0] * q
    codes[q - 1] = 1
    codes[(q - 1) // 2] = middle
    codes[0] = 1
    return Polynomial.from_codes(F, codes)


def build_last_genus(q: int) -> Polynomial:
    return last_genus_polynomial(q, *last_genus_params(q))


def build_special_trinomial(q: int) -> Polynomial:
    """``x^(q+(q-1)/2) + x^(q-1) + x^((q-3)/2) + 1``."""
    F = _odd_field(q)
    if q <= 3:
        raise ValueError("needs q > 3")
    codes = [0] * (q + (q - 1) // 2 + 1)
    for e in (q + (q - 1) // 2, q - 1, (q - 3) // 2, 0):
        codes[e] = F.add(codes[e], 1)
    return Polynomial.from_codes(F, codes)


def old_curve_condition(q: int, g: int) -> int | None:
    """Which of the three sufficient conditions holds (1, 2 or 3), if any."""
    F = field_of_order(q)
    p = F.p
    if F.n % 2 == 0:
        return 1
    if p % 8 == 1:
        return 2
    k2 = 4 * g + 5  # g = (p(2k+1) - 5)/4  <=>  4g + 5 = p(2k+1)
    if not (k2 % p == 0 and (k2 // p) % 2 == 1):
        return 3
    return None


# -- verification ------------------------------------------------------------------


def _verify(model: HyperellipticModel, g: int, n1: int) -> None:
    if model.genus != g:
        raise ConstructionError(f"genus {model.genus} != {g}")
    if not is_smooth(model):
        raise ConstructionError("model is singular")
    got = count_points(model, 1)
    if got != n1:
        raise ConstructionError(f"N_1 = {got}, expected {n1}")


def _maximal_model(F: FiniteField, poly: Polynomial, g: int) -> HyperellipticModel:
    model = make_model(F, None, poly)
    _verify(model, g, 2 * F.q + 2)
    return model


def _scan_a(F: FiniteField, g: int, l: int):
    for a in range(1, F.q):
        s = s_quantity(F, g, l, F.from_code(a))
        if s.code != 0:
            return F.from_code(a), s
    return None, None


def _odd_branch(q: int, g: int) -> tuple[Branch, dict, FieldElement | None, Polynomial] | None:
    F = _odd_field(q)
    if g < 2:
        return None
    L, D = params_L(q, g), params_D(q, g)
    if q > 5 and g == (q - 3) // 2:
        alpha, beta = last_genus_params(q)
        return (Branch.LAST_GENUS,
                {"alpha": alpha, "beta": beta, "gamma": alpha + beta},
                None, last_genus_polynomial(q, alpha, beta))
    if L >= 1 and D > 2:
        a, s = _scan_a(F, g, 1)
        if a is not None:
            return Branch.GCD_GT2, {"l": 1, "a": a}, s, build_f_gla(q, g, 1, a)
        return None
    if L >= 2:
        for l in (1, 2):
            s = s_quantity(F, g, l, F.one)
            if s.code != 0:
                return Branch.L_GE2, {"l": l, "a": F.one}, s, build_f_gla(q, g, l, F.one)
        return None
    if L == 1:
        cond = old_curve_condition(q, g)
        if cond is not None:
            a, s = _scan_a(F, g, 1)
            if a is not None:
                return (Branch.OLD_CURVE, {"l": 1, "a": a, "condition": cond}, s,
                        build_f_gla(q, g, 1, a))
            return None
        if F.n == 1:
            if q > 3 and 3 * q - 5 == 4 * g:
                return Branch.PRIME_FIELD_TRINOMIAL, {}, None, build_special_trinomial(q)
            return None
        if family2_genus_ok(q, g):
            n, b, xi = choose_family2_params(q, g)
            return Branch.FAMILY2, {"n": n, "b": b, "xi": xi}, None, build_family2(q, n, b, xi)
    return None


def _odd_fallback(q: int, g: int, guaranteed: bool):
    F = _odd_field(q)
    if guaranteed:
        log.warning("fallback search fired for q=%d, g=%d", q, g)
    if q > 1024:
        return None
    codes = None
    try:
        from .census import find_maximal_monic
        codes = find_maximal_monic(F, g, FALLBACK_LIMIT)
    except ValueError:
        codes = None
    if codes is None:
        return None
    poly = Polynomial.from_codes(F, codes)
    return Branch.FALLBACK_SEARCH, {"P": poly}, None, poly


def construct_maximal_odd(q: int, g: int) -> tuple[HyperellipticModel, ConstructionCertificate]:
    """A verified smooth genus-g model over GF(q), q odd, with 2q + 2 points."""
    F = _odd_field(q)
    guaranteed = g >= genus_bound(q)
    if g < hasse_weil_min_genus(q, 1):
        raise NotFoundError(q, g, "below the Hasse-Weil floor")
    found = None
    try:
        found = _odd_branch(q, g)
    except ConstructionError as exc:
        log.warning("branch search failed for q=%d, g=%d: %s", q, g, exc)
    model = None
    if found is not None:
        try:
            model = _maximal_model(F, found[3], g)
        except ConstructionError as exc:
            log.warning("branch %s failed verification: %s", found[0].value, exc)
            found = None
    if found is None:
        found = _odd_fallback(q, g, guaranteed)
        if found is None:
            raise NotFoundError(q, g, "no branch applies and the bounded search found nothing")
        model = _maximal_model(F, found[3], g)
    branch, params, s, _ = found
    return model, ConstructionCertificate(branch, params, s, None, guaranteed)


# -- even characteristic -------------------------------------------------------------


def _trace_one_pair(F: FiniteField) -> tuple[int, int]:
    ones = [c for c in range(F.q) if F.trace(c) == 1]
    return ones[0], ones[1]


def even_char_polynomials(q: int, g: int, a, b, c, d) -> tuple[Polynomial, Polynomial]:
    """``(a f, b h)`` with ``f = x^(g+1) + x^(g+1-(q-1)) + c`` and ``h = x^(2g+2) + x^(2g+2-2(q-1)) + d``."""
    F = field_of_order(q)
    a, b, c, d = (F.coerce(v) for v in (a, b, c, d))
    e1 = g + 1 - (q - 1)
    if e1 < 1:
        raise ValueError(f"g = {g} is too small for the even-characteristic family over GF({q})")
    f = [0] * (g + 2)
    f[g + 1] = 1
    f[e1] = F.add(f[e1], 1)
    f[0] = F.add(f[0], c)
    h = [0] * (2 * g + 3)
    h[2 * g + 2] = 1
    h[2 * e1] = F.add(h[2 * e1], 1)
    h[0] = F.add(h[0], d)
    return (Polynomial.from_codes(F, f).scale(F.from_code(a)),
            Polynomial.from_codes(F, h).scale(F.from_code(b)))


def _even_fallback(q: int, g: int, guaranteed: bool):
    """Search ``Q`` root-free of degree g+1 and ``P = alpha Q^2 + (x^q - x) S`` with Tr(alpha) = 1."""
    F = field_of_order(q)
    if guaranteed:
        log.warning("fallback search fired for q=%d, g=%d", q, g)
    top = 2 * g + 1 - q
    if top < 0:
        return None
    alpha = _trace_one_pair(F)[0]
    xq = Polynomial.monomial(F, q) - Polynomial.x(F)
    tries = 0
    for Q in monic_polynomials(F, g + 1):
        if has_root(Q):
            continue
        base = (Q * Q).scale(F.from_code(alpha))
        for k in range(1, q ** (top + 1)):
            tries += 1
            if tries > 20000:
                return None
            S = Polynomial.from_codes(F, [(k // q ** i) % q for i in range(top + 1)])
            P = base + xq * S
            model = make_model(F, Q, P)
            if model.genus == g and is_smooth(model) and count_points(model) == 0:
                return model, {"Q": Q, "P": P}
    return None


def build_even_char(q: int, g: int) -> tuple[HyperellipticModel, ConstructionCertificate]:
    F = field_of_order(q)
    if F.p != 2 or q == 2:
        raise ValueError(f"q = {q} must be a power of 2 greater than 2")
    guaranteed = g >= genus_bound(q)
    if g < hasse_weil_min_genus(q, 1):
        raise NotFoundError(q, g, "below the Hasse-Weil floor")
    if g >= q - 1:
        alpha, beta = (F.from_code(c) for c in _trace_one_pair(F))
        a = c = F.one
        b = alpha
        d = beta / alpha
        Q, P = even_char_polynomials(q, g, a, b, c, d)
        model = make_model(F, Q, P)
        try:
            _verify(model, g, 0)
            params = {"a": a, "b": b, "c": c, "d": d, "alpha": alpha, "beta": beta}
            return model, ConstructionCertificate(Branch.EVEN_CHAR, params, guaranteed=guaranteed)
        except ConstructionError as exc:
            log.warning("even-characteristic family failed verification: %s", exc)
    found = _even_fallback(q, g, guaranteed)
    if found is None:
        raise NotFoundError(q, g, "outside the even-characteristic family and the bounded search found nothing")
    model, params = found
    return model, ConstructionCertificate(Branch.FALLBACK_SEARCH, params, guaranteed=guaranteed)


def q2_polynomials(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(f, (x^2 + x) f + f^2)``: the model of ``y^2 + y = (x^2+x)/f + 1`` after ``z = y f``."""
    F = f.field
    x2x = Polynomial.from_codes(F, [0, 1, 1])
    return f, x2x * f + f * f


def build_q2(g: int) -> tuple[HyperellipticModel, ConstructionCertificate]:
    if g < 2:
        raise ValueError("the q = 2 construction needs g >= 2")
    F = make_field(2)
    f = find_irreducible(F, g + 1)
    Q, P = q2_polynomials(f)
    model = make_model(F, Q, P)
    _verify(model, g, 0)
    return model, ConstructionCertificate(Branch.Q2_ARTIN, {"f": f})


# -- dispatcher ---------------------------------------------------------------------


def construct_pointless(q: int, g: int) -> tuple[HyperellipticModel, ConstructionCertificate]:
    """A verified smooth pointless genus-g hyperelliptic model over GF(q)."""
    F = field_of_order(q)
    if not isinstance(g, int) or g < 0:
        raise ValueError(f"genus must be a nonnegative integer, got {g!r}")
    if g < hasse_weil_min_genus(q, 1):
        raise NotFoundError(q, g, "below the Hasse-Weil floor")
    if F.p == 2:
        if q == 2:
            return build_q2(g)
        return build_even_char(q, g)
    maximal, cert = construct_maximal_odd(q, g)
    twisted, nu = quadratic_twist(maximal)
    _verify(twisted, g, 0)
    cert.twist = nu
    return twisted, cert


def replay(q: int, g: int, cert: ConstructionCertificate) -> HyperellipticModel:
    """Rebuild a model from its certificate without any search."""
    F = field_of_order(q)
    p = cert.params
    br = cert.branch
    if br is Branch.Q2_ARTIN:
        Q, P = q2_polynomials(p["f"])
        return make_model(F, Q, P)
    if br is Branch.EVEN_CHAR:
        Q, P = even_char_polynomials(q, g, p["a"], p["b"], p["c"], p["d"])
        return make_model(F, Q, P)
    if br is Branch.FALLBACK_SEARCH and "Q" in p:
        return make_model(F, p["Q"], p["P"])
    if br is Branch.LAST_GENUS:
        poly = last_genus_polynomial(q, p["alpha"], p["beta"])
    elif br in (Branch.GCD_GT2, Branch.L_GE2, Branch.OLD_CURVE):
        poly = build_f_gla(q, g, p["l"], p["a"])
    elif br is Branch.PRIME_FIELD_TRINOMIAL:
        poly = build_special_trinomial(q)
    elif br is Branch.FAMILY2:
        poly = build_family2(q, p["n"], p["b"], p["xi"])
    elif br is Branch.FALLBACK_SEARCH:
        poly = p["P"]
    else:  # pragma: no cover
        raise ValueError(f"unknown branch {br}")
    if cert.twist is not None:
        poly = poly.scale(cert.twist)
    return make_model(F, None, poly)


# -- Artin-Schreier curves ---------------------------------------------------------


@dataclass(frozen=True)
class ArtinSchreierRecord:
    """``y^q - y = u(x)/v(x)``; the genus is the formula value, not recomputed."""

    q: int
    n: int
    u: Polynomial
    v: Polynomial
    claimed_genus: int
    pointless: bool
    genus_verified: bool = False

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "u": self.u.to_json(),
            "v": self.v.to_json(),
            "claimed_genus": self.claimed_genus,
            "genus_verified": self.genus_verified,
            "pointless": self.pointless,
        }


def artin_schreier_pointless(q: int, n_param: int) -> ArtinSchreierRecord:
    if n_param < 1:
        raise ValueError("n must be >= 1")
    if q > 1 << 10:
        raise ValueError("q must be at most 2^10")
    F = field_of_order(q)
    d = n_param + 1
    v = find_irreducible(F, d)
    u = next(f for f in monic_polynomials(F, d) if not has_root(f))
    # c = y^q - y has a solution in GF(q) iff c = 0, so the affine part is
    # empty iff u never vanishes; at infinity the ratio of reversed
    # polynomials is lead(u)/lead(v).
    affine_ok = all(u.eval_code(x) != 0 and v.eval_code(x) != 0 for x in range(q))
    u_inf = u.reversed(d).eval_code(0)
    v_inf = v.reversed(d).eval_code(0)
    pointless = affine_ok and u_inf != 0 and v_inf != 0
    return ArtinSchreierRecord(q, n_param, u, v, (q - 1) * n_param, pointless)
