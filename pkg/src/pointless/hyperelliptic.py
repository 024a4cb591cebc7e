"""Hyperelliptic models ``y^2 + Q(x) y = P(x)`` over finite fields.

Point counts are exhaustive: every x of GF(q^k) is visited, and the number
of y solving the fibre equation is read from solution-count tables that are
themselves built by enumerating all y.  The projective curve is covered by
the affine chart above and the chart ``y^2 + x^(g+1) Q(1/x) y = x^(2g+2) P(1/x)``
at ``x = 0``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .finite_field import (
    FieldElement,
    FieldError,
    FiniteField,
    MAX_ORDER,
    embed_code,
    field_from_json,
    field_of_order,
    make_field,
)
from .polynomial import Polynomial, gcd, is_squarefree


class ModelError(ValueError):
    """A (Q, P) pair that does not define a hyperelliptic model."""


def _genus_from_degrees(Q: Polynomial, P: Polynomial) -> int:
    top = max(2 * Q.degree if Q.codes else -1, P.degree)
    if top < 1:
        raise ModelError("degree condition fails: max(2 deg Q, deg P) must be >= 1")
    return (top + 1) // 2 - 1


@dataclass(frozen=True)
class HyperellipticModel:
    field: FiniteField
    Q: Polynomial
    P: Polynomial
    genus: int

    @property
    def q(self) -> int:
        return self.field.q

    def second_chart(self) -> tuple[Polynomial, Polynomial]:
        """``(x^(g+1) Q(1/x), x^(2g+2) P(1/x))``."""
        g = self.genus
        return self.Q.reversed(g + 1), self.P.reversed(2 * g + 2)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "Q": self.Q.to_json(),
            "P": self.P.to_json(),
            "genus": self.genus,
        }

    def __str__(self) -> str:
        if self.Q.is_zero():
            return f"y^2 = {self.P}"
        return f"y^2 + ({self.Q})*y = {self.P}"


def make_model(field: FiniteField, Q: Polynomial | None, P: Polynomial) -> HyperellipticModel:
    if Q is None:
        Q = Polynomial(field)
    if Q.field is not field or P.field is not field:
        raise ModelError("Q and P must be polynomials over the model's field")
    if field.p == 2 and Q.is_zero():
        raise ModelError("Q = 0 is not allowed in characteristic 2")
    return HyperellipticModel(field, Q, P, _genus_from_degrees(Q, P))


def model_from_json(data: dict) -> tuple[HyperellipticModel, int | None]:
    """Parse a curve object; returns the model and the genus it claims."""
    try:
        field = field_from_json(data["field"])
        Q = Polynomial.from_json(field, data.get("Q", []))
        P = Polynomial.from_json(field, data["P"])
    except (KeyError, TypeError) as exc:
        raise ModelError(f"malformed curve object: {exc}") from exc
    claimed = data.get("genus")
    return make_model(field, Q, P), claimed


def is_smooth(model: HyperellipticModel) -> bool:
    F = model.field
    g = model.genus
    if F.p != 2:
        # (2y + Q)^2 = Q^2 + 4P; both charts are smooth iff this is squarefree
        # of degree 2g+1 or 2g+2.
        disc = model.Q * model.Q + model.P.scale(4)
        return disc.degree >= 2 * g + 1 and is_squarefree(disc)
    for Q, P in ((model.Q, model.P), model.second_chart()):
        dQ, dP = Q.derivative(), P.derivative()
        R = dQ * dQ * P + dP * dP
        if gcd(Q, R).degree != 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _fibre_tables(field: FiniteField) -> tuple[list[int], list[int]]:
    """``(#{y: y^2 = v}, #{z: z^2 + z = v})`` indexed by the code v."""
    q = field.q
    add, mul = field.add, field.mul
    squares = [0] * q
    artin = [0] * q
    for y in range(q):
        y2 = mul(y, y)
        squares[y2] += 1
        artin[add(y2, y)] += 1
    return squares, artin


def _fibre_count(field: FiniteField, b: int, c: int) -> int:
    """Number of y in the field with ``y^2 + b y = c``."""
    squares, artin = _fibre_tables(field)
    if field.p != 2:
        # (2y + b)^2 = b^2 + 4c
        return squares[field.add(field.mul(b, b), field.mul(field.from_int(4), c))]
    if b == 0:
        return squares[c]
    return artin[field.div(c, field.mul(b, b))]


def extension_field(field: FiniteField, k: int) -> FiniteField:
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if field.q ** k > MAX_ORDER:
        raise FieldError(f"q^k = {field.q}^{k} exceeds the cap 2^20")
    return field if k == 1 else make_field(field.p, field.n * k)


def count_points(model: HyperellipticModel, k: int = 1) -> int:
    """Exhaustive N_k: affine points over GF(q^k) plus chart-2 points at x = 0."""
    F = model.field
    E = extension_field(F, k)
    Q = model.Q.map_codes(E, lambda c: embed_code(c, F, E))
    P = model.P.map_codes(E, lambda c: embed_code(c, F, E))
    total = 0
    for x in range(E.q):
        total += _fibre_count(E, Q.eval_code(x), P.eval_code(x))
    Qi, Pi = model.second_chart()
    b = embed_code(Qi.codes[0] if Qi.codes else 0, F, E)
    c = embed_code(Pi.codes[0] if Pi.codes else 0, F, E)
    return total + _fibre_count(E, b, c)


def has_rational_point(model: HyperellipticModel) -> bool:
    """Early-exit test for N_1 > 0."""
    F = model.field
    Qi, Pi = model.second_chart()
    if _fibre_count(F, Qi.codes[0] if Qi.codes else 0, Pi.codes[0] if Pi.codes else 0):
        return True
    Q, P = model.Q, model.P
    return any(_fibre_count(F, Q.eval_code(x), P.eval_code(x)) for x in range(F.q))


def square_root_counts(field: FiniteField) -> list[int]:
    """``#{y : y^2 = v}`` for every code v, by enumerating y."""
    return list(_fibre_tables(field)[0])


def frobenius_trace(model: HyperellipticModel) -> int:
    return model.q + 1 - count_points(model, 1)


def quadratic_twist(model: HyperellipticModel) -> tuple[HyperellipticModel, FieldElement]:
    """Twist by the first non-square: ``y^2 = nu P(x)``."""
    F = model.field
    if F.p == 2:
        raise ModelError("quadratic twist is only exposed in odd characteristic")
    if not model.Q.is_zero():
        raise ModelError("quadratic twist expects a model with Q = 0")
    nu = F.first_nonsquare()
    return HyperellipticModel(F, model.Q, model.P.scale(nu), model.genus), nu


def is_maximal(model: HyperellipticModel) -> bool:
    return count_points(model, 1) == 2 * model.q + 2


def is_pointless(model: HyperellipticModel, k: int = 1) -> bool:
    return count_points(model, k) == 0


def hasse_weil_width(q: int, k: int = 1) -> int:
    """``floor(2 q^(k/2))``."""
    return math.isqrt(4 * q ** k)


def hasse_weil_interval(q: int, g: int, k: int = 1) -> tuple[int, int]:
    w = g * hasse_weil_width(q, k)
    return q ** k + 1 - w, q ** k + 1 + w


def hasse_weil_min_genus(q: int, k: int = 1) -> int:
    """Least genus allowed for a curve with no GF(q^k)-points."""
    return -(-(q ** k + 1) // hasse_weil_width(q, k))


@dataclass(frozen=True)
class PlaneCurve:
    """The Fermat curve ``X^d + Y^d + Z^d = 0``."""

    field: FiniteField
    degree: int

    def value(self, X: int, Y: int, Z: int) -> int:
        F, d = self.field, self.degree
        return F.add(F.add(F.pow(X, d), F.pow(Y, d)), F.pow(Z, d))


def fermat_pointless(q: int) -> PlaneCurve:
    field = field_of_order(q)
    if field.p <= 3:
        raise FieldError("the Fermat example needs characteristic > 3")
    return PlaneCurve(field, q - 1)


def count_plane_points(curve: PlaneCurve) -> int:
    """Projective points over the base field, one normalized representative each."""
    q = curve.field.q
    reps = [(1, y, z) for y in range(q) for z in range(q)]
    reps += [(0, 1, z) for z in range(q)]
    reps.append((0, 0, 1))
    return sum(1 for X, Y, Z in reps if curve.value(X, Y, Z) == 0)
