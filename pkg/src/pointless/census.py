"""Exhaustive census of hyperelliptic models over small fields.

Odd q: the models are ``y^2 = P(x)`` with ``deg P`` in ``{2g+1, 2g+2}``.  The
space is ordered by degree, then leading coefficient, then the lower
coefficients read as a base-q integer (constant term fastest).  The scan
splits every polynomial into high coefficients (an "outer task", handled in
Python) and low coefficients (a numpy block), and evaluates all x of the
field block-wise, dropping a candidate at the first x whose fibre has a
point.  Survivors are then tested for squarefreeness.

Even q: the (Q, P) pairs are enumerated directly; only tiny spaces are
allowed.
"""

from __future__ import annotations

import functools
import itertools
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .finite_field import FiniteField, field_of_order
from .hyperelliptic import (
    HyperellipticModel,
    has_rational_point,
    is_smooth,
    make_model,
    square_root_counts,
)
from .polynomial import Polynomial, is_squarefree

MAX_ODD_SPACE = 1 << 34
MAX_EVEN_SPACE = 1 << 22
_BLOCK = 1 << 17


class CensusCapError(ValueError):
    """The requested search space exceeds the census cap."""


@dataclass
class CensusReport:
    q: int
    g: int
    total_models_scanned: int
    pointless_count: int
    first_pointless: dict | None
    wall_time: float
    prefilter: bool = True

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "g": self.g,
            "total_models_scanned": self.total_models_scanned,
            "pointless_count": self.pointless_count,
            "first_pointless": self.first_pointless,
            "wall_time": round(self.wall_time, 6),
            "prefilter": self.prefilter,
        }


# -- odd characteristic ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _tables(field: FiniteField):
    q = field.q
    if field.n == 1:
        r = np.arange(q, dtype=np.int64)
        add = (r[:, None] + r[None, :]) % q
        mul = (r[:, None] * r[None, :]) % q
    else:
        add = np.array([[field.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[field.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    roots = np.array(square_root_counts(field), dtype=np.int64)
    return add, mul, roots


@dataclass(frozen=True)
class _Block:
    degree: int
    lead: int
    inner: int  # number of low coefficients handled by numpy
    tasks: int  # q ** (degree - inner)


class _OddSpace:
    """The ordered candidate space for one (q, g, mode)."""

    def __init__(self, field: FiniteField, g: int, degrees, leads, target: str):
        self.field = field
        self.g = g
        self.target = target
        q = field.q
        self.blocks = []
        for d in degrees:
            inner = 0
            while inner < d and q ** (inner + 1) <= _BLOCK:
                inner += 1
            for lead in leads:
                self.blocks.append(_Block(d, lead, inner, q ** (d - inner)))
        self.offsets = list(itertools.accumulate([b.tasks for b in self.blocks], initial=0))
        self.n_tasks = self.offsets[-1]
        self.size = sum(b.tasks * q ** b.inner for b in self.blocks)

    def locate(self, task: int) -> tuple[int, int]:
        for i, b in enumerate(self.blocks):
            if task < self.offsets[i + 1]:
                return i, task - self.offsets[i]
        raise IndexError(task)

    def first_index(self, block: int, outer: int, inner: int) -> int:
        q = self.field.q
        before = sum(b.tasks * q ** b.inner for b in self.blocks[:block])
        return before + outer * q ** self.blocks[block].inner + inner


@functools.lru_cache(maxsize=64)
def _inner_block(field: FiniteField, inner: int):
    """Low-coefficient digits and their values at every x."""
    q = field.q
    add, mul, _ = _tables(field)
    count = q ** inner
    idx = np.arange(count, dtype=np.int64)
    digits = np.empty((count, inner), dtype=np.int64)
    rest = idx.copy()
    for i in range(inner):
        digits[:, i] = rest % q
        rest //= q
    values = np.zeros((q, count), dtype=np.int64)
    for x in range(q):
        xp = 1
        acc = np.zeros(count, dtype=np.int64)
        for i in range(inner):
            acc = add[acc, mul[digits[:, i], xp]]
            xp = field.mul(xp, x)
        values[x] = acc
    return digits, values


def _scan(space: _OddSpace, start: int, stop: int, stop_at_first: bool, collect: list | None = None):
    """Scan outer tasks [start, stop); returns (scanned, found, first_index, first_codes).

    ``collect`` receives the global index of every hit.
    """
    field = space.field
    q = field.q
    g = space.g
    add, mul, roots = _tables(field)
    ok = roots == (0 if space.target == "pointless" else 2)
    want_inf = 0 if space.target == "pointless" else 2
    scanned = found = 0
    first_index = None
    first_codes = None
    xpows = {}
    for task in range(start, stop):
        bi, outer = space.locate(task)
        block = space.blocks[bi]
        d, inner = block.degree, block.inner
        scanned += q ** inner
        # points over x = infinity come from the x^(2g+2) coefficient alone
        top = block.lead if d == 2 * g + 2 else 0
        if int(roots[top]) != want_inf:
            continue
        high = []
        o = outer
        for _ in range(d - inner):
            o, r = divmod(o, q)
            high.append(r)
        high.append(block.lead)
        digits, values = _inner_block(field, inner)
        if (d, inner) not in xpows:
            xpows[(d, inner)] = [[field.pow(x, i) for i in range(inner, d + 1)] for x in range(q)]
        pw = xpows[(d, inner)]
        alive = None
        for x in range(q):
            s = 0
            for c, xp in zip(high, pw[x]):
                if c:
                    s = field.add(s, field.mul(c, xp))
            row = add[s]
            if alive is None:
                alive = np.nonzero(ok[row[values[x]]])[0]
            else:
                alive = alive[ok[row[values[x][alive]]]]
            if alive.size == 0:
                break
        if alive is None or alive.size == 0:
            continue
        for j in alive.tolist():
            codes = digits[j].tolist() + high
            if is_squarefree(Polynomial.from_codes(field, codes)):
                found += 1
                if collect is not None:
                    collect.append(space.first_index(bi, outer, j))
                if first_index is None:
                    first_index = space.first_index(bi, outer, j)
                    first_codes = codes
                    if stop_at_first:
                        return scanned, found, first_index, first_codes
    return scanned, found, first_index, first_codes


def _odd_space(q: int, g: int, prefilter: bool, target: str = "pointless", monic: bool = False) -> _OddSpace:
    field = field_of_order(q)
    if field.p == 2:
        raise ValueError("odd-characteristic space requested for even q")
    if g < 0:
        raise ValueError("genus must be >= 0")
    roots = square_root_counts(field)
    if monic:
        leads, degrees = [1], [2 * g + 2]
    elif prefilter:
        want = 0 if target == "pointless" else 2
        leads = [c for c in range(1, q) if roots[c] == want]
        degrees = [2 * g + 2]
    else:
        leads = list(range(1, q))
        degrees = [2 * g + 1, 2 * g + 2]
    return _OddSpace(field, g, degrees, leads, target)


def _scan_worker(args):
    q, g, prefilter, start, stop, stop_at_first = args
    space = _odd_space(q, g, prefilter)
    return _scan(space, start, stop, stop_at_first)


def _partition(n: int, k: int) -> list[tuple[int, int]]:
    k = max(1, min(k, n)) if n else 1
    bounds = [n * i // k for i in range(k + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


def _merge(parts):
    scanned = sum(p[0] for p in parts)
    found = sum(p[1] for p in parts)
    firsts = [(p[2], p[3]) for p in parts if p[2] is not None]
    first = min(firsts, key=lambda t: t[0]) if firsts else (None, None)
    return scanned, found, first[0], first[1]


def scan_odd(q: int, g: int, *, prefilter: bool = True, jobs: int = 1, partitions: int | None = None,
             stop_at_first: bool = False):
    """Run the odd-q scan, optionally fanned out over worker processes.

    ``partitions`` splits the task range into that many disjoint pieces
    (defaults to ``jobs``); counts merge by addition.
    """
    space = _odd_space(q, g, prefilter)
    if space.size > MAX_ODD_SPACE:
        raise CensusCapError(f"search space {space.size} exceeds 2^34")
    ranges = _partition(space.n_tasks, partitions or jobs)
    args = [(q, g, prefilter, a, b, stop_at_first) for a, b in ranges]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_worker, args))
    else:
        parts = []
        for a in args:
            parts.append(_scan_worker(a))
            if stop_at_first and parts[-1][2] is not None:
                break
    return space, _merge(parts)


def find_maximal_monic(field: FiniteField, g: int, limit: int) -> list[int] | None:
    """First monic squarefree P of degree 2g+2 whose values are all nonzero squares.

    Scans at most about ``limit`` candidates in enumeration order.
    """
    space = _odd_space(field.q, g, False, target="maximal", monic=True)
    per_task = space.field.q ** space.blocks[0].inner
    stop = min(space.n_tasks, max(1, limit // per_task))
    _, found, _, codes = _scan(space, 0, stop, stop_at_first=True)
    return codes if found else None


# -- even characteristic --------------------------------------------------------


def _even_pairs(field: FiniteField, g: int, prefilter: bool):
    q = field.q
    nq, np_ = g + 2, 2 * g + 3
    for qi in range(1, q ** nq):
        Q = Polynomial.from_codes(field, _digits(qi, q, nq))
        if prefilter and (Q.degree != g + 1 or any(Q.eval_code(x) == 0 for x in range(q))):
            continue
        for pi in range(q ** np_):
            P = Polynomial.from_codes(field, _digits(pi, q, np_))
            top = max(2 * Q.degree, P.degree)
            if top in (2 * g + 1, 2 * g + 2):
                yield Q, P


def _digits(k: int, q: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        k, r = divmod(k, q)
        out.append(r)
    return out


def _even_space_size(q: int, g: int) -> int:
    return (q ** (g + 2) - 1) * q ** (2 * g + 3)


# -- public API ---------------------------------------------------------------------


def enumerate_models(q: int, g: int, prefilter: bool = False) -> Iterator[HyperellipticModel]:
    """All smooth genus-g models in enumeration order.

    With ``prefilter`` only candidates that can possibly be pointless are
    produced: even-degree P with a non-square leading coefficient (odd q),
    or Q of full degree without roots in the field (even q).
    """
    field = field_of_order(q)
    if field.p == 2:
        if _even_space_size(q, g) > MAX_EVEN_SPACE:
            raise CensusCapError(f"even-q census space for q={q}, g={g} is over the cap")
        for Q, P in _even_pairs(field, g, prefilter):
            model = make_model(field, Q, P)
            if is_smooth(model):
                yield model
        return
    space = _odd_space(q, g, prefilter)
    if space.size > MAX_ODD_SPACE:
        raise CensusCapError(f"search space {space.size} exceeds 2^34")
    for block in space.blocks:
        for low in range(q ** block.degree):
            codes = _digits(low, q, block.degree) + [block.lead]
            P = Polynomial.from_codes(field, codes)
            if is_squarefree(P):
                yield make_model(field, None, P)


def _model_json(field: FiniteField, Q_codes, P_codes) -> dict:
    Q = Polynomial.from_codes(field, Q_codes)
    P = Polynomial.from_codes(field, P_codes)
    return make_model(field, Q, P).to_json()


def count_pointless(q: int, g: int, *, jobs: int = 1, prefilter: bool = True,
                    partitions: int | None = None) -> CensusReport:
    """Exact number of smooth pointless defining equations of genus g over GF(q)."""
    start = time.perf_counter()
    field = field_of_order(q)
    if field.p == 2:
        if _even_space_size(q, g) > MAX_EVEN_SPACE:
            raise CensusCapError(f"even-q census space for q={q}, g={g} is over the cap")
        scanned = found = 0
        first = None
        for Q, P in _even_pairs(field, g, prefilter):
            scanned += 1
            model = make_model(field, Q, P)
            if not has_rational_point(model) and is_smooth(model):
                found += 1
                if first is None:
                    first = model.to_json()
        return CensusReport(q, g, scanned, found, first, time.perf_counter() - start, prefilter)
    _, (scanned, found, _, codes) = scan_odd(q, g, prefilter=prefilter, jobs=jobs, partitions=partitions)
    first = _model_json(field, [], codes) if codes is not None else None
    return CensusReport(q, g, scanned, found, first, time.perf_counter() - start, prefilter)


def pointless_exists(q: int, g: int, *, jobs: int = 1) -> dict | None:
    """First pointless smooth model of genus g in enumeration order, or None."""
    field = field_of_order(q)
    if field.p == 2:
        if _even_space_size(q, g) > MAX_EVEN_SPACE:
            raise CensusCapError(f"even-q census space for q={q}, g={g} is over the cap")
        for Q, P in _even_pairs(field, g, True):
            model = make_model(field, Q, P)
            if not has_rational_point(model) and is_smooth(model):
                return model.to_json()
        return None
    _, (_, _, _, codes) = scan_odd(q, g, prefilter=True, jobs=jobs, stop_at_first=True)
    return _model_json(field, [], codes) if codes is not None else None


def min_pointless_genus(q: int, g_max: int, *, jobs: int = 1) -> int | None:
    """Smallest g <= g_max admitting a smooth pointless hyperelliptic model."""
    for g in range(g_max + 1):
        if pointless_exists(q, g, jobs=jobs) is not None:
            return g
    return None


def contains_model(model: HyperellipticModel) -> bool:
    """Whether the census rediscovers ``model`` as a smooth pointless model.

    Odd q: the model's slot in the prefiltered space is located and that
    slice is rescanned with the vectorized kernel.
    """
    F = model.field
    g = model.genus
    if F.p == 2:
        pairs = (Q.codes == model.Q.codes and P.codes == model.P.codes
                 for Q, P in _even_pairs(F, g, True))
        return any(pairs) and not has_rational_point(model) and is_smooth(model)
    if not model.Q.is_zero() or model.P.degree != 2 * g + 2:
        return False
    space = _odd_space(F.q, g, True)
    codes = list(model.P.codes)
    for bi, block in enumerate(space.blocks):
        if block.lead != codes[-1]:
            continue
        q, inner = F.q, block.inner
        inner_idx = sum(c * q ** i for i, c in enumerate(codes[:inner]))
        outer = sum(c * q ** i for i, c in enumerate(codes[inner:-1]))
        hits: list[int] = []
        task = space.offsets[bi] + outer
        _scan(space, task, task + 1, False, hits)
        return space.first_index(bi, outer, inner_idx) in hits
    return False


__all__ = [
    "CensusCapError",
    "CensusReport",
    "contains_model",
    "count_pointless",
    "enumerate_models",
    "find_maximal_monic",
    "min_pointless_genus",
    "pointless_exists",
    "scan_odd",
]
