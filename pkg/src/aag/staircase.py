"""Plane representation of monomials and the two-rectangle Apery set.

A monomial L_i * x_k^α * x_{k+1}^z (with L_0 = 1 and L_i = x_i for
0 < i < k) is drawn at the plane point (y, z) where y = αk + i.  The
Apery set of the semigroup with respect to a is the union of two
half-open rectangles determined by the pivot rows of the Euclidean table:

    {0 <= y < s_μ - s_{μ+1},  0 <= z < p_{μ+1}}
  ∪ {s_μ - s_{μ+1} <= y < s_μ,  0 <= z < p_{μ+1} - p_μ}

whose total cardinality is a by the determinant identity
s_μ p_{μ+1} - s_{μ+1} p_μ = a.  The complement of the staircase in the
quadrant splits into three rectangular regions U, V, W (the monomials of
the initial ideal); ``initial_region`` names them.

The Frobenius number is max φ over the Apery set minus a.  The maximum is
taken over the full set: since φ(M(y, z)) = w(y) + z*c grows with z, each
column's maximum sits on the top row of its rectangle, so the scan walks
all y once with the z-extent folded in — exact for d of either sign,
where the x_i weights run in opposite orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import AagParams, Monomial
from .errors import HypothesisViolated, NonsenseInput, NotStandardForm
from .euclid import EuclidTable

REGION_U = "U"
REGION_V = "V"
REGION_W = "W"
REGION_STANDARD = "Standard"

# numpy is used for the weight scan only while a * max(generator) stays
# clear of int64 range; beyond that a plain-integer loop takes over.
_NUMPY_SAFE_PRODUCT = 1 << 59


@dataclass(frozen=True, slots=True)
class StandardPoint:
    """Plane coordinates (y, z) of a monomial L_i x_k^α x_{k+1}^z."""

    y: int
    z: int

    def __post_init__(self) -> None:
        if self.y < 0 or self.z < 0:
            raise NonsenseInput(f"plane point ({self.y}, {self.z}) has a negative part")


@dataclass(frozen=True)
class AperySet:
    """The Apery points plus the table bounds that carved them out."""

    points: frozenset[StandardPoint]
    bounds: tuple[int, int, int, int]  # (s_mu, s_mu1, p_mu, p_mu1)


def point_to_monomial(pt: StandardPoint, k: int) -> Monomial:
    """M(y, z) = L_i x_k^α x_{k+1}^z with α = y // k, i = y % k."""
    if k < 1:
        raise NonsenseInput(f"k must be positive, got {k}")
    alpha, i = divmod(pt.y, k)
    exps = [0] * (k + 2)
    if i > 0:
        exps[i] = 1
    exps[k] = alpha
    exps[k + 1] = pt.z
    return Monomial(tuple(exps))


def monomial_to_point(m: Monomial, k: int) -> StandardPoint:
    """Inverse of ``point_to_monomial``.

    Accepts exactly the monomials of shape L_i x_k^α x_{k+1}^z: no x_0,
    at most one of x_1..x_{k-1} and only to the first power.
    """
    if len(m.exponents) != k + 2:
        raise NonsenseInput(
            f"monomial has {len(m.exponents)} variables, expected {k + 2}"
        )
    if m.exponents[0] != 0:
        raise NotStandardForm(f"{m} contains x0")
    i = 0
    for j in range(1, k):
        e = m.exponents[j]
        if e == 0:
            continue
        if e > 1 or i:
            raise NotStandardForm(f"{m} is not of the form L_i x{k}^a x{k + 1}^z")
        i = j
    return StandardPoint(y=k * m.exponents[k] + i, z=m.exponents[k + 1])


def _require_hypothesis(table: EuclidTable) -> None:
    if not table.hypothesis_ok:
        raise HypothesisViolated(
            "Apery staircase is only proved when r'_mu >= h or k | s_mu"
        )


def iter_apery_points(table: EuclidTable) -> Iterator[StandardPoint]:
    """Yield the Apery points rectangle by rectangle (row-major)."""
    _require_hypothesis(table)
    piv, nxt = table.pivot, table.after_pivot
    split = piv.s - nxt.s
    for y in range(split):
        for z in range(nxt.p):
            yield StandardPoint(y, z)
    for y in range(split, piv.s):
        for z in range(nxt.p - piv.p):
            yield StandardPoint(y, z)


def apery_set(params: AagParams, table: EuclidTable) -> AperySet:
    """Materialized Apery set; cardinality is checked to equal a."""
    points = frozenset(iter_apery_points(table))
    piv, nxt = table.pivot, table.after_pivot
    if len(points) != params.a:
        raise AssertionError(
            f"Apery rectangle count {len(points)} != a = {params.a}"
        )
    return AperySet(points=points, bounds=(piv.s, nxt.s, piv.p, nxt.p))


def _column_weights_numpy(params: AagParams, s_mu: int) -> np.ndarray:
    a, d, h, k = params.a, params.d, params.h, params.k
    gk = h * a + k * d
    ys = np.arange(s_mu, dtype=np.int64)
    alpha = ys // k
    i = ys % k
    return alpha * gk + np.where(i > 0, h * a + i * d, 0)


def _column_weight(params: AagParams, y: int) -> int:
    alpha, i = divmod(y, params.k)
    base = params.h * params.a + i * params.d if i else 0
    return alpha * (params.h * params.a + params.k * params.d) + base


def frobenius(params: AagParams, table: EuclidTable) -> int:
    """Frobenius number: max φ over the Apery set, minus a."""
    _require_hypothesis(table)
    piv, nxt = table.pivot, table.after_pivot
    c = params.c
    split = piv.s - nxt.s
    top1 = (nxt.p - 1) * c
    top2 = (nxt.p - piv.p - 1) * c
    if params.a * max(params.generators) < _NUMPY_SAFE_PRODUCT:
        w = _column_weights_numpy(params, piv.s)
        best = int(w[:split].max()) + top1
        if piv.s > split:
            best = max(best, int(w[split:].max()) + top2)
    else:
        best = max(_column_weight(params, y) for y in range(split)) + top1
        if piv.s > split:
            best = max(
                best,
                max(_column_weight(params, y) for y in range(split, piv.s)) + top2,
            )
    return best - params.a


def apery_values(params: AagParams, table: EuclidTable) -> list[int]:
    """φ of every Apery point (rectangle order, not sorted)."""
    _require_hypothesis(table)
    piv, nxt = table.pivot, table.after_pivot
    c = params.c
    split = piv.s - nxt.s
    if params.a * max(params.generators) < _NUMPY_SAFE_PRODUCT:
        w = _column_weights_numpy(params, piv.s)
        zs1 = np.arange(nxt.p, dtype=np.int64) * c
        first = (w[:split, None] + zs1[None, :]).ravel()
        zs2 = np.arange(nxt.p - piv.p, dtype=np.int64) * c
        second = (w[split:, None] + zs2[None, :]).ravel()
        return np.concatenate([first, second]).tolist()
    out = []
    for y in range(split):
        wy = _column_weight(params, y)
        out.extend(wy + z * c for z in range(nxt.p))
    for y in range(split, piv.s):
        wy = _column_weight(params, y)
        out.extend(wy + z * c for z in range(nxt.p - piv.p))
    return out


def initial_region(pt: StandardPoint, table: EuclidTable) -> str:
    """Which piece of the plane the point falls in: U, V, W or Standard."""
    piv, nxt = table.pivot, table.after_pivot
    split = piv.s - nxt.s
    if pt.y < split:
        return REGION_U if pt.z >= nxt.p else REGION_STANDARD
    if pt.z >= nxt.p - piv.p:
        return REGION_V
    return REGION_W if pt.y >= piv.s else REGION_STANDARD
