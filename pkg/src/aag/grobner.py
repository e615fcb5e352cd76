"""Binomial families of the defining ideal and a counting-based basis check.

The semigroup ring's defining ideal I is prime and binomial: a binomial
lies in I exactly when its two monomials have equal weighted degree φ.
Four families are constructed straight from the Euclidean table:

  A: x_i x_j - x0^h x_{i+j}        (i + j <= k)          1 <= i <= j <= k-1
     x_i x_j - x_{i+j-k} x_k       (i + j > k)
  B: from the pivot row μ — main binomial plus, when ρ_μ > 0, the
     j-indexed companions x_{ρ_μ+j} x_k^{σ_μ} - x0^{r'_μ-h} x_j x_{k+1}^{p_μ}
  C: from the difference of rows μ, μ+1 (empty when s_{μ+1} = 0)
  D: x_{k+1}^{p_{μ+1}} - x0^{-r'_{μ+1}} L_{ρ_{μ+1}} x_k^{σ_{μ+1}}

plus two families used as cross-checks: one binomial per table row
("Row", sign-dispatched on r') and one per consecutive row pair ("Tilde").

``certify_basis`` checks the Groebner-basis property of G = A∪B∪C∪D
without any S-polynomial machinery: under the weighted degrevlex order
(φ first, ties by reverse lexicographic with x0 lowest), it verifies that
every element sits in I with the claimed leading term, and that the plane
monomials not divisible by any leading term are exactly the Apery
staircase — a complete certificate, because φ is injective on standard
monomials and a monomial algebra has exactly |Ap| = a standard residues.
Monomials involving two of x_1..x_{k-1} (or one squared) are always
divisible by the corresponding A-lead, so the scan can stay inside the
plane; outside a bounding box divisibility propagates along
M(y+k, z) = x_k M(y, z) and M(y, z+1) = x_{k+1} M(y, z), so checking the
box [0, s_μ+k) x [0, p_{μ+1}] with its two boundary strips suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import AagParams, Monomial, phi
from .errors import HypothesisViolated
from .euclid import EuclidRow, EuclidTable, tilde_for_pair


@dataclass(frozen=True)
class Binomial:
    """lead - tail with a family tag in {A, B, C, D, Row, Tilde}."""

    lead: Monomial
    tail: Monomial
    family: str

    def __str__(self) -> str:
        return f"{self.lead} - {self.tail} [{self.family}]"


def order_key(m: Monomial, params: AagParams):
    """Sort key for weighted degrevlex with x0 ≺ x1 ≺ ... ≺ x_{k+1}.

    Higher φ wins; on φ ties the monomial with the *smaller* exponent at
    the smallest differing variable is the larger one (reverse lex), which
    lexicographic comparison of the negated exponent vector implements.
    """
    return (phi(m, params), tuple(-e for e in m.exponents))


def kernel_check(b: Binomial, params: AagParams) -> bool:
    """Does the binomial lie in the defining ideal (equal φ on both sides)?"""
    return phi(b.lead, params) == phi(b.tail, params)


def _mono(nvars: int, pairs: Iterable[tuple[int, int]]) -> Monomial:
    exps = [0] * nvars
    for idx, e in pairs:
        exps[idx] += e
    return Monomial(tuple(exps))


def _l_shape(nvars: int, rho: int, extra: Iterable[tuple[int, int]]) -> Monomial:
    """L_rho times the given variable powers (L_0 = 1)."""
    pairs = list(extra)
    if rho > 0:
        pairs.append((rho, 1))
    return _mono(nvars, pairs)


def family_A(params: AagParams) -> list[Binomial]:
    """All k(k-1)/2 quadratic relations among x_1 .. x_{k-1}."""
    k, h = params.k, params.h
    n = k + 2
    out = []
    for i in range(1, k):
        for j in range(i, k):
            lead = _mono(n, [(i, 1), (j, 1)])
            if i + j <= k:
                tail = _mono(n, [(0, h), (i + j, 1)])
            else:
                tail = _mono(n, [(i + j - k, 1), (k, 1)])
            out.append(Binomial(lead, tail, "A"))
    return out


def families_BCD(params: AagParams, table: EuclidTable) -> list[Binomial]:
    """The table-derived families B, C, D as one tagged list."""
    if not table.hypothesis_ok:
        raise HypothesisViolated(
            "families B/C/D are only constructed when r'_mu >= h or k | s_mu"
        )
    k, h = params.k, params.h
    n = k + 2
    piv, nxt = table.pivot, table.after_pivot
    out = []

    # B: pivot row.
    if piv.rho == 0:
        out.append(
            Binomial(
                _mono(n, [(k, piv.sigma)]),
                _mono(n, [(0, piv.r_prime), (k + 1, piv.p)]),
                "B",
            )
        )
    else:
        out.append(
            Binomial(
                _l_shape(n, piv.rho, [(k, piv.sigma)]),
                _mono(n, [(0, piv.r_prime), (k + 1, piv.p)]),
                "B",
            )
        )
        for j in range(1, k - piv.rho + 1):
            # piv.rho + j may equal k; _mono folds that into the x_k power.
            out.append(
                Binomial(
                    _mono(n, [(piv.rho + j, 1), (k, piv.sigma)]),
                    _mono(n, [(0, piv.r_prime - h), (j, 1), (k + 1, piv.p)]),
                    "B",
                )
            )

    # C: row difference, empty when s_{mu+1} = 0.
    if nxt.s > 0:
        dp = nxt.p - piv.p
        ts, tr = table.tilde_sigma, table.tilde_rho
        if tr == 0:
            out.append(
                Binomial(
                    _mono(n, [(k, ts), (k + 1, dp)]),
                    _mono(n, [(0, table.tilde_r)]),
                    "C",
                )
            )
        else:
            out.append(
                Binomial(
                    _l_shape(n, tr, [(k, ts), (k + 1, dp)]),
                    _mono(n, [(0, table.tilde_r)]),
                    "C",
                )
            )
            for j in range(1, k - tr + 1):
                out.append(
                    Binomial(
                        _mono(n, [(tr + j, 1), (k, ts), (k + 1, dp)]),
                        _mono(n, [(0, table.tilde_r - h), (j, 1)]),
                        "C",
                    )
                )

    # D: row mu+1.
    out.append(
        Binomial(
            _mono(n, [(k + 1, nxt.p)]),
            _l_shape(n, nxt.rho, [(0, -nxt.r_prime), (k, nxt.sigma)]),
            "D",
        )
    )
    return out


def row_binomials(table: EuclidTable, params: AagParams) -> list[Binomial]:
    """One kernel element per table row, dispatched on the sign of r'.

    For a row (s, p, r) with s = σk + lρ and r' = r + h(σ+l) >= 0 the
    binomial is L_ρ x_k^σ - x0^{r'} x_{k+1}^p (this shape is also used at
    r' = 0); for r' < 0 it is x_{k+1}^p - x0^{-r'} L_ρ x_k^σ.  The table's
    p is never negative, so the third sign pattern cannot arise here.
    Leads are assigned by the order, not by writing convention.
    """
    n = params.k + 2
    out = []
    for row in table.rows:
        if row.r_prime >= 0:
            first = _l_shape(n, row.rho, [(params.k, row.sigma)])
            second = _mono(n, [(0, row.r_prime), (params.k + 1, row.p)])
        else:
            first = _mono(n, [(params.k + 1, row.p)])
            second = _l_shape(n, row.rho, [(0, -row.r_prime), (params.k, row.sigma)])
        if order_key(first, params) < order_key(second, params):
            first, second = second, first
        out.append(Binomial(first, second, "Row"))
    return out


def tilde_binomials(table: EuclidTable, params: AagParams) -> list[Binomial]:
    """The consecutive-pair kernel elements, one per pair i = 0..m."""
    k = params.k
    n = k + 2
    out = []
    for i in range(len(table.rows) - 1):
        sigma, rho, _ell, r_tilde = tilde_for_pair(table, i, k, params.h)
        dp = table.rows[i + 1].p - table.rows[i].p
        out.append(
            Binomial(
                _l_shape(n, rho, [(k, sigma), (k + 1, dp)]),
                _mono(n, [(0, r_tilde)]),
                "Tilde",
            )
        )
    return out


def _plane_divisor(m: Monomial, k: int) -> tuple[int, int, int] | None:
    """(i0, κ, ζ) if the monomial is L_{i0} x_k^κ x_{k+1}^ζ, else None.

    Only such leads can divide a plane monomial: anything with x0, with
    two distinct unit variables, or with a squared x_i (i < k) cannot.
    """
    if m.exponents[0] != 0:
        return None
    i0 = 0
    for j in range(1, k):
        e = m.exponents[j]
        if e == 0:
            continue
        if e > 1 or i0:
            return None
        i0 = j
    return i0, m.exponents[k], m.exponents[k + 1]


def certify_basis(
    params: AagParams,
    table: EuclidTable,
    basis: list[Binomial] | None = None,
) -> bool:
    """Certify that A∪B∪C∪D is a Groebner basis of the defining ideal.

    Returns True iff every element kernel-checks with the constructed
    monomial as its true leading term, |A| = k(k-1)/2, and the standard
    plane monomials match the Apery staircase exactly (interior equality
    plus both boundary strips fully non-standard, which propagates to the
    whole quadrant by divisibility).  ``basis`` overrides the generating
    set, which lets tests confirm that corrupted sets fail.
    """
    if not table.hypothesis_ok:
        raise HypothesisViolated("certification requires the staircase hypothesis")
    k = params.k
    if basis is None:
        fam_a = family_A(params)
        if len(fam_a) != k * (k - 1) // 2:
            return False
        basis = fam_a + families_BCD(params, table)
    for b in basis:
        if not kernel_check(b, params):
            return False
        if order_key(b.lead, params) <= order_key(b.tail, params):
            return False

    piv, nxt = table.pivot, table.after_pivot
    split = piv.s - nxt.s
    y_max = piv.s + k          # exclusive
    z_max = nxt.p + 1          # exclusive; includes the z = p_{mu+1} strip
    ys = np.arange(y_max)
    i_arr = (ys % k)[:, None]
    alpha = (ys // k)[:, None]
    zs = np.arange(z_max)[None, :]
    nonstandard = np.zeros((y_max, z_max), dtype=bool)
    for b in basis:
        shape = _plane_divisor(b.lead, k)
        if shape is None:
            continue
        i0, kappa, zeta = shape
        i_ok = (i_arr == i0) if i0 else True
        nonstandard |= i_ok & (alpha >= kappa) & (zs >= zeta)

    # Boundary strips must be entirely non-standard.
    if not nonstandard[piv.s :, :].all():
        return False
    if not nonstandard[:, nxt.p].all():
        return False
    # Interior standard cells must be exactly the two Apery rectangles.
    interior = ~nonstandard[: piv.s, : nxt.p]
    expected = np.where(
        ys[: piv.s, None] < split, zs[:, : nxt.p] < nxt.p, zs[:, : nxt.p] < nxt.p - piv.p
    )
    if not (interior == expected).all():
        return False
    return int(interior.sum()) == params.a
