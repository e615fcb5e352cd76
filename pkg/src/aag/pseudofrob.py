"""Pseudo-Frobenius monomial families from the Euclidean table pivot data.

The pseudo-Frobenius numbers of the semigroup are the integers ``f`` outside
the semigroup with ``f + s`` inside it for every nonzero element ``s``.  Under
the standing hypothesis (``r'_mu >= h`` or ``rho_mu = 0``) they are the images
``phi(M) - a`` of an explicitly constructible set of standard monomials, split
into two families by the exponent of the last variable:

* ``pf1``: exponent ``p_{mu+1} - 1``,
* ``pf2``: exponent ``p_{mu+1} - p_mu - 1``.

Each family is produced by a flat decision table keyed on the pivot pair of
the Euclidean table.  Every arm carries a clause identifier (``1a`` .. ``2d``
for ``pf1``, ``3`` .. ``7ii`` for ``pf2``) that is recorded in the result
trace, so a computed answer can always be traced back to the exact guard that
produced it.  A reachable configuration that matches no arm raises
``InternalDispatchGap`` -- by design that error is never expected to fire.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AagParams, Monomial, phi
from .errors import (
    DuplicatePfValue,
    HypothesisViolated,
    InternalDispatchGap,
    MalformedPf,
    NonsenseInput,
)
from .euclid import EuclidTable


@dataclass(frozen=True, slots=True)
class PfResult:
    """Pseudo-Frobenius monomials, their integer values, and the dispatch trace.

    ``pf1`` holds the monomials whose last-variable exponent is
    ``p_{mu+1} - 1``; ``pf2`` those with exponent ``p_{mu+1} - p_mu - 1``.
    ``pf_numbers`` is the sorted list of ``phi(M) - a`` over both families,
    ``type`` its cardinality, and ``frob_monomial`` the monomial of maximal
    weight (its value is the Frobenius number).  ``case_trace`` is the
    deterministic record of which decision-table clause fired for each
    family, formatted like ``"PF1: clause 2b; PF2: clause 7i"``.
    """

    pf1: tuple[Monomial, ...]
    pf2: tuple[Monomial, ...]
    pf_numbers: tuple[int, ...]
    type: int
    frob_monomial: Monomial
    case_trace: str


def _family_member(nvars: int, k: int, unit: int, k_exp: int, z_exp: int) -> Monomial:
    """Build ``x_unit * x_k^k_exp * x_{k+1}^z_exp`` with additive exponents.

    ``unit = 0`` means no unit factor; ``unit = k`` folds into the ``x_k``
    power.  Exponents are accumulated, so the ``unit = k`` case simply raises
    the ``x_k`` exponent by one.
    """
    exponents = [0] * nvars
    if unit:
        exponents[unit] += 1
    exponents[k] += k_exp
    exponents[k + 1] += z_exp
    return Monomial(tuple(exponents))


def _pf1_dispatch(p: AagParams, t: EuclidTable) -> tuple[list[Monomial], str]:
    """Decision table for the ``p_{mu+1} - 1`` family (clauses 1a-1e, 2a-2d)."""
    k = p.k
    nvars = k + 2
    nxt = t.after_pivot
    z = nxt.p - 1
    rho1 = nxt.rho
    t_sigma, t_rho = t.tilde_sigma, t.tilde_rho

    def run(lo: int, hi: int, base: int) -> list[Monomial]:
        return [_family_member(nvars, k, i, base, z) for i in range(lo, hi + 1)]

    if nxt.r_prime == 0:
        if rho1 == 0:
            return [], "1a"
        if t_rho == 0:
            return run(1, k - rho1, t_sigma - 1), "1b"
        if t_rho == 1 and t_sigma == 0:
            return [], "1c"
        if t_rho == 1:
            return run(1, k - rho1, t_sigma - 1), "1d"
        if t_rho > 1:
            return run(1, min(t_rho - 1, k - rho1), t_sigma), "1e"
    elif nxt.r_prime < 0:
        if t_rho == 0:
            return run(1, k - 1, t_sigma - 1), "2a"
        if t_rho == 1 and t_sigma == 0:
            return [_family_member(nvars, k, 0, 0, z)], "2b"
        if t_rho == 1:
            return run(1, k, t_sigma - 1), "2c"
        if t_rho > 1:
            return run(1, t_rho - 1, t_sigma), "2d"
    raise InternalDispatchGap(
        "pf1 dispatch matched no clause: "
        f"r'_(mu+1)={nxt.r_prime}, rho_(mu+1)={rho1}, "
        f"tilde_rho={t_rho}, tilde_sigma={t_sigma}"
    )


def _pf2_dispatch(p: AagParams, t: EuclidTable) -> tuple[list[Monomial], str]:
    """Decision table for the ``p_{mu+1} - p_mu - 1`` family (clauses 3-7ii)."""
    k, h = p.k, p.h
    nvars = k + 2
    piv, nxt = t.pivot, t.after_pivot
    z = nxt.p - piv.p - 1
    s1 = nxt.s
    drop = piv.s - nxt.s

    def run(lo: int, hi: int, base: int) -> list[Monomial]:
        return [_family_member(nvars, k, i, base, z) for i in range(lo, hi + 1)]

    if s1 == 0:
        return [], "3"
    if piv.rho == 0:
        if s1 >= k - 1:
            return run(1, k - 1, piv.sigma - 1), "4i"
        return run(t.tilde_rho, k - 1, piv.sigma - 1), "4ii"
    if piv.rho == 1:
        if piv.r_prime > h:
            if s1 >= k:
                return run(1, k, piv.sigma - 1), "5i"
            if s1 > 1:
                return run(t.tilde_rho, k, piv.sigma - 1), "5ii"
            if s1 == 1:
                return [_family_member(nvars, k, 0, piv.sigma, z)], "5iii"
        elif piv.r_prime == h:
            if drop == 1:
                return run(1, k, piv.sigma - 1), "6i"
            if 1 < drop <= piv.s - k:
                return [_family_member(nvars, k, 1, piv.sigma - 1, z)], "6ii"
            if drop > piv.s - k:
                return [], "6iii"
    elif piv.rho > 1:
        if s1 >= piv.rho - 1:
            return run(1, piv.rho - 1, piv.sigma), "7i"
        return run(t.tilde_rho, piv.rho - 1, piv.sigma), "7ii"
    raise InternalDispatchGap(
        "pf2 dispatch matched no clause: "
        f"s_(mu+1)={s1}, rho_mu={piv.rho}, r'_mu={piv.r_prime}, h={h}, "
        f"s_mu={piv.s}"
    )


def _values_and_count(
    pf1: tuple[Monomial, ...] | list[Monomial],
    pf2: tuple[Monomial, ...] | list[Monomial],
    p: AagParams,
) -> tuple[list[int], int]:
    """Sorted ``phi(M) - a`` values over both families, with collision guard.

    The weight map is injective on the pseudo-Frobenius monomials, so a
    duplicate value can only mean a dispatch bug; it raises
    ``DuplicatePfValue`` rather than silently deduplicating.
    """
    values = sorted(phi(m, p) - p.a for m in (*pf1, *pf2))
    count = len(values)
    if len(set(values)) != count:
        raise DuplicatePfValue(
            f"pseudo-Frobenius values collide: {values} for a={p.a}, d={p.d}, "
            f"h={p.h}, k={p.k}, c={p.c}"
        )
    return values, count


def pf_numbers_and_type(r: PfResult, p: AagParams) -> tuple[list[int], int]:
    """Recompute the sorted pseudo-Frobenius set and the type from a result.

    Works directly from the monomials in ``r``, independently of the cached
    ``pf_numbers``/``type`` fields, so it doubles as a consistency check.
    """
    return _values_and_count(r.pf1, r.pf2, p)


def pf_tilde(p: AagParams, t: EuclidTable) -> PfResult:
    """Compute both pseudo-Frobenius monomial families from the pivot data.

    Requires ``k >= 2`` and the standing hypothesis (``r'_mu >= h`` or
    ``rho_mu = 0``); outside the hypothesis the closed-form families are not
    valid and the brute-force oracle is the only route.
    """
    if p.k < 2:
        raise NonsenseInput(
            f"the pseudo-Frobenius decision table requires k >= 2, got k={p.k}"
        )
    if not t.hypothesis_ok:
        raise HypothesisViolated(
            "pseudo-Frobenius families need r'_mu >= h or rho_mu = 0; "
            f"pivot row has r'_mu={t.pivot.r_prime}, rho_mu={t.pivot.rho}, h={p.h}"
        )

    pf1, clause1 = _pf1_dispatch(p, t)
    pf2, clause2 = _pf2_dispatch(p, t)
    if not pf1 and not pf2:
        raise MalformedPf(
            "both pseudo-Frobenius families came out empty "
            f"(clauses {clause1}/{clause2}); the type is always >= 1"
        )

    values, count = _values_and_count(pf1, pf2, p)
    frob_monomial = max((*pf1, *pf2), key=lambda m: phi(m, p))
    trace = f"PF1: clause {clause1}; PF2: clause {clause2}"
    return PfResult(
        pf1=tuple(pf1),
        pf2=tuple(pf2),
        pf_numbers=tuple(values),
        type=count,
        frob_monomial=frob_monomial,
        case_trace=trace,
    )
