"""Symmetric and almost-symmetric classification with closed-form families.

A validated parameter tuple is classified from its Euclidean table alone:

* ``Symmetric``      -- exactly one pseudo-Frobenius number,
* ``AlmostSymmetric``-- type >= 2 and the mirror pairing f_i + f_{t-i} = F
  holds across the sorted pseudo-Frobenius list,
* ``NeitherSpecial`` -- everything else the closed forms can handle,
* ``OracleOnly``     -- the standing hypothesis fails or k < 3, so only the
  brute-force oracle facts (type, Frobenius number) are reported.

Symmetric and almost-symmetric semigroups belong to closed-form families,
each fingerprinted by the shape of the two table rows around the pivot.  The
family id strings (``"Thm4.1-case1"`` .. ``"Thm5.4-(v)"``) are the stable
output vocabulary of this package: downstream consumers match on them, so
they are data, not prose.

Two routes produce a classification:

* :func:`classify` -- the full route: build the table, compute the
  pseudo-Frobenius families, run the pairing check, then match the pivot
  rows against each family fingerprint.
* :func:`fast_path` -- the quadratic route: for each candidate family,
  solve its quadratic (or linear) formula for the column count ``p`` in
  exact integer arithmetic, back-solve ``sigma`` and ``r``, and accept only
  a perfect-square discriminant with every family constraint and the exact
  ``c``-identity satisfied.  The two routes agree everywhere (tested); the
  fast route exists because it needs only a handful of integer operations.

Both routes classify the *raw* presentation: parameters that were rewritten
during validation (d < 0, h = 1) are converted back before matching, since
the family tables are stated for the original generator tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import oracle
from .core import AagParams, validate_params
from .errors import AmbiguousFastPath, FamilyConstraintViolated, MalformedPf
from .euclid import EuclidTable, build_table
from .pseudofrob import pf_tilde
from .staircase import frobenius

VERDICT_SYMMETRIC = "Symmetric"
VERDICT_ALMOST_SYMMETRIC = "AlmostSymmetric"
VERDICT_NEITHER = "NeitherSpecial"
VERDICT_ORACLE_ONLY = "OracleOnly"

SYMMETRIC_FAMILIES = (
    "Thm4.1-case1",
    "Thm4.1-case2",
    "Thm4.1-case3",
    "Thm4.1-case4",
)
ALMOST_SYMMETRIC_FAMILIES = (
    "Thm5.1",
    "Thm5.2",
    "Thm5.3-(i)",
    "Thm5.3-(ii)",
    "Thm5.4-(i)",
    "Thm5.4-(ii)",
    "Thm5.4-(iii)",
    "Thm5.4-(iv)",
    "Thm5.4-(v)",
)
ALL_FAMILIES = SYMMETRIC_FAMILIES + ALMOST_SYMMETRIC_FAMILIES


@dataclass(frozen=True, slots=True)
class Classification:
    """Outcome of classifying one parameter tuple.

    ``solved`` holds the family parameters recovered from the table (keys
    among ``p``, ``p_prime``, ``sigma``, ``sigma_prime``, ``r``, ``r_hat``,
    ``l``); it is empty when no family matched or the verdict carries no
    family.  ``frobenius`` and ``type`` are always the true values (closed
    form on the main routes, oracle on the ``OracleOnly`` route).
    """

    verdict: str
    family: str | None
    solved: dict[str, int] = field(default_factory=dict)
    type: int = 0
    frobenius: int = 0
    fast_path_used: bool = False


def nari_check(pf_numbers: list[int], frob: int) -> bool:
    """Mirror-pairing test on a sorted pseudo-Frobenius list.

    True iff the list is a singleton, or f_i + f_{t-i} = F for all
    i = 1..t-1 (1-based over the first t-1 entries).  The last entry must be
    F itself; anything else indicates a malformed input.
    """
    if not pf_numbers:
        raise MalformedPf("empty pseudo-Frobenius list")
    if pf_numbers[-1] != frob:
        raise MalformedPf(
            f"last pseudo-Frobenius number {pf_numbers[-1]} is not the "
            f"Frobenius number {frob}"
        )
    t = len(pf_numbers)
    return all(pf_numbers[i - 1] + pf_numbers[t - i - 1] == frob for i in range(1, t))


def _raw_presentation(p: AagParams) -> AagParams:
    """Undo the d < 0, h = 1 rewrite: families are fingerprinted on the raw tuple."""
    if not p.normalized:
        return p
    return validate_params(
        p.a + p.k * p.d, -p.d, p.h, p.k, p.c, normalize=False
    )


# ---------------------------------------------------------------------------
# Family fingerprints: match the two rows around the pivot.
# ---------------------------------------------------------------------------


def _match_family(family: str, p: AagParams, t: EuclidTable) -> dict[str, int] | None:
    """Return the solved family parameters if the pivot rows fit ``family``."""
    k, h = p.k, p.h
    piv, nxt = t.pivot, t.after_pivot
    drop = piv.s - nxt.s

    if family == "Thm4.1-case1":
        if nxt.s == 0 and piv.rho == 2:
            return {
                "sigma": piv.sigma,
                "p": piv.p,
                "p_prime": nxt.p,
                "r": piv.r,
                "r_hat": nxt.r,
            }
    elif family == "Thm4.1-case2":
        if (
            piv.rho == 2
            and nxt.s > 0
            and nxt.rho == 0
            and nxt.r_prime == 0
            and piv.sigma >= nxt.sigma >= 2
        ):
            return {
                "sigma": piv.sigma,
                "sigma_prime": nxt.sigma,
                "p": piv.p,
                "p_prime": nxt.p,
                "r": piv.r,
            }
    elif family == "Thm4.1-case3":
        if piv.rho == 2 and drop == 1 and nxt.r_prime == 0:
            return {
                "sigma": piv.sigma,
                "p": piv.p,
                "p_prime": nxt.p,
                "r": piv.r,
            }
    elif family == "Thm4.1-case4":
        if piv.rho == 1 and piv.r_prime == h and nxt.s == k - 1 and nxt.r_prime < 0:
            return {
                "sigma": piv.sigma,
                "p": piv.p,
                "p_prime": nxt.p,
                "r_hat": nxt.r,
            }
    elif family == "Thm5.1":
        if (
            h == 1
            and k % 2 == 1
            and piv.s == k + 1
            and nxt.s == k
            and piv.p == 1
            and nxt.p == 2
            and piv.r >= 0
            and nxt.r == -2
        ):
            return {}
    elif family == "Thm5.2":
        if (
            h >= 2
            and piv.rho == 1
            and piv.r_prime == h
            and piv.p == 1
            and nxt.rho == 0
            and nxt.sigma == piv.sigma
            and nxt.r_prime == -1
        ):
            return {"sigma": piv.sigma, "p": nxt.p}
    elif family == "Thm5.3-(i)":
        if (
            h == 1
            and piv.rho == 2
            and piv.p == 1
            and piv.sigma >= 2
            and nxt.r_prime == 0
            and nxt.rho >= 1
            and nxt.sigma == piv.sigma - 1
        ):
            return {"l": nxt.rho, "sigma": piv.sigma, "p": nxt.p, "r": piv.r}
    elif family == "Thm5.3-(ii)":
        if piv.rho == 2 and piv.p == 1 and drop == 1 and nxt.r_prime == -1:
            return {"sigma": piv.sigma, "p": nxt.p, "r": piv.r}
    elif family == "Thm5.4-(i)":
        if (
            h == 1
            and piv.rho >= 3
            and piv.r_prime == 1
            and nxt.s == piv.rho - 2
            and nxt.p == piv.p + 1
            and nxt.r_prime < 0
        ):
            return {"l": piv.rho - 2, "sigma": piv.sigma, "p": nxt.p, "r": nxt.r}
    elif family == "Thm5.4-(ii)":
        if (
            piv.rho == 0
            and piv.r_prime == 1
            and piv.sigma >= 2
            and nxt.s == k - 2
            and nxt.p == piv.p + 1
            and nxt.r_prime < 0
        ):
            return {"sigma": piv.sigma, "p": nxt.p, "r": nxt.r}
    elif family == "Thm5.4-(iii)":
        if (
            piv.rho == 1
            and piv.r_prime == h + 1
            and nxt.s == k - 1
            and nxt.p == piv.p + 1
            and nxt.r_prime < 0
        ):
            return {"sigma": piv.sigma, "p": nxt.p, "r": nxt.r}
    elif family == "Thm5.4-(iv)":
        if (
            h == 1
            and piv.s == k + 1
            and piv.r == -1
            and nxt.s == k
            and nxt.p == piv.p + 1
            and nxt.r_prime < 0
        ):
            return {"p": piv.p, "r": nxt.r}
    elif family == "Thm5.4-(v)":
        if (
            h == 1
            and piv.rho == 1
            and piv.r_prime == 1
            and piv.sigma >= 2
            and nxt.s == 2 * k - 1
            and nxt.p == piv.p + 1
            and nxt.r_prime < 0
        ):
            return {"sigma": piv.sigma, "p": nxt.p, "r": nxt.r}
    else:
        raise FamilyConstraintViolated(f"unknown family id {family!r}")
    return None


def match_families(
    p: AagParams, t: EuclidTable, candidates: tuple[str, ...]
) -> list[tuple[str, dict[str, int]]]:
    """All fingerprint matches among ``candidates``, in canonical order."""
    hits = []
    for family in candidates:
        solved = _match_family(family, p, t)
        if solved is not None:
            hits.append((family, solved))
    return hits


# ---------------------------------------------------------------------------
# Family metadata: type and Frobenius formulas.
# ---------------------------------------------------------------------------


def family_type(family: str, solved: dict[str, int], p: AagParams) -> int:
    """The family's claimed type, from its closed-form t-formula."""
    k = p.k
    if family in SYMMETRIC_FAMILIES:
        return 1
    if family in ("Thm5.1", "Thm5.2", "Thm5.4-(iv)"):
        return k + 1
    if family == "Thm5.3-(i)":
        return k - solved["l"] + 1
    if family in ("Thm5.3-(ii)", "Thm5.4-(v)"):
        return 2
    if family == "Thm5.4-(i)":
        return solved["l"] + 1
    if family == "Thm5.4-(ii)":
        return k - 1
    if family == "Thm5.4-(iii)":
        return k
    raise FamilyConstraintViolated(f"unknown family id {family!r}")


def family_frobenius(family: str, solved: dict[str, int], p: AagParams) -> int:
    """The family's claimed Frobenius number, from its closed-form F-formula.

    Each formula is the weight of the family's maximal pseudo-Frobenius
    monomial minus ``a`` (with the two special literal forms ``F = k d`` and
    ``F = 3 a_1 - 2 a_2 - a_k`` kept as stated for their families).
    """
    a, d, h, k, c = p.a, p.d, p.h, p.k, p.c
    a1 = h * a + d
    a2 = h * a + 2 * d
    ak = h * a + k * d
    if family == "Thm4.1-case1":
        return a1 + solved["sigma"] * ak + c * (solved["p_prime"] - 1) - a
    if family in ("Thm4.1-case2", "Thm4.1-case3"):
        return (
            a1
            + solved["sigma"] * ak
            + c * (solved["p_prime"] - solved["p"] - 1)
            - a
        )
    if family == "Thm4.1-case4":
        return a1 + (solved["sigma"] - 1) * ak + c * (solved["p_prime"] - 1) - a
    if family == "Thm5.1":
        return k * d
    if family == "Thm5.2":
        return 3 * a1 - 2 * a2 - ak
    if family in ("Thm5.3-(i)", "Thm5.3-(ii)"):
        return a1 + solved["sigma"] * ak + (solved["p"] - 2) * c - a
    if family == "Thm5.4-(i)":
        return a1 + solved["sigma"] * ak + (solved["p"] - 1) * c - a
    if family in ("Thm5.4-(ii)", "Thm5.4-(iii)"):
        return a1 + (solved["sigma"] - 1) * ak + (solved["p"] - 1) * c - a
    if family == "Thm5.4-(iv)":
        return solved["p"] * c - a
    if family == "Thm5.4-(v)":
        return a1 + (solved["sigma"] - 2) * ak + (solved["p"] - 1) * c - a
    raise FamilyConstraintViolated(f"unknown family id {family!r}")


# ---------------------------------------------------------------------------
# Family synthesis: (a, d, c) from family parameters.
# ---------------------------------------------------------------------------


def _require(condition: bool, family: str, message: str) -> None:
    if not condition:
        raise FamilyConstraintViolated(f"{family}: {message}")


def family_generate(family: str, params: dict[str, int]) -> AagParams:
    """Construct a validated parameter tuple from a family's formulas.

    ``params`` uses the same keys as ``Classification.solved`` plus ``h``
    and ``k`` where the family does not pin them.  Side conditions are the
    families' stated ones; violations raise ``FamilyConstraintViolated``.
    A synthesized (a, d, c) can still fail validation (gcd, minimality,
    d = 0) -- those errors propagate so callers can report them.

    The family conclusions hold only under the package's standing
    hypothesis on the pivot row, so parameters whose synthesized table
    violates it are rejected as constraint violations too (the stated
    letter conditions do not always force it when h >= 2, and the claims
    genuinely fail on some tuples outside it).
    """
    g = params.get

    if family == "Thm4.1-case1":
        h, k = g("h", 1), params["k"]
        sigma, pp, p_prime = params["sigma"], params["p"], params["p_prime"]
        r, r_hat = params["r"], params["r_hat"]
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(1 <= pp < p_prime, family, f"need 1 <= p < p_prime, got {pp}, {p_prime}")
        _require(r_hat < -1, family, f"r_hat must be < -1, got {r_hat}")
        _require(math.gcd(p_prime, r_hat) == 1, family, "gcd(p_prime, r_hat) must be 1")
        _require(r + h * sigma > 0, family, f"need r + h*sigma > 0, got {r + h * sigma}")
        a = (sigma * k + 2) * p_prime
        d = p_prime * r - pp * r_hat
        c = -(sigma * k + 2) * r_hat
    elif family == "Thm4.1-case2":
        h, k = g("h", 1), params["k"]
        sigma, sigma_prime = params["sigma"], params["sigma_prime"]
        pp, p_prime, r = params["p"], params["p_prime"], params["r"]
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= sigma_prime >= 2, family, "need sigma >= sigma_prime >= 2")
        _require(p_prime > pp > 0, family, "need p_prime > p > 0")
        _require(r + h * (sigma + 1) > 0, family, "need r + h*(sigma+1) > 0")
        a = (sigma * k + 2) * p_prime - sigma_prime * k * pp
        d = p_prime * r + pp * h * sigma_prime
        c = sigma_prime * k * r + (sigma * k + 2) * sigma_prime * h
    elif family == "Thm4.1-case3":
        h, k = g("h", 1), params["k"]
        sigma, pp, p_prime, r = params["sigma"], params["p"], params["p_prime"], params["r"]
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(p_prime > pp > 0, family, "need p_prime > p > 0")
        _require(r + h * (sigma + 1) > 0, family, "need r + h*(sigma+1) > 0")
        a = (sigma * k + 2) * p_prime - (sigma * k + 1) * pp
        d = p_prime * r + pp * h * (sigma + 1)
        c = (sigma * k + 1) * r + (sigma * k + 2) * (sigma + 1) * h
    elif family == "Thm4.1-case4":
        h, k = g("h", 1), params["k"]
        sigma, pp, p_prime, r_hat = params["sigma"], params["p"], params["p_prime"], params["r_hat"]
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(p_prime > pp > 0, family, "need p_prime > p > 0")
        _require(r_hat < -h, family, f"need r_hat < -h, got {r_hat}")
        a = (sigma * k + 1) * p_prime - (k - 1) * pp
        d = -p_prime * h * sigma - pp * r_hat
        c = -(k - 1) * h * sigma - (sigma * k + 1) * r_hat
    elif family == "Thm5.1":
        h, k, d = g("h", 1), params["k"], params["d"]
        _require(h == 1, family, "requires h = 1")
        _require(k >= 3 and k % 2 == 1, family, f"k must be odd and >= 3, got {k}")
        _require(d >= 2 and d % 2 == 0, family, f"d must be a positive even number, got {d}")
        a = k + 2
        c = a + (d // 2) * k
    elif family == "Thm5.2":
        h, k = params["h"], params["k"]
        sigma, pp = params["sigma"], params["p"]
        _require(h >= 2, family, f"requires h >= 2, got {h}")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(pp >= 2, family, f"p must be >= 2, got {pp}")
        a = (sigma * k + 1) * pp - sigma * k
        d = 1 - h * sigma * (pp - 1)
        c = h * sigma + sigma * k + 1
    elif family == "Thm5.3-(i)":
        h, k = g("h", 1), params["k"]
        l, sigma, pp, r = params["l"], params["sigma"], params["p"], params["r"]
        _require(h == 1, family, "requires h = 1")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(1 <= l <= k - 1, family, f"need 1 <= l <= k-1, got l={l}")
        _require(sigma >= 2 and pp >= 2, family, "need sigma >= 2 and p >= 2")
        _require(r > -(sigma + 1), family, f"need r > -(sigma+1), got {r}")
        a = (sigma * k + 2) * pp - ((sigma - 1) * k + l)
        d = pp * r + sigma
        c = ((sigma - 1) * k + l) * r + (sigma * k + 2) * sigma
    elif family == "Thm5.3-(ii)":
        h, k = params["h"], params["k"]
        sigma, pp, r = params["sigma"], params["p"], params["r"]
        _require(h >= 1, family, f"requires h >= 1, got {h}")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1 and pp >= 2, family, "need sigma >= 1 and p >= 2")
        _require(r > -h * (sigma + 1) - 1, family, f"need r > -h*(sigma+1)-1, got {r}")
        a = (sigma * k + 2) * pp - (sigma * k + 1)
        d = pp * r + h * (sigma + 1) + 1
        c = (sigma * k + 1) * r + (sigma * k + 2) * (h * (sigma + 1) + 1)
    elif family == "Thm5.4-(i)":
        h, k = g("h", 1), params["k"]
        l, sigma, pp, r = params["l"], params["sigma"], params["p"], params["r"]
        q = pp - 1
        _require(h == 1, family, "requires h = 1")
        _require(k >= 4, family, f"requires k >= 4, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(1 <= l <= k - 3, family, f"need 1 <= l <= k-3, got l={l}")
        _require(q >= 1, family, f"p must be >= 2, got {pp}")
        _require(r <= -2, family, f"need r <= -2, got {r}")
        a = (sigma * k + l + 2) * pp - l * q
        d = -pp * sigma - q * r
        c = -l * sigma - (sigma * k + l + 2) * r
    elif family == "Thm5.4-(ii)":
        h, k = params["h"], params["k"]
        sigma, pp, r = params["sigma"], params["p"], params["r"]
        q = pp - 1
        _require(h >= 1, family, f"requires h >= 1, got {h}")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 2, family, f"sigma must be >= 2, got {sigma}")
        _require(q >= 1, family, f"p must be >= 2, got {pp}")
        _require(r < -h, family, f"need r < -h, got {r}")
        a = sigma * k * pp - (k - 2) * q
        d = (1 - h * sigma) * pp - q * r
        c = (k - 2) * (1 - h * sigma) - sigma * k * r
    elif family == "Thm5.4-(iii)":
        h, k = params["h"], params["k"]
        sigma, pp, r = params["sigma"], params["p"], params["r"]
        q = pp - 1
        _require(h >= 1, family, f"requires h >= 1, got {h}")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 1, family, f"sigma must be >= 1, got {sigma}")
        _require(q >= 1, family, f"p must be >= 2, got {pp}")
        _require(r < -h, family, f"need r < -h, got {r}")
        a = (sigma * k + 1) * pp - (k - 1) * q
        d = (1 - h * sigma) * pp - q * r
        c = (k - 1) * (1 - h * sigma) - (sigma * k + 1) * r
    elif family == "Thm5.4-(iv)":
        h, k = g("h", 1), params["k"]
        pp, r = params["p"], params["r"]
        _require(h == 1, family, "requires h = 1")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(pp >= 1, family, f"p must be >= 1, got {pp}")
        _require(r < -1, family, f"need r < -1, got {r}")
        a = k + pp + 1
        d = -(pp + 1) - pp * r
        c = -k - (k + 1) * r
    elif family == "Thm5.4-(v)":
        h, k = g("h", 1), params["k"]
        sigma, pp, r = params["sigma"], params["p"], params["r"]
        q = pp - 1
        _require(h == 1, family, "requires h = 1")
        _require(k >= 3, family, f"requires k >= 3, got {k}")
        _require(sigma >= 2, family, f"sigma must be >= 2, got {sigma}")
        _require(q >= 1, family, f"p must be >= 2, got {pp}")
        _require(r <= -3, family, f"need r <= -3, got {r}")
        a = (sigma * k + 1) * pp - (2 * k - 1) * q
        d = -pp * sigma - q * r
        c = -sigma * (2 * k - 1) - (sigma * k + 1) * r
    else:
        raise FamilyConstraintViolated(f"unknown family id {family!r}")

    out = validate_params(a, d, h, k, c, normalize=False)
    if not build_table(out).hypothesis_ok:
        raise FamilyConstraintViolated(
            f"{family}: parameters {params} synthesize a table that violates "
            f"the standing pivot hypothesis (a={a}, d={d}, c={c})"
        )
    return out


# ---------------------------------------------------------------------------
# Full classification route.
# ---------------------------------------------------------------------------


def classify(p: AagParams) -> Classification:
    """Classify a validated tuple via the Euclidean table and the families."""
    p = _raw_presentation(p)
    t = build_table(p)
    if p.k < 3 or not t.hypothesis_ok:
        report = oracle.oracle_report(list(p.generators))
        return Classification(
            verdict=VERDICT_ORACLE_ONLY,
            family=None,
            solved={},
            type=report.type,
            frobenius=report.frobenius,
            fast_path_used=False,
        )

    result = pf_tilde(p, t)
    frob = frobenius(p, t)
    if result.type == 1:
        verdict, candidates = VERDICT_SYMMETRIC, SYMMETRIC_FAMILIES
    elif nari_check(list(result.pf_numbers), frob):
        verdict, candidates = VERDICT_ALMOST_SYMMETRIC, ALMOST_SYMMETRIC_FAMILIES
    else:
        return Classification(
            verdict=VERDICT_NEITHER,
            family=None,
            solved={},
            type=result.type,
            frobenius=frob,
            fast_path_used=False,
        )

    hits = match_families(p, t, candidates)
    family, solved = hits[0] if hits else (None, {})
    return Classification(
        verdict=verdict,
        family=family,
        solved=solved,
        type=result.type,
        frobenius=frob,
        fast_path_used=False,
    )


# ---------------------------------------------------------------------------
# Quadratic fast path.
# ---------------------------------------------------------------------------


def _integer_roots(kc: int, b: int, constant: int) -> list[int]:
    """Integer roots of kc*p^2 - b*p - constant = 0 with perfect-square test.

    Returns the integer roots among both branches (the written "+" branch
    first).  A negative or non-square discriminant yields no roots.
    """
    disc = b * b + 4 * kc * constant
    if disc < 0:
        return []
    root = math.isqrt(disc)
    if root * root != disc:
        return []
    out = []
    for numerator in (b + root, b - root):
        if numerator % (2 * kc) == 0:
            value = numerator // (2 * kc)
            if value not in out:
                out.append(value)
    return out


def _fast_candidates(p: AagParams) -> list[tuple[str, dict[str, int]]]:
    """All fully-consistent family hits from the quadratic/linear solves."""
    a, d, h, k, c = p.a, p.d, p.h, p.k, p.c
    a1 = h * a + d
    ak = h * a + k * d
    hits: list[tuple[str, dict[str, int]]] = []

    def add(family: str, solved: dict[str, int]) -> None:
        if (family, solved) not in hits:
            hits.append((family, solved))

    # F = k*d family: everything is pinned by (a, d, c) directly.
    if h == 1 and k % 2 == 1 and d > 0 and d % 2 == 0:
        if a == k + 2 and c == a + (d // 2) * k:
            add("Thm5.1", {})

    # F = 3a1 - 2a2 - ak family: sigma and p recovered linearly.
    if h >= 2 and d < 0:
        if (c - 1) % (h + k) == 0:
            sigma = (c - 1) // (h + k)
            if sigma >= 1 and (1 - d) % (h * sigma) == 0:
                pp = 1 + (1 - d) // (h * sigma)
                if pp >= 2 and a == (sigma * k + 1) * pp - sigma * k:
                    add("Thm5.2", {"sigma": sigma, "p": pp})

    # Two-column family with t = 2: quadratic in p.
    for pp in _integer_roots(
        k * c, k * (c + a + a1) - 2 * ak, ak * (a + 1) - k * (a + a1)
    ):
        if pp < 2:
            continue
        if (a + 1 - 2 * pp) % (k * (pp - 1)) != 0:
            continue
        sigma = (a + 1 - 2 * pp) // (k * (pp - 1))
        if sigma < 1:
            continue
        if (d - h * (sigma + 1) - 1) % pp != 0:
            continue
        r = (d - h * (sigma + 1) - 1) // pp
        if r < -h * sigma:
            continue
        if c == (sigma * k + 1) * r + (sigma * k + 2) * (h * (sigma + 1) + 1):
            add("Thm5.3-(ii)", {"sigma": sigma, "p": pp, "r": r})

    # l-indexed families: one quadratic per admissible l.
    if h == 1:
        for l in range(1, k):
            al = a + l * d
            for pp in _integer_roots(
                k * c, k * (c + al - ak) - 2 * ak, ak * (a + l) - k * al
            ):
                if pp < 2:
                    continue
                if (a - 2 * pp - k + l) % (k * (pp - 1)) != 0:
                    continue
                sigma = (a - 2 * pp - k + l) // (k * (pp - 1))
                if sigma < 2:
                    continue
                if (d - sigma) % pp != 0:
                    continue
                r = (d - sigma) // pp
                if not -(sigma + 1) < r:
                    continue
                if c == ((sigma - 1) * k + l) * r + (sigma * k + 2) * sigma:
                    add("Thm5.3-(i)", {"l": l, "sigma": sigma, "p": pp, "r": r})

        for l in range(1, k - 2):
            al2 = a + (l + 2) * d
            for pp in _integer_roots(
                k * c, k * (c - a + al2) - 2 * ak, ak * (a - l)
            ):
                if pp < 2:
                    continue
                if (a - 2 * pp - l) % (k * pp) != 0:
                    continue
                sigma = (a - 2 * pp - l) // (k * pp)
                if sigma < 1:
                    continue
                if (-d - pp * sigma) % (pp - 1) != 0:
                    continue
                r = (-d - pp * sigma) // (pp - 1)
                if r >= -1:
                    continue
                if c == -l * sigma - (sigma * k + l + 2) * r:
                    add("Thm5.4-(i)", {"l": l, "sigma": sigma, "p": pp, "r": r})

    for pp in _integer_roots(
        k * c, k * (c - a + ak) - 2 * ak, ak * (a - k + 2)
    ):
        if pp < 2:
            continue
        if (a + (k - 2) * (pp - 1)) % (k * pp) != 0:
            continue
        sigma = (a + (k - 2) * (pp - 1)) // (k * pp)
        if sigma < 2:
            continue
        if ((1 - h * sigma) * pp - d) % (pp - 1) != 0:
            continue
        r = ((1 - h * sigma) * pp - d) // (pp - 1)
        if r >= -h:
            continue
        if c == (k - 2) * (1 - h * sigma) - sigma * k * r:
            add("Thm5.4-(ii)", {"sigma": sigma, "p": pp, "r": r})

    for pp in _integer_roots(
        k * c, k * (a1 + c - (h + 1) * a + ak) - 2 * ak, ak * (a - k + 1)
    ):
        if pp < 2:
            continue
        if (a + (k - 2) * pp - k + 1) % (k * pp) != 0:
            continue
        sigma = (a + (k - 2) * pp - k + 1) // (k * pp)
        if sigma < 1:
            continue
        if ((1 - h * sigma) * pp - d) % (pp - 1) != 0:
            continue
        r = ((1 - h * sigma) * pp - d) // (pp - 1)
        if r >= -h:
            continue
        if c == (k - 1) * (1 - h * sigma) - (sigma * k + 1) * r:
            add("Thm5.4-(iii)", {"sigma": sigma, "p": pp, "r": r})

    # Linear family: p is pinned by a alone.
    if h == 1:
        pp = a - k - 1
        if pp >= 1:
            if (-d - pp - 1) % pp == 0:
                r = (-d - pp - 1) // pp
                if r < -1 and c == -k - (k + 1) * r:
                    add("Thm5.4-(iv)", {"p": pp, "r": r})

        for pp in _integer_roots(
            k * c, k * (c + d + 2 * ak) - 2 * ak, ak * (a - 2 * k + 1)
        ):
            if pp < 2:
                continue
            if (a + (2 * k - 2) * pp - 2 * k + 1) % (k * pp) != 0:
                continue
            sigma = (a + (2 * k - 2) * pp - 2 * k + 1) // (k * pp)
            if sigma < 2:
                continue
            if (-d - pp * sigma) % (pp - 1) != 0:
                continue
            r = (-d - pp * sigma) // (pp - 1)
            if r >= -2:
                continue
            if c == -sigma * (2 * k - 1) - (sigma * k + 1) * r:
                add("Thm5.4-(v)", {"sigma": sigma, "p": pp, "r": r})

    return hits


def fast_path(p: AagParams) -> Classification | None:
    """Almost-symmetric classification by exact quadratic/linear solving.

    Returns the unique fully-consistent family hit as a Classification, or
    None when no family's equations admit a consistent integer solution
    (the caller then falls back to :func:`classify`).  Two distinct
    consistent hits raise ``AmbiguousFastPath``.
    """
    p = _raw_presentation(p)
    if p.k < 3:
        return None
    hits = _fast_candidates(p)
    if not hits:
        return None
    if len(hits) > 1:
        described = "; ".join(f"{fam} with {solved}" for fam, solved in hits)
        raise AmbiguousFastPath(
            f"multiple families consistent for a={p.a}, d={p.d}, h={p.h}, "
            f"k={p.k}, c={p.c}: {described}"
        )
    family, solved = hits[0]
    return Classification(
        verdict=VERDICT_ALMOST_SYMMETRIC,
        family=family,
        solved=solved,
        type=family_type(family, solved, p),
        frobenius=family_frobenius(family, solved, p),
        fast_path_used=True,
    )


def classify_with_fast_path(p: AagParams) -> Classification:
    """Fast path first, full route on a miss or an ambiguity."""
    try:
        hit = fast_path(p)
    except AmbiguousFastPath:
        hit = None
    if hit is not None:
        return hit
    return classify(p)
