"""Euclidean-table construction: frozen rows and structural invariants."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from aag.core import validate_params
from aag.errors import NonsenseInput
from aag.euclid import (
    build_table,
    decompose,
    format_table,
    hypothesis_holds,
    tilde_for_pair,
)

from conftest import valid_params


class TestDecompose:
    def test_frozen(self):
        assert decompose(155, 20) == (7, 15, 1)
        assert decompose(40, 20) == (2, 0, 0)
        assert decompose(0, 5) == (0, 0, 0)
        assert decompose(22, 20) == (1, 2, 1)
        assert decompose(1, 20) == (0, 1, 1)

    def test_reassembly(self):
        for s in range(0, 60):
            for k in range(1, 9):
                sigma, rho, ell = decompose(s, k)
                assert s == sigma * k + ell * rho
                assert 0 <= rho < k
                assert (ell == 0) == (rho == 0)

    def test_bad_input(self):
        with pytest.raises(NonsenseInput):
            decompose(-1, 3)
        with pytest.raises(NonsenseInput):
            decompose(3, 0)


class TestFrozenTables:
    def test_running_example(self, ex1):
        t = build_table(ex1)
        triples = [(row.s, row.p, row.r) for row in t.rows[:3]]
        assert triples == [(155, 0, 1), (22, 1, -1), (21, 8, -9)]
        assert [row.r_prime for row in t.rows[:3]] == [33, 7, -1]
        assert t.mu == 1
        assert t.hypothesis_ok and hypothesis_holds(t, ex1.h)
        # s_mu - s_{mu+1} = 1: widetilde decomposition (0, 1, 1), r-tilde 12.
        assert (t.tilde_sigma, t.tilde_rho, t.tilde_ell, t.tilde_r) == (0, 1, 1, 12)
        # Case with rho_mu > rho_{mu+1} > 0: r-tilde - h = r'_mu - r'_{mu+1}.
        assert t.tilde_r - ex1.h == t.pivot.r_prime - t.after_pivot.r_prime == 8

    def test_running_example_full_descent(self, ex1):
        t = build_table(ex1)
        assert t.rows[-1].s == 0
        assert t.rows[-1].p == 155  # determinant identity at the tail
        assert t.rows[-1].r == -177
        assert t.m == len(t.rows) - 2

    def test_raw_negative_d(self, ex2_raw):
        t = build_table(ex2_raw)
        triples = [(row.s, row.p, row.r) for row in t.rows[:4]]
        assert triples == [(163, 0, -2), (78, 1, -2), (71, 3, -4), (64, 5, -6)]
        assert [row.r_prime for row in t.rows[:3]] == [7, 3, 0]
        assert t.mu == 1
        assert hypothesis_holds(t, 1)

    def test_normalized_presentation(self, ex2_normalized):
        assert (ex2_normalized.a, ex2_normalized.d) == (125, 2)
        t = build_table(ex2_normalized)
        triples = [(row.s, row.p, row.r) for row in t.rows[:5]]
        assert triples == [(125, 0, 2), (85, 1, 0), (45, 2, -2), (5, 3, -4), (0, 25, -34)]
        assert t.mu == 2

    def test_format_table(self, ex1):
        text = format_table(build_table(ex1))
        lines = text.splitlines()
        assert lines[0].split() == ["i", "s", "p", "r", "r'", "q"]
        assert "<- mu" in lines[2]
        assert lines[1].split()[:5] == ["0", "155", "0", "1", "33"]


def _check_invariants(params, t):
    a, d, c, h = params.a, params.d, params.c, params.h
    rows = t.rows
    # Row equation and decomposition on every row.
    for row in rows:
        assert row.s * d - row.p * c == row.r * a
        assert row.s == row.sigma * params.k + row.ell * row.rho
        assert row.r_prime == row.r + h * (row.sigma + row.ell)
    # Determinant identities on consecutive pairs.
    for lo, hi in zip(rows, rows[1:]):
        assert lo.s * hi.p - hi.s * lo.p == a
        assert hi.s * lo.r - lo.s * hi.r == c
        assert hi.p * lo.r - lo.p * hi.r == d
        assert hi.q is None or hi.q >= 2
    # Monotonicity.
    s_seq = [row.s for row in rows]
    p_seq = [row.p for row in rows]
    rp_seq = [row.r_prime for row in rows]
    assert all(x > y for x, y in zip(s_seq, s_seq[1:]))
    assert all(x < y for x, y in zip(p_seq, p_seq[1:]))
    assert all(x > y for x, y in zip(rp_seq, rp_seq[1:]))
    if d > 0:
        r_seq = [row.r for row in rows]
        assert all(x > y for x, y in zip(r_seq, r_seq[1:]))
    # Pivot bracketing, start/end signs.
    assert rows[0].r_prime > 0
    assert rows[-1].r_prime < 0
    assert t.pivot.r_prime > 0 >= t.after_pivot.r_prime
    assert t.mu >= 1
    # Tilde fields agree with the generic pair helper, and the pair
    # comparison falls into exactly the advertised case split.
    assert tilde_for_pair(t, t.mu, params.k, h) == (
        t.tilde_sigma,
        t.tilde_rho,
        t.tilde_ell,
        t.tilde_r,
    )
    rho_mu, rho_next = t.pivot.rho, t.after_pivot.rho
    drop = t.pivot.r_prime - t.after_pivot.r_prime
    if (rho_mu == 0 and rho_next > 0) or (rho_mu > rho_next > 0):
        assert t.tilde_r - h == drop
    else:
        assert t.tilde_r == drop
    # r-tilde >= 2 on every consecutive pair.
    for i in range(len(rows) - 1):
        assert tilde_for_pair(t, i, params.k, h)[3] >= 2


class TestInvariants:
    @given(valid_params())
    @settings(max_examples=250, deadline=None)
    def test_random_valid(self, params):
        _check_invariants(params, build_table(params))

    @given(valid_params(normalize=False))
    @settings(max_examples=250, deadline=None)
    def test_raw_presentations(self, params):
        _check_invariants(params, build_table(params))

    def test_worked_examples(self, ex1, ex2_raw, ex2_normalized):
        for params in (ex1, ex2_raw, ex2_normalized):
            _check_invariants(params, build_table(params))

    def test_high_h_negative_d(self):
        # d < 0 with h >= 2 is never rewritten; the table must still work.
        params = validate_params(165, -1, 4, 19, 186)
        t = build_table(params)
        _check_invariants(params, t)
        assert hypothesis_holds(t, 4) == t.hypothesis_ok
