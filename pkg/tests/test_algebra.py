"""Exact polynomial algebra: resultants, gcds, squarefree decomposition.

Oracle tags: [PAPER] = value quoted in the source analysis, [DERIVED] =
computed independently by hand or brute force, [TRIVIAL] = textbook identity.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflexo.algebra import (
    MPoly,
    UniPoly,
    bareiss_determinant,
    gcd_poly,
    rational_roots,
    resultant,
    squarefree_decomposition,
    squarefree_rational_roots,
    sylvester_matrix,
)


def upoly(*coeffs, var="t"):
    return UniPoly(list(coeffs), var=var)


class TestResultant:
    def test_res_linear_is_evaluation(self):
        # [TRIVIAL] Res(f, x - a) = lc * f(a): Res_x(x^2 - 2, x - 1) = -1
        p = upoly(-2, 0, 1, var="x")
        q = upoly(-1, 1, var="x")
        assert resultant(p, q, "x") == Fraction(-1)

    def test_res_with_lambda_coefficients(self):
        # [DERIVED] 2x2 Sylvester determinant by hand: Res_x(x^2 + l, x + 1)
        p = MPoly({(2, 0, 0): 1, (0, 0, 1): 1})
        q = MPoly({(1, 0, 0): 1, (0, 0, 0): 1})
        r = resultant(p, q, "x")
        assert r == MPoly({(0, 0, 1): 1, (0, 0, 0): 1})  # l + 1

    def test_both_constant_errors(self):
        with pytest.raises(ValueError):
            resultant(upoly(3, var="x"), upoly(5, var="x"), "x")

    def test_resultant_zero_iff_common_factor(self):
        # [TRIVIAL] shared root (x - 2)
        shared = upoly(-2, 1, var="x")
        p = shared * upoly(1, 1, var="x")
        q = shared * upoly(3, 1, var="x")
        assert resultant(p, q, "x") == 0
        assert resultant(upoly(1, 1, var="x"), upoly(3, 1, var="x"), "x") != 0

    def test_multiplicativity_small(self):
        # [TRIVIAL] Res(p, q*r) = Res(p, q) * Res(p, r)
        p = upoly(1, 0, 1, var="x")
        q = upoly(2, 1, var="x")
        r = upoly(-3, 1, 1, var="x")
        assert resultant(p, q * r, "x") == resultant(p, q, "x") * resultant(
            p, r, "x"
        )

    def test_matches_sylvester_bareiss(self):
        # [DERIVED] subresultant PRS agrees with the naive Sylvester
        # determinant on a rational example
        p = upoly(Fraction(1, 2), -1, 0, 3, var="x")
        q = upoly(2, 0, Fraction(-1, 3), 1, var="x")
        mat = sylvester_matrix(p.coeffs, q.coeffs)
        assert resultant(p, q, "x") == bareiss_determinant(mat)


class TestGcd:
    def test_shared_linear_factor(self):
        # [TRIVIAL] gcd(x^2 - 1, x - 1) = x - 1
        assert gcd_poly(upoly(-1, 0, 1), upoly(-1, 1)) == upoly(-1, 1)

    def test_gcd_with_zero(self):
        # [TRIVIAL] gcd(p, 0) = monic(p)
        p = upoly(2, 4)
        assert gcd_poly(p, UniPoly([])) == upoly(Fraction(1, 2), 1)

    def test_repeated_factor(self):
        # [TRIVIAL] gcd((l-4)(l+4), (l-4)^2) = l - 4
        a = upoly(-4, 1, var="l") * upoly(4, 1, var="l")
        b = upoly(-4, 1, var="l") * upoly(-4, 1, var="l")
        assert gcd_poly(a, b) == upoly(-4, 1, var="l")


class TestSquarefreeRationalRoots:
    def test_paper_5a_resultant(self):
        # [PAPER] (l-1)^2 (l^3 - l^2 - 18 l + 43)
        cubic = upoly(43, -18, -1, 1, var="l")
        p = upoly(-1, 1, var="l") * upoly(-1, 1, var="l") * cubic
        roots, residual = squarefree_rational_roots(p)
        assert roots == [(Fraction(1), 2)]
        assert residual == [(cubic, 1)]

    def test_paper_7a_quadratic(self):
        # [PAPER] l^2 + 5l - 25 has no rational root (roots 5/2(-1 +- sqrt5))
        p = upoly(-25, 5, 1, var="l")
        roots, residual = squarefree_rational_roots(p)
        assert roots == []
        assert residual == [(p, 1)]

    def test_paper_3_cubic(self):
        # [PAPER] l^3 + 27 = (l + 3)(l^2 - 3l + 9)
        roots, residual = squarefree_rational_roots(upoly(27, 0, 0, 1, var="l"))
        assert roots == [(Fraction(-3), 1)]
        assert residual == [(upoly(9, -3, 1, var="l"), 1)]

    def test_reassembly(self):
        # [TRIVIAL] product of the extracted factors reproduces p up to lc
        p = upoly(0, 4, 0, -4, 0, 2) * upoly(1, 1) * upoly(1, 1)
        roots, residual = squarefree_rational_roots(p)
        prod = UniPoly([1])
        for r, m in roots:
            for _ in range(m):
                prod = prod * upoly(-r, 1)
        for q, m in residual:
            for _ in range(m):
                prod = prod * q
        assert p.monic() == prod.monic()


class TestRationalRoots:
    def test_integer_roots(self):
        # [TRIVIAL]
        p = upoly(-6, 11, -6, 1)  # (t-1)(t-2)(t-3)
        assert sorted(rational_roots(p)) == [1, 2, 3]

    def test_fractional_root(self):
        # [TRIVIAL] 2t - 1
        assert rational_roots(upoly(-1, 2)) == [Fraction(1, 2)]


# ---------------------------------------------------------------------------
# randomized properties (seeded; the full 1000-case suite is in acceptance)
# ---------------------------------------------------------------------------


def _random_poly(rng, max_deg=4, var="x"):
    deg = rng.randint(1, max_deg)
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(deg)] + [
        Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    ]
    return UniPoly(coeffs, var=var)


def test_resultant_vanishes_iff_gcd_nonconstant():
    rng = random.Random(20260826)
    for _ in range(100):
        p = _random_poly(rng)
        q = _random_poly(rng)
        vanishes = resultant(p, q, "x") == 0
        assert vanishes == (not gcd_poly(p, q).is_const())


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=2, max_size=5),
    st.lists(st.integers(-6, 6), min_size=2, max_size=5),
)
def test_gcd_divides_both(a, b):
    p, q = UniPoly([Fraction(c) for c in a]), UniPoly([Fraction(c) for c in b])
    if p.is_zero() or q.is_zero():
        return
    g = gcd_poly(p, q)
    assert p.divmod(g)[1].is_zero() and q.divmod(g)[1].is_zero()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
def test_squarefree_decomposition_reassembles(coeffs):
    p = UniPoly([Fraction(c) for c in coeffs])
    if p.is_zero() or p.is_const():
        return
    prod = UniPoly([1])
    for f, m in squarefree_decomposition(p):
        for _ in range(m):
            prod = prod * f
    assert prod.monic() == p.monic()
