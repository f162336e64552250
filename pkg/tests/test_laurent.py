"""Laurent polynomials: f_P construction, Newton polygons, chart equations,
algebraic mutation."""

import pytest

from reflexo.catalog import get
from reflexo.laurent import (
    ChartBasis,
    LaurentPoly,
    algebraic_mutation,
    build_fP,
    chart_polynomial,
    format_laurent,
    newton_polygon,
)
from reflexo.algebra import MPoly
from reflexo.period import period_coefficients
from reflexo.polygon import canonical_form


class TestBuildFP:
    def test_p4a(self):
        # [PAPER] f = x + y + 1/x + 1/y (all edges length 1)
        f = build_fP(get("4a"))
        assert f.terms == {
            (1, 0): 1, (0, 1): 1, (-1, 0): 1, (0, -1): 1
        }

    def test_p3(self):
        # [DERIVED] catalog triangle: x + y + 1/(xy)
        f = build_fP(get("3"))
        assert f.terms == {(1, 0): 1, (0, 1): 1, (-1, -1): 1}

    def test_p4c_midpoint_coefficient(self):
        # [PAPER] the length-2 edge of P4c carries a middle coefficient 2
        f = build_fP(get("4c"))
        assert sorted(f.terms.values()) == [1, 1, 1, 2]

    def test_zero_constant_term(self, catalog):
        # [TRIVIAL] Construction: no constant monomial
        for P in catalog.values():
            assert build_fP(P).constant_term() == 0

    def test_edge_binomial_sums(self, catalog):
        # [DERIVED] the edge restriction is (x0 + x1)^l(e): its coefficients
        # sum to 2^l(e) at the all-ones evaluation
        from math import comb

        for P in catalog.values():
            f = build_fP(P)
            for e in P.edges():
                pts = e.lattice_points()
                n = e.lattice_length
                assert [f.terms[p] for p in pts[1:-1]] == [
                    comb(n, i) for i in range(1, n)
                ]


class TestNewtonPolygon:
    def test_round_trip(self, catalog):
        # [TRIVIAL] Newt(f_P) = P
        for P in catalog.values():
            assert newton_polygon(build_fP(P)) == P

    def test_segment(self):
        # [PAPER] Newt(1 + x) = conv{(0,0),(1,0)}
        assert newton_polygon(LaurentPoly({(0, 0): 1, (1, 0): 1})) == [
            (0, 0), (1, 0)
        ]

    def test_symmetric_segment(self):
        # [TRIVIAL]
        assert newton_polygon(LaurentPoly({(-1, 0): 1, (1, 0): 1})) == [
            (-1, 0), (1, 0)
        ]

    def test_empty_errors(self):
        with pytest.raises(ValueError):
            newton_polygon(LaurentPoly({}))


class TestChartPolynomial:
    def test_p4a_chart(self):
        # [PAPER] x^2 + y (l x + x^2 + y + 1)
        p = chart_polynomial(build_fP(get("4a")), ChartBasis((-1, 1), (1, 0)))
        assert p == MPoly({
            (2, 0, 0): 1, (1, 1, 1): 1, (2, 1, 0): 1,
            (0, 2, 0): 1, (0, 1, 0): 1,
        })

    def test_p5a_chart(self):
        # [PAPER] l xy + x^2 y + x + 1 + y + y^2 x
        p = chart_polynomial(build_fP(get("5a")), ChartBasis((1, 0), (0, -1)))
        assert p == MPoly({
            (1, 1, 1): 1, (2, 1, 0): 1, (1, 0, 0): 1,
            (0, 0, 0): 1, (0, 1, 0): 1, (1, 2, 0): 1,
        })

    def test_p6b_chart(self):
        # [PAPER] l xy + 2y + 1 + 2x + x^2 + y^2 + y^2 x
        p = chart_polynomial(build_fP(get("6b")), ChartBasis((1, 0), (0, -1)))
        assert p == MPoly({
            (1, 1, 1): 1, (0, 1, 0): 2, (0, 0, 0): 1, (1, 0, 0): 2,
            (2, 0, 0): 1, (0, 2, 0): 1, (1, 2, 0): 1,
        })

    def test_no_monomial_factor(self, catalog):
        # [TRIVIAL] result is not divisible by x or y
        for P in catalog.values():
            p = chart_polynomial(build_fP(P), ChartBasis((1, 0), (0, 1)))
            assert min(k[0] for k in p.terms) == 0
            assert min(k[1] for k in p.terms) == 0

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            ChartBasis((1, 0), (2, 0))


class TestAlgebraicMutation:
    def test_p4c_to_p4a(self):
        # [PAPER] the mutation of f_{P4c} has Newton polygon of class P4a
        g = algebraic_mutation(build_fP(get("4c")), (0, -1), (1, 0))
        assert canonical_form(newton_polygon(g)) == canonical_form(get("4a"))

    def test_orthogonal_support_fixed(self):
        # [TRIVIAL] exponent of h is <u, v> = 0 on all of the support
        f = LaurentPoly({(1, 0): 2, (-1, 0): 3})
        assert algebraic_mutation(f, (0, 1), (1, 0)) == f

    def test_round_trip_exact(self):
        # [DERIVED] mutation followed by its inverse returns f exactly
        f = build_fP(get("4c"))
        g = algebraic_mutation(f, (0, -1), (1, 0))
        assert algebraic_mutation(g, (0, 1), (1, 0)) == f

    def test_period_invariance(self):
        # [PAPER] mutation-equivalent Laurent polynomials share the period
        f = build_fP(get("4c"))
        g = algebraic_mutation(f, (0, -1), (1, 0))
        assert period_coefficients(f, 12) == period_coefficients(g, 12)

    def test_non_admissible_errors(self):
        # [DERIVED] pushing P4a across an edge with an indivisible slice
        with pytest.raises(ValueError):
            algebraic_mutation(build_fP(get("4a")), (0, -1), (1, 0))

    def test_non_orthogonal_rejected(self):
        with pytest.raises(ValueError):
            algebraic_mutation(build_fP(get("4a")), (0, 1), (0, 1))


class TestFormat:
    def test_text_form(self):
        # [TRIVIAL] "c*x^a*y^b" joined by " + ", signed exponents
        f = LaurentPoly({(-1, 0): 1, (2, -3): 5})
        assert format_laurent(f) == "1*x^-1*y^0 + 5*x^2*y^-3"

    def test_zero(self):
        assert format_laurent(LaurentPoly({})) == "0"
