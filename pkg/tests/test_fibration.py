"""Singular-fibre analysis: Kodaira types, elimination, node counting,
nonreduced members, base-point towers, and assembly."""

from fractions import Fraction

import pytest

from reflexo.algebra import UniPoly, squarefree_rational_roots
from reflexo.catalog import NAMES, get
from reflexo.fibration import (
    KodairaType,
    base_point_towers,
    classify_fibres,
    elimination_polynomial,
    fibre_at_infinity,
    member_is_nonreduced,
    singular_lambda_values,
)


def lpoly(*coeffs):
    return UniPoly(list(coeffs), var="l")


class TestKodairaType:
    def test_table1_invariants(self):
        # [PAPER] chi and r from the Kodaira table
        assert (KodairaType("I", 6).chi, KodairaType("I", 6).r) == (6, 5)
        assert (KodairaType("I", 1).chi, KodairaType("I", 1).r) == (1, 0)
        assert (KodairaType("I*", 1).chi, KodairaType("I*", 1).r) == (7, 5)
        assert (KodairaType("IV*").chi, KodairaType("IV*").r) == (8, 6)
        assert (KodairaType("II*").chi, KodairaType("II*").r) == (10, 8)

    def test_labels(self):
        # [TRIVIAL]
        assert KodairaType("I", 9).label() == "I9"
        assert KodairaType("I*", 1).label() == "I1*"
        assert KodairaType("IV*").label() == "IV*"

    def test_invalid(self):
        with pytest.raises(ValueError):
            KodairaType("V")
        with pytest.raises(ValueError):
            KodairaType("IV*", 2)


class TestFibreAtInfinity:
    def test_oracles(self):
        # [PAPER] P3 -> I9, P8a -> I4, all P6x -> I6
        assert fibre_at_infinity(get("3")) == KodairaType("I", 9)
        assert fibre_at_infinity(get("8a")) == KodairaType("I", 4)
        for n in ("6a", "6b", "6c", "6d"):
            assert fibre_at_infinity(get(n)) == KodairaType("I", 6)

    def test_equals_dual_volume(self, catalog):
        # [DERIVED] I_{12 - Vol(P)} = I_{Vol(P polar)}
        from reflexo.polygon import polar_dual

        for P in catalog.values():
            assert fibre_at_infinity(P).n == polar_dual(P).volume()


class TestSingularLambdaValues:
    def test_p4a(self):
        # [PAPER] locations 0 (2 nodes), 4, -4 (1 node each)
        sv = {
            s.location: s.torus_nodes
            for s in singular_lambda_values(get("4a"))
        }
        assert sv == {Fraction(0): 2, Fraction(4): 1, Fraction(-4): 1}

    def test_p5a(self):
        # [PAPER] lambda = 1 with 2 nodes plus the cubic factor
        sv = singular_lambda_values(get("5a"))
        rational = {s.location: s.torus_nodes for s in sv
                    if isinstance(s.location, Fraction)}
        assert rational == {Fraction(1): 2}
        cubics = [s for s in sv if not isinstance(s.location, Fraction)]
        assert len(cubics) == 1
        assert cubics[0].location.monic() == lpoly(43, -18, -1, 1)
        assert cubics[0].torus_nodes == 1

    def test_p6c(self):
        # [PAPER] roots at lambda = 2, 3 and -6
        locs = {s.location for s in singular_lambda_values(get("6c"))}
        assert locs == {Fraction(2), Fraction(3), Fraction(-6)}

    def test_p3(self):
        # [PAPER] 27 + lambda^3 = 0: lambda = -3 and two conjugates
        sv = singular_lambda_values(get("3"))
        rational = {s.location for s in sv if isinstance(s.location, Fraction)}
        assert rational == {Fraction(-3)}
        (quad,) = [s for s in sv if not isinstance(s.location, Fraction)]
        assert quad.location.monic() == lpoly(9, -3, 1)


class TestElimination:
    def test_p4a_factor_set(self):
        # [PAPER] squarefree-stripped factor set {l, l-4, l+4}
        roots, residual = squarefree_rational_roots(
            elimination_polynomial(get("4a"))
        )
        assert {r for r, _ in roots} == {0, 4, -4}
        assert residual == []

    def test_p5a_factors(self):
        # [PAPER] (l - 1) and the cubic l^3 - l^2 - 18 l + 43
        roots, residual = squarefree_rational_roots(
            elimination_polynomial(get("5a"))
        )
        assert {r for r, _ in roots} == {1}
        assert [q for q, _ in residual] == [lpoly(43, -18, -1, 1)]

    def test_p7a_factors(self):
        # [PAPER] root 3 plus a quadratic with root sum -5, product -25
        roots, residual = squarefree_rational_roots(
            elimination_polynomial(get("7a"))
        )
        assert {r for r, _ in roots} == {3}
        (q, _), = residual
        assert q.degree == 2 and q.lc() == 1
        assert -q[1] == -5 and q[0] == -25  # sum / product of roots

    def test_p4b_quartic(self):
        # [PAPER] the singular values satisfy l^4 - l^3 - 8 l^2 + 36 l - 11
        roots, residual = squarefree_rational_roots(
            elimination_polynomial(get("4b"))
        )
        assert roots == []
        assert [q for q, _ in residual] == [lpoly(-11, 36, -8, -1, 1)]


class TestNonreduced:
    def test_p8b(self):
        # [PAPER] F_4 has components {1 + x = 0} and {1 + xy + y = 0}^2
        flag, factor, mult = member_is_nonreduced(get("8b"), Fraction(4))
        assert flag and mult == 2
        assert set(factor.terms) == {(1, 1, 0), (0, 1, 0), (0, 0, 0)}

    def test_p9(self):
        # [PAPER] the reduction of F_6 is a line, cubed
        flag, factor, mult = member_is_nonreduced(get("9"), Fraction(6))
        assert flag and mult == 3
        assert set(factor.terms) == {(1, 0, 0), (0, 1, 0), (0, 0, 0)}

    def test_p3_reduced(self):
        # [PAPER] F_{-3} is a nodal irreducible cubic (reduced)
        flag, factor, mult = member_is_nonreduced(get("3"), Fraction(-3))
        assert not flag and factor is None


class TestBasePointTowers:
    def test_p4c(self):
        # [PAPER] one length-2 edge; the intermediate curve is absorbed at 0
        towers = base_point_towers(get("4c"))
        assert len(towers) == 1
        assert towers[0].chain_length == 2
        assert towers[0].intermediate_curves == 1
        assert towers[0].lambda_value == 0

    def test_p6b(self):
        # [PAPER] two length-2 edges, absorbed at lambda = 2 and 3
        towers = base_point_towers(get("6b"))
        assert sorted(t.lambda_value for t in towers) == [2, 3]

    def test_p9(self):
        # [PAPER] three length-3 edges, all six intermediates at lambda = 6
        towers = base_point_towers(get("9"))
        assert len(towers) == 3
        assert all(t.chain_length == 3 for t in towers)
        assert all(t.lambda_value == 6 for t in towers)
        assert sum(t.intermediate_curves for t in towers) == 6

    def test_p3_none(self):
        # [TRIVIAL] all edges of P3 have lattice length 1
        assert base_point_towers(get("3")) == []


class TestClassifyFibres:
    def test_p3(self):
        # [PAPER] one I9 and three I1
        assert classify_fibres(get("3")).type_multiset() == (
            "I1", "I1", "I1", "I9"
        )

    def test_p6b_locations(self):
        # [PAPER] I6 at infinity, I3 at 2, I2 at 3, I1 at -6
        entries = {
            (loc if isinstance(loc, str) else loc, t.label())
            for loc, t, _ in classify_fibres(get("6b")).entries
        }
        assert entries == {
            ("infinity", "I6"), (Fraction(2), "I3"),
            (Fraction(3), "I2"), (Fraction(-6), "I1"),
        }

    def test_p8a_additive(self):
        # [PAPER] I4 at infinity, I1* at 4, plus one I1
        cfg = classify_fibres(get("8a"))
        by_label = {t.label(): loc for loc, t, _ in cfg.entries}
        assert by_label["I1*"] == 4
        assert cfg.type_multiset() == ("I1", "I1*", "I4")

    def test_p9_additive(self):
        # [PAPER] one I3, one I1 and one IV* (at lambda = 6)
        cfg = classify_fibres(get("9"))
        by_label = {t.label(): loc for loc, t, _ in cfg.entries}
        assert by_label["IV*"] == 6
        assert cfg.type_multiset() == ("I1", "I3", "IV*")

    def test_euler_sum(self, configs):
        # [PAPER] chi_top(Y) = 12 for all 16
        for cfg in configs.values():
            assert cfg.chi_total() == 12

    def test_finite_euler_is_volume(self, catalog, configs):
        # [PAPER] finite fibres carry Euler number Vol(P)
        for name in NAMES:
            finite = sum(
                t.chi * c
                for loc, t, c in configs[name].entries
                if loc != "infinity"
            )
            assert finite == catalog[name].volume()

    def test_mutation_invariance(self, configs):
        # [PAPER] equal type multisets within each mutation class
        classes = [
            ["3"], ["4a", "4c"], ["4b"], ["5a", "5b"],
            ["6a", "6b", "6c", "6d"], ["7a", "7b"],
            ["8a", "8b", "8c"], ["9"],
        ]
        for cls in classes:
            base = configs[cls[0]].type_multiset()
            for name in cls[1:]:
                assert configs[name].type_multiset() == base

    def test_absorbed_lambdas_are_singular(self, configs):
        # [DERIVED] every tower's lambda appears as a finite fibre location
        for name in NAMES:
            finite_locs = {
                loc for loc, _, _ in configs[name].entries
                if isinstance(loc, Fraction)
            }
            for t in base_point_towers(get(name)):
                assert t.lambda_value in finite_locs
