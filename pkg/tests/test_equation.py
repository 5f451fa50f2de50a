import unittest
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction
from swde.equation.equation import SchwarzEquation, render_equation
from swde.equation.mobius import MobiusMap, apply_mobius, normalize_degrees
from swde.equation.schwarzian import schwarzian_rational
from swde.errors import (
    AnalysisError,
    ConstantInput,
    DegenerateMap,
    NonConstantMap,
    NonPositiveExponent,
    ZeroDenominator,
)
from swde.parser import parse_equation
from swde.regression import GOLDEN_CORPUS, read_golden


def rf(expr: str) -> RationalFunction:
    return RationalFunction.from_expr(expr)


def fp(expr: str) -> FPoly:
    return FPoly.from_expr(expr)


class SchwarzEquationTest(unittest.TestCase):
    def test_invalid(self):
        with self.assertRaises(NonPositiveExponent):
            SchwarzEquation(0, fp("f"), fp("1"))
        with self.assertRaises(ZeroDenominator):
            SchwarzEquation(1, fp("f"), FPoly())

    def test_common_factor_cancelled(self):
        eq = SchwarzEquation(1, fp("(f - 1)*(f + z)"), fp("(f - 1)*(f - 2)"))
        self.assertFalse(eq.coprime)
        self.assertEqual(eq.P, fp("f + z"))
        self.assertEqual(eq.Q, fp("f - 2"))
        self.assertTrue(SchwarzEquation(1, fp("f + z"), fp("f - 2")).coprime)

    def test_degrees(self):
        eq = SchwarzEquation(2, fp("f**3 + z"), fp("f - 1"))
        self.assertEqual(eq.deg_P, 3)
        self.assertEqual(eq.deg_Q, 1)
        self.assertFalse(eq.is_balanced)
        self.assertTrue(SchwarzEquation(1, FPoly(), fp("f")).is_balanced)

    def test_regularity(self):
        eq = SchwarzEquation(1, FPoly([rf("1/z"), 1]), fp("f - 1"))
        self.assertFalse(eq.is_regular_at(0))
        self.assertTrue(eq.is_regular_at(1))

    def test_render(self):
        self.assertEqual(render_equation(parse_equation("S(f) = 2")), "S(f) = 2")
        self.assertEqual(
            render_equation(parse_equation("S(f)^2 = (f + z)/(f - 1)")),
            "S(f)^2 = (f + z)/(f - 1)",
        )

    def test_render_parses_back(self):
        for _, text, _, _ in read_golden(GOLDEN_CORPUS):
            eq = parse_equation(text)
            self.assertEqual(parse_equation(render_equation(eq)), eq)
        eq = SchwarzEquation(3, FPoly([rf("1/(z + 1)"), Fraction(1, 2)]), fp("f**2 + z"))
        self.assertEqual(parse_equation(render_equation(eq)), eq)


class SchwarzianTest(unittest.TestCase):
    def test_powers(self):
        self.assertEqual(schwarzian_rational(rf("z**3")), rf("-4/z**2"))
        self.assertEqual(schwarzian_rational(rf("z**2")), rf("-3/(2*z**2)"))

    def test_mobius_image_of_z(self):
        self.assertTrue(schwarzian_rational(rf("(2*z + 3)/(z - 5)")).is_zero)
        self.assertTrue(schwarzian_rational(rf("z")).is_zero)

    def test_constant(self):
        with self.assertRaises(ConstantInput):
            schwarzian_rational(RationalFunction(Fraction(7, 2)))

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(st.integers(-3, 3), min_size=4, max_size=4),
        st.lists(st.integers(-3, 3), min_size=2, max_size=4),
    )
    def test_mobius_invariance(self, entries, coefficients):
        a, b, c, d = entries
        assume(a * d - b * c != 0)
        f = rf(" + ".join(f"({x})*z**{i}" for i, x in enumerate(coefficients)) + " + z**5")
        image = MobiusMap(a, b, c, d).apply(f)
        self.assertEqual(schwarzian_rational(image), schwarzian_rational(f))


class MobiusMapTest(unittest.TestCase):
    def test_degenerate(self):
        with self.assertRaises(DegenerateMap):
            MobiusMap(1, 2, 2, 4)

    def test_identity(self):
        identity = MobiusMap.identity()
        self.assertTrue(identity.is_identity)
        self.assertEqual(identity.render(), "u = f")
        self.assertTrue(MobiusMap(3, 0, 0, 3).is_identity)

    def test_inverse(self):
        m = MobiusMap(2, 1, 1, 5)
        self.assertTrue(m.compose(m.inverse()).equivalent(MobiusMap.identity()))
        self.assertEqual(m.inverse().apply(m.apply(rf("z"))), rf("z"))

    def test_render(self):
        self.assertEqual(MobiusMap.shift_map(1).render(), "u = (f)/(f - 1)")

    def test_apply_mobius(self):
        eq = parse_equation("S(f) = (f + z)/(f - 1)")
        transformed = apply_mobius(eq, MobiusMap(0, 1, 1, -1))
        self.assertEqual(transformed.Q.degree, 0)
        self.assertEqual(transformed.P, fp("(z + 1)*f + 1").scale(transformed.Q.leading))

    def test_apply_mobius_preserves_solutions(self):
        eq = parse_equation("S(f) = (f^2 + z)/((f - 1)*(f - 2))")
        m = MobiusMap(2, 1, 1, 5)
        transformed = apply_mobius(eq, m)
        f = rf("z + 7")
        u = m.apply(f)
        lhs = transformed.P.evaluate(u) / transformed.Q.evaluate(u)
        self.assertEqual(lhs, eq.P.evaluate(f) / eq.Q.evaluate(f))
        self.assertEqual(transformed.m, eq.m)

    def test_non_constant_map(self):
        eq = parse_equation("S(f) = f/(f - 1)")
        with self.assertRaises(NonConstantMap):
            apply_mobius(eq, MobiusMap(RationalFunction.z(), 0, 0, 1))

    def test_normalize_degrees(self):
        eq = parse_equation("S(f) = f")
        normalized, mobius = normalize_degrees(eq)
        self.assertTrue(normalized.is_balanced)
        self.assertTrue(mobius.equivalent(MobiusMap.shift_map(1)))
        self.assertEqual(normalized.deg_Q, 1)

    def test_normalize_skips_roots(self):
        eq = parse_equation("S(f) = (f - 1)*(f - 2)")
        normalized, mobius = normalize_degrees(eq)
        self.assertTrue(normalized.is_balanced)
        self.assertTrue(mobius.equivalent(MobiusMap.shift_map(3)))

    def test_normalize_balanced_unchanged(self):
        eq = parse_equation("S(f) = (f + z)/(f - 1)")
        normalized, mobius = normalize_degrees(eq)
        self.assertIs(normalized, eq)
        self.assertTrue(mobius.is_identity)

    def test_normalize_exhausted(self):
        eq = parse_equation("S(f) = (f - 1)*(f - 2)")
        with self.assertRaises(AnalysisError):
            normalize_degrees(eq, max_shift=2)
