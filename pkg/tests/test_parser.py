import os
import tempfile
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction
from swde.equation.equation import SchwarzEquation
from swde.errors import (
    CorpusError,
    EquationSyntaxError,
    InputError,
    NonPositiveExponent,
    ZeroDenominator,
)
from swde.parser import parse_corpus, parse_equation, parse_rational_function, read_corpus


def fp(expr: str) -> FPoly:
    return FPoly.from_expr(expr)


class ParseEquationTest(unittest.TestCase):
    def test_exponent(self):
        eq = parse_equation("S(f)^2 = (f-1)/(f-2)")
        self.assertEqual(eq.m, 2)
        self.assertEqual(eq.P, FPoly.linear(1))
        self.assertEqual(eq.Q, FPoly.linear(2))
        self.assertEqual(parse_equation("S(f, z) = f").m, 1)

    def test_constant_right_side(self):
        eq = parse_equation("S(f) = 2")
        self.assertEqual(eq.P, FPoly.constant(2))
        self.assertEqual(eq.Q, FPoly.constant(1))

    def test_non_positive_exponent(self):
        for text in ("S(f)^0 = f", "S(f)^-1 = f"):
            with self.assertRaises(NonPositiveExponent):
                parse_equation(text)

    def test_zero_denominator(self):
        with self.assertRaises(ZeroDenominator):
            parse_equation("S(f) = 1/(f - f)")
        with self.assertRaises(ZeroDenominator):
            parse_equation("S(f) = 1/(z - z)^2")

    def test_syntax_error_position(self):
        with self.assertRaises(EquationSyntaxError) as ctx:
            parse_equation("S(f) = f +")
        self.assertIsInstance(ctx.exception.position, int)
        for text in ("S(g) = f", "f = 1", "S(f) = x", "S(f) = (f"):
            with self.assertRaises(EquationSyntaxError):
                parse_equation(text)

    def test_precedence(self):
        eq = parse_equation("S(f) = -f^2 + 2*z/3")
        two_thirds_z = RationalFunction.from_expr("2*z/3")
        self.assertEqual(eq, SchwarzEquation(1, FPoly([two_thirds_z, 0, -1]), fp("1")))
        eq = parse_equation("S(f) = 1/2/f")
        self.assertEqual(eq.P, FPoly.constant(1))
        self.assertEqual(eq.Q, FPoly([0, 2]))

    def test_explicit_products_only(self):
        for text in (
            "S(f) = 2z",
            "S(f) = z(z+1)/(f-1)",
            "S(f) = 2f/(f-1)",
            "S(f) = (f-1)(f-2)",
            "S(f) = 2 z",
        ):
            with self.subTest(text=text), self.assertRaises(EquationSyntaxError):
                parse_equation(text)
        self.assertEqual(
            parse_equation("S(f) = 2 -z").P,
            FPoly.constant(RationalFunction.from_expr("2 - z")),
        )

    def test_negative_exponent_in_expression(self):
        for text in ("S(f) = z^-2", "S(f) = 1/(f - 1)^-1", "S(f)^2 = f^-3"):
            with self.subTest(text=text), self.assertRaises(EquationSyntaxError):
                parse_equation(text)

    def test_stray_schwarzian_on_right_side(self):
        for text in ("S(f) = S(f)", "S(f) = f + S(f)^2", "S(f)^2 = S(f) = 1"):
            with self.subTest(text=text), self.assertRaises(EquationSyntaxError):
                parse_equation(text)

    def test_coprime_form(self):
        eq = parse_equation("S(f) = (f - 1)*(f + z)/((f - 1)*(f - 2))")
        self.assertFalse(eq.coprime)
        self.assertEqual(eq, SchwarzEquation(1, fp("f + z"), fp("f - 2")))

    @settings(max_examples=200, deadline=None)
    @given(st.text(alphabet="Sfz()=+-*/ 12,", max_size=24))
    def test_malformed_input_is_an_input_error(self, text):
        try:
            result = parse_equation(text)
        except InputError:
            return
        self.assertIsInstance(result, SchwarzEquation)

    @settings(max_examples=200, deadline=None)
    @given(
        st.sampled_from(["2", "z", "(z + 1)", "f", "(f - 1)"]),
        st.sampled_from(["z", "f", "(f - 2)", "(z - 3)"]),
        st.sampled_from(["S(f) = {}", "S(f)^2 = {}/(f - 1)", "S(f) = (f + z)/{}"]),
    )
    def test_juxtaposed_factors_are_rejected(self, left, right, layout):
        text = layout.format(left + right)
        with self.assertRaises(EquationSyntaxError):
            parse_equation(text)
        self.assertIsInstance(parse_equation(layout.format(f"{left}*{right}")), SchwarzEquation)


class ParseRationalFunctionTest(unittest.TestCase):
    def test_rational(self):
        self.assertEqual(
            parse_rational_function("(2z+3)/(z-5)"),
            RationalFunction.from_expr("(2*z + 3)/(z - 5)"),
        )
        self.assertEqual(parse_rational_function("z^-2"), RationalFunction.from_expr("1/z**2"))

    def test_rejects_f(self):
        with self.assertRaises(EquationSyntaxError):
            parse_rational_function("f + 1")


class ParseCorpusTest(unittest.TestCase):
    def test_comments_and_blank_lines(self):
        entries = parse_corpus("# header\n\nS(f) = 2  # constant\nS(f)^2 = f/(f - 1)\n")
        self.assertEqual([lineno for lineno, _, _ in entries], [3, 4])
        self.assertEqual(entries[0][1], "S(f) = 2")
        self.assertEqual(entries[1][2].m, 2)

    def test_reports_every_bad_line(self):
        with self.assertRaises(CorpusError) as ctx:
            parse_corpus("S(f) = 2\nS(f) = +\nS(f) = f\nS(f)^0 = f\n")
        self.assertEqual([lineno for lineno, _ in ctx.exception.errors], [2, 4])

    def test_read_corpus(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "corpus.txt")
            with open(path, "w") as corpus:
                corpus.write("S(f) = (f + z)/(f - 1)\n")
            ((lineno, text, eq),) = read_corpus(path)
        self.assertEqual(lineno, 1)
        self.assertEqual(eq.Q, FPoly.linear(1))
