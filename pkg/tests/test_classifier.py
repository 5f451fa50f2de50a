import unittest
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction
from swde.classifier.classify import classify_Q, render_param
from swde.classifier.forms import PRIORITY, QTag, divisor_range, enumerate_candidates
from swde.equation.equation import SchwarzEquation
from swde.equation.mobius import MobiusMap, apply_mobius
from swde.parser import parse_equation
from swde.regression import GOLDEN_CORPUS, read_golden

NEGATIVES = [
    "S(f) = 1/(f - 1)^2",
    "S(f) = 1/((f + z)^2*(f + 1)^2)",
    "S(f) = 1/(f^2 + 1)^2",
    "S(f) = 1/(f^3 + z)",
    "S(f)^2 = 1/(f - 1)^3",
    "S(f) = 1/(f + z)^3",
    "S(f) = 1/((f + z)*(f + z^2))",
    "S(f) = 1/((f - 1)*(f - 2)*(f - 3)*(f - 4)*(f - 5))",
    "S(f) = 1/((f - 1)^2*(f - 2))",
    "S(f)^2 = 1/((f + z)^2*(f - 1)^2)",
]

# golden lines small enough for repeated Möbius rewriting
SMALL_GOLDEN = [case for case in read_golden(GOLDEN_CORPUS) if parse_equation(case[1]).deg_Q <= 4]


def rf(expr: str) -> RationalFunction:
    return RationalFunction.from_expr(expr)


class FormsTest(unittest.TestCase):
    def test_divisor_range(self):
        self.assertEqual(divisor_range(1), [2])
        self.assertEqual(divisor_range(6), [2, 3, 4, 6, 12])

    def test_side_conditions(self):
        self.assertEqual(enumerate_candidates(1, QTag.QE8), [])
        self.assertEqual(enumerate_candidates(3, QTag.QE8)[0].constants, (3, 2, 2))
        self.assertEqual(enumerate_candidates(2, QTag.QE13)[0].constants, (2, 1, 1))
        self.assertEqual(enumerate_candidates(1, QTag.QE12), [])

    def test_two_root_patterns(self):
        patterns = enumerate_candidates(2, QTag.QE14)
        self.assertEqual(
            [(p.divisors["n1"], p.divisors["n2"]) for p in patterns], [(2, 2), (2, 4), (4, 4)]
        )
        self.assertEqual([p.constants for p in patterns], [(2, 2), (2, 1), (1, 1)])

    def test_pattern_degrees(self):
        for tag in PRIORITY:
            for m in (1, 2, 3, 6):
                for pattern in enumerate_candidates(m, tag):
                    self.assertGreaterEqual(pattern.degree, 0)
                    self.assertEqual(pattern.tag, tag)

    def test_deserialize(self):
        self.assertEqual(QTag.deserialize("QE7"), QTag.QE7)
        with self.assertRaises(Exception):
            QTag.deserialize("QE17")


class ClassifyTest(unittest.TestCase):
    def test_golden_corpus(self):
        for _, text, tag, _ in read_golden(GOLDEN_CORPUS):
            with self.subTest(text=text):
                self.assertEqual(classify_Q(parse_equation(text)).tag.value, tag)

    def test_negatives(self):
        for text in NEGATIVES:
            with self.subTest(text=text):
                qclass = classify_Q(parse_equation(text))
                self.assertEqual(qclass.tag, QTag.UNMATCHED)
                self.assertIsNotNone(qclass.reason)

    def test_unsplittable_reason(self):
        qclass = classify_Q(parse_equation("S(f) = 1/(f^3 + z)"))
        self.assertIn("f^3 + z", qclass.reason)

    def test_parameters(self):
        qclass = classify_Q(parse_equation("S(f) = (f + z)/(f - 1)"))
        self.assertEqual(qclass.params["tau1"], 1)
        self.assertEqual(qclass.params["n"], 2)
        self.assertEqual(qclass.params["c"], RationalFunction(1))
        qclass = classify_Q(parse_equation("S(f) = (f^4 + 1)/((f + z)^2*(f + z^2)^2)"))
        self.assertEqual(qclass.params["b1"], rf("z"))
        self.assertEqual(qclass.params["b2"], rf("z**2"))
        qclass = classify_Q(parse_equation("S(f) = (f^4 + 1)/(f^2 + z)^2"))
        self.assertEqual((qclass.params["a0"], qclass.params["a1"]), (rf("z"), RationalFunction(0)))

    def test_root_order(self):
        qclass = classify_Q(parse_equation("S(f)^3 = (f^6 + z)/((f - 3)^3*(f - 2)^2*(f - 1))"))
        self.assertEqual(qclass.tag, QTag.QE11)
        self.assertEqual(qclass.taus, [3, 2, 1])
        qclass = classify_Q(parse_equation("S(f) = 1/((f - 4)*(f - 3)*(f + 1)*(f - 2))"))
        self.assertEqual(qclass.taus, [-1, 2, 3, 4])

    def test_algebraic_roots(self):
        qclass = classify_Q(parse_equation("S(f) = (f^4 + z)/((f^2 + 1)*(f - 1)*(f - 2))"))
        self.assertEqual(qclass.tag, QTag.QE6)
        self.assertEqual(qclass.taus[:2], [1, 2])
        self.assertEqual(qclass.taus[2], FPoly.from_expr("f**2 + 1"))
        self.assertEqual(render_param(qclass.taus[2]), "root of f^2 + 1")

    def test_unit_scaling(self):
        for _, text, tag, _ in read_golden(GOLDEN_CORPUS)[:7]:
            eq = parse_equation(text)
            for unit in (RationalFunction(3), rf("z + 1")):
                scaled = SchwarzEquation(eq.m, eq.P, eq.Q.scale(unit))
                qclass = classify_Q(scaled)
                self.assertEqual(qclass.tag.value, tag)
                self.assertEqual(qclass.params["c"], classify_Q(eq).params["c"] * unit)

    def test_serialize(self):
        qclass = classify_Q(parse_equation("S(f)^2 = (f + z)/(f - 1/2)^2"))
        serialized = qclass.serialize()
        self.assertEqual(serialized["tag"], "QE15")
        self.assertEqual(serialized["params"]["tau1"], "1/2")
        self.assertEqual(serialized["params"]["n"], "2")

    @settings(max_examples=20, deadline=None)
    @given(
        st.sampled_from(SMALL_GOLDEN),
        st.tuples(*[st.integers(-3, 3) for _ in range(4)]),
    )
    def test_mobius_invariance(self, case, entries):
        _, text, tag, _ = case
        a, b, c, d = entries
        assume(a * d - b * c != 0)
        eq = parse_equation(text)
        taus = [t for t in classify_Q(eq).taus if isinstance(t, Fraction)]
        # no constant root may be sent to infinity
        assume(all(c * t + d != 0 for t in taus))
        transformed = apply_mobius(eq, MobiusMap(a, b, c, d))
        self.assertEqual(classify_Q(transformed).tag.value, tag)
