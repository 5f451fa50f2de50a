import unittest
from fractions import Fraction

from swde.algebra.fpoly import FPoly
from swde.algebra.rational import RationalFunction
from swde.equation.equation import SchwarzEquation
from swde.equation.mobius import MobiusMap, apply_mobius
from swde.errors import SingularPoint
from swde.parser import parse_equation
from swde.reducer.reduce import classify_normalized, m1_collapse_holds, reduce
from swde.reducer.verdict import Target
from swde.reducer.verify import riccati_residual, verify_candidate
from swde.regression import GOLDEN_CORPUS, read_golden
from swde.report import REPORT_KEYS, build_classify_report, build_report, error_report
from swde.series.candidates import Candidate
from swde.utils import exact_numbers

SMALL_GOLDEN = [case for case in read_golden(GOLDEN_CORPUS) if parse_equation(case[1]).deg_Q <= 4]


def certificates_of(verdict, kind: str) -> list:
    return [c for c in verdict.certificates if c["kind"] == kind]


class ReduceTest(unittest.TestCase):
    def test_golden_corpus(self):
        for _, text, tag, outcome in read_golden(GOLDEN_CORPUS):
            with self.subTest(text=text):
                eq = parse_equation(text)
                verdict = reduce(eq)
                self.assertEqual(verdict.qclass.tag.value, tag)
                self.assertEqual(verdict.outcome, outcome)
                self.assertTrue(m1_collapse_holds(verdict, eq.m))

    def test_first_order_template(self):
        verdict = reduce(parse_equation("S(f) = (f^4 + z)/((f + z)^2*(f - 1)*(f - 2))"))
        self.assertEqual(verdict.template, "(f')^2 = a(z)(f + z)^2(f - 1)(f - 2)")

    def test_equal_orders_schwarz_form(self):
        verdict = reduce(parse_equation("S(f)^2 = (f - 3)^2/((f - 1)*(f - 2))"))
        self.assertEqual(verdict.outcomes, [Target.E11])
        self.assertEqual(verdict.template, "S(u,z)^2 = c(z)(u - α1)^2/((u - 1)(u - 2))")
        (constraint,) = certificates_of(verdict, "constraint")
        self.assertTrue(constraint["equal"])

    def test_unequal_orders(self):
        verdict = reduce(parse_equation("S(f)^2 = (f^3 + z)/((f - 1)^2*(f - 2))"))
        self.assertEqual(verdict.qclass.tag.value, "QE14")
        self.assertEqual(verdict.outcomes, [Target.NO_TRANSCENDENTAL])
        (constraint,) = certificates_of(verdict, "constraint")
        self.assertEqual((constraint["n1"], constraint["n2"]), (2, 4))
        self.assertFalse(constraint["equal"])

    def test_moving_pole_form_without_solutions(self):
        verdict = reduce(parse_equation("S(f)^3 = (f^8 + z)/((f + z)^6*(f - 1)^2)"))
        self.assertEqual(verdict.qclass.tag.value, "QE5")
        self.assertEqual(verdict.qclass.params["n"], 3)
        self.assertEqual(verdict.outcome, "NoTranscendentalSolution")

    def test_disjunction(self):
        verdict = reduce(parse_equation("S(f)^2 = (f + z)/(f - 1)"))
        self.assertTrue(verdict.is_disjunctive)
        self.assertEqual(verdict.outcome, "Riccati | SchwarzForm(E8)")
        self.assertEqual(
            verdict.template, "f' = a(z) + b(z)f + c(z)f^2 | S(u,z)^2 = c(z)(u - α1)/(u - 1)"
        )

    def test_unclassified(self):
        verdict = reduce(parse_equation("S(f) = 1/(f - 1)^2"))
        self.assertEqual(verdict.outcomes, [Target.UNCLASSIFIED])
        self.assertIsNone(verdict.template)
        self.assertTrue(any("no form fits" in d for d in verdict.diagnostics))

    def test_feasibility_certificates(self):
        verdict = reduce(parse_equation("S(f)^3 = (f^7 + z)/((f - 1)^3*(f - 2)^2*(f - 3)^2)"))
        feasibility = certificates_of(verdict, "feasibility")
        self.assertEqual(len(feasibility), 2)

    def test_normalization(self):
        normalized, qclass, verdict = classify_normalized(parse_equation("S(f) = f"))
        self.assertTrue(normalized.is_balanced)
        self.assertEqual(qclass.tag.value, "QE15")
        self.assertTrue(verdict.mobius.equivalent(MobiusMap.shift_map(1)))
        self.assertTrue(any("degrees balanced" in d for d in verdict.diagnostics))
        self.assertEqual(verdict.outcome, "Riccati | FirstOrder(E7)")

    def test_cancelled_common_factor(self):
        verdict = reduce(parse_equation("S(f) = (f - 3)*(f + z)/((f - 3)*(f - 1))"))
        self.assertIn("common factor of P and Q cancelled", verdict.diagnostics)
        self.assertEqual(verdict.qclass.tag.value, "QE15")

    def test_mobius_invariance(self):
        mobius = MobiusMap(2, 1, 1, 5)
        for _, text, _, outcome in SMALL_GOLDEN:
            with self.subTest(text=text):
                transformed = apply_mobius(parse_equation(text), mobius)
                self.assertEqual(reduce(transformed).outcome, outcome)

    def test_m1_collapse_vacuous_above_one(self):
        verdict = reduce(parse_equation("S(f)^2 = (f + z)/(f - 1)"))
        self.assertTrue(m1_collapse_holds(verdict, 2))
        self.assertFalse(m1_collapse_holds(verdict))

    def test_target_deserialize(self):
        self.assertEqual(Target.deserialize("SchwarzForm(E8)"), Target.E8)
        self.assertTrue(Target.E3.is_first_order)
        self.assertTrue(Target.E14.is_schwarz_form)
        with self.assertRaises(Exception):
            Target.deserialize("SchwarzForm(E15)")


class VerifyTest(unittest.TestCase):
    def test_tangent(self):
        eq = parse_equation("S(f) = 2")
        for z0 in (0, 1, Fraction(-1, 2)):
            result = verify_candidate(eq, Candidate.deserialize("tan:1"), z0, 20)
            self.assertTrue(result.verified)
            self.assertTrue(result.transcendental)
            self.assertEqual(result.flags, [])

    def test_exponential(self):
        eq = parse_equation("S(f) = -1/2")
        self.assertTrue(verify_candidate(eq, Candidate.deserialize("exp:1"), 0, 20).verified)

    def test_mobius_candidate(self):
        eq = parse_equation("S(f) = 2")
        candidate = Candidate.deserialize("mobius-tan:1:1:2:3:4")
        self.assertTrue(verify_candidate(eq, candidate, 0, 16).verified)

    def test_rational_candidate_is_flagged(self):
        eq = parse_equation("S(f) = 0")
        result = verify_candidate(eq, Candidate.deserialize("rational:(2z+3)/(z-5)"), 0, 12)
        self.assertTrue(result.verified)
        self.assertFalse(result.transcendental)
        self.assertEqual(result.flags, ["candidate is not transcendental"])

    def test_mismatch(self):
        eq = parse_equation("S(f) = -1/2")
        result = verify_candidate(eq, Candidate.deserialize("tan:1"), 0, 12)
        self.assertFalse(result.verified)
        self.assertEqual(result.residual.coefficient(0), Fraction(5, 2))
        serialized = result.serialize()
        self.assertFalse(serialized["verified"])
        self.assertEqual(serialized["candidate"], "tan:1")
        self.assertEqual(serialized["at"], "0")

    def test_singular_point(self):
        coefficient = RationalFunction.from_expr("1/z")
        irregular = SchwarzEquation(1, FPoly([coefficient, 1]), FPoly.linear(1))
        with self.assertRaises(SingularPoint):
            verify_candidate(irregular, Candidate.deserialize("tan:1"), 0, 12)
        with self.assertRaises(SingularPoint):
            verify_candidate(
                parse_equation("S(f) = 0"), Candidate.deserialize("rational:1/z"), 0, 12
            )

    def test_riccati_residual(self):
        u = Candidate.deserialize("tan:1").series(Fraction(0), 16)
        one, zero = RationalFunction(1), RationalFunction(0)
        self.assertTrue(riccati_residual(u, one, zero, one).is_zero)
        self.assertFalse(riccati_residual(u, one, zero, zero).is_zero)


def bare_numbers(value, path="report") -> list:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return []
    if isinstance(value, (int, float, Fraction)):
        return [path]
    if isinstance(value, dict):
        return [p for key, item in value.items() for p in bare_numbers(item, f"{path}.{key}")]
    if isinstance(value, list):
        return [p for i, item in enumerate(value) for p in bare_numbers(item, f"{path}[{i}]")]
    return [path]


class ReportTest(unittest.TestCase):
    def test_report_keys(self):
        text = "S(f) = f"
        eq = parse_equation(text)
        normalized, _, verdict = classify_normalized(eq)
        report = build_report(text, eq, verdict, normalized)
        self.assertEqual(set(report), set(REPORT_KEYS) | {"normalized"})
        self.assertEqual((report["m"], report["degP"], report["degQ"]), ("1", "1", "0"))
        self.assertEqual(report["verdict"]["outcome"], "Riccati | FirstOrder(E7)")

    def test_classify_report(self):
        text = "S(f) = (f + z)/(f - 1)"
        eq = parse_equation(text)
        report = build_classify_report(text, eq, classify_normalized(eq)[1])
        self.assertEqual(set(report), set(REPORT_KEYS))
        self.assertIsNone(report["verdict"])
        self.assertEqual(report["certificates"], [])
        self.assertEqual(report["qclass"]["params"]["n"], "2")

    def test_numbers_are_exact_strings(self):
        for _, text, _, _ in read_golden(GOLDEN_CORPUS):
            with self.subTest(text=text):
                eq = parse_equation(text)
                normalized, qclass, verdict = classify_normalized(eq)
                self.assertEqual(bare_numbers(build_report(text, eq, verdict, normalized)), [])
                self.assertEqual(bare_numbers(build_classify_report(text, eq, qclass)), [])
        result = verify_candidate(parse_equation("S(f) = 2"), Candidate.deserialize("tan:1"), 0, 8)
        self.assertEqual(bare_numbers(result.serialize()), [])

    def test_exact_numbers(self):
        self.assertEqual(
            exact_numbers({"n": 2, "ratio": Fraction(-3, 4), "equal": True, "items": (1, None)}),
            {"n": "2", "ratio": "-3/4", "equal": True, "items": ["1", None]},
        )

    def test_error_report(self):
        report = error_report("S(f) = +", ValueError("bad"))
        self.assertEqual(report["error_type"], "ValueError")
        self.assertEqual(report["error"], "bad")
