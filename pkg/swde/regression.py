import unittest
from typing import List, Optional, Tuple, TYPE_CHECKING

import testtools

from swde.parser import parse_equation
from swde.reducer.reduce import classify_normalized, m1_collapse_holds
from swde.utils import project_absolute_path

if TYPE_CHECKING:
    from swde import SWDE

GOLDEN_CORPUS = project_absolute_path("corpus", "golden.txt")
EXPECT_MARKER = "expect:"

# client passed during suite construction
swde_client: Optional["SWDE"] = None


def read_golden(path: str) -> List[Tuple[int, str, str, str]]:
    """
    Corpus lines carrying an "expect: TAG OUTCOME" comment.
    """
    cases = []
    with open(path, "r") as corpus:
        for lineno, line in enumerate(corpus, start=1):
            content, _, comment = line.partition("#")
            comment = comment.strip()
            if not content.strip() or not comment.startswith(EXPECT_MARKER):
                continue
            tag, _, outcome = comment[len(EXPECT_MARKER):].strip().partition(" ")
            cases.append((lineno, content.strip(), tag, outcome.strip()))
    return cases


class TestSequenceMeta(type):
    def __init__(cls, name, bases, attrs, corpus):
        type.__init__(cls, name, bases, attrs)
        cls.corpus = corpus

    def __new__(mcs, name, bases, dict, corpus):
        def gen_test(text: str, tag: str, outcome: str):
            def test(self):
                eq = parse_equation(text)
                max_shift = swde_client.config.max_shift() if swde_client else 64
                _, qclass, verdict = classify_normalized(eq, max_shift)
                if swde_client:
                    swde_client.logging.info(f"{tag}: {verdict.outcome}")
                self.assertEqual(qclass.tag.value, tag)
                self.assertEqual(verdict.outcome, outcome)
                self.assertTrue(m1_collapse_holds(verdict, eq.m))

            return test

        for lineno, text, tag, outcome in read_golden(corpus):
            dict[f"test_line{lineno:03d}_{tag}"] = gen_test(text, tag, outcome)
        return type.__new__(mcs, name, bases, dict)


class GoldenSequence(unittest.TestCase, metaclass=TestSequenceMeta, corpus=GOLDEN_CORPUS):
    pass


# https://stackoverflow.com/questions/22484805/a-simple-working-example-for-testtools-concurrentstreamtestsuite  # noqa: E501
class TracingStreamResult(testtools.StreamResult):
    all_correct: bool

    def __init__(self):
        self.all_correct = True
        self.success = set()
        self.failures = set()
        self.output = {}

    def status(self, *args, **kwargs):
        self.all_correct = self.all_correct and (kwargs["test_status"] in ["inprogress", "success"])
        test_name = kwargs["test_id"].split(".")[-1]
        if not kwargs["test_status"]:
            test_id = kwargs["test_id"]
            if test_id not in self.output:
                self.output[test_id] = b""
            self.output[test_id] += kwargs["file_bytes"]
        elif kwargs["test_status"] == "fail":
            print("{0[test_id]}: {0[test_status]}".format(kwargs))
            output = self.output.get(kwargs["test_id"], b"").decode()
            print("{0[test_id]}: {1}".format(kwargs, output))
            self.failures.add(test_name)
        elif kwargs["test_status"] == "success":
            self.success.add(test_name)


def run_concurrently(tests: List[unittest.TestCase]) -> TracingStreamResult:
    concurrent_suite = testtools.ConcurrentStreamTestSuite(lambda: ((test, None) for test in tests))
    result = TracingStreamResult()
    result.startTestRun()
    concurrent_suite.run(result)
    result.stopTestRun()
    return result


def regression_suite(client: Optional["SWDE"] = None, name_filter: Optional[str] = None) -> bool:
    """
    Run the golden corpus; returns True when some test failed.
    """
    global swde_client
    swde_client = client
    suite = unittest.defaultTestLoader.loadTestsFromTestCase(GoldenSequence)
    tests = []
    for test in suite:
        test_name = test._testMethodName  # type: ignore
        if not name_filter or name_filter in test_name:
            tests.append(test)
        else:
            print(f"Skip test {test_name}")
    result = run_concurrently(tests)
    print(f"Successfully executed {len(result.success)} out of {len(tests)} golden tests")
    for suc in sorted(result.success):
        print(f"- {suc}")
    if len(result.failures):
        print(f"Failures when executing {len(result.failures)} out of {len(tests)} golden tests")
        for failure in sorted(result.failures):
            print(f"- {failure}")
    return not result.all_correct
