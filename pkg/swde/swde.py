from fractions import Fraction
from multiprocessing.pool import ThreadPool
from typing import Dict, List, Optional, Tuple

from swde.algebra.rational import RationalFunction
from swde.classifier.classify import QClass, classify_Q
from swde.config import SWDEConfig
from swde.equation.equation import SchwarzEquation
from swde.equation.mobius import normalize_degrees
from swde.equation.schwarzian import schwarzian_rational
from swde.errors import AnalysisError
from swde.parser import parse_equation, parse_rational_function, read_corpus
from swde.reducer.reduce import classify_normalized
from swde.reducer.verify import VerificationResult, verify_candidate
from swde.report import build_classify_report, build_report, error_report
from swde.series.candidates import Candidate
from swde.utils import LoggingBase, LoggingHandlers


class SWDE(LoggingBase):
    """
    Entry point of the command line: every command goes through one client
    holding the configuration and the logging handlers.
    """

    @property
    def config(self) -> SWDEConfig:
        return self._config

    @property
    def verbose(self) -> bool:
        return self._verbose

    @property
    def logging_filename(self) -> Optional[str]:
        return self._logging_filename

    def generate_logging_handlers(self, logging_filename: Optional[str] = None) -> LoggingHandlers:
        filename = logging_filename if logging_filename else self.logging_filename
        if filename in self._handlers:
            return self._handlers[filename]
        else:
            handlers = LoggingHandlers(verbose=self.verbose, filename=filename)
            self._handlers[filename] = handlers
            return handlers

    def __init__(
        self,
        verbose: bool = False,
        logging_filename: Optional[str] = None,
        config: Optional[SWDEConfig] = None,
    ):
        super().__init__()
        self._config = config if config else SWDEConfig()
        self._verbose = verbose
        self._logging_filename = logging_filename
        self._handlers: Dict[Optional[str], LoggingHandlers] = {}
        self.logging_handlers = self.generate_logging_handlers()

    def schwarzian(self, text: str) -> RationalFunction:
        return schwarzian_rational(parse_rational_function(text))

    def classify(self, text: str) -> Tuple[SchwarzEquation, QClass]:
        eq = parse_equation(text)
        normalized, _ = normalize_degrees(eq, self._config.max_shift())
        qclass = classify_Q(normalized)
        self.logging.info(f"Classified {eq.render()} as {qclass.tag.value}")
        return eq, qclass

    def classify_report(self, text: str) -> dict:
        eq, qclass = self.classify(text)
        return build_classify_report(text, eq, qclass)

    def reduce_report(self, text: str, eq: Optional[SchwarzEquation] = None) -> dict:
        if eq is None:
            eq = parse_equation(text)
        normalized, _, verdict = classify_normalized(eq, self._config.max_shift())
        self.logging.info(f"Reduced {eq.render()} to {verdict.outcome}")
        for line in verdict.diagnostics:
            self.logging.debug(line)
        return build_report(text, eq, verdict, normalized)

    def verify(
        self, text: str, descriptor: str, at: Fraction, trunc: Optional[int] = None
    ) -> VerificationResult:
        eq = parse_equation(text)
        candidate = Candidate.deserialize(descriptor)
        trunc = trunc if trunc is not None else self._config.truncation()
        self.logging.info(f"Verifying {candidate} at z0 = {at} with {trunc} coefficients")
        result = verify_candidate(eq, candidate, at, trunc)
        if not result.transcendental:
            self.logging.warning(f"Candidate {candidate} is not transcendental")
        return result

    def batch(self, path: str, workers: Optional[int] = None) -> List[dict]:
        """
        Reduce every corpus line; the reports come back in corpus order.
        Analysis failures are reported per line instead of aborting the batch.
        """
        entries = read_corpus(path)
        threads = workers if workers else self._config.batch_workers()
        self.logging.info(f"Processing {len(entries)} equations with {threads} workers")

        def process(entry) -> dict:
            lineno, text, eq = entry
            try:
                return self.reduce_report(text, eq)
            except AnalysisError as e:
                self.logging.error(f"Line {lineno}: {e}")
                return error_report(text, e)

        with ThreadPool(threads) as pool:
            return pool.map(process, entries)
