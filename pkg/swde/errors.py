from typing import List, Optional, Tuple

"""
    Two families: InputError for malformed user input (usage errors, exit 2)
    and AnalysisError for inputs that parse but cannot be analyzed (exit 1).
"""


class SWDEError(RuntimeError):
    pass


class InputError(SWDEError):
    pass


class AnalysisError(SWDEError):
    pass


class EquationSyntaxError(InputError):
    def __init__(self, message: str, position: int = 0, text: Optional[str] = None):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class NonPositiveExponent(InputError):
    def __init__(self, exponent: int):
        self.exponent = exponent
        super().__init__(f"Schwarzian exponent must be positive, got {exponent}")


class ZeroDenominator(InputError):
    def __init__(self, what: str = "expression"):
        super().__init__(f"Division by zero in {what}")


class CorpusError(InputError):
    def __init__(self, filename: str, errors: List[Tuple[int, str]]):
        self.filename = filename
        self.errors = errors
        lines = "\n".join(f"  line {lineno}: {msg}" for lineno, msg in errors)
        super().__init__(f"Corpus {filename} rejected:\n{lines}")


class InvalidTruncation(InputError):
    def __init__(self, value, source: str, minimum: int):
        self.value = value
        super().__init__(
            f"{source}: truncation must be an integer of at least {minimum}, got {value!r}"
        )


class UnsupportedCandidate(InputError):
    def __init__(self, descriptor: str, reason: str = "unknown candidate family"):
        self.descriptor = descriptor
        super().__init__(f"Unsupported candidate {descriptor!r}: {reason}")


class DivisionByZero(AnalysisError):
    def __init__(self):
        super().__init__("Division by the zero rational function")


class ZeroFunction(AnalysisError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} is undefined for the zero function")


class Unsplittable(AnalysisError):
    def __init__(self, part: str, multiplicity: int, degree: int):
        self.part = part
        self.multiplicity = multiplicity
        self.degree = degree
        super().__init__(
            f"Irreducible factor {part} of degree {degree} in f "
            f"(multiplicity {multiplicity}) admits no linear or quadratic split"
        )


class BasePointMismatch(AnalysisError):
    def __init__(self, first, second):
        super().__init__(f"Series expanded at different points: {first} and {second}")


class DivisionByZeroSeries(AnalysisError):
    def __init__(self):
        super().__init__("Division by a series vanishing up to its truncation order")


class ConstantInput(AnalysisError):
    def __init__(self, what: str = "function"):
        super().__init__(f"Schwarzian undefined: the {what} is constant")


class DegenerateMap(AnalysisError):
    def __init__(self):
        super().__init__("Möbius map has vanishing determinant ad - bc")


class NonConstantMap(AnalysisError):
    def __init__(self):
        super().__init__("Möbius map must have constant coefficients to act on an equation")


class SingularCoefficient(AnalysisError):
    def __init__(self, coefficient: str, point):
        super().__init__(f"Coefficient {coefficient} has a zero or a pole at z = {point}")


class NotAZero(AnalysisError):
    def __init__(self, reason: str):
        super().__init__(f"Expansion point is not an admissible zero: {reason}")


class NoAuxiliary(AnalysisError):
    def __init__(self, tag: str, reason: str = "no auxiliary function is defined"):
        super().__init__(f"{tag}: {reason}")


class TruncationExhausted(AnalysisError):
    def __init__(self, what: str = "series"):
        super().__init__(f"Cancellation consumed every trustworthy coefficient of the {what}")


class SingularPoint(AnalysisError):
    def __init__(self, point, reason: str):
        super().__init__(f"z = {point} is singular: {reason}")
