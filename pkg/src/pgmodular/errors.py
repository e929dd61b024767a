"""Exception types shared across the package.

Errors fall into two families that the command line maps to different exit
codes: bad input (:class:`InputError`) and mathematical rejection of a
well-formed object (:class:`MathRejection`).
"""

from __future__ import annotations


class InputError(ValueError):
    """Malformed input or parameters outside the supported domain."""


class MathRejection(Exception):
    """A well-formed object fails a mathematical property we require."""


class NotPrime(InputError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not a prime")
        self.p = p


class IncidenceParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidParameters(InputError):
    pass


class NonIntegral(InputError):
    """A derived parameter of pg(s,t,alpha) is not an integer."""

    def __init__(self, field: str, value):
        super().__init__(f"NonIntegral({field}): {field} = {value}")
        self.field = field
        self.value = value


class SrdViolation(MathRejection):
    """Condition ``condition`` (1-6) of the strongly-regular-design axioms fails.

    ``witness`` is the lexicographically first offending tuple, as
    ``(kind, index)`` pairs such as ``(("point", 0), ("block", 3))``.
    """

    def __init__(self, condition: int, witness: tuple, detail: str = ""):
        msg = f"Violation(condition {condition}) at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.condition = condition
        self.witness = witness
        self.detail = detail


class NotStronglyRegular(MathRejection):
    pass


class NotCoherent(MathRejection):
    def __init__(self, i: int, j: int, witness: tuple[int, int]):
        super().__init__(
            f"NotCoherent: sigma_{i} sigma_{j} leaves the span (entry {witness})"
        )
        self.i = i
        self.j = j
        self.witness = witness


class NonSquareDimension(MathRejection):
    pass


class LiftingFailure(MathRejection):
    pass
