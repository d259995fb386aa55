"""Exception types shared across the package."""


class SinklabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutation(SinklabError):
    pass


class CapExceeded(SinklabError):
    pass


class IndexOutOfRange(SinklabError):
    pass


class NotASubgroup(SinklabError):
    pass


class NotNormal(SinklabError):
    pass


class NotAnAutomorphism(SinklabError):
    pass


class NotAHomomorphism(SinklabError):
    pass


class InvalidParameters(SinklabError):
    pass


class HypothesisFailed(SinklabError):
    """A lemma checker was invoked on inputs violating its hypotheses."""


class InternalInconsistency(SinklabError):
    """A structural cross-check failed; signals an implementation bug."""


class SpecParseError(SinklabError):
    """Group spec text failed to parse; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
