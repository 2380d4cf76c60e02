"""Exception hierarchy shared by the whole package."""


class AdbError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AdbError):
    """Malformed text input (automaton file or word syntax)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class InvalidSymbol(AdbError):
    def __init__(self, name):
        super().__init__("invalid symbol: %r" % (name,))
        self.name = name


class ReservedSymbol(AdbError):
    def __init__(self, name):
        super().__init__("reserved symbol used as output symbol: %r" % (name,))
        self.name = name


class DecreasingTimestamp(AdbError):
    def __init__(self, index):
        super().__init__("timestamp decreases at letter %d" % index)
        self.index = index


class UnknownLocation(AdbError):
    def __init__(self, name):
        super().__init__("unknown location: %r" % (name,))
        self.name = name


class DuplicateLocation(AdbError):
    def __init__(self, name):
        super().__init__("duplicate location: %r" % (name,))
        self.name = name


class MissingStart(AdbError):
    def __init__(self, message="no start location declared"):
        super().__init__(message)


class InvalidStep(AdbError):
    def __init__(self, index):
        super().__init__("run step %d is not a transition of the automaton" % index)
        self.index = index


class UnknownSymbol(AdbError):
    def __init__(self, name):
        super().__init__("symbol not in alphabet: %r" % (name,))
        self.name = name


class IncompatibleAlphabet(AdbError):
    pass


class BoundExceeded(AdbError):
    """A search or enumeration hit the configured state/run cap."""

    def __init__(self, cap):
        super().__init__("exceeded cap of %d" % cap)
        self.cap = cap


class WindowTooShort(AdbError):
    def __init__(self, needed, got):
        super().__init__(
            "pumping window spans %d transitions, need at least %d" % (got, needed)
        )
        self.needed = needed
        self.got = got


class InternalVerificationFailure(AdbError):
    """A produced counterexample failed its own sanity check; implementation bug."""
