"""Exception types shared across the workbench.

The CLI maps every subclass of NerodeError to exit status 2 (input or
precondition error); verification *violations* are report content, not
exceptions, and map to exit status 1.
"""


class NerodeError(Exception):
    """Base class for all workbench errors."""


class InputError(NerodeError):
    """A value violates an operation's input contract."""


class RegexParseError(InputError):
    """Regex pattern rejected; carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class SpecFileError(InputError):
    """Language spec file rejected; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class ConfigError(NerodeError):
    """Unknown builtin oracle name or bad oracle parameters."""


class ResourceError(NerodeError):
    """A configured resource cap was exceeded."""


class DepthExhaustedError(NerodeError):
    """A depth-0 truncated point cannot absorb another letter."""


class UnsupportedPresentationError(NerodeError):
    """Operation requires a rational (regex or DFA) presentation."""


class TrimnessError(NerodeError):
    """Automaton has states unreachable from the initial state."""

    def __init__(self, states):
        self.states = tuple(states)
        super().__init__(f"states unreachable from the initial state: {self.states}")


class RecognitionMismatchError(NerodeError):
    """Claimed recognizer disagrees with the language on a witness word."""

    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"language mismatch at witness {witness!r}")


class RecognitionError(NerodeError):
    """A monoid/final-set pair fails to recognize the language."""

    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"recognition fails at witness {witness!r}")


class IllDefinedHomError(NerodeError):
    """Two words with equal image in the source monoid map to distinct
    syntactic images, so no homomorphism exists (the claimed final set
    cannot actually recognize the language)."""

    def __init__(self, pair):
        self.pair = (pair[0], pair[1])
        super().__init__(
            f"words {self.pair[0]!r} and {self.pair[1]!r} have equal source "
            f"image but distinct syntactic image"
        )


class ConsistencyError(NerodeError):
    """An internal invariant broke; indicates a bug, not bad input."""
