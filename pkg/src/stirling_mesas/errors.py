"""Exception types shared across the package."""


class StirlingMesasError(Exception):
    """Base class for all errors raised by this package."""


class LengthError(StirlingMesasError):
    """A candidate word has odd length and so cannot pair every value."""


class MultisetError(StirlingMesasError):
    """A candidate word is not a permutation of {1,1,...,n,n}."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class StirlingViolation(StirlingMesasError):
    """A smaller value appears between the two copies of some k."""

    def __init__(self, k, interloper):
        super().__init__(
            f"value {interloper} appears between the two copies of {k}"
        )
        self.k = k
        self.interloper = interloper


class ResourceGuardError(StirlingMesasError):
    """Full enumeration refused: order exceeds the configured ceiling."""

    def __init__(self, n, ceiling):
        super().__init__(
            f"order {n} exceeds the enumeration ceiling {ceiling}; "
            "pass allow_large=True (CLI: --allow-large) to override"
        )
        self.n = n
        self.ceiling = ceiling


class NotAdmissibleError(StirlingMesasError):
    """The candidate set fails the admissibility inequality."""


class ExtensionBlockedError(StirlingMesasError):
    """Adding the next value to a maximal-size set is impossible."""

    def __init__(self, size, context_order):
        super().__init__(
            f"a set of size {size} in context {context_order} is maximal; "
            f"{context_order + 1} cannot be added"
        )
        self.size = size
        self.context_order = context_order


class NotCoprimeError(StirlingMesasError):
    """Path shape (m, l) must be coprime for the below-line test."""


class NotMaximalError(StirlingMesasError):
    """The lattice-path map is only defined on maximal-size sets."""


class WrongContextError(StirlingMesasError):
    """The lattice-path map needs a context order of the form 3k-1."""


class InvalidPathError(StirlingMesasError):
    """A path fails the below-line property or has the wrong shape."""


class EngineDisagreementError(StirlingMesasError):
    """Two counting engines returned different values for the same order."""
