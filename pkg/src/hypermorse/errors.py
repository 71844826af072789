"""Exception types shared across the package."""


class HypermorseError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDocumentError(HypermorseError):
    """An input document violates the JSON schema or its invariants."""


class NotMorseError(HypermorseError):
    """An operation required a discrete Morse function but the input is not one."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(
            "function is not a discrete Morse function (%d violating hyperedges)"
            % len(self.violations)
        )


class MorphismError(HypermorseError):
    """A vertex map fails to be a hypergraph morphism."""

    def __init__(self, message, offending_edge=None):
        self.offending_edge = offending_edge
        super().__init__(message)


class SizeCapExceeded(HypermorseError):
    """An exhaustive search was rejected because the instance exceeds the cap."""


class MalformedSubcomplexError(HypermorseError):
    """A claimed sub-chain complex is not closed under the boundary map."""


class InternalConsistencyError(HypermorseError):
    """Two independent computations of the same object disagree (a bug)."""
