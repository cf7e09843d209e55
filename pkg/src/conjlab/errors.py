"""Shared exception types."""


class ConjlabError(Exception):
    """Base class for all conjlab errors."""


class CapExceeded(ConjlabError):
    """A resource cap (group order, field size, scan size) was exceeded."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.cap = cap


class SpecFileError(ConjlabError):
    """A group-spec file is malformed or fails validation."""


class ConstructionError(ConjlabError):
    """A family constructor produced a group of unexpected order."""


class InternalCheckError(ConjlabError):
    """Two redundant computations of the same quantity disagreed."""
