"""Shared exception types."""


class HypothesisError(ValueError):
    """An operation's mathematical hypothesis fails (e.g. "not cosemisimple")."""


class ResourceCapError(RuntimeError):
    """A graded construction would exceed the configured ambient-dimension cap."""


class StructureError(ValueError):
    """Input data violates a structural axiom (with object and witness)."""
