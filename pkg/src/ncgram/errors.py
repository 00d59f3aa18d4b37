"""Shared exception types."""


class ShapeError(ValueError):
    """Operands have incompatible point counts / matrix dimensions."""


class RotationUndefined(ValueError):
    """Rotation requested from an empty row."""


class BudgetError(RuntimeError):
    """A computation exceeds the configured size budget."""
