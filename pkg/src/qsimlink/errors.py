"""Exception types shared across the package."""


class ContractionError(ValueError):
    """Invalid tensor contraction, network, or contraction plan."""


class CircuitParseError(ValueError):
    """Malformed circuit text. Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ResourceLimitError(RuntimeError):
    """Request exceeds the configured desk-scale resource guards."""
