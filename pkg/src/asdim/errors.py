class InputError(ValueError):
    """Malformed or unsupported user input (CLI exit code 1)."""


class PresentationSyntaxError(InputError):
    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class SchemaError(InputError):
    def __init__(self, message: str, element: str | None = None):
        self.element = element
        super().__init__(f"{element}: {message}" if element else message)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (CLI exit code 2)."""


class DepthLimitExceeded(InvariantViolation):
    pass


class ResourceLimitExceeded(InputError):
    pass
