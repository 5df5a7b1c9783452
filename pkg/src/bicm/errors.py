"""Exception types shared across the package."""


class ComplexError(ValueError):
    """Invalid input: bad vertex labels, void complexes, malformed files."""


class GuardExceeded(RuntimeError):
    """A computation would exceed its configured size guard."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what}: {value} exceeds guard {limit}")
        self.what = what
        self.value = value
        self.limit = limit
