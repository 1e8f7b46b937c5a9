"""Exception types shared across the package."""


class FlagBottError(Exception):
    pass


class InputError(FlagBottError, ValueError):
    """Malformed tower, fan or matrix data."""


class CapExceeded(FlagBottError, RuntimeError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class FanError(FlagBottError, ValueError):
    """A fan operation was given a cone or fan it cannot act on."""
