"""Exception hierarchy shared by every orbistruct module."""


class OrbistructError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatchError(OrbistructError, ValueError):
    pass


class ResourceLimitError(OrbistructError):
    """A group (or search space) exceeds a configured order cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            f"{what}: size {size} exceeds order cap {cap} "
            f"(override with ORBISTRUCT_ORDER_CAP)"
        )


class NotSubgroupError(OrbistructError, ValueError):
    pass


class NotNormalError(OrbistructError, ValueError):
    pass


class ChainError(OrbistructError, ValueError):
    """A subgroup chain fails validation."""


class ConsistencyError(OrbistructError):
    """An identity that must hold by theory was violated at runtime."""


class CycleParseError(OrbistructError, ValueError):
    def __init__(self, message: str, text: str, position: int | None = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}: {text!r}")
