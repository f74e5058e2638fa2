"""Exception hierarchy shared by every matchforge module."""


class MatchforgeError(Exception):
    """Base class for all library errors."""


class SizeLimitExceeded(MatchforgeError):
    """An exhaustive search was asked to run above its configured bound."""


class WrongFamily(MatchforgeError):
    """A family-only route was called on a generic graph."""


class NoPerfectMatching(MatchforgeError):
    pass


class DisconnectedCells(MatchforgeError):
    """The cell set is empty or not edge-connected."""


class NotPolyomino(MatchforgeError):
    """The cell set encloses a hole that is not a single unit square."""
