"""Exception types raised by tanglekit."""


class TanglekitError(Exception):
    pass


class BothZero(TanglekitError, ValueError):
    """(0, 0) does not name a point of the projective line."""


class InfinityHasNoCF(TanglekitError, ValueError):
    pass


class InvalidContinuedFraction(TanglekitError, ValueError):
    pass


class LimitTooLarge(TanglekitError, ValueError):
    pass


class InternalError(TanglekitError, AssertionError):
    """A case that the algebra says cannot happen did happen."""


class ParseError(TanglekitError, ValueError):
    """Bad surface syntax. ``index`` is the 1-based token position (0 if unknown)."""

    def __init__(self, reason, index=0, token=None):
        self.reason = reason
        self.index = index
        self.token = token
        if index:
            msg = f"token {index} ({token!r}): {reason}"
        else:
            msg = reason
        super().__init__(msg)
