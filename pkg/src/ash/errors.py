"""Exception types shared across the package."""


class AshError(Exception):
    """Base class for all errors raised by this package."""


class MessageTooLongError(AshError):
    """Message bit length does not fit the padding length field."""


class SizeMismatchError(AshError):
    """A pepper, share, salt half, section, or stream has the wrong length."""


class DigestFormatError(AshError):
    """An encoded digest could not be parsed. Distinct from a mismatch."""


class FrameError(AshError):
    """Base class for protocol frame decode errors."""


class BadMagicError(FrameError):
    """Frame does not start with the ASHP magic."""


class BadVersionError(FrameError):
    """Frame carries an unsupported protocol version."""


class BadFrameTypeError(FrameError):
    """Frame carries an unknown frame type."""


class TruncatedFrameError(FrameError):
    """Frame ends before the declared payload (or header) is complete."""


class ProtocolError(AshError):
    """An out-of-phase or semantically invalid protocol message."""
