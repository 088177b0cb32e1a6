"""Framed messages and the two pepper procedures between machines.

Wire format, binary, big-endian:

    magic   4 bytes  "ASHP"
    version 1 byte   0x01
    type    1 byte   0x01 pepper share, 0x02 challenge, 0x03 response,
                     0x04 verdict
    length  4 bytes  payload byte count
    payload

The module is transport-agnostic: it turns frames into bytes and back,
and drives per-session state machines; pipes or sockets are the caller's
business.

Pepper agreement: every party contributes one block and all blocks are
XORed together, so a single honestly random participant makes the shared
pepper random. Challenge-response: the challenger sends a fresh pepper and
accepts only a responder who can produce the matching dynamic section,
which requires actually holding the data.
"""

from __future__ import annotations

import hmac
import os
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import BinaryIO, Callable, Iterable

from .digest import dynamic_section
from .errors import (
    BadFrameTypeError,
    BadMagicError,
    BadVersionError,
    ProtocolError,
    TruncatedFrameError,
)
from .seasoning import combine_shares, generate_pepper
from .variants import AshVariant

MAGIC = b"ASHP"
VERSION = 0x01
HEADER_SIZE = 10


class FrameType(IntEnum):
    PEPPER_SHARE = 0x01
    CHALLENGE = 0x02
    RESPONSE = 0x03
    VERDICT = 0x04


@dataclass(frozen=True)
class ProtocolFrame:
    frame_type: FrameType
    payload: bytes
    version: int = VERSION

    def __post_init__(self) -> None:
        if self.version != VERSION:
            raise BadVersionError(f"unsupported version {self.version:#x}")
        if self.frame_type not in tuple(FrameType):
            raise BadFrameTypeError(f"unknown frame type {self.frame_type:#x}")


def encode_frame(frame: ProtocolFrame) -> bytes:
    return (
        MAGIC
        + bytes((frame.version, frame.frame_type))
        + len(frame.payload).to_bytes(4, "big")
        + frame.payload
    )


def decode_frame(data: bytes) -> tuple[ProtocolFrame, bytes]:
    """Consume exactly one frame; return it with the unread remainder."""
    if len(data) < HEADER_SIZE:
        raise TruncatedFrameError(f"{len(data)} bytes is shorter than a frame header")
    if data[:4] != MAGIC:
        raise BadMagicError(f"bad magic {data[:4]!r}")
    version = data[4]
    if version != VERSION:
        raise BadVersionError(f"unsupported version {version:#x}")
    frame_type = data[5]
    if frame_type not in tuple(FrameType):
        raise BadFrameTypeError(f"unknown frame type {frame_type:#x}")
    length = int.from_bytes(data[6:10], "big")
    end = HEADER_SIZE + length
    if len(data) < end:
        raise TruncatedFrameError(
            f"payload declares {length} bytes but only {len(data) - HEADER_SIZE} present"
        )
    return ProtocolFrame(FrameType(frame_type), data[HEADER_SIZE:end]), data[end:]


def write_frame(stream: BinaryIO, frame: ProtocolFrame) -> None:
    stream.write(encode_frame(frame))
    stream.flush()


def read_frame(stream: BinaryIO) -> ProtocolFrame | None:
    """Read one frame from a blocking stream; None on clean end-of-stream."""
    header = stream.read(HEADER_SIZE)
    if not header:
        return None
    while len(header) < HEADER_SIZE:
        more = stream.read(HEADER_SIZE - len(header))
        if not more:
            raise TruncatedFrameError("stream ended inside a frame header")
        header += more
    # validate the header before trusting its length field
    if header[:4] != MAGIC:
        raise BadMagicError(f"bad magic {header[:4]!r}")
    if header[4] != VERSION:
        raise BadVersionError(f"unsupported version {header[4]:#x}")
    if header[5] not in tuple(FrameType):
        raise BadFrameTypeError(f"unknown frame type {header[5]:#x}")
    length = int.from_bytes(header[6:10], "big")
    payload = b""
    while len(payload) < length:
        more = stream.read(length - len(payload))
        if not more:
            raise TruncatedFrameError("stream ended inside a frame payload")
        payload += more
    return ProtocolFrame(FrameType(header[5]), payload)


def run_pepper_agreement(local_share: bytes, received_shares: Iterable[bytes]) -> bytes:
    """XOR the local share with everyone else's; all parties get the same pepper."""
    return combine_shares([local_share, *received_shares])


class Phase(Enum):
    IDLE = "idle"
    AWAITING_CHALLENGE = "awaiting_challenge"
    AWAITING_RESPONSE = "awaiting_response"
    DONE = "done"


class Challenger:
    """Issues a fresh pepper and checks the response against a local copy.

    Phases move strictly forward: idle -> awaiting_response -> done. A frame
    that cannot be accepted raises ProtocolError and leaves the phase (and
    everything else) untouched. One instance is one session; never reuse a
    pepper across sessions, and drive an instance from one thread at a time.
    """

    def __init__(self, variant: AshVariant, rng: Callable[[int], bytes] = os.urandom):
        self.variant = variant
        self.phase = Phase.IDLE
        self.pepper: bytes | None = None
        self.accepted: bool | None = None
        self._rng = rng

    def issue(self) -> ProtocolFrame:
        """Produce the challenge frame carrying a fresh pepper."""
        if self.phase is not Phase.IDLE:
            raise ProtocolError(f"cannot issue a challenge in phase {self.phase.value}")
        pepper = generate_pepper(self.variant, self._rng)
        self.pepper = pepper
        self.phase = Phase.AWAITING_RESPONSE
        return ProtocolFrame(FrameType.CHALLENGE, pepper)

    def check(self, response: ProtocolFrame, message: bytes) -> ProtocolFrame:
        """Compare the response against the local copy; emit the verdict frame."""
        if self.phase is not Phase.AWAITING_RESPONSE:
            raise ProtocolError(f"cannot check a response in phase {self.phase.value}")
        if response.frame_type is not FrameType.RESPONSE:
            raise ProtocolError(f"expected a response frame, got {response.frame_type.name}")
        if len(response.payload) != self.variant.section_size:
            raise ProtocolError(
                f"response carries {len(response.payload)} bytes, "
                f"wanted {self.variant.section_size}"
            )
        expected = dynamic_section(message, self.variant, self.pepper)
        accepted = hmac.compare_digest(expected, response.payload)
        self.accepted = accepted
        self.phase = Phase.DONE
        return ProtocolFrame(FrameType.VERDICT, b"\x01" if accepted else b"\x00")


class Responder:
    """Proves possession of the message under whatever pepper arrives.

    Phases: awaiting_challenge -> done; rejected frames change nothing.
    """

    def __init__(self, variant: AshVariant):
        self.variant = variant
        self.phase = Phase.AWAITING_CHALLENGE

    def answer(self, challenge: ProtocolFrame, message: bytes) -> ProtocolFrame:
        if self.phase is not Phase.AWAITING_CHALLENGE:
            raise ProtocolError(f"cannot answer a challenge in phase {self.phase.value}")
        if challenge.frame_type is not FrameType.CHALLENGE:
            raise ProtocolError(f"expected a challenge frame, got {challenge.frame_type.name}")
        if len(challenge.payload) != self.variant.pepper_size:
            raise ProtocolError(
                f"challenge carries {len(challenge.payload)} bytes, "
                f"wanted {self.variant.pepper_size}"
            )
        section = dynamic_section(message, self.variant, challenge.payload)
        self.phase = Phase.DONE
        return ProtocolFrame(FrameType.RESPONSE, section)


def verdict_accepted(frame: ProtocolFrame) -> bool:
    """Read a verdict frame; True means the challenger accepted."""
    if frame.frame_type is not FrameType.VERDICT:
        raise ProtocolError(f"expected a verdict frame, got {frame.frame_type.name}")
    if frame.payload == b"\x01":
        return True
    if frame.payload == b"\x00":
        return False
    raise ProtocolError(f"malformed verdict payload {frame.payload!r}")
