"""Padding, half-block splitting, and the interleave permutation.

A message is padded to whole base-hash blocks, the blocks are cut into 2N
half-blocks, and half k is paired with half k+N (1-based), so output block
k is ``h_k || h_{k+N}``. Ten halves therefore leave in the order
1,6,2,7,3,8,4,9,5,10. Appending data to the message changes N and with it
every pairing, which is what stops a single-block collision from surviving
an appended suffix.
"""

from __future__ import annotations

from typing import Sequence

from .errors import MessageTooLongError, SizeMismatchError
from .variants import AshVariant

# Run length for the strided copy loops; keeps the working set cache-resident.
_CHUNK_HALVES = 8192


def pad_suffix(message_length: int, variant: AshVariant) -> bytes:
    """Bytes appended to a message of the given length.

    0x80, then the fewest zero bytes that make the total a whole number of
    blocks with the big-endian bit length in the final ``length_field_size``
    bytes. Injective in the message: two different messages never pad to
    the same stream.
    """
    bits = message_length * 8
    field = variant.length_field_size
    if bits >= 1 << (8 * field):
        raise MessageTooLongError(
            f"{message_length}-byte message does not fit a {field}-byte length field"
        )
    zeros = -(message_length + 1 + field) % variant.block_size
    return b"\x80" + bytes(zeros) + bits.to_bytes(field, "big")


def pad_message(message: bytes, variant: AshVariant) -> bytes:
    """Pad a message to a positive multiple of the variant's block size."""
    return message + pad_suffix(len(message), variant)


def split_halves(stream: bytes, variant: AshVariant) -> list[bytes]:
    """Cut a block-aligned stream into its 2N half-blocks, in stream order."""
    if not stream or len(stream) % variant.block_size != 0:
        raise SizeMismatchError(
            f"stream of {len(stream)} bytes is not a positive multiple of "
            f"{variant.block_size}-byte blocks"
        )
    h = variant.half_size
    return [stream[i : i + h] for i in range(0, len(stream), h)]


def interleave(halves: Sequence[bytes]) -> bytes:
    """Reorder 2N half-blocks as h1, h(N+1), h2, h(N+2), ... and rejoin.

    With one block (N=1) the order is unchanged. An odd half count cannot
    come out of ``split_halves`` and is rejected.
    """
    if not halves or len(halves) % 2 != 0:
        raise SizeMismatchError(f"cannot interleave {len(halves)} halves")
    n = len(halves) // 2
    out = []
    for k in range(n):
        out.append(halves[k])
        out.append(halves[n + k])
    return b"".join(out)


def restructure(message: bytes, variant: AshVariant) -> bytes:
    """Pad, split, and interleave; what actually gets fed to the base hash.

    Equal to ``interleave(split_halves(pad_message(message, variant)))`` and
    always the same length as the padded message.
    """
    return interleave_block_aligned(pad_message(message, variant), variant.half_size)


def deinterleave(stream: bytes, variant: AshVariant) -> bytes:
    """Inverse permutation: recover the padded stream from a restructured one."""
    halves = split_halves(stream, variant)
    return b"".join(halves[0::2] + halves[1::2])


def interleave_block_aligned(stream: bytes, half_size: int) -> bytes:
    """Interleave a block-aligned byte stream without materializing halves.

    Same permutation as ``interleave(split_halves(...))`` but built from
    strided slice copies, chunk by chunk, so multi-gigabyte streams stay at
    C-loop speed.
    """
    if not stream or len(stream) % (2 * half_size) != 0:
        raise SizeMismatchError(
            f"stream of {len(stream)} bytes is not a positive multiple of "
            f"{2 * half_size}-byte blocks"
        )
    pairs = len(stream) // (2 * half_size)
    if pairs == 1:
        return bytes(stream)
    mid = pairs * half_size
    parts = []
    for k in range(0, pairs, _CHUNK_HALVES):
        m = min(_CHUNK_HALVES, pairs - k)
        first = stream[k * half_size : (k + m) * half_size]
        second = stream[mid + k * half_size : mid + (k + m) * half_size]
        parts.append(interleave_runs(first, second, half_size))
    return b"".join(parts)


def interleave_runs(first: bytes, second: bytes, half_size: int) -> bytes:
    """Zip two equal-length runs of half-blocks: f0 s0 f1 s1 ...

    This is the inner step shared by the in-memory path and the two-cursor
    file path; each output block takes one half from each run.
    """
    if len(first) != len(second) or len(first) % half_size != 0:
        raise SizeMismatchError("half-block runs must be equal block-aligned lengths")
    step = 2 * half_size
    seg = bytearray(2 * len(first))
    for j in range(half_size):
        seg[j::step] = first[j::half_size]
        seg[half_size + j :: step] = second[j::half_size]
    return bytes(seg)
