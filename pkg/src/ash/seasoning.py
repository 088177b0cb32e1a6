"""Pepper and salt material: generation, XOR application, share combination.

A pepper is one block of random data XORed across every block of the
restructured stream, so a single block of randomness peppers bit changes
through the whole input of the dynamic hash. A salt is one block appended
to the message itself before the pipeline runs.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable

from .errors import SizeMismatchError
from .variants import AshVariant

# Blocks XORed per big-integer operation on the bulk path.
_XOR_CHUNK_BLOCKS = 65536


def generate_pepper(variant: AshVariant, rng: Callable[[int], bytes] = os.urandom) -> bytes:
    """Draw one block of randomness.

    ``rng`` defaults to the operating system source; passing anything
    deterministic is for tests only.
    """
    pepper = rng(variant.pepper_size)
    if len(pepper) != variant.pepper_size:
        raise SizeMismatchError(
            f"randomness source returned {len(pepper)} bytes, wanted {variant.pepper_size}"
        )
    return pepper


def apply_pepper(stream: bytes, pepper: bytes) -> bytes:
    """XOR the pepper across every block: out[i] = stream[i] ^ pepper[i mod block].

    Length-preserving involution; applying the same pepper twice gives the
    stream back.
    """
    block = len(pepper)
    if block == 0:
        raise SizeMismatchError("pepper is empty")
    if len(stream) % block != 0:
        raise SizeMismatchError(
            f"stream of {len(stream)} bytes is not a multiple of the {block}-byte pepper"
        )
    step = block * _XOR_CHUNK_BLOCKS
    if len(stream) <= step:
        return _xor_tiled(stream, pepper)
    out = bytearray(len(stream))
    pepper_int = int.from_bytes(pepper * _XOR_CHUNK_BLOCKS, "big")
    for off in range(0, len(stream), step):
        chunk = stream[off : off + step]
        if len(chunk) == step:
            out[off : off + step] = (int.from_bytes(chunk, "big") ^ pepper_int).to_bytes(
                step, "big"
            )
        else:
            out[off : off + len(chunk)] = _xor_tiled(chunk, pepper)
    return bytes(out)


def _xor_tiled(chunk: bytes, pepper: bytes) -> bytes:
    if not chunk:
        return b""
    tile = pepper * (len(chunk) // len(pepper))
    return (int.from_bytes(chunk, "big") ^ int.from_bytes(tile, "big")).to_bytes(
        len(chunk), "big"
    )


def combine_shares(shares: Iterable[bytes]) -> bytes:
    """Bytewise XOR of all shares; order never matters.

    One uniformly random share makes the result uniformly random, the same
    argument that makes a one-time pad work.
    """
    shares = list(shares)
    if not shares:
        raise ValueError("at least one share is required")
    size = len(shares[0])
    acc = 0
    for share in shares:
        if len(share) != size:
            raise SizeMismatchError(
                f"share of {len(share)} bytes among shares of {size} bytes"
            )
        acc ^= int.from_bytes(share, "big")
    return acc.to_bytes(size, "big")


def make_salt(half_a: bytes, half_b: bytes, variant: AshVariant) -> bytes:
    """One block of salt from two half-block contributions: half_a || half_b."""
    if len(half_a) != variant.half_size or len(half_b) != variant.half_size:
        raise SizeMismatchError(
            f"salt halves must be {variant.half_size} bytes each, "
            f"got {len(half_a)} and {len(half_b)}"
        )
    return half_a + half_b


def append_salt(message: bytes, salt: bytes) -> bytes:
    """Append the salt to the message; hashing then proceeds normally."""
    return message + salt
