"""Straight-line reference implementation used to cross-check the library.

Everything here is written as explicit loops over bytes, with no shared code
from the package under test. Slow on purpose; only run on short inputs.
"""

import hashlib


def oracle_pad(message: bytes, block_size: int, length_bytes: int) -> bytes:
    bits = len(message) * 8
    if bits >= 1 << (8 * length_bytes):
        raise ValueError("message too long for the length field")
    out = bytearray(message)
    out.append(0x80)
    while (len(out) + length_bytes) % block_size != 0:
        out.append(0x00)
    for shift in range(length_bytes - 1, -1, -1):
        out.append((bits >> (8 * shift)) & 0xFF)
    return bytes(out)


def oracle_permute(padded: bytes, half_size: int) -> bytes:
    halves = []
    for i in range(0, len(padded), half_size):
        halves.append(padded[i : i + half_size])
    n = len(halves) // 2
    reordered = []
    for k in range(n):
        reordered.append(halves[k])
        reordered.append(halves[n + k])
    return b"".join(reordered)


def oracle_xor_pepper(stream: bytes, pepper: bytes) -> bytes:
    out = bytearray(len(stream))
    for i in range(len(stream)):
        out[i] = stream[i] ^ pepper[i % len(pepper)]
    return bytes(out)


def oracle_digest(message: bytes, pepper: bytes, sha, block_size: int, length_bytes: int) -> bytes:
    padded = oracle_pad(message, block_size, length_bytes)
    permuted = oracle_permute(padded, block_size // 2)
    static = sha(permuted).digest()
    dynamic = sha(oracle_xor_pepper(permuted, pepper)).digest()
    return static + dynamic + pepper


def oracle_ash1(message: bytes, pepper: bytes) -> bytes:
    assert len(pepper) == 64
    return oracle_digest(message, pepper, hashlib.sha256, 64, 8)


def oracle_ash2(message: bytes, pepper: bytes) -> bytes:
    assert len(pepper) == 128
    return oracle_digest(message, pepper, hashlib.sha512, 128, 16)
