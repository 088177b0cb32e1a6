"""Digest computation over files without holding them in memory.

The interleave permutation pairs half-block k with half-block k+N, so the
second half of the padded stream is needed from the very first output
block. Rather than buffering everything, two read cursors walk the
first-half region (halves 1..N) and the second-half region (halves
N+1..2N) of the padded stream in lockstep; each pair of runs is zipped
into restructured blocks and fed to both section hashes incrementally.
Peak memory is a few chunk buffers no matter the file size, and the output
is byte-identical to the in-memory pipeline.
"""

from __future__ import annotations

import os
import shutil
import tempfile
from typing import BinaryIO, Callable

from .digest import AshDigest
from .errors import AshError
from .restructure import _CHUNK_HALVES, interleave_runs, pad_suffix
from .seasoning import apply_pepper, generate_pepper
from .variants import AshVariant

DEFAULT_MEMORY_BUDGET = 256 * 1024 * 1024


class _PaddedView:
    """Random-access reads over file bytes followed by the computed pad suffix."""

    def __init__(self, stream: BinaryIO, size: int, suffix: bytes):
        self._stream = stream
        self._size = size
        self._suffix = suffix

    def read_at(self, offset: int, count: int) -> bytes:
        parts = []
        if offset < self._size:
            take = min(count, self._size - offset)
            self._stream.seek(offset)
            got = 0
            while got < take:
                piece = self._stream.read(take - got)
                if not piece:
                    raise AshError("input shrank while it was being hashed")
                parts.append(piece)
                got += len(piece)
            offset += take
            count -= take
        if count:
            start = offset - self._size
            parts.append(self._suffix[start : start + count])
        return b"".join(parts)


def digest_stream(
    stream: BinaryIO,
    variant: AshVariant,
    pepper: bytes | None = None,
    rng: Callable[[int], bytes] = os.urandom,
) -> AshDigest:
    """Digest a seekable binary stream with bounded memory.

    Matches ``digest.create`` on the stream's full contents, bit for bit.
    """
    if pepper is None:
        pepper = generate_pepper(variant, rng)
    size = stream.seek(0, os.SEEK_END)
    suffix = pad_suffix(size, variant)
    half = variant.half_size
    pairs = (size + len(suffix)) // variant.block_size
    view = _PaddedView(stream, size, suffix)

    static_hash = variant.base.new()
    dynamic_hash = variant.base.new()
    mid = pairs * half
    for k in range(0, pairs, _CHUNK_HALVES):
        m = min(_CHUNK_HALVES, pairs - k)
        first = view.read_at(k * half, m * half)
        second = view.read_at(mid + k * half, m * half)
        segment = interleave_runs(first, second, half)
        static_hash.update(segment)
        dynamic_hash.update(apply_pepper(segment, pepper))
    return AshDigest(variant, static_hash.digest(), dynamic_hash.digest(), pepper)


def digest_file(
    path: str | os.PathLike,
    variant: AshVariant,
    pepper: bytes | None = None,
    rng: Callable[[int], bytes] = os.urandom,
) -> AshDigest:
    with open(path, "rb") as stream:
        return digest_stream(stream, variant, pepper, rng)


def spool_to_seekable(source: BinaryIO, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> BinaryIO:
    """Buffer a non-seekable stream (a pipe, usually) into something seekable.

    Stays in memory up to ``memory_budget`` bytes, then spills to a
    temporary file; the permutation needs random access, so streaming
    straight through is not an option.
    """
    spool = tempfile.SpooledTemporaryFile(max_size=memory_budget)
    shutil.copyfileobj(source, spool, length=1024 * 1024)
    spool.seek(0)
    return spool
